#include <extremal/canonical.hh>
#include <extremal/constructions.hh>
#include <extremal/counting.hh>
#include <extremal/errors.hh>
#include <extremal/exact_search.hh>
#include <extremal/graph6.hh>
#include <extremal/heuristic.hh>
#include <extremal/report.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace extremal;

using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_failure = 1;
    constexpr int exit_bad_input = 2;
    constexpr int exit_infeasible = 3;

    struct Globals
    {
        bool json = false;
        int jobs = 1;
        std::uint64_t seed = 1;
        string budget;
        bool override_envelope = false;

        auto search_options() const -> SearchOptions
        {
            return SearchOptions{ jobs, override_envelope };
        }

        auto search_budget() const -> SearchBudget
        {
            SearchBudget b = budget.empty() ? SearchBudget{ } : parse_budget(budget);
            b.seed = seed;
            return b;
        }
    };

    /// A .g6 file (one graph per line), a construction spec (contains ':'),
    /// or a graph6 string.
    auto read_graphs(const string & input) -> vector<Graph>
    {
        if (std::filesystem::is_regular_file(input)) {
            std::ifstream in{ input };
            if (! in)
                throw ParseError{ "cannot read " + input };
            return read_graph6_lines(in);
        }
        if (input.find(':') != string::npos)
            return { build_family(input) };
        return { graph6_decode(input) };
    }

    auto read_graph(const string & input) -> Graph
    {
        auto graphs = read_graphs(input);
        if (graphs.size() != 1)
            throw ParseError{ input + " holds " + std::to_string(graphs.size()) + " graphs, expected one" };
        return graphs.front();
    }

    auto join_strings(const vector<string> & items, const string & sep) -> string
    {
        string result;
        for (size_t i = 0 ; i < items.size() ; ++i)
            result += (i ? sep : "") + items[i];
        return result;
    }

    auto describe(const Graph & g) -> Json
    {
        vector<std::array<int, 2>> edges;
        for (auto [u, v] : g.edges())
            edges.push_back({ u, v });
        return {
            { "graph6", graph6_encode(g) },
            { "canonical", canonical_graph6(g) },
            { "order", g.order() },
            { "size", g.size() },
            { "degree_sequence", g.degree_sequence() },
            { "automorphisms", automorphism_count(g) },
            { "edges", edges } };
    }

    auto print_description(const Graph & g) -> void
    {
        cout << graph6_encode(g) << '\n'
            << "order " << g.order() << ", size " << g.size() << '\n'
            << "degrees";
        for (int d : g.degree_sequence())
            cout << ' ' << d;
        cout << "\nedges";
        for (auto [u, v] : g.edges())
            cout << ' ' << u << '-' << v;
        cout << '\n';
    }

    auto print_witnesses(const vector<string> & witnesses, const string & label) -> void
    {
        cout << label << " (" << witnesses.size() << "):\n";
        for (auto & w : witnesses)
            cout << "  " << w << '\n';
    }

    auto maybe_write(const string & path, const vector<string> & graphs) -> void
    {
        if (! path.empty())
            write_g6_file(path, graphs);
    }

    /// "5:0-1,1-2,2-3" as order and edge list.
    auto parse_edge_list(const string & text) -> Graph
    {
        auto colon = text.find(':');
        if (colon == string::npos)
            throw ParseError{ "edge list must look like 5:0-1,1-2" };
        int n;
        try {
            n = std::stoi(text.substr(0, colon));
        }
        catch (const std::logic_error &) {
            throw ParseError{ "bad order in edge list '" + text + "'" };
        }
        Graph g{ n };
        std::istringstream in{ text.substr(colon + 1) };
        string item;
        while (std::getline(in, item, ',')) {
            if (item.empty())
                continue;
            int u, v;
            char dash;
            std::istringstream pair{ item };
            if (! (pair >> u >> dash >> v) || dash != '-' || ! pair.eof())
                throw ParseError{ "bad edge '" + item + "'" };
            g.add_edge(u, v);
        }
        return g;
    }
}

int main(int argc, char * argv[])
{
    Globals globals;

    CLI::App app{ "Exact search and verification for small Turan-type problems" };
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(
        "Graphs: a graph6 string, a .g6 file, or a construction such as g5:p=4, circulant:n=6,s=1+3, book:p=5.\n"
        "Patterns: c4, c3, k:N (complete), s:P (star K_1,P), b:P (book), c:N (cycle), p:N (path),\n"
        "  kab:S,T (complete bipartite), g6:<graph6>, and families such as family:c3,p4,k13\n"
        "  (family tokens cN, pN, kN, and kST for K_S,T).\n"
        "Exit status: 0 success, 1 failure, 2 bad input, 3 task outside the exhaustive envelope.");

    app.add_flag("--json", globals.json, "Print JSON instead of text");
    app.add_option("--jobs", globals.jobs, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", globals.seed, "Seed for heuristic search");
    app.add_option("--budget", globals.budget, "Heuristic budget, e.g. restarts=20,steps=200000,t0=1.0,decay=0.99998");
    app.add_flag("--override-envelope", globals.override_envelope, "Run exhaustive tasks beyond the default envelope");

    string construct_spec, construct_out;
    auto construct = app.add_subcommand("construct", "Build a named graph");
    construct->add_option("spec", construct_spec, "Construction, e.g. g6:p=4")->required();
    construct->add_option("--out", construct_out, "Also write the graph to this .g6 file");
    construct->footer([] {
        string text = "Families:\n";
        for (auto & f : construction_families())
            text += "  " + f + "\n";
        return text;
    }());

    string count_graph, count_pattern;
    auto count = app.add_subcommand("count", "Count copies of a pattern");
    count->add_option("--graph", count_graph, "Graph, .g6 file or construction")->required();
    count->add_option("--pattern", count_pattern, "Pattern")->required();

    int ex_n = 0;
    string ex_pattern, ex_out;
    auto ex = app.add_subcommand("ex", "Turan number by exhaustive search");
    ex->add_option("--n", ex_n, "Order")->required();
    ex->add_option("--pattern", ex_pattern, "Pattern or family")->required();
    ex->add_option("--out", ex_out, "Write the extremal graphs to this .g6 file");

    int mc_n = 0, mc_e = 0;
    string mc_pattern, mc_out;
    auto min_copies_cmd = app.add_subcommand("min-copies", "Exact minimum number of copies at fixed order and size");
    min_copies_cmd->add_option("--n", mc_n, "Order")->required();
    min_copies_cmd->add_option("--e", mc_e, "Size")->required();
    min_copies_cmd->add_option("--pattern", mc_pattern, "Pattern")->required();
    min_copies_cmd->add_option("--out", mc_out, "Write the minimising graphs to this .g6 file");

    int cl_n = 0, cl_e = 0;
    CopyCount cl_k = 0;
    string cl_pattern, cl_out;
    auto classify = app.add_subcommand("classify", "All graphs with exactly k copies at fixed order and size");
    classify->add_option("--n", cl_n, "Order")->required();
    classify->add_option("--e", cl_e, "Size")->required();
    classify->add_option("--pattern", cl_pattern, "Pattern")->required();
    classify->add_option("--k", cl_k, "Copy count")->required();
    classify->add_option("--out", cl_out, "Write the graphs to this .g6 file");

    int ws_n = 0, ws_e = 0;
    string ws_pattern, ws_out, ws_start;
    auto witness = app.add_subcommand("witness-search", "Heuristic upper bound on the minimum number of copies");
    witness->add_option("--n", ws_n, "Order")->required();
    witness->add_option("--e", ws_e, "Size")->required();
    witness->add_option("--pattern", ws_pattern, "Pattern")->required();
    witness->add_option("--start", ws_start, "Graph to extend greedily in the first restart");
    witness->add_option("--out", ws_out, "Write the best graph to this .g6 file");

    string encode_input;
    bool encode_canonical = false;
    auto encode = app.add_subcommand("encode", "Print graph6 for a construction or an edge list such as 5:0-1,1-2");
    encode->add_option("input", encode_input, "Construction or edge list")->required();
    encode->add_flag("--canonical", encode_canonical, "Canonically relabel first");

    string decode_input;
    auto decode = app.add_subcommand("decode", "Describe a graph6 string or .g6 file");
    decode->add_option("input", decode_input, "graph6 string or .g6 file")->required();

    string verify_scope = "quick", verify_out, verify_claims_file;
    bool verify_quiet = false;
    auto verify = app.add_subcommand("verify-paper", "Evaluate the claim catalog");
    verify->add_option("--scope", verify_scope, "quick or full")->check(CLI::IsMember({ "quick", "full" }));
    verify->add_option("--out", verify_out, "Write the JSON report to this file");
    verify->add_option("--claims", verify_claims_file, "Use this catalog instead of the built-in one");
    verify->add_flag("--quiet", verify_quiet, "Only print the summary");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e);
    }

    try {
        if (*construct) {
            Graph g = build_family(construct_spec);
            maybe_write(construct_out, { graph6_encode(g) });
            if (globals.json)
                cout << Json{ { "spec", construct_spec }, { "graph", describe(g) } }.dump(2) << '\n';
            else
                print_description(g);
        }
        else if (*count) {
            Pattern h = parse_pattern(count_pattern);
            auto graphs = read_graphs(count_graph);
            Json records = Json::array();
            for (auto & g : graphs) {
                CopyCount c = count_copies(g, h);
                if (globals.json)
                    records.push_back({ { "task", { { "op", "count" }, { "graph", graph6_encode(g) }, { "pattern", h.name() } } },
                            { "value", c } });
                else
                    cout << c << '\n';
            }
            if (globals.json)
                cout << (records.size() == 1 ? records.front() : records).dump(2) << '\n';
        }
        else if (*ex) {
            auto r = turan_number(ex_n, parse_patterns(ex_pattern), globals.search_options());
            maybe_write(ex_out, r.extremal);
            if (globals.json)
                cout << result_json(r).dump(2) << '\n';
            else {
                cout << "ex(" << r.order << ", " << join_strings(r.patterns, ",") << ") = " << r.ex_value << '\n';
                print_witnesses(r.extremal, "extremal graphs");
            }
        }
        else if (*min_copies_cmd) {
            auto r = min_copies(mc_n, mc_e, parse_pattern(mc_pattern), globals.search_options());
            maybe_write(mc_out, r.witnesses);
            if (globals.json)
                cout << result_json(r).dump(2) << '\n';
            else {
                cout << "min copies of " << r.pattern << " at order " << r.order << ", size " << r.size
                    << " = " << r.min_copies << " (" << method_name(r.method) << ")\n";
                print_witnesses(r.witnesses, "witnesses");
            }
        }
        else if (*classify) {
            Pattern h = parse_pattern(cl_pattern);
            auto found = classify_witnesses(cl_n, cl_e, h, cl_k, globals.search_options());
            vector<string> g6;
            for (auto & g : found)
                g6.push_back(graph6_encode(g));
            maybe_write(cl_out, g6);
            if (globals.json)
                cout << Json{ { "schema_version", report_schema_version },
                    { "task", { { "op", "classify" }, { "order", cl_n }, { "size", cl_e }, { "pattern", h.name() }, { "k", cl_k } } },
                    { "value", g6.size() }, { "witnesses", g6 }, { "method", method_name(Method::exhaustive) } }.dump(2) << '\n';
            else
                print_witnesses(g6, "classes of order " + std::to_string(cl_n) + ", size " + std::to_string(cl_e)
                        + " with exactly " + std::to_string(cl_k) + " copies of " + h.name());
        }
        else if (*witness) {
            HeuristicOptions options;
            options.jobs = globals.jobs;
            if (! ws_start.empty())
                options.start = read_graph(ws_start);
            SearchBudget budget = globals.search_budget();
            auto r = search_min_copies(ws_n, ws_e, parse_pattern(ws_pattern), budget, options);
            maybe_write(ws_out, r.witnesses);
            if (globals.json) {
                Json j = result_json(r);
                j["budget"] = budget.to_string();
                cout << j.dump(2) << '\n';
            }
            else {
                cout << "best found: " << r.min_copies << " copies of " << r.pattern << " at order " << r.order
                    << ", size " << r.size << " (" << method_name(r.method) << ", " << budget.to_string() << ")\n";
                print_witnesses(r.witnesses, "witness");
            }
        }
        else if (*encode) {
            Graph g = encode_input.find('=') != string::npos ? build_family(encode_input) : parse_edge_list(encode_input);
            string text = encode_canonical ? canonical_graph6(g) : graph6_encode(g);
            if (globals.json)
                cout << Json{ { "graph6", text } }.dump(2) << '\n';
            else
                cout << text << '\n';
        }
        else if (*decode) {
            auto graphs = read_graphs(decode_input);
            Json records = Json::array();
            for (auto & g : graphs) {
                if (globals.json)
                    records.push_back(describe(g));
                else
                    print_description(g);
            }
            if (globals.json)
                cout << (records.size() == 1 ? records.front() : records).dump(2) << '\n';
        }
        else if (*verify) {
            ClaimCatalog catalog;
            if (verify_claims_file.empty())
                catalog = builtin_claim_catalog();
            else {
                std::ifstream in{ verify_claims_file };
                if (! in)
                    throw ParseError{ "cannot read " + verify_claims_file };
                std::stringstream buffer;
                buffer << in.rdbuf();
                catalog = parse_claim_catalog(buffer.str());
            }

            VerificationOptions options;
            options.scope = parse_scope(verify_scope);
            options.jobs = globals.jobs;
            options.override_envelope = globals.override_envelope;
            options.budget = globals.search_budget();

            auto progress = [&] (const ClaimOutcome & o) {
                if (globals.json || verify_quiet)
                    return;
                cout << verdict_name(o.verdict) << "  " << o.claim.id << "  (" << o.claim.provenance << ")";
                if (! o.computed.is_null())
                    cout << "  computed " << o.computed.dump();
                if (! o.reason.empty())
                    cout << "  [" << o.reason << "]";
                cout << '\n';
            };

            auto report = verify_claims(catalog, options, progress);
            Json j = report_json(report);
            if (! verify_out.empty()) {
                std::ofstream out{ verify_out };
                if (! out)
                    throw Error{ "cannot open " + verify_out + " for writing" };
                out << j.dump(2) << '\n';
            }
            if (globals.json)
                cout << j.dump(2) << '\n';
            else
                cout << "pass " << report.passed << ", fail " << report.failed
                    << ", skipped-infeasible " << report.skipped_infeasible
                    << ", skipped-scope " << report.skipped_scope << '\n';
            return report.failed ? exit_failure : 0;
        }
    }
    catch (const InfeasibleTask & e) {
        cerr << "infeasible: " << e.what() << '\n';
        return exit_infeasible;
    }
    catch (const ParseError & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
    catch (const RangeError & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
    catch (const ParityError & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return 0;
}
