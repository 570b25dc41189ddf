#include <extremal/report.hh>
#include <extremal/canonical.hh>
#include <extremal/constructions.hh>
#include <extremal/errors.hh>
#include <extremal/formulas.hh>
#include <extremal/graph6.hh>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

using std::string;
using std::to_string;
using std::vector;

namespace extremal
{
    extern const char * const builtin_claims_json;

    auto scope_name(Scope s) -> string
    {
        return s == Scope::quick ? "quick" : "full";
    }

    auto parse_scope(const string & text) -> Scope
    {
        if (text == "quick")
            return Scope::quick;
        if (text == "full")
            return Scope::full;
        throw ParseError{ "scope must be quick or full, not '" + text + "'" };
    }

    auto verdict_name(Verdict v) -> string
    {
        switch (v) {
            case Verdict::pass: return "pass";
            case Verdict::fail: return "fail";
            case Verdict::skipped_infeasible: return "skipped-infeasible";
            case Verdict::skipped_scope: return "skipped-scope";
        }
        return "?";
    }

    namespace
    {
        const std::set<string> known_ops = {
            "construct", "construct_error", "count", "formula", "turan_number", "min_copies",
            "min_copies_lower_bound", "classify", "heuristic_min_copies", "triangle_turan_sweep",
            "triangle_supersaturation_sweep", "star_turan_sweep", "book_turan_sweep", "family_turan_sweep" };

        const std::set<string> known_comparators = { "equal", "at_least", "at_most" };

        auto elapsed_ms(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }

        auto int_arg(const Json & args, const char * key) -> int
        {
            if (! args.contains(key) || ! args[key].is_number_integer())
                throw ParseError{ string{ "claim argument '" } + key + "' missing or not an integer" };
            return args[key].get<int>();
        }

        auto string_arg(const Json & args, const char * key) -> string
        {
            if (! args.contains(key) || ! args[key].is_string())
                throw ParseError{ string{ "claim argument '" } + key + "' missing or not a string" };
            return args[key].get<string>();
        }

        auto compare(const Json & expected, const Json & computed, const string & comparator) -> bool
        {
            if (expected.is_object()) {
                if (! computed.is_object())
                    return false;
                for (auto & [key, value] : expected.items())
                    if (! computed.contains(key) || ! compare(value, computed[key], comparator))
                        return false;
                return true;
            }
            if (expected.is_number() && computed.is_number() && comparator != "equal") {
                double e = expected.get<double>(), c = computed.get<double>();
                return comparator == "at_least" ? c >= e : c <= e;
            }
            return expected == computed;
        }

        struct Evaluator
        {
            const ClaimRecord & claim;
            const VerificationOptions & options;
            ClaimOutcome & outcome;

            auto search_options() const -> SearchOptions
            {
                return SearchOptions{ options.jobs, options.override_envelope };
            }

            auto construct() -> Json
            {
                Graph g = build_family(string_arg(claim.args, "graph"));
                Json computed = Json::object();
                for (auto & [key, value] : claim.expected.items()) {
                    if (key == "order")
                        computed[key] = g.order();
                    else if (key == "size")
                        computed[key] = g.size();
                    else if (key == "degree_sequence")
                        computed[key] = g.degree_sequence();
                    else if (key == "regular") {
                        auto degrees = g.degree_sequence();
                        if (! degrees.empty() && degrees.front() == degrees.back())
                            computed[key] = degrees.front();
                        else
                            computed[key] = false;
                    }
                    else if (key == "hamiltonian")
                        computed[key] = hamiltonian_cycle(g).has_value();
                    else if (key == "edge_codegrees") {
                        std::set<int> seen;
                        for (auto [u, v] : g.edges())
                            seen.insert(g.codegree(u, v));
                        computed[key] = vector<int>(seen.begin(), seen.end());
                    }
                    else if (key == "copies") {
                        Json counts = Json::object();
                        for (auto & [name, _] : value.items())
                            counts[name] = count_copies(g, parse_pattern(name));
                        computed[key] = counts;
                    }
                    else if (key == "isomorphic_to") {
                        string spec = value.get<string>();
                        computed[key] = are_isomorphic(g, build_family(spec)) ? spec : canonical_graph6(g);
                    }
                    else
                        throw ParseError{ "construct claim has unknown property '" + key + "'" };
                }
                outcome.witnesses = { canonical_graph6(g) };
                return computed;
            }

            auto construct_error() -> Json
            {
                try {
                    build_family(string_arg(claim.args, "graph"));
                    return "none";
                }
                catch (const ParityError &) {
                    return "parity";
                }
                catch (const RangeError &) {
                    return "range";
                }
            }

            auto formula() -> Json
            {
                string name = string_arg(claim.args, "name");
                int n = int_arg(claim.args, "n");
                if (name == "ex_star")
                    return ex_star(n, int_arg(claim.args, "p"));
                if (name == "ex_book")
                    return ex_book(n, int_arg(claim.args, "p"));
                if (name == "ex_c4_table") {
                    if (ex_c4_table_is_trusted_input(n))
                        outcome.reason = "tabulated input, not recomputed";
                    return ex_c4_table(n);
                }
                if (name == "ex_triangle_p4_claw_free")
                    return ex_triangle_p4_claw_free(n);
                if (name == "ex_triangle")
                    return ex_triangle(n);
                throw ParseError{ "unknown formula '" + name + "'" };
            }

            auto exact_min_copies(int n, int e, const Pattern & h) -> MinCopyResult
            {
                auto r = min_copies(n, e, h, search_options());
                for (auto & w : r.witnesses)
                    if (count_generic(graph6_decode(w), h) != r.min_copies)
                        throw Error{ "witness " + w + " failed independent recount" };
                return r;
            }

            auto sweep_result(int checked, const vector<string> & mismatches) -> Json
            {
                if (! mismatches.empty()) {
                    outcome.reason = "mismatch at";
                    for (auto & m : mismatches)
                        outcome.reason += " " + m;
                }
                return Json{ { "checked", checked }, { "mismatches", mismatches.size() } };
            }

            auto run() -> Json
            {
                const string & op = claim.op;
                const Json & args = claim.args;

                if (op == "construct")
                    return construct();
                if (op == "construct_error")
                    return construct_error();
                if (op == "formula")
                    return formula();
                if (op == "count")
                    return count_copies(build_family(string_arg(args, "graph")), parse_pattern(string_arg(args, "pattern")));

                if (op == "turan_number") {
                    auto r = turan_number(int_arg(args, "n"), parse_patterns(string_arg(args, "patterns")), search_options());
                    outcome.witnesses = r.extremal;
                    return r.ex_value;
                }

                if (op == "min_copies") {
                    auto r = exact_min_copies(int_arg(args, "n"), int_arg(args, "e"), parse_pattern(string_arg(args, "pattern")));
                    outcome.witnesses = r.witnesses;
                    return r.min_copies;
                }

                if (op == "min_copies_lower_bound") {
                    int n = int_arg(args, "n"), e = int_arg(args, "e"), bound = int_arg(args, "at_least");
                    Pattern h = parse_pattern(string_arg(args, "pattern"));
                    for (int k = 0 ; k < bound ; ++k) {
                        auto found = classify_witnesses(n, e, h, k, search_options());
                        if (! found.empty()) {
                            outcome.witnesses = { canonical_graph6(found.front()) };
                            outcome.reason = "a graph with " + to_string(k) + " copies exists";
                            return false;
                        }
                    }
                    return true;
                }

                if (op == "classify") {
                    Pattern h = parse_pattern(string_arg(args, "pattern"));
                    auto found = classify_witnesses(int_arg(args, "n"), int_arg(args, "e"), h,
                            CopyCount(int_arg(args, "k")), search_options());
                    for (auto & g : found)
                        outcome.witnesses.push_back(graph6_encode(g));
                    Json computed = { { "classes", found.size() } };
                    if (claim.expected.contains("isomorphic_to")) {
                        string spec = claim.expected["isomorphic_to"].get<string>();
                        bool match = found.size() == 1 && are_isomorphic(found.front(), build_family(spec));
                        computed["isomorphic_to"] = match ? Json(spec) : Json(outcome.witnesses);
                    }
                    return computed;
                }

                if (op == "heuristic_min_copies") {
                    int n = int_arg(args, "n"), e = int_arg(args, "e");
                    Pattern h = parse_pattern(string_arg(args, "pattern"));
                    SearchBudget budget = options.budget;
                    if (args.contains("budget")) {
                        budget = parse_budget(string_arg(args, "budget"));
                        budget.seed = options.budget.seed;
                    }
                    HeuristicOptions hopts;
                    hopts.jobs = options.jobs;
                    if (args.contains("start_extremal_order")) {
                        auto seed_graphs = turan_number(int_arg(args, "start_extremal_order"), { h }, SearchOptions{ options.jobs, false });
                        hopts.start = graph6_decode(seed_graphs.extremal.front());
                    }
                    auto r = search_min_copies(n, e, h, budget, hopts);
                    outcome.witnesses = r.witnesses;
                    outcome.reason = "upper bound from " + budget.to_string();
                    return r.min_copies;
                }

                if (op == "triangle_turan_sweep" || op == "triangle_supersaturation_sweep" || op == "family_turan_sweep") {
                    int lo = int_arg(args, "min_order"), hi = int_arg(args, "max_order");
                    vector<string> mismatches;
                    for (int n = lo ; n <= hi ; ++n) {
                        bool ok;
                        if (op == "triangle_turan_sweep") {
                            auto r = turan_number(n, { Pattern::complete(3) }, search_options());
                            ok = r.ex_value == ex_triangle(n) && r.extremal.size() == 1
                                && r.extremal.front() == canonical_graph6(complete_bipartite_graph(n / 2, n - n / 2));
                        }
                        else if (op == "triangle_supersaturation_sweep") {
                            auto r = exact_min_copies(n, ex_triangle(n) + 1, Pattern::complete(3));
                            ok = r.min_copies >= CopyCount(n / 2);
                        }
                        else {
                            auto r = turan_number(n, parse_patterns(string_arg(args, "patterns")), search_options());
                            ok = r.ex_value == ex_triangle_p4_claw_free(n);
                        }
                        if (! ok)
                            mismatches.push_back("n=" + to_string(n));
                    }
                    return sweep_result(hi - lo + 1, mismatches);
                }

                if (op == "star_turan_sweep") {
                    int hi = int_arg(args, "max_order"), checked = 0;
                    vector<string> mismatches;
                    for (int n = 3 ; n <= hi ; ++n)
                        for (int p = 2 ; p < n ; ++p, ++checked)
                            if (turan_number(n, { Pattern::star(p) }, search_options()).ex_value != ex_star(n, p))
                                mismatches.push_back("(n=" + to_string(n) + ",p=" + to_string(p) + ")");
                    return sweep_result(checked, mismatches);
                }

                if (op == "book_turan_sweep") {
                    int lo = int_arg(args, "min_p"), hi = int_arg(args, "max_p"), checked = 0;
                    vector<string> mismatches;
                    for (int p = lo ; p <= hi ; ++p)
                        for (int n : { p + 2, p + 3 }) {
                            ++checked;
                            if (turan_number(n, { Pattern::book(p) }, search_options()).ex_value != ex_book(n, p))
                                mismatches.push_back("(n=" + to_string(n) + ",p=" + to_string(p) + ")");
                        }
                    return sweep_result(checked, mismatches);
                }

                throw ParseError{ "unknown claim operation '" + op + "'" };
            }
        };
    }

    auto parse_claim_catalog(const string & text) -> ClaimCatalog
    {
        Json doc;
        try {
            doc = Json::parse(text);
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError{ string{ "claim catalog is not valid JSON: " } + e.what() };
        }

        ClaimCatalog catalog;
        try {
            catalog.version = doc.at("catalog_version").get<int>();
            std::set<string> ids;
            for (auto & item : doc.at("claims")) {
                ClaimRecord c;
                c.id = item.at("id").get<string>();
                c.statement = item.at("statement").get<string>();
                c.provenance = item.at("provenance").get<string>();
                c.trusted_input = item.value("trusted_input", false);
                c.scope = parse_scope(item.at("scope").get<string>());
                c.op = item.at("op").get<string>();
                c.args = item.at("args");
                c.expected = item.at("expected");
                c.comparator = item.value("comparator", string{ "equal" });
                if (! known_ops.contains(c.op))
                    throw ParseError{ "claim " + c.id + " has unknown operation '" + c.op + "'" };
                if (! known_comparators.contains(c.comparator))
                    throw ParseError{ "claim " + c.id + " has unknown comparator '" + c.comparator + "'" };
                if (c.provenance.empty())
                    throw ParseError{ "claim " + c.id + " has no provenance" };
                if (! ids.insert(c.id).second)
                    throw ParseError{ "duplicate claim id " + c.id };
                catalog.claims.push_back(std::move(c));
            }
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError{ string{ "malformed claim catalog: " } + e.what() };
        }
        return catalog;
    }

    auto builtin_claim_catalog() -> const ClaimCatalog &
    {
        static const ClaimCatalog catalog = parse_claim_catalog(builtin_claims_json);
        return catalog;
    }

    auto evaluate_claim(const ClaimRecord & claim, const VerificationOptions & options) -> ClaimOutcome
    {
        auto start = std::chrono::steady_clock::now();
        ClaimOutcome outcome;
        outcome.claim = claim;

        if (claim.scope == Scope::full && options.scope == Scope::quick) {
            outcome.verdict = Verdict::skipped_scope;
            outcome.reason = "runs in full scope only";
            return outcome;
        }

        try {
            Evaluator evaluator{ claim, options, outcome };
            outcome.computed = evaluator.run();
            outcome.verdict = compare(claim.expected, outcome.computed, claim.comparator) ? Verdict::pass : Verdict::fail;
        }
        catch (const InfeasibleTask & e) {
            outcome.verdict = Verdict::skipped_infeasible;
            outcome.reason = e.what();
        }
        catch (const std::exception & e) {
            outcome.verdict = Verdict::fail;
            outcome.reason = e.what();
        }
        outcome.runtime_ms = elapsed_ms(start);
        return outcome;
    }

    auto verify_claims(const ClaimCatalog & catalog, const VerificationOptions & options,
            const ProgressCallback & progress) -> VerificationReport
    {
        auto start = std::chrono::steady_clock::now();
        VerificationReport report;
        report.catalog_version = catalog.version;
        report.options = options;
        for (auto & claim : catalog.claims) {
            auto outcome = evaluate_claim(claim, options);
            switch (outcome.verdict) {
                case Verdict::pass: ++report.passed; break;
                case Verdict::fail: ++report.failed; break;
                case Verdict::skipped_infeasible: ++report.skipped_infeasible; break;
                case Verdict::skipped_scope: ++report.skipped_scope; break;
            }
            if (progress)
                progress(outcome);
            report.outcomes.push_back(std::move(outcome));
        }
        report.runtime_ms = elapsed_ms(start);
        return report;
    }

    auto report_json(const VerificationReport & report) -> Json
    {
        Json claims = Json::array();
        for (auto & o : report.outcomes) {
            auto & c = o.claim;
            claims.push_back({
                    { "id", c.id },
                    { "statement", c.statement },
                    { "provenance", c.provenance },
                    { "trusted_input", c.trusted_input },
                    { "scope", scope_name(c.scope) },
                    { "op", c.op },
                    { "args", c.args },
                    { "comparator", c.comparator },
                    { "expected", c.expected },
                    { "computed", o.computed },
                    { "verdict", verdict_name(o.verdict) },
                    { "reason", o.reason },
                    { "witnesses", o.witnesses },
                    { "runtime_ms", o.runtime_ms } });
        }

        return {
            { "schema_version", report_schema_version },
            { "catalog_version", report.catalog_version },
            { "scope", scope_name(report.options.scope) },
            { "options", {
                    { "jobs", report.options.jobs },
                    { "override_envelope", report.options.override_envelope },
                    { "budget", report.options.budget.to_string() } } },
            { "summary", {
                    { "total", report.outcomes.size() },
                    { "pass", report.passed },
                    { "fail", report.failed },
                    { "skipped_infeasible", report.skipped_infeasible },
                    { "skipped_scope", report.skipped_scope } } },
            { "claims", claims },
            { "runtime_ms", report.runtime_ms } };
    }

    auto result_json(const TuranResult & r) -> Json
    {
        return {
            { "schema_version", report_schema_version },
            { "task", { { "op", "ex" }, { "order", r.order }, { "patterns", r.patterns } } },
            { "value", r.ex_value },
            { "witnesses", r.extremal },
            { "method", method_name(Method::exhaustive) },
            { "runtime_ms", r.runtime_ms },
            { "stats", { { "nodes", r.stats.nodes }, { "emitted", r.stats.emitted },
                    { "canonical_runs", r.stats.canonical_runs } } } };
    }

    auto result_json(const MinCopyResult & r) -> Json
    {
        return {
            { "schema_version", report_schema_version },
            { "task", { { "op", "min-copies" }, { "order", r.order }, { "size", r.size }, { "pattern", r.pattern } } },
            { "value", r.min_copies },
            { "witnesses", r.witnesses },
            { "method", method_name(r.method) },
            { "runtime_ms", r.runtime_ms } };
    }

    auto write_g6_file(const string & path, const vector<string> & graphs) -> void
    {
        std::ofstream out{ path };
        if (! out)
            throw Error{ "cannot open " + path + " for writing" };
        for (auto & g : graphs)
            out << g << '\n';
        if (! out)
            throw Error{ "error writing " + path };
    }
}
