#include <extremal/constructions.hh>
#include <extremal/errors.hh>

#include <charconv>
#include <functional>
#include <set>

using std::string;
using std::to_string;
using std::vector;

namespace extremal
{
    namespace
    {
        auto require(bool condition, const string & message) -> void
        {
            if (! condition)
                throw RangeError{ message };
        }
    }

    auto complete_graph(int n) -> Graph
    {
        Graph result{ n };
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                result.set_edge(u, v);
        return result;
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph{ n };
    }

    auto path_graph(int n) -> Graph
    {
        require(n >= 1, "path needs at least one vertex");
        Graph result{ n };
        for (int v = 0 ; v + 1 < n ; ++v)
            result.set_edge(v, v + 1);
        return result;
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3, "cycle needs at least three vertices");
        Graph result = path_graph(n);
        result.set_edge(n - 1, 0);
        return result;
    }

    auto star_graph(int p) -> Graph
    {
        require(p >= 1, "star needs at least one leaf");
        Graph result{ p + 1 };
        for (int v = 1 ; v <= p ; ++v)
            result.set_edge(0, v);
        return result;
    }

    auto book_graph(int p) -> Graph
    {
        require(p >= 1, "book needs at least one page");
        Graph result{ p + 2 };
        result.set_edge(0, 1);
        for (int v = 2 ; v < p + 2 ; ++v) {
            result.set_edge(0, v);
            result.set_edge(1, v);
        }
        return result;
    }

    auto matching_graph(int q) -> Graph
    {
        require(q >= 0, "matching size must be non-negative");
        Graph result{ 2 * q };
        for (int i = 0 ; i < q ; ++i)
            result.set_edge(2 * i, 2 * i + 1);
        return result;
    }

    auto complete_bipartite_graph(int s, int t) -> Graph
    {
        require(s >= 0 && t >= 0, "part sizes must be non-negative");
        return join(empty_graph(s), empty_graph(t));
    }

    auto complete_minus_pm(int n) -> Graph
    {
        if (n < 0 || n % 2 != 0)
            throw ParityError{ "K_n - PM needs even n, got " + to_string(n) };
        return complement(matching_graph(n / 2));
    }

    auto circulant_graph(int n, const vector<int> & steps) -> Graph
    {
        require(n >= 1, "circulant needs at least one vertex");
        Graph result{ n };
        for (int s : steps) {
            require(s >= 1 && s < n, "circulant step " + to_string(s) + " outside 1.." + to_string(n - 1));
            for (int i = 0 ; i < n ; ++i)
                result.set_edge(i, (i + s) % n);
        }
        return result;
    }

    auto regular_graph(int k, int n) -> Graph
    {
        require(k >= 1 && k <= n - 1, "regular graph needs 1 <= k <= n - 1 (k = " + to_string(k) + ", n = " + to_string(n) + ")");
        if ((k * n) % 2 != 0)
            throw ParityError{ "no " + to_string(k) + "-regular graph of order " + to_string(n) + " exists: kn is odd" };

        vector<int> steps;
        for (int s = 1 ; s <= k / 2 ; ++s)
            steps.push_back(s);
        if (k % 2 == 1)
            steps.push_back(n / 2);
        return circulant_graph(n, steps);
    }

    auto bounded_degree_max_size(int n, int d) -> int
    {
        require(d >= 1 && d <= n - 1, "bounded degree needs 1 <= d <= n - 1");
        return (n % 2 == 1 && d % 2 == 1) ? (n * d - 1) / 2 : n * d / 2;
    }

    auto bounded_degree_max(int n, int d) -> Graph
    {
        require(d >= 1 && d <= n - 1, "bounded degree needs 1 <= d <= n - 1 (d = " + to_string(d) + ", n = " + to_string(n) + ")");

        if ((n * d) % 2 == 0)
            return regular_graph(d, n);

        if (d == 1)
            return matching_graph((n - 1) / 2).with_order(n);

        Graph result = regular_graph(d, n - 1).with_order(n);
        for (int i = 0 ; i < (d - 1) / 2 ; ++i) {
            result.clear_edge(2 * i, 2 * i + 1);
            result.set_edge(n - 1, 2 * i);
            result.set_edge(n - 1, 2 * i + 1);
        }
        return result;
    }

    auto star_witness(int p, int n) -> Graph
    {
        if (p % 2 != 0)
            throw ParityError{ "star witness needs even p, got " + to_string(p) };
        if (n % 2 != 1)
            throw ParityError{ "star witness needs odd n, got " + to_string(n) };
        require(p + 1 >= 5 && n >= p + 1, "star witness needs n >= p + 1 >= 5");

        Graph result = regular_graph(p - 1, n - 1).with_order(n);
        for (int i = 0 ; i < p / 2 ; ++i) {
            result.clear_edge(2 * i, 2 * i + 1);
            result.set_edge(n - 1, 2 * i);
            result.set_edge(n - 1, 2 * i + 1);
        }
        return result;
    }

    auto witness_graph(Witness which, int p) -> Graph
    {
        auto need_even = [&] {
            if (p < 2 || p % 2 != 0)
                throw ParityError{ witness_name(which) + " needs even p >= 2, got " + to_string(p) };
        };
        auto need_odd = [&] (int minimum) {
            if (p < minimum || p % 2 != 1)
                throw ParityError{ witness_name(which) + " needs odd p >= " + to_string(minimum) + ", got " + to_string(p) };
        };

        switch (which) {
            case Witness::g1:
                need_even();
                return complete_minus_pm(p + 2);
            case Witness::g2:
                need_even();
                return join(empty_graph(3), complete_minus_pm(p));
            case Witness::g3:
                need_odd(1);
                return join(complete_graph(1), complete_minus_pm(p + 1));
            case Witness::g4:
                need_odd(1);
                return complete_minus_pm(p + 3);
            case Witness::g5:
                need_even();
                return join(complete_graph(2), complete_minus_pm(p));
            case Witness::g6:
                need_even();
                return join(disjoint_union(complete_graph(1), complete_graph(2)), complete_minus_pm(p));
            case Witness::t4_small:
                need_odd(3);
                return join(complete_graph(3), complete_minus_pm(p - 1));
            case Witness::t4_large:
                need_odd(3);
                return join(complete_graph(2), complete_minus_pm(p + 1));
        }
        throw RangeError{ "unknown witness" };
    }

    auto witness_name(Witness which) -> string
    {
        switch (which) {
            case Witness::g1: return "g1";
            case Witness::g2: return "g2";
            case Witness::g3: return "g3";
            case Witness::g4: return "g4";
            case Witness::g5: return "g5";
            case Witness::g6: return "g6";
            case Witness::t4_small: return "t4_small";
            case Witness::t4_large: return "t4_large";
        }
        return "?";
    }

    auto parse_witness(const string & name) -> Witness
    {
        for (auto w : { Witness::g1, Witness::g2, Witness::g3, Witness::g4, Witness::g5, Witness::g6,
                Witness::t4_small, Witness::t4_large })
            if (witness_name(w) == name)
                return w;
        throw ParseError{ "unknown witness construction '" + name + "'" };
    }

    auto ConstructionSpec::to_string() const -> string
    {
        string result = kind;
        bool first = true;
        for (auto & [key, values] : params) {
            result += first ? ":" : ",";
            first = false;
            result += key + "=";
            for (unsigned i = 0 ; i < values.size() ; ++i)
                result += (i ? "+" : "") + std::to_string(values[i]);
        }
        return result;
    }

    namespace
    {
        auto parse_int(std::string_view text, const string & context) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{ } || ptr != text.data() + text.size() || text.empty())
                throw ParseError{ "expected an integer in " + context + ", got '" + string(text) + "'" };
            return value;
        }

        auto split(std::string_view text, char sep) -> vector<std::string_view>
        {
            vector<std::string_view> result;
            size_t start = 0;
            while (true) {
                size_t at = text.find(sep, start);
                result.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
                if (at == std::string_view::npos)
                    break;
                start = at + 1;
            }
            return result;
        }
    }

    auto parse_construction(const string & text) -> ConstructionSpec
    {
        ConstructionSpec spec;
        auto colon = text.find(':');
        spec.kind = text.substr(0, colon);
        if (spec.kind.empty())
            throw ParseError{ "empty construction name in '" + text + "'" };

        if (colon != string::npos) {
            std::string_view rest{ text };
            rest.remove_prefix(colon + 1);
            for (auto item : split(rest, ',')) {
                auto eq = item.find('=');
                if (eq == std::string_view::npos || eq == 0)
                    throw ParseError{ "expected key=value in construction '" + text + "'" };
                vector<int> values;
                for (auto v : split(item.substr(eq + 1), '+'))
                    values.push_back(parse_int(v, "'" + text + "'"));
                spec.params[string(item.substr(0, eq))] = values;
            }
        }
        return spec;
    }

    namespace
    {
        struct Family
        {
            vector<string> params;
            std::function<Graph (const ConstructionSpec &)> build;
        };

        auto scalar(const ConstructionSpec & spec, const string & key) -> int
        {
            auto it = spec.params.find(key);
            if (it == spec.params.end())
                throw ParseError{ "construction '" + spec.kind + "' needs parameter " + key };
            if (it->second.size() != 1)
                throw ParseError{ "parameter " + key + " of '" + spec.kind + "' must be a single integer" };
            return it->second.front();
        }

        auto families() -> const std::map<string, Family> &
        {
            static const std::map<string, Family> table = [] {
                std::map<string, Family> t;
                t["complete"] = { { "n" }, [] (auto & s) { return complete_graph(scalar(s, "n")); } };
                t["empty"] = { { "n" }, [] (auto & s) { return empty_graph(scalar(s, "n")); } };
                t["path"] = { { "n" }, [] (auto & s) { return path_graph(scalar(s, "n")); } };
                t["cycle"] = { { "n" }, [] (auto & s) { return cycle_graph(scalar(s, "n")); } };
                t["star"] = { { "p" }, [] (auto & s) { return star_graph(scalar(s, "p")); } };
                t["book"] = { { "p" }, [] (auto & s) { return book_graph(scalar(s, "p")); } };
                t["matching"] = { { "q" }, [] (auto & s) { return matching_graph(scalar(s, "q")); } };
                t["complete_bipartite"] = { { "s", "t" }, [] (auto & s) {
                    return complete_bipartite_graph(scalar(s, "s"), scalar(s, "t")); } };
                t["complete_minus_pm"] = { { "n" }, [] (auto & s) { return complete_minus_pm(scalar(s, "n")); } };
                t["circulant"] = { { "n", "s" }, [] (auto & s) {
                    auto it = s.params.find("s");
                    if (it == s.params.end())
                        throw ParseError{ "circulant needs parameter s" };
                    return circulant_graph(scalar(s, "n"), it->second); } };
                t["regular"] = { { "k", "n" }, [] (auto & s) { return regular_graph(scalar(s, "k"), scalar(s, "n")); } };
                t["bounded_degree_max"] = { { "n", "d" }, [] (auto & s) {
                    return bounded_degree_max(scalar(s, "n"), scalar(s, "d")); } };
                t["star_witness"] = { { "p", "n" }, [] (auto & s) { return star_witness(scalar(s, "p"), scalar(s, "n")); } };
                for (auto w : { Witness::g1, Witness::g2, Witness::g3, Witness::g4, Witness::g5, Witness::g6,
                        Witness::t4_small, Witness::t4_large })
                    t[witness_name(w)] = { { "p" }, [w] (auto & s) { return witness_graph(w, scalar(s, "p")); } };
                return t;
            }();
            return table;
        }
    }

    auto build_family(const ConstructionSpec & spec) -> Graph
    {
        auto it = families().find(spec.kind);
        if (it == families().end())
            throw ParseError{ "unknown construction family '" + spec.kind + "'" };
        std::set<string> allowed(it->second.params.begin(), it->second.params.end());
        for (auto & [key, _] : spec.params)
            if (! allowed.contains(key))
                throw ParseError{ "construction '" + spec.kind + "' has no parameter " + key };
        return it->second.build(spec);
    }

    auto build_family(const string & text) -> Graph
    {
        return build_family(parse_construction(text));
    }

    auto construction_families() -> vector<string>
    {
        vector<string> result;
        for (auto & [name, family] : families()) {
            string entry = name + ":";
            for (unsigned i = 0 ; i < family.params.size() ; ++i)
                entry += (i ? "," : "") + family.params[i] + "=..";
            result.push_back(entry);
        }
        return result;
    }
}
