#include <extremal/exact_search.hh>
#include <extremal/canonical.hh>
#include <extremal/errors.hh>
#include <extremal/graph6.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>

using std::string;
using std::to_string;
using std::vector;

namespace extremal
{
    namespace
    {
        auto elapsed_ms(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }

        auto sorted_unique(vector<string> v) -> vector<string>
        {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        }

        auto check_size(int n, int e) -> void
        {
            if (n < 1 || n > max_order)
                throw RangeError{ "order " + to_string(n) + " outside 1..62" };
            if (e < 0 || e > n * (n - 1) / 2)
                throw RangeError{ "size " + to_string(e) + " outside 0..C(" + to_string(n) + ",2)" };
        }

        auto grow_upwards(int n, int e) -> bool
        {
            return 2 * e <= n * (n - 1) / 2;
        }
    }

    auto method_name(Method m) -> string
    {
        return m == Method::exhaustive ? "exhaustive" : "heuristic-upper-bound";
    }

    auto turan_number(int n, const vector<Pattern> & patterns, const SearchOptions & options) -> TuranResult
    {
        auto start = std::chrono::steady_clock::now();
        if (patterns.empty())
            throw RangeError{ "turan_number needs at least one pattern" };
        check_envelope(n, n * (n - 1) / 2, true, options.override_envelope, "turan_number");

        TuranResult result;
        result.order = n;
        for (auto & h : patterns)
            result.patterns.push_back(h.name());

        vector<string> extremal;
        int best = -1;
        KeepFilter keep = [&] (const Graph & g) { return ! contains_any(g, patterns); };
        Visitor visit = [&] (const Graph & g) {
            int s = g.size();
            if (s > best) {
                best = s;
                extremal.clear();
            }
            if (s == best)
                extremal.push_back(canonical_graph6(g));
        };

        result.stats = augment(n, n * (n - 1) / 2, keep, visit, options.jobs);
        result.ex_value = best;
        result.extremal = sorted_unique(std::move(extremal));
        result.runtime_ms = elapsed_ms(start);
        return result;
    }

    auto min_copies(int n, int e, const Pattern & h, const SearchOptions & options) -> MinCopyResult
    {
        auto start = std::chrono::steady_clock::now();
        check_size(n, e);
        int pairs = n * (n - 1) / 2;
        bool upwards = grow_upwards(n, e);
        check_envelope(n, upwards ? e : pairs - e, upwards, options.override_envelope, "min_copies");

        MinCopyResult result;
        result.order = n;
        result.size = e;
        result.pattern = h.name();
        result.method = Method::exhaustive;

        std::atomic<CopyCount> incumbent{ std::numeric_limits<CopyCount>::max() };
        vector<string> witnesses;

        auto offer = [&] (const Graph & g, CopyCount c) {
            // visitor calls are serialised by augment
            if (c < incumbent.load()) {
                incumbent.store(c);
                witnesses.clear();
            }
            if (c == incumbent.load())
                witnesses.push_back(canonical_graph6(g));
        };

        if (upwards) {
            KeepFilter keep = [&] (const Graph & g) { return count_copies(g, h) <= incumbent.load(); };
            Visitor visit = [&] (const Graph & g) {
                if (g.size() == e)
                    offer(g, count_copies(g, h));
            };
            augment(n, e, keep, visit, options.jobs);
        }
        else {
            int complement_size = pairs - e;
            KeepFilter keep = [] (const Graph &) { return true; };
            Visitor visit = [&] (const Graph & g) {
                if (g.size() == complement_size) {
                    Graph full = complement(g);
                    offer(full, count_copies(full, h));
                }
            };
            augment(n, complement_size, keep, visit, options.jobs);
        }

        result.min_copies = incumbent.load();
        result.witnesses = sorted_unique(std::move(witnesses));
        result.runtime_ms = elapsed_ms(start);
        return result;
    }

    auto classify_witnesses(int n, int e, const Pattern & h, CopyCount k, const SearchOptions & options) -> vector<Graph>
    {
        check_size(n, e);
        int pairs = n * (n - 1) / 2;
        bool upwards = grow_upwards(n, e);
        check_envelope(n, upwards ? e : pairs - e, upwards, options.override_envelope, "classify_witnesses");

        vector<string> found;
        if (upwards) {
            KeepFilter keep = [&] (const Graph & g) { return count_copies(g, h) <= k; };
            Visitor visit = [&] (const Graph & g) {
                if (g.size() == e && count_copies(g, h) == k)
                    found.push_back(canonical_graph6(g));
            };
            augment(n, e, keep, visit, options.jobs);
        }
        else {
            int complement_size = pairs - e;
            KeepFilter keep = [] (const Graph &) { return true; };
            Visitor visit = [&] (const Graph & g) {
                if (g.size() == complement_size) {
                    Graph full = complement(g);
                    if (count_copies(full, h) == k)
                        found.push_back(canonical_graph6(full));
                }
            };
            augment(n, complement_size, keep, visit, options.jobs);
        }

        vector<Graph> result;
        for (auto & s : sorted_unique(std::move(found)))
            result.push_back(graph6_decode(s));
        return result;
    }
}
