#ifndef EXTREMAL_EXACT_SEARCH_HH
#define EXTREMAL_EXACT_SEARCH_HH 1

#include <extremal/counting.hh>
#include <extremal/enumerate.hh>
#include <extremal/graph.hh>
#include <extremal/pattern.hh>

#include <string>
#include <vector>

namespace extremal
{
    struct SearchOptions
    {
        int jobs = 1;
        bool override_envelope = false;
    };

    struct TuranResult
    {
        int order = 0;
        std::vector<std::string> patterns;
        int ex_value = 0;

        /// Every pattern-free graph of size ex_value, as canonical graph6, sorted.
        std::vector<std::string> extremal;

        EnumerationStats stats;
        double runtime_ms = 0;
    };

    enum class Method
    {
        exhaustive,
        heuristic_upper_bound
    };

    auto method_name(Method m) -> std::string;

    struct MinCopyResult
    {
        int order = 0;
        int size = 0;
        std::string pattern;
        CopyCount min_copies = 0;

        /// Canonical graph6 of graphs attaining min_copies, sorted. Exhaustive
        /// runs list every class; heuristic runs list the best one found.
        std::vector<std::string> witnesses;

        Method method = Method::exhaustive;
        double runtime_ms = 0;
    };

    /**
     * ex(n, F) for a family F: grow F-free graphs edge by edge (a graph
     * containing some H in F is never extended) and report the largest size
     * reached with all graphs of that size.
     */
    auto turan_number(int n, const std::vector<Pattern> & patterns, const SearchOptions & options = { }) -> TuranResult;

    /**
     * Exact minimum number of copies of h over graphs of order n and size e.
     * For e <= C(n,2)/2 graphs are grown upwards and any partial graph whose
     * count already exceeds the incumbent is cut; above that the complements
     * (C(n,2) - e edges) are enumerated instead.
     */
    auto min_copies(int n, int e, const Pattern & h, const SearchOptions & options = { }) -> MinCopyResult;

    /// All isomorphism classes of (n, e) graphs with exactly k copies of h,
    /// canonically labelled and sorted by graph6.
    auto classify_witnesses(int n, int e, const Pattern & h, CopyCount k,
            const SearchOptions & options = { }) -> std::vector<Graph>;
}

#endif
