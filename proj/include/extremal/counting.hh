#ifndef EXTREMAL_COUNTING_HH
#define EXTREMAL_COUNTING_HH 1

#include <extremal/graph.hh>
#include <extremal/pattern.hh>

#include <cstdint>
#include <vector>

namespace extremal
{
    /// Number of distinct subgraphs of G isomorphic to H.
    using CopyCount = std::uint64_t;

    /// C(n, k), throwing RangeError on 64-bit overflow.
    auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;

    /// Sum over v of C(deg v, p). Throws RangeError for p < 2.
    auto count_star(const Graph & g, int p) -> CopyCount;

    /// Sum over edges uv of C(codeg(u, v), p). Throws RangeError for p < 2.
    auto count_book(const Graph & g, int p) -> CopyCount;

    /// Half the sum over unordered pairs of C(codeg, 2).
    auto count_c4(const Graph & g) -> CopyCount;

    auto count_triangles(const Graph & g) -> CopyCount;

    /// Edge-preserving injections H -> G divided by |Aut(H)|.
    auto count_generic(const Graph & g, const Pattern & h) -> CopyCount;

    /// Picks the closed-form counter when the pattern has one.
    auto count_copies(const Graph & g, const Pattern & h) -> CopyCount;

    /// True iff G has at least one copy of H; stops at the first embedding.
    auto contains(const Graph & g, const Pattern & h) -> bool;

    auto contains_any(const Graph & g, const std::vector<Pattern> & patterns) -> bool;
}

#endif
