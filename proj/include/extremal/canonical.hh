#ifndef EXTREMAL_CANONICAL_HH
#define EXTREMAL_CANONICAL_HH 1

#include <extremal/graph.hh>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace extremal
{
    /// perm[v] is the image of vertex v. Entries beyond the graph order are unused.
    using Permutation = std::array<std::uint8_t, 64>;

    /**
     * The relabelled adjacency rows of a graph: row i has bit j set iff the
     * vertices at positions i and j are adjacent. Ordered row by row as
     * unsigned integers, which is the order the labeller minimises over.
     */
    struct Certificate
    {
        int order = 0;
        std::array<VertexSet, 64> rows = { };

        auto operator== (const Certificate & other) const -> bool;
        auto operator<=> (const Certificate & other) const -> std::strong_ordering;
    };

    /// Result of a canonical labelling run.
    struct Labelling
    {
        Certificate certificate;

        /// position[i] is the original vertex placed at canonical position i.
        std::array<std::uint8_t, 64> position = { };

        /// Automorphisms discovered by the search; they generate Aut(G).
        std::vector<Permutation> generators;
    };

    /**
     * Individualisation-refinement labeller. Partitions are refined to
     * equitability by neighbour counts, non-singleton cells are split by
     * individualising each candidate in turn, and the least certificate over
     * all leaves wins. Automorphisms found at equal leaves prune sibling
     * subtrees and backjump to the point of divergence.
     *
     * Holds scratch state, so one instance per thread.
     */
    class Canonicaliser
    {
        public:
            auto run(const Graph & g) -> const Labelling &;

            auto nodes_visited() const -> std::uint64_t
            {
                return _nodes;
            }

        private:
            struct Partition
            {
                std::array<std::uint8_t, 64> lab;
                VertexSet cell_ends;
            };

            auto refine(Partition & p, VertexSet pending) const -> void;
            auto search(Partition & p, int level) -> int;
            auto leaf(const Partition & p, int level) -> int;

            const Graph * _graph = nullptr;
            int _n = 0;
            bool _have_first = false;
            Labelling _result;
            Certificate _first_cert, _scratch_cert;
            std::array<std::uint8_t, 64> _first_lab = { }, _path = { }, _first_path = { }, _best_path = { };
            std::uint64_t _nodes = 0;
    };

    /**
     * A canonical label: equal for two graphs exactly when they are
     * isomorphic. Wraps the minimal certificate.
     */
    class CanonicalLabel
    {
        public:
            CanonicalLabel() = default;

            explicit CanonicalLabel(const Certificate & c) :
                _certificate(c)
            {
            }

            auto certificate() const -> const Certificate &
            {
                return _certificate;
            }

            /// The canonically relabelled graph.
            auto graph() const -> Graph;

            /// graph6 of the canonically relabelled graph; a stable string key.
            auto graph6() const -> std::string;

            auto operator== (const CanonicalLabel &) const -> bool = default;
            auto operator<=> (const CanonicalLabel &) const = default;

        private:
            Certificate _certificate;
    };

    auto canonical_form(const Graph & g) -> CanonicalLabel;

    /// The canonical graph6 string of g.
    auto canonical_graph6(const Graph & g) -> std::string;

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;

    auto automorphism_generators(const Graph & g) -> std::vector<Permutation>;

    /// |Aut(g)|. Throws RangeError if the order does not fit in 64 bits.
    auto automorphism_count(const Graph & g) -> std::uint64_t;

    /// Order of the permutation group on {0..n-1} generated by gens (Schreier-Sims).
    auto permutation_group_order(const std::vector<Permutation> & gens, int n) -> std::uint64_t;

    auto certificate_to_graph(const Certificate & c) -> Graph;
}

#endif
