#ifndef EXTREMAL_GRAPH_HH
#define EXTREMAL_GRAPH_HH 1

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <optional>
#include <vector>

namespace extremal
{
    using VertexSet = std::uint64_t;

    inline constexpr int max_order = 62;

    /**
     * A simple undirected graph on vertices 0 .. order - 1, stored as one
     * 64-bit neighbourhood mask per vertex. Rows beyond order are always zero,
     * so whole-row comparisons are meaningful.
     */
    class Graph
    {
        private:
            int _order = 0;
            std::array<VertexSet, 64> _rows = { };

        public:
            Graph() = default;

            /// The edgeless graph of the given order. Throws RangeError outside 0 .. 62.
            explicit Graph(int order);

            Graph(int order, const std::vector<std::pair<int, int>> & edges);

            auto order() const -> int
            {
                return _order;
            }

            auto size() const -> int;

            auto all_vertices() const -> VertexSet
            {
                return _order == 64 ? ~VertexSet{ 0 } : ((VertexSet{ 1 } << _order) - 1);
            }

            auto neighbourhood(int v) const -> VertexSet
            {
                return _rows[v];
            }

            auto degree(int v) const -> int
            {
                return std::popcount(_rows[v]);
            }

            auto adjacent(int u, int v) const -> bool
            {
                return (_rows[u] >> v) & 1;
            }

            /// |N(u) & N(v)|. Throws RangeError for u == v or out-of-range vertices.
            auto codegree(int u, int v) const -> int;

            auto max_degree() const -> int;

            /// Degrees sorted non-increasingly.
            auto degree_sequence() const -> std::vector<int>;

            auto edges() const -> std::vector<std::pair<int, int>>;

            /// Unchecked mutators for hot loops; the checked versions below
            /// validate indices.
            auto set_edge(int u, int v) -> void
            {
                _rows[u] |= VertexSet{ 1 } << v;
                _rows[v] |= VertexSet{ 1 } << u;
            }

            auto clear_edge(int u, int v) -> void
            {
                _rows[u] &= ~(VertexSet{ 1 } << v);
                _rows[v] &= ~(VertexSet{ 1 } << u);
            }

            auto add_edge(int u, int v) -> void;

            auto remove_edge(int u, int v) -> void;

            auto check_vertex(int v) const -> void;

            /// The graph induced on the first `order` vertices plus nothing else;
            /// used when growing or shrinking a graph in place.
            auto with_order(int order) const -> Graph;

            auto operator== (const Graph &) const -> bool = default;
    };

    /// Relabel so that vertex v of g becomes vertex perm[v] of the result.
    auto relabel(const Graph & g, const std::vector<int> & perm) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// Disjoint union; g's vertices keep their indices, h's are shifted by order(g).
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    /// Disjoint union plus every edge between the two sides.
    auto join(const Graph & g, const Graph & h) -> Graph;

    auto induced_subgraph(const Graph & g, VertexSet vertices) -> Graph;

    auto is_regular(const Graph & g, int k) -> bool;

    /// A hamiltonian cycle as a vertex sequence starting at 0, or nothing.
    /// Bitmask dynamic programming; throws RangeError above order 20.
    auto hamiltonian_cycle(const Graph & g) -> std::optional<std::vector<int>>;
}

#endif
