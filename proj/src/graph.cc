#include <extremal/graph.hh>
#include <extremal/errors.hh>

#include <algorithm>
#include <functional>
#include <string>

using std::pair;
using std::to_string;
using std::vector;

namespace extremal
{
    Graph::Graph(int order) :
        _order(order)
    {
        if (order < 0 || order > max_order)
            throw RangeError{ "graph order " + to_string(order) + " outside 0.." + to_string(max_order) };
    }

    Graph::Graph(int order, const vector<pair<int, int>> & edges) :
        Graph(order)
    {
        for (auto & [u, v] : edges)
            add_edge(u, v);
    }

    auto Graph::size() const -> int
    {
        int twice = 0;
        for (int v = 0 ; v < _order ; ++v)
            twice += std::popcount(_rows[v]);
        return twice / 2;
    }

    auto Graph::check_vertex(int v) const -> void
    {
        if (v < 0 || v >= _order)
            throw RangeError{ "vertex " + to_string(v) + " out of range for order " + to_string(_order) };
    }

    auto Graph::codegree(int u, int v) const -> int
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw RangeError{ "codegree needs two distinct vertices" };
        return std::popcount(_rows[u] & _rows[v]);
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (int v = 0 ; v < _order ; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::degree_sequence() const -> vector<int>
    {
        vector<int> result;
        result.reserve(_order);
        for (int v = 0 ; v < _order ; ++v)
            result.push_back(degree(v));
        std::sort(result.begin(), result.end(), std::greater<int>{ });
        return result;
    }

    auto Graph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int v = 0 ; v < _order ; ++v)
            for (VertexSet later = _rows[v] & ~((VertexSet{ 2 } << v) - 1) ; later ; later &= later - 1)
                result.emplace_back(v, std::countr_zero(later));
        return result;
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw RangeError{ "loops are not allowed (vertex " + to_string(u) + ")" };
        set_edge(u, v);
    }

    auto Graph::remove_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        clear_edge(u, v);
    }

    auto Graph::with_order(int order) const -> Graph
    {
        Graph result{ order };
        int keep = std::min(order, _order);
        VertexSet mask = keep == 64 ? ~VertexSet{ 0 } : (VertexSet{ 1 } << keep) - 1;
        for (int v = 0 ; v < keep ; ++v)
            result._rows[v] = _rows[v] & mask;
        return result;
    }

    auto relabel(const Graph & g, const vector<int> & perm) -> Graph
    {
        if (int(perm.size()) != g.order())
            throw RangeError{ "permutation length does not match graph order" };
        Graph result{ g.order() };
        for (auto & [u, v] : g.edges())
            result.add_edge(perm[u], perm[v]);
        return result;
    }

    auto complement(const Graph & g) -> Graph
    {
        Graph result{ g.order() };
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                if (! g.adjacent(u, v))
                    result.set_edge(u, v);
        return result;
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        if (g.order() + h.order() > max_order)
            throw RangeError{ "combined order " + to_string(g.order() + h.order()) + " exceeds " + to_string(max_order) };
        Graph result{ g.order() + h.order() };
        for (auto & [u, v] : g.edges())
            result.set_edge(u, v);
        for (auto & [u, v] : h.edges())
            result.set_edge(u + g.order(), v + g.order());
        return result;
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        Graph result = disjoint_union(g, h);
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = 0 ; v < h.order() ; ++v)
                result.set_edge(u, v + g.order());
        return result;
    }

    auto induced_subgraph(const Graph & g, VertexSet vertices) -> Graph
    {
        vector<int> keep;
        for (VertexSet s = vertices & g.all_vertices() ; s ; s &= s - 1)
            keep.push_back(std::countr_zero(s));
        Graph result{ int(keep.size()) };
        for (unsigned i = 0 ; i < keep.size() ; ++i)
            for (unsigned j = i + 1 ; j < keep.size() ; ++j)
                if (g.adjacent(keep[i], keep[j]))
                    result.set_edge(i, j);
        return result;
    }

    auto is_regular(const Graph & g, int k) -> bool
    {
        for (int v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) != k)
                return false;
        return true;
    }

    auto hamiltonian_cycle(const Graph & g) -> std::optional<std::vector<int>>
    {
        int n = g.order();
        if (n > 20)
            throw RangeError{ "hamiltonian_cycle supports order <= 20" };
        if (n < 3)
            return std::nullopt;

        // reach[mask] = set of end vertices v such that some path from 0
        // visits exactly mask and ends at v
        std::vector<VertexSet> reach(std::size_t{ 1 } << n, 0);
        reach[1] = 1;
        for (std::size_t mask = 1 ; mask < reach.size() ; mask += 2)
            for (VertexSet ends = reach[mask] ; ends ; ends &= ends - 1) {
                int v = std::countr_zero(ends);
                for (VertexSet next = g.neighbourhood(v) & ~VertexSet(mask) ; next ; next &= next - 1) {
                    int w = std::countr_zero(next);
                    reach[mask | (std::size_t{ 1 } << w)] |= VertexSet{ 1 } << w;
                }
            }

        std::size_t full = reach.size() - 1;
        VertexSet closing = reach[full] & g.neighbourhood(0);
        if (! closing)
            return std::nullopt;

        std::vector<int> cycle;
        std::size_t mask = full;
        int v = std::countr_zero(closing);
        while (v != 0) {
            cycle.push_back(v);
            std::size_t prev_mask = mask & ~(std::size_t{ 1 } << v);
            VertexSet prev = reach[prev_mask] & g.neighbourhood(v);
            mask = prev_mask;
            v = std::countr_zero(prev);
        }
        cycle.push_back(0);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
    }
}
