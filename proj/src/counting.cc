#include <extremal/counting.hh>
#include <extremal/errors.hh>

#include <array>
#include <bit>
#include <string>

using std::array;
using std::uint64_t;
using std::vector;

namespace extremal
{
    auto binomial(uint64_t n, uint64_t k) -> uint64_t
    {
        if (k > n)
            return 0;
        if (k > n - k)
            k = n - k;
        uint64_t result = 1;
        for (uint64_t i = 1 ; i <= k ; ++i) {
            // result * (n - k + i) is divisible by i after the multiplication
            unsigned __int128 wide = static_cast<unsigned __int128>(result) * (n - k + i);
            wide /= i;
            if (wide > ~uint64_t{ 0 })
                throw RangeError{ "binomial coefficient overflows 64 bits" };
            result = static_cast<uint64_t>(wide);
        }
        return result;
    }

    namespace
    {
        auto checked_add(CopyCount a, CopyCount b) -> CopyCount
        {
            CopyCount r;
            if (__builtin_add_overflow(a, b, &r))
                throw RangeError{ "copy count overflows 64 bits" };
            return r;
        }
    }

    auto count_star(const Graph & g, int p) -> CopyCount
    {
        if (p < 2)
            throw RangeError{ "count_star needs p >= 2; use count_generic for K_{1,1}" };
        CopyCount total = 0;
        for (int v = 0 ; v < g.order() ; ++v)
            total = checked_add(total, binomial(g.degree(v), p));
        return total;
    }

    auto count_book(const Graph & g, int p) -> CopyCount
    {
        if (p < 2)
            throw RangeError{ "count_book needs p >= 2; use count_triangles for B_1" };
        CopyCount total = 0;
        for (int u = 0 ; u < g.order() ; ++u)
            for (VertexSet later = g.neighbourhood(u) >> u >> 1 ; later ; later &= later - 1) {
                int v = u + 1 + std::countr_zero(later);
                total = checked_add(total, binomial(std::popcount(g.neighbourhood(u) & g.neighbourhood(v)), p));
            }
        return total;
    }

    auto count_c4(const Graph & g) -> CopyCount
    {
        CopyCount twice = 0;
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v) {
                uint64_t c = std::popcount(g.neighbourhood(u) & g.neighbourhood(v));
                twice += c * (c - 1) / 2;
            }
        return twice / 2;
    }

    auto count_triangles(const Graph & g) -> CopyCount
    {
        CopyCount thrice = 0;
        for (int u = 0 ; u < g.order() ; ++u)
            for (VertexSet later = g.neighbourhood(u) >> u >> 1 ; later ; later &= later - 1) {
                int v = u + 1 + std::countr_zero(later);
                thrice += std::popcount(g.neighbourhood(u) & g.neighbourhood(v));
            }
        return thrice / 3;
    }

    namespace
    {
        /// Backtracking embedder: H's vertices are matched in an order where
        /// each one (after the first of its component) has an earlier neighbour.
        class Embedder
        {
            public:
                Embedder(const Graph & g, const Graph & h) :
                    _g(g), _k(h.order())
                {
                    array<bool, 64> placed = { };
                    for (int i = 0 ; i < _k ; ++i) {
                        int best = -1, best_links = -1, best_degree = -1;
                        for (int v = 0 ; v < _k ; ++v) {
                            if (placed[v])
                                continue;
                            int links = 0;
                            for (int j = 0 ; j < i ; ++j)
                                links += h.adjacent(v, _order[j]);
                            if (links > best_links || (links == best_links && h.degree(v) > best_degree)) {
                                best = v;
                                best_links = links;
                                best_degree = h.degree(v);
                            }
                        }
                        placed[best] = true;
                        _order[i] = best;
                        _earlier[i] = 0;
                        for (int j = 0 ; j < i ; ++j)
                            if (h.adjacent(best, _order[j]))
                                _earlier[i] |= VertexSet{ 1 } << j;
                        _eligible[i] = 0;
                        for (int w = 0 ; w < g.order() ; ++w)
                            if (g.degree(w) >= h.degree(best))
                                _eligible[i] |= VertexSet{ 1 } << w;
                    }
                }

                auto count() -> uint64_t
                {
                    _stop_at_first = false;
                    _found = 0;
                    extend(0, 0);
                    return _found;
                }

                auto exists() -> bool
                {
                    _stop_at_first = true;
                    _found = 0;
                    extend(0, 0);
                    return _found > 0;
                }

            private:
                auto extend(int i, VertexSet used) -> bool
                {
                    if (i == _k) {
                        ++_found;
                        return _stop_at_first;
                    }

                    VertexSet candidates = _eligible[i] & ~used;
                    for (VertexSet e = _earlier[i] ; e ; e &= e - 1)
                        candidates &= _g.neighbourhood(_image[std::countr_zero(e)]);

                    for ( ; candidates ; candidates &= candidates - 1) {
                        int w = std::countr_zero(candidates);
                        _image[i] = w;
                        if (extend(i + 1, used | (VertexSet{ 1 } << w)))
                            return true;
                    }
                    return false;
                }

                const Graph & _g;
                int _k;
                array<int, 64> _order = { }, _image = { };
                array<VertexSet, 64> _earlier = { }, _eligible = { };
                uint64_t _found = 0;
                bool _stop_at_first = false;
        };
    }

    auto count_generic(const Graph & g, const Pattern & h) -> CopyCount
    {
        if (h.graph().order() > g.order())
            return 0;
        Embedder embedder{ g, h.graph() };
        uint64_t embeddings = embedder.count();
        if (embeddings % h.automorphism_count() != 0)
            throw RangeError{ "embedding count not divisible by |Aut(H)|" };
        return embeddings / h.automorphism_count();
    }

    auto count_copies(const Graph & g, const Pattern & h) -> CopyCount
    {
        switch (h.kind()) {
            case PatternKind::star: return count_star(g, h.parameter());
            case PatternKind::book: return count_book(g, h.parameter());
            case PatternKind::cycle4: return count_c4(g);
            case PatternKind::triangle: return count_triangles(g);
            case PatternKind::generic: break;
        }
        return count_generic(g, h);
    }

    auto contains(const Graph & g, const Pattern & h) -> bool
    {
        switch (h.kind()) {
            case PatternKind::star:
                return g.max_degree() >= h.parameter();
            case PatternKind::book:
            case PatternKind::triangle: {
                int need = h.kind() == PatternKind::book ? h.parameter() : 1;
                for (int u = 0 ; u < g.order() ; ++u)
                    for (VertexSet nb = g.neighbourhood(u) ; nb ; nb &= nb - 1)
                        if (std::popcount(g.neighbourhood(u) & g.neighbourhood(std::countr_zero(nb))) >= need)
                            return true;
                return false;
            }
            case PatternKind::cycle4:
                for (int u = 0 ; u < g.order() ; ++u)
                    for (int v = u + 1 ; v < g.order() ; ++v)
                        if (std::popcount(g.neighbourhood(u) & g.neighbourhood(v)) >= 2)
                            return true;
                return false;
            case PatternKind::generic:
                break;
        }
        if (h.graph().order() > g.order() || h.graph().size() > g.size())
            return false;
        Embedder embedder{ g, h.graph() };
        return embedder.exists();
    }

    auto contains_any(const Graph & g, const vector<Pattern> & patterns) -> bool
    {
        for (auto & h : patterns)
            if (contains(g, h))
                return true;
        return false;
    }
}
