#include <extremal/canonical.hh>
#include <extremal/graph6.hh>
#include <extremal/errors.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using std::array;
using std::string;
using std::uint8_t;
using std::uint64_t;
using std::vector;

namespace extremal
{
    auto Certificate::operator== (const Certificate & other) const -> bool
    {
        if (order != other.order)
            return false;
        for (int i = 0 ; i < order ; ++i)
            if (rows[i] != other.rows[i])
                return false;
        return true;
    }

    auto Certificate::operator<=> (const Certificate & other) const -> std::strong_ordering
    {
        if (order != other.order)
            return order <=> other.order;
        for (int i = 0 ; i < order ; ++i)
            if (rows[i] != other.rows[i])
                return rows[i] <=> other.rows[i];
        return std::strong_ordering::equal;
    }

    auto Canonicaliser::run(const Graph & g) -> const Labelling &
    {
        _graph = &g;
        _n = g.order();
        _have_first = false;
        _result.generators.clear();
        _result.certificate.order = _n;

        if (_n == 0)
            return _result;

        Partition root;
        std::iota(root.lab.begin(), root.lab.end(), 0);
        root.cell_ends = VertexSet{ 1 } << (_n - 1);
        refine(root, 1);
        search(root, 0);
        return _result;
    }

    auto Canonicaliser::refine(Partition & p, VertexSet pending) const -> void
    {
        const Graph & g = *_graph;
        array<int, 64> counts;

        while (pending) {
            int w = std::countr_zero(pending);
            pending &= pending - 1;
            int w_end = w + std::countr_zero(p.cell_ends >> w);

            VertexSet splitter = 0;
            for (int pos = w ; pos <= w_end ; ++pos)
                splitter |= VertexSet{ 1 } << p.lab[pos];

            int start = 0;
            for (VertexSet ends = p.cell_ends ; ends ; ends &= ends - 1) {
                int end = std::countr_zero(ends);
                if (end > start) {
                    bool differ = false;
                    for (int pos = start ; pos <= end ; ++pos) {
                        counts[pos] = std::popcount(g.neighbourhood(p.lab[pos]) & splitter);
                        differ = differ || counts[pos] != counts[start];
                    }

                    if (differ) {
                        // stable insertion sort of the cell by count
                        for (int i = start + 1 ; i <= end ; ++i) {
                            int c = counts[i];
                            uint8_t v = p.lab[i];
                            int j = i - 1;
                            while (j >= start && counts[j] > c) {
                                counts[j + 1] = counts[j];
                                p.lab[j + 1] = p.lab[j];
                                --j;
                            }
                            counts[j + 1] = c;
                            p.lab[j + 1] = v;
                        }

                        pending |= VertexSet{ 1 } << start;
                        for (int i = start + 1 ; i <= end ; ++i)
                            if (counts[i] != counts[i - 1]) {
                                p.cell_ends |= VertexSet{ 1 } << (i - 1);
                                pending |= VertexSet{ 1 } << i;
                            }
                    }
                }
                start = end + 1;
            }
        }
    }

    auto Canonicaliser::search(Partition & p, int level) -> int
    {
        ++_nodes;

        // discrete iff every position ends a cell
        VertexSet all = (VertexSet{ 1 } << _n) - 1;
        if ((p.cell_ends & all) == all)
            return leaf(p, level);

        int start = 0, end = 0;
        for (VertexSet ends = p.cell_ends ; ends ; ends &= ends - 1) {
            end = std::countr_zero(ends);
            if (end > start)
                break;
            start = end + 1;
        }

        VertexSet candidates = 0;
        for (int pos = start ; pos <= end ; ++pos)
            candidates |= VertexSet{ 1 } << p.lab[pos];

        // union-find over orbits of the known automorphisms fixing the path prefix
        array<uint8_t, 64> parent;
        std::iota(parent.begin(), parent.begin() + _n, 0);
        auto find = [&] (int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        unsigned gens_seen = 0;
        VertexSet explored = 0;

        for (VertexSet todo = candidates ; todo ; todo &= todo - 1) {
            int v = std::countr_zero(todo);

            for ( ; gens_seen < _result.generators.size() ; ++gens_seen) {
                auto & gen = _result.generators[gens_seen];
                bool fixes = true;
                for (int i = 0 ; i < level && fixes ; ++i)
                    fixes = gen[_path[i]] == _path[i];
                if (fixes)
                    for (int x = 0 ; x < _n ; ++x) {
                        int a = find(x), b = find(gen[x]);
                        if (a != b)
                            parent[std::max(a, b)] = std::min(a, b);
                    }
            }

            bool pruned = false;
            for (VertexSet e = explored ; e && ! pruned ; e &= e - 1)
                pruned = find(std::countr_zero(e)) == find(v);
            if (pruned)
                continue;

            Partition child = p;
            int pos = start;
            while (child.lab[pos] != v)
                ++pos;
            std::swap(child.lab[pos], child.lab[start]);
            child.cell_ends |= VertexSet{ 1 } << start;
            refine(child, VertexSet{ 1 } << start);

            _path[level] = v;
            int jump = search(child, level + 1);
            explored |= VertexSet{ 1 } << v;
            if (jump >= 0 && jump < level)
                return jump;
        }

        return -1;
    }

    auto Canonicaliser::leaf(const Partition & p, int level) -> int
    {
        const Graph & g = *_graph;
        array<uint8_t, 64> inverse;
        for (int i = 0 ; i < _n ; ++i)
            inverse[p.lab[i]] = i;

        Certificate & cert = _scratch_cert;
        cert.order = _n;
        for (int i = 0 ; i < _n ; ++i) {
            VertexSet row = 0;
            for (VertexSet nb = g.neighbourhood(p.lab[i]) ; nb ; nb &= nb - 1)
                row |= VertexSet{ 1 } << inverse[std::countr_zero(nb)];
            cert.rows[i] = row;
        }

        auto record = [&] (const array<uint8_t, 64> & ref_lab, const array<uint8_t, 64> & ref_path) {
            Permutation gamma;
            for (int i = 0 ; i < _n ; ++i)
                gamma[ref_lab[i]] = p.lab[i];
            _result.generators.push_back(gamma);
            int diverge = 0;
            while (diverge < level && ref_path[diverge] == _path[diverge])
                ++diverge;
            return diverge;
        };

        if (! _have_first) {
            _have_first = true;
            _first_cert = cert;
            _result.certificate = cert;
            _first_lab = p.lab;
            _result.position = p.lab;
            _first_path = _path;
            _best_path = _path;
            return -1;
        }

        if (cert == _first_cert)
            return record(_first_lab, _first_path);

        auto cmp = cert <=> _result.certificate;
        if (cmp == 0)
            return record(_result.position, _best_path);

        if (cmp < 0) {
            _result.certificate = cert;
            _result.position = p.lab;
            _best_path = _path;
        }
        return -1;
    }

    auto certificate_to_graph(const Certificate & c) -> Graph
    {
        Graph result{ c.order };
        for (int i = 0 ; i < c.order ; ++i)
            for (VertexSet row = c.rows[i] ; row ; row &= row - 1) {
                int j = std::countr_zero(row);
                if (j > i)
                    result.set_edge(i, j);
            }
        return result;
    }

    auto CanonicalLabel::graph() const -> Graph
    {
        return certificate_to_graph(_certificate);
    }

    auto CanonicalLabel::graph6() const -> string
    {
        return graph6_encode(graph());
    }

    auto canonical_form(const Graph & g) -> CanonicalLabel
    {
        Canonicaliser c;
        return CanonicalLabel{ c.run(g).certificate };
    }

    auto canonical_graph6(const Graph & g) -> string
    {
        return canonical_form(g).graph6();
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence())
            return false;
        return canonical_form(g) == canonical_form(h);
    }

    auto automorphism_generators(const Graph & g) -> vector<Permutation>
    {
        Canonicaliser c;
        return c.run(g).generators;
    }

    namespace
    {
        auto compose(const Permutation & a, const Permutation & b, int n) -> Permutation
        {
            // (a . b)(x) = a(b(x))
            Permutation r;
            for (int x = 0 ; x < n ; ++x)
                r[x] = a[b[x]];
            return r;
        }

        auto inverse_of(const Permutation & a, int n) -> Permutation
        {
            Permutation r;
            for (int x = 0 ; x < n ; ++x)
                r[a[x]] = x;
            return r;
        }

        auto is_identity(const Permutation & a, int n) -> bool
        {
            for (int x = 0 ; x < n ; ++x)
                if (a[x] != x)
                    return false;
            return true;
        }

        struct StabiliserChain
        {
            int n;
            // gens[i]: strong generators first introduced at level i; level i's
            // group is generated by gens[i..n-1], all of which fix 0..i-1.
            vector<vector<Permutation>> gens;
            // transversal[i][x]: maps i to x, present iff x in the level-i orbit of i
            vector<vector<Permutation>> transversal;
            vector<vector<bool>> in_orbit;

            explicit StabiliserChain(int n_) :
                n(n_), gens(n_), transversal(n_, vector<Permutation>(n_)), in_orbit(n_, vector<bool>(n_, false))
            {
            }

            auto rebuild_orbit(int level) -> void
            {
                std::fill(in_orbit[level].begin(), in_orbit[level].end(), false);
                Permutation id;
                std::iota(id.begin(), id.end(), 0);
                transversal[level][level] = id;
                in_orbit[level][level] = true;
                vector<int> queue{ level };
                for (unsigned q = 0 ; q < queue.size() ; ++q) {
                    int x = queue[q];
                    for (int l = level ; l < n ; ++l)
                        for (auto & s : gens[l]) {
                            int y = s[x];
                            if (! in_orbit[level][y]) {
                                in_orbit[level][y] = true;
                                transversal[level][y] = compose(s, transversal[level][x], n);
                                queue.push_back(y);
                            }
                        }
                }
            }

            // sift from `level`; returns (level where it stopped, residue)
            auto sift(Permutation g, int level) -> std::pair<int, Permutation>
            {
                for (int l = level ; l < n ; ++l) {
                    int y = g[l];
                    if (! in_orbit[l][y])
                        return { l, g };
                    g = compose(inverse_of(transversal[l][y], n), g, n);
                }
                return { n, g };
            }
        };
    }

    auto permutation_group_order(const vector<Permutation> & input, int n) -> uint64_t
    {
        if (n <= 1)
            return 1;

        StabiliserChain chain{ n };
        for (int l = 0 ; l < n ; ++l)
            chain.rebuild_orbit(l);

        auto add = [&] (const Permutation & g) {
            auto [level, residue] = chain.sift(g, 0);
            if (level == n && is_identity(residue, n))
                return false;
            if (level == n)
                level = n - 1;
            // residue fixes 0..level-1 by construction of sift
            chain.gens[level].push_back(residue);
            for (int l = level ; l >= 0 ; --l)
                chain.rebuild_orbit(l);
            return true;
        };

        for (auto & g : input)
            add(g);

        // close under Schreier generators until every one sifts to identity
        bool changed = true;
        while (changed) {
            changed = false;
            for (int l = n - 1 ; l >= 0 && ! changed ; --l) {
                for (int x = 0 ; x < n && ! changed ; ++x) {
                    if (! chain.in_orbit[l][x])
                        continue;
                    for (int k = l ; k < n && ! changed ; ++k)
                        for (unsigned s = 0 ; s < chain.gens[k].size() && ! changed ; ++s) {
                            auto & gen = chain.gens[k][s];
                            Permutation schreier = compose(inverse_of(chain.transversal[l][gen[x]], n),
                                    compose(gen, chain.transversal[l][x], n), n);
                            auto [level, residue] = chain.sift(schreier, l + 1);
                            if (! (level == n && is_identity(residue, n))) {
                                if (level == n)
                                    level = n - 1;
                                chain.gens[level].push_back(residue);
                                for (int r = level ; r >= 0 ; --r)
                                    chain.rebuild_orbit(r);
                                changed = true;
                            }
                        }
                }
            }
        }

        uint64_t order = 1;
        for (int l = 0 ; l < n ; ++l) {
            uint64_t orbit = std::count(chain.in_orbit[l].begin(), chain.in_orbit[l].end(), true);
            if (__builtin_mul_overflow(order, orbit, &order))
                throw RangeError{ "automorphism group order does not fit in 64 bits" };
        }
        return order;
    }

    auto automorphism_count(const Graph & g) -> uint64_t
    {
        Canonicaliser c;
        return permutation_group_order(c.run(g).generators, g.order());
    }
}
