#include <extremal/enumerate.hh>
#include <extremal/canonical.hh>
#include <extremal/errors.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

using std::array;
using std::uint8_t;
using std::uint64_t;
using std::vector;

namespace extremal
{
    namespace
    {
        struct Node
        {
            Graph graph;
            Certificate certificate;
            vector<Permutation> generators;
            int size = 0;
        };

        auto pair_index(int u, int v) -> int
        {
            // u < v, column order as in graph6
            return v * (v - 1) / 2 + u;
        }

        class Worker
        {
            public:
                Worker(int order, const KeepFilter & keep) :
                    _n(order), _keep(keep)
                {
                    for (int v = 1 ; v < _n ; ++v)
                        for (int u = 0 ; u < v ; ++u)
                            _pairs.push_back({ uint8_t(u), uint8_t(v) });
                }

                auto make_root() -> Node
                {
                    Node root;
                    root.graph = Graph{ _n };
                    ++stats.canonical_runs;
                    auto & l = _canon.run(root.graph);
                    root.certificate = l.certificate;
                    root.generators = l.generators;
                    return root;
                }

                auto children(const Node & parent, vector<Node> & out) -> void
                {
                    out.clear();
                    const Graph & p = parent.graph;
                    int pairs = int(_pairs.size());

                    // one representative non-edge per orbit of the known parent automorphisms
                    array<std::uint16_t, 2048> rep;
                    std::iota(rep.begin(), rep.begin() + pairs, 0);
                    auto find = [&] (int x) {
                        while (rep[x] != x)
                            x = rep[x] = rep[rep[x]];
                        return x;
                    };
                    for (auto & gen : parent.generators)
                        for (int i = 0 ; i < pairs ; ++i) {
                            int a = gen[_pairs[i][0]], b = gen[_pairs[i][1]];
                            int j = a < b ? pair_index(a, b) : pair_index(b, a);
                            int ri = find(i), rj = find(j);
                            if (ri != rj)
                                rep[std::max(ri, rj)] = std::min(ri, rj);
                        }

                    for (int i = 0 ; i < pairs ; ++i) {
                        int u = _pairs[i][0], v = _pairs[i][1];
                        if (p.adjacent(u, v) || find(i) != i)
                            continue;

                        Graph child = p;
                        child.set_edge(u, v);
                        if (accept(parent, child, u, v, out)) {
                            ++stats.nodes;
                        }
                    }
                }

                EnumerationStats stats;

            private:
                static auto edge_key(const Graph & g, int a, int b) -> unsigned
                {
                    int da = g.degree(a), db = g.degree(b);
                    int codeg = std::popcount(g.neighbourhood(a) & g.neighbourhood(b));
                    return (unsigned(std::max(da, db)) << 16) | (unsigned(std::min(da, db)) << 8) | unsigned(codeg);
                }

                auto accept(const Node & parent, const Graph & child, int u, int v, vector<Node> & out) -> bool
                {
                    unsigned key_uv = edge_key(child, u, v);
                    unsigned best = 0;
                    int ties = 0;
                    for (int a = 0 ; a < _n ; ++a)
                        for (VertexSet later = child.neighbourhood(a) >> a >> 1 ; later ; later &= later - 1) {
                            int b = a + 1 + std::countr_zero(later);
                            unsigned k = edge_key(child, a, b);
                            if (k > best) {
                                best = k;
                                ties = 1;
                            }
                            else if (k == best)
                                ++ties;
                        }
                    if (key_uv < best)
                        return false;

                    if (! _keep(child))
                        return false;

                    ++stats.canonical_runs;
                    auto & labelling = _canon.run(child);

                    if (ties > 1) {
                        array<uint8_t, 64> pos;
                        for (int i = 0 ; i < _n ; ++i)
                            pos[labelling.position[i]] = i;

                        int ca = -1, cb = -1, best_lo = 99, best_hi = 99;
                        for (int a = 0 ; a < _n ; ++a)
                            for (VertexSet later = child.neighbourhood(a) >> a >> 1 ; later ; later &= later - 1) {
                                int b = a + 1 + std::countr_zero(later);
                                if (edge_key(child, a, b) != best)
                                    continue;
                                int lo = std::min(pos[a], pos[b]), hi = std::max(pos[a], pos[b]);
                                if (lo < best_lo || (lo == best_lo && hi < best_hi)) {
                                    best_lo = lo;
                                    best_hi = hi;
                                    ca = a;
                                    cb = b;
                                }
                            }

                        if (! (ca == u && cb == v) && ! same_edge_orbit(labelling.generators, ca, cb, u, v)) {
                            Graph reduced = child;
                            reduced.clear_edge(ca, cb);
                            ++stats.canonical_runs;
                            // _check is separate so `labelling` stays valid
                            if (! (_check.run(reduced).certificate == parent.certificate))
                                return false;
                        }
                    }

                    for (auto & sibling : out)
                        if (sibling.certificate == labelling.certificate)
                            return false;

                    out.push_back(Node{ child, labelling.certificate, labelling.generators, parent.size + 1 });
                    return true;
                }

                auto same_edge_orbit(const vector<Permutation> & gens, int a, int b, int u, int v) -> bool
                {
                    if (gens.empty())
                        return false;
                    vector<bool> seen(_pairs.size(), false);
                    vector<int> queue{ pair_index(a, b) };
                    seen[queue[0]] = true;
                    int target = pair_index(u, v);
                    for (unsigned q = 0 ; q < queue.size() ; ++q) {
                        if (queue[q] == target)
                            return true;
                        auto [x, y] = _pairs[queue[q]];
                        for (auto & g : gens) {
                            int gx = g[x], gy = g[y];
                            int j = gx < gy ? pair_index(gx, gy) : pair_index(gy, gx);
                            if (! seen[j]) {
                                seen[j] = true;
                                queue.push_back(j);
                            }
                        }
                    }
                    return false;
                }

                int _n;
                const KeepFilter & _keep;
                vector<array<uint8_t, 2>> _pairs;
                Canonicaliser _canon, _check;
        };

        class Search
        {
            public:
                Search(int order, int max_size, const KeepFilter & keep, const Visitor & visit, int jobs) :
                    _n(order), _max_size(max_size), _keep(keep), _visit(visit), _jobs(std::max(1, jobs))
                {
                }

                auto run() -> EnumerationStats
                {
                    Worker main{ _n, _keep };
                    Node root = main.make_root();
                    if (! _keep(root.graph))
                        return main.stats;
                    ++main.stats.nodes;
                    emit(root.graph, main.stats);

                    if (_jobs == 1) {
                        dfs(main, root);
                        return main.stats;
                    }

                    // breadth-first until there are enough independent subtrees
                    vector<Node> frontier{ root }, next, kids;
                    int level = 0;
                    while (! frontier.empty() && frontier.size() < 32u * _jobs && level < _max_size) {
                        next.clear();
                        for (auto & node : frontier) {
                            main.children(node, kids);
                            for (auto & k : kids) {
                                emit(k.graph, main.stats);
                                next.push_back(std::move(k));
                            }
                        }
                        frontier.swap(next);
                        ++level;
                    }

                    EnumerationStats total = main.stats;
                    if (level < _max_size) {
                        std::atomic<size_t> index{ 0 };
                        vector<EnumerationStats> per_thread(_jobs);
                        vector<std::thread> threads;
                        for (int t = 0 ; t < _jobs ; ++t)
                            threads.emplace_back([&, t] {
                                Worker w{ _n, _keep };
                                for (size_t i ; (i = index++) < frontier.size() ; )
                                    dfs(w, frontier[i]);
                                per_thread[t] = w.stats;
                            });
                        for (auto & th : threads)
                            th.join();
                        for (auto & s : per_thread) {
                            total.nodes += s.nodes;
                            total.emitted += s.emitted;
                            total.canonical_runs += s.canonical_runs;
                        }
                    }
                    return total;
                }

            private:
                auto emit(const Graph & g, EnumerationStats & stats) -> void
                {
                    ++stats.emitted;
                    if (_jobs == 1)
                        _visit(g);
                    else {
                        std::lock_guard<std::mutex> lock{ _visit_mutex };
                        _visit(g);
                    }
                }

                auto dfs(Worker & w, const Node & node) -> void
                {
                    if (node.size >= _max_size)
                        return;
                    vector<Node> kids;
                    w.children(node, kids);
                    for (auto & k : kids) {
                        emit(k.graph, w.stats);
                        dfs(w, k);
                    }
                }

                int _n, _max_size;
                const KeepFilter & _keep;
                const Visitor & _visit;
                int _jobs;
                std::mutex _visit_mutex;
        };
    }

    auto augment(int order, int max_size, const KeepFilter & keep, const Visitor & visit, int jobs) -> EnumerationStats
    {
        if (order < 0 || order > max_order)
            throw RangeError{ "enumeration order " + std::to_string(order) + " outside 0..62" };
        Search search{ order, max_size, keep, visit, jobs };
        return search.run();
    }

    auto estimate_classes(int order, int max_size) -> double
    {
        // exact class totals for small orders, then labelled count / n!
        static const double totals[] = { 1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168,
            1018997864.0, 165091172592.0, 50502031367952.0 };
        int pairs = order * (order - 1) / 2;
        if (max_size < 0 || max_size > pairs)
            max_size = pairs;

        double log_factorial = std::lgamma(order + 1.0);
        double labelled = 0;
        for (int j = 0 ; j <= max_size ; ++j)
            labelled += std::exp(std::lgamma(pairs + 1.0) - std::lgamma(j + 1.0) - std::lgamma(pairs - j + 1.0) - log_factorial);
        double estimate = std::max(1.0, labelled);
        if (order < int(std::size(totals)))
            estimate = std::min(estimate, totals[order]);
        return estimate;
    }

    auto check_envelope(int order, int max_size, bool constrained, bool override_envelope, const std::string & what) -> void
    {
        if (order < 1 || order > max_order)
            throw RangeError{ what + ": order " + std::to_string(order) + " outside 1..62" };
        if (order <= 10 || override_envelope)
            return;

        double estimate = estimate_classes(order, max_size);
        if (estimate <= 2e6)
            return;

        std::ostringstream msg;
        msg.precision(3);
        msg << what << ": order " << order << " up to size " << max_size << " needs about " << estimate
            << " isomorphism classes" << (constrained ? " before pruning" : "") << "; "
            << (order == 11 ? "this is a long-running job" : "this is beyond the exhaustive envelope")
            << ", pass --override-envelope to run it anyway";
        throw InfeasibleTask{ msg.str(), estimate };
    }

    auto enumerate(const EnumerationTask & task, const Visitor & visitor) -> EnumerationStats
    {
        int pairs = task.order * (task.order - 1) / 2;
        int max_size = task.max_size < 0 ? pairs : std::min(task.max_size, pairs);
        bool constrained = ! task.forbidden.empty() || task.prune.has_value();
        check_envelope(task.order, max_size, constrained, task.override_envelope, "enumerate");

        KeepFilter keep = [&] (const Graph & g) {
            if (! task.forbidden.empty() && contains_any(g, task.forbidden))
                return false;
            if (task.prune && count_copies(g, task.prune->pattern) > task.prune->max_copies)
                return false;
            return true;
        };

        Visitor filtered = [&] (const Graph & g) {
            int s = g.size();
            if (s >= task.min_size && s <= max_size)
                visitor(g);
        };

        return augment(task.order, max_size, keep, filtered, task.jobs);
    }
}
