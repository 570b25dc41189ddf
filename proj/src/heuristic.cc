#include <extremal/heuristic.hh>
#include <extremal/canonical.hh>
#include <extremal/counting.hh>
#include <extremal/errors.hh>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

using std::pair;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace extremal
{
    auto SearchBudget::to_string() const -> string
    {
        std::ostringstream out;
        out << "restarts=" << restarts << ",steps=" << max_steps << ",t0=" << initial_temperature
            << ",decay=" << decay << ",seed=" << seed;
        return out.str();
    }

    auto parse_budget(const string & text) -> SearchBudget
    {
        SearchBudget budget;
        std::istringstream in{ text };
        string item;
        while (std::getline(in, item, ',')) {
            if (item.empty())
                continue;
            auto eq = item.find('=');
            if (eq == string::npos)
                throw ParseError{ "budget item '" + item + "' is not key=value" };
            string key = item.substr(0, eq), value = item.substr(eq + 1);
            try {
                size_t used = 0;
                if (key == "restarts")
                    budget.restarts = std::stoi(value, &used);
                else if (key == "steps")
                    budget.max_steps = std::stoi(value, &used);
                else if (key == "t0")
                    budget.initial_temperature = std::stod(value, &used);
                else if (key == "decay")
                    budget.decay = std::stod(value, &used);
                else if (key == "seed")
                    budget.seed = std::stoull(value, &used);
                else
                    throw ParseError{ "unknown budget key '" + key + "'" };
                if (used != value.size())
                    throw ParseError{ "trailing characters in budget value '" + value + "'" };
            }
            catch (const std::logic_error &) {
                throw ParseError{ "bad budget value '" + value + "' for " + key };
            }
        }
        if (budget.restarts < 1 || budget.max_steps < 0)
            throw ParseError{ "budget needs restarts >= 1 and steps >= 0" };
        return budget;
    }

    auto codegree_potential(const Graph & g) -> uint64_t
    {
        uint64_t total = 0;
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v) {
                uint64_t c = std::popcount(g.neighbourhood(u) & g.neighbourhood(v));
                total += c * (c - 1) / 2;
            }
        return total;
    }

    namespace
    {
        auto splitmix64(uint64_t x) -> uint64_t
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }

        /// mt19937_64 is fully specified by the standard; the distributions
        /// are not, so bounded integers and unit reals are drawn by hand.
        class Stream
        {
            public:
                explicit Stream(uint64_t seed) :
                    _engine(seed)
                {
                }

                auto below(uint64_t bound) -> uint64_t
                {
                    // Lemire's multiply-shift with rejection
                    uint64_t x = _engine();
                    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
                    uint64_t low = static_cast<uint64_t>(m);
                    if (low < bound) {
                        uint64_t threshold = -bound % bound;
                        while (low < threshold) {
                            x = _engine();
                            m = static_cast<unsigned __int128>(x) * bound;
                            low = static_cast<uint64_t>(m);
                        }
                    }
                    return static_cast<uint64_t>(m >> 64);
                }

                auto unit() -> double
                {
                    return double(_engine() >> 11) * 0x1.0p-53;
                }

            private:
                std::mt19937_64 _engine;
        };

        struct RestartResult
        {
            Graph graph;
            CopyCount copies = ~CopyCount{ 0 };
            string key;
        };

        auto greedy_extend(Graph g, int n, int e, const Pattern & h) -> Graph
        {
            if (g.order() > n || g.size() > e)
                throw RangeError{ "heuristic start graph is larger than the target order or size" };
            g = g.with_order(n);
            while (g.size() < e) {
                int best_u = -1, best_v = -1;
                CopyCount best_copies = 0;
                uint64_t best_potential = 0;
                for (int v = 1 ; v < n ; ++v)
                    for (int u = 0 ; u < v ; ++u) {
                        if (g.adjacent(u, v))
                            continue;
                        g.set_edge(u, v);
                        CopyCount c = count_copies(g, h);
                        uint64_t pot = codegree_potential(g);
                        g.clear_edge(u, v);
                        if (best_u < 0 || c < best_copies || (c == best_copies && pot < best_potential)) {
                            best_u = u;
                            best_v = v;
                            best_copies = c;
                            best_potential = pot;
                        }
                    }
                g.set_edge(best_u, best_v);
            }
            return g;
        }

        auto run_restart(int n, int e, const Pattern & h, const SearchBudget & budget, int restart,
                const std::optional<Graph> & start) -> RestartResult
        {
            Stream rng{ splitmix64(budget.seed ^ splitmix64(uint64_t(restart) + 1)) };

            vector<pair<int, int>> pairs;
            for (int v = 1 ; v < n ; ++v)
                for (int u = 0 ; u < v ; ++u)
                    pairs.emplace_back(u, v);

            Graph g{ n };
            if (restart == 0 && start)
                g = greedy_extend(*start, n, e, h);
            else {
                for (size_t i = pairs.size() ; i > 1 ; --i)
                    std::swap(pairs[i - 1], pairs[rng.below(i)]);
                for (int i = 0 ; i < e ; ++i)
                    g.set_edge(pairs[i].first, pairs[i].second);
            }

            vector<pair<int, int>> edges, non_edges;
            for (int v = 1 ; v < n ; ++v)
                for (int u = 0 ; u < v ; ++u)
                    (g.adjacent(u, v) ? edges : non_edges).emplace_back(u, v);

            CopyCount copies = count_copies(g, h);
            uint64_t potential = codegree_potential(g);

            RestartResult best{ g, copies, "" };
            double temperature = budget.initial_temperature;

            if (! edges.empty() && ! non_edges.empty())
                for (int step = 0 ; step < budget.max_steps && best.copies > 0 ; ++step, temperature *= budget.decay) {
                    size_t i = rng.below(edges.size()), j = rng.below(non_edges.size());
                    auto [a, b] = edges[i];
                    auto [c, d] = non_edges[j];
                    g.clear_edge(a, b);
                    g.set_edge(c, d);

                    CopyCount new_copies = count_copies(g, h);
                    uint64_t new_potential = codegree_potential(g);

                    bool take;
                    if (new_copies < copies)
                        take = true;
                    else if (new_copies == copies)
                        take = new_potential < potential || rng.unit() < 0.5;
                    else
                        take = temperature > 0 && rng.unit() < std::exp(-double(new_copies - copies) / temperature);

                    if (take) {
                        std::swap(edges[i], non_edges[j]);
                        copies = new_copies;
                        potential = new_potential;
                        if (copies < best.copies) {
                            best.graph = g;
                            best.copies = copies;
                        }
                    }
                    else {
                        g.clear_edge(c, d);
                        g.set_edge(a, b);
                    }
                }

            best.key = canonical_graph6(best.graph);
            return best;
        }
    }

    auto search_min_copies_detailed(int n, int e, const Pattern & h, const SearchBudget & budget,
            const HeuristicOptions & options) -> HeuristicOutcome
    {
        auto started = std::chrono::steady_clock::now();
        if (n < 1 || n > max_order)
            throw RangeError{ "order " + to_string(n) + " outside 1..62" };
        if (e < 0 || e > n * (n - 1) / 2)
            throw RangeError{ "size " + to_string(e) + " outside 0..C(" + to_string(n) + ",2)" };

        vector<RestartResult> results(budget.restarts);
        int jobs = std::max(1, std::min(options.jobs, budget.restarts));
        if (jobs == 1)
            for (int r = 0 ; r < budget.restarts ; ++r)
                results[r] = run_restart(n, e, h, budget, r, options.start);
        else {
            std::atomic<int> next{ 0 };
            vector<std::thread> threads;
            for (int t = 0 ; t < jobs ; ++t)
                threads.emplace_back([&] {
                    for (int r ; (r = next++) < budget.restarts ; )
                        results[r] = run_restart(n, e, h, budget, r, options.start);
                });
            for (auto & th : threads)
                th.join();
        }

        auto best = std::min_element(results.begin(), results.end(), [] (const RestartResult & a, const RestartResult & b) {
            return a.copies != b.copies ? a.copies < b.copies : a.key < b.key;
        });

        CopyCount recount = count_generic(best->graph, h);
        if (recount != best->copies || best->graph.size() != e || best->graph.order() != n)
            throw Error{ "heuristic result failed independent recount" };

        HeuristicOutcome outcome;
        outcome.graph = best->graph;
        outcome.copies = recount;
        outcome.result.order = n;
        outcome.result.size = e;
        outcome.result.pattern = h.name();
        outcome.result.min_copies = recount;
        outcome.result.witnesses = { best->key };
        outcome.result.method = Method::heuristic_upper_bound;
        outcome.result.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        return outcome;
    }

    auto search_min_copies(int n, int e, const Pattern & h, const SearchBudget & budget,
            const HeuristicOptions & options) -> MinCopyResult
    {
        return search_min_copies_detailed(n, e, h, budget, options).result;
    }
}
