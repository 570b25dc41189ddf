#ifndef EXTREMAL_HEURISTIC_HH
#define EXTREMAL_HEURISTIC_HH 1

#include <extremal/exact_search.hh>
#include <extremal/graph.hh>
#include <extremal/pattern.hh>

#include <cstdint>
#include <optional>
#include <string>

namespace extremal
{
    struct SearchBudget
    {
        std::uint64_t seed = 1;
        int max_steps = 200000;
        int restarts = 20;
        double initial_temperature = 1.0;

        /// Temperature is multiplied by this after every step.
        double decay = 0.99998;

        auto to_string() const -> std::string;
    };

    /// "restarts=20,steps=200000,t0=1.0,decay=0.99998,seed=7"; any subset of
    /// keys, the rest keep their defaults. Throws ParseError.
    auto parse_budget(const std::string & text) -> SearchBudget;

    struct HeuristicOptions
    {
        int jobs = 1;

        /// When set, restart 0 starts from this graph (order and size at most
        /// n and e), padded with isolated vertices and then extended one edge
        /// at a time, each time adding the non-edge creating fewest new copies.
        std::optional<Graph> start;
    };

    /// Sum over vertex pairs of C(codeg, 2); the plateau tie-breaker.
    auto codegree_potential(const Graph & g) -> std::uint64_t;

    /**
     * Simulated annealing over graphs of order n and size e. A move deletes
     * one edge and adds one non-edge. Moves lowering the copy count are taken;
     * moves keeping it are taken when they lower the codegree potential and
     * otherwise with probability 1/2; moves raising it by d are taken with
     * probability exp(-d / T). Each restart draws from its own stream derived
     * from (seed, restart index), so results depend only on (task, budget).
     *
     * The result is an upper bound (method heuristic-upper-bound); its copy
     * count is recomputed by the embedding counter before returning.
     */
    auto search_min_copies(int n, int e, const Pattern & h, const SearchBudget & budget,
            const HeuristicOptions & options = { }) -> MinCopyResult;

    /// The best graph found by the search above, for callers that need it
    /// directly rather than as graph6.
    struct HeuristicOutcome
    {
        Graph graph;
        CopyCount copies = 0;
        MinCopyResult result;
    };

    auto search_min_copies_detailed(int n, int e, const Pattern & h, const SearchBudget & budget,
            const HeuristicOptions & options = { }) -> HeuristicOutcome;
}

#endif
