#ifndef EXTREMAL_ENUMERATE_HH
#define EXTREMAL_ENUMERATE_HH 1

#include <extremal/counting.hh>
#include <extremal/graph.hh>
#include <extremal/pattern.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace extremal
{
    /// Subtrees whose copy count of `pattern` exceeds `max_copies` are cut.
    /// Copy counts only grow as edges are added, so nothing below is lost.
    struct CopyBound
    {
        Pattern pattern;
        CopyCount max_copies;
    };

    struct EnumerationTask
    {
        int order = 0;
        int min_size = 0;

        /// -1 means C(order, 2).
        int max_size = -1;

        /// Pattern-free mode when non-empty: graphs containing any of these
        /// are neither emitted nor extended.
        std::vector<Pattern> forbidden;

        std::optional<CopyBound> prune;

        int jobs = 1;
        bool override_envelope = false;
    };

    struct EnumerationStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t emitted = 0;
        std::uint64_t canonical_runs = 0;
    };

    /// Node filter: false cuts the node and its whole subtree. Must be
    /// monotone (if it rejects G it rejects every supergraph of G) and
    /// thread-safe when jobs > 1.
    using KeepFilter = std::function<bool (const Graph &)>;

    /// Called once per accepted isomorphism class. Calls are serialised.
    using Visitor = std::function<void (const Graph &)>;

    /**
     * Isomorph-free generation by canonical edge augmentation at fixed order.
     * Starting from the edgeless graph, every class of size m + 1 is reached
     * from exactly one class of size m: a child C = P + uv is accepted iff
     * C minus its canonical edge is isomorphic to P, and children of one
     * parent are deduplicated. The canonical edge maximises (max degree, min
     * degree, codegree) over the edges of C, ties broken by canonical
     * position, so most children are accepted or rejected from degrees
     * alone.
     *
     * With jobs > 1 the tree is expanded breadth-first until there are enough
     * subtrees, which workers then take in turn; visitation order is then
     * unspecified but the set of visited classes is not.
     */
    auto augment(int order, int max_size, const KeepFilter & keep, const Visitor & visit,
            int jobs = 1) -> EnumerationStats;

    /// One representative per isomorphism class of graphs matching the task
    /// with size in [min_size, max_size]. Throws InfeasibleTask outside the envelope.
    auto enumerate(const EnumerationTask & task, const Visitor & visitor) -> EnumerationStats;

    /// Rough number of isomorphism classes with at most max_size edges.
    auto estimate_classes(int order, int max_size) -> double;

    /**
     * Exhaustive runs are allowed up to order 10, or when the estimated
     * class count is small; order 11 is long-running and order 12 and up
     * beyond the desk envelope, both requiring an explicit override.
     */
    auto check_envelope(int order, int max_size, bool constrained, bool override_envelope,
            const std::string & what) -> void;
}

#endif
