#ifndef EXTREMAL_PATTERN_HH
#define EXTREMAL_PATTERN_HH 1

#include <extremal/graph.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace extremal
{
    /// Which counter a pattern can use. Everything else falls back to the
    /// embedding counter.
    enum class PatternKind
    {
        star,       // K_{1,p}, p >= 2
        book,       // B_p, p >= 2
        cycle4,
        triangle,
        generic
    };

    /**
     * A counting target H: a small graph without isolated vertices together
     * with |Aut(H)|. Recognised shapes (stars, books, C4, K3) are tagged so
     * the closed-form counters apply, whichever way the pattern was built.
     */
    class Pattern
    {
        public:
            /// Throws RangeError if h has an isolated vertex or no vertices.
            explicit Pattern(const Graph & h, std::string name = "");

            static auto star(int p) -> Pattern;
            static auto book(int p) -> Pattern;
            static auto cycle(int n) -> Pattern;
            static auto complete(int n) -> Pattern;
            static auto path(int n) -> Pattern;
            static auto complete_bipartite(int s, int t) -> Pattern;

            auto graph() const -> const Graph &
            {
                return _graph;
            }

            auto automorphism_count() const -> std::uint64_t
            {
                return _automorphisms;
            }

            auto kind() const -> PatternKind
            {
                return _kind;
            }

            /// p for stars and books, 0 otherwise.
            auto parameter() const -> int
            {
                return _parameter;
            }

            auto name() const -> const std::string &
            {
                return _name;
            }

        private:
            Graph _graph;
            std::uint64_t _automorphisms;
            PatternKind _kind = PatternKind::generic;
            int _parameter = 0;
            std::string _name;
    };

    /**
     * Parse the pattern mini-language: k:p (complete), s:p (star K_{1,p}),
     * b:p (book), c4 or c:n (cycle), p:n (path), kab:s,t (complete
     * bipartite), g6:<graph6>. A family is written family:c3,p4,k13 where the
     * tokens cN, pN, kN and kST (two digits, K_{S,T}) are accepted.
     */
    auto parse_pattern(const std::string & text) -> Pattern;

    auto parse_pattern_family(const std::string & text) -> std::vector<Pattern>;

    /// Either form above; a single pattern yields a one-element family.
    auto parse_patterns(const std::string & text) -> std::vector<Pattern>;
}

#endif
