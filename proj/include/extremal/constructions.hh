#ifndef EXTREMAL_CONSTRUCTIONS_HH
#define EXTREMAL_CONSTRUCTIONS_HH 1

#include <extremal/graph.hh>

#include <map>
#include <string>
#include <vector>

namespace extremal
{
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;

    /// K_{1,p}; the centre is vertex 0.
    auto star_graph(int p) -> Graph;

    /// B_p: p triangles on the common base edge {0, 1}. Order p + 2, size 2p + 1.
    auto book_graph(int p) -> Graph;

    /// qK_2 on vertices 0 .. 2q - 1, matched as {0,1},{2,3},...
    auto matching_graph(int q) -> Graph;

    auto complete_bipartite_graph(int s, int t) -> Graph;

    /// K_n minus the perfect matching {0,1},{2,3},...; n must be even.
    auto complete_minus_pm(int n) -> Graph;

    /// i ~ j iff (i - j) mod n or (j - i) mod n is in steps.
    auto circulant_graph(int n, const std::vector<int> & steps) -> Graph;

    /**
     * A k-regular graph of order n, 1 <= k <= n - 1, as a circulant: steps
     * 1 .. k/2 for even k, plus the antipodal step n/2 for odd k. Step 1 makes
     * it hamiltonian for k >= 2. Throws ParityError when kn is odd.
     */
    auto regular_graph(int k, int n) -> Graph;

    /**
     * A graph of order n with maximum degree at most d and the largest
     * possible size: nd/2 edges, or (nd - 1)/2 when n and d are both odd.
     * In the odd case a (d-1)/2 matching along the hamiltonian cycle of a
     * d-regular graph of order n - 1 is replaced by a new vertex joined to
     * the freed endpoints.
     */
    auto bounded_degree_max(int n, int d) -> Graph;

    /// The maximum size bounded_degree_max achieves.
    auto bounded_degree_max_size(int n, int d) -> int;

    /**
     * For even p and odd n >= p + 1 >= 5: a graph of order n with degree
     * sequence p, p-1, ..., p-1 (so exactly one K_{1,p}), built from a
     * hamiltonian (p-1)-regular graph of order n - 1 by replacing the matching
     * {0,1},{2,3},...,{p-2,p-1} with a new vertex n - 1 joined to 0 .. p-1.
     */
    auto star_witness(int p, int n) -> Graph;

    /// The book-problem constructions. Each takes the page count p.
    enum class Witness
    {
        g1,         // K_{p+2} - PM, p even: B_p-free at order p+2
        g2,         // co-K_3 join (K_p - PM), p even: B_p-free at order p+3
        g3,         // K_1 join (K_{p+1} - PM), p odd: B_p-free at order p+2
        g4,         // K_{p+3} - PM, p odd: B_p-free at order p+3
        g5,         // K_2 join (K_p - PM), p even: one B_p at order p+2
        g6,         // (K_1 + K_2) join (K_p - PM), p even: one B_p at order p+3
        t4_small,   // K_3 join (K_{p-1} - PM), p odd >= 3: three B_p at order p+2
        t4_large    // K_2 join (K_{p+1} - PM), p odd >= 3: 3(p+1) B_p at order p+3
    };

    auto witness_graph(Witness which, int p) -> Graph;

    auto witness_name(Witness which) -> std::string;

    /// Inverse of witness_name; throws ParseError for unknown names.
    auto parse_witness(const std::string & name) -> Witness;

    /**
     * A family name plus named integer parameters, e.g. "g5:p=4",
     * "circulant:n=6,s=1+3", "book:p=5". List-valued parameters use '+'.
     */
    struct ConstructionSpec
    {
        std::string kind;
        std::map<std::string, std::vector<int>> params;

        auto to_string() const -> std::string;
    };

    /// Throws ParseError on bad syntax.
    auto parse_construction(const std::string & text) -> ConstructionSpec;

    /// Throws ParseError for unknown families or missing parameters, and the
    /// family's ParityError / RangeError for bad values.
    auto build_family(const ConstructionSpec & spec) -> Graph;

    auto build_family(const std::string & text) -> Graph;

    /// Family names build_family accepts, for --help text.
    auto construction_families() -> std::vector<std::string>;
}

#endif
