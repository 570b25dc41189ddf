#ifndef EXTREMAL_FORMULAS_HH
#define EXTREMAL_FORMULAS_HH 1

namespace extremal
{
    /// ex(n, K_{1,p}) = f(n, p-1), the largest size with maximum degree <= p-1:
    /// (n(p-1) - 1)/2 when n and p-1 are both odd, n(p-1)/2 otherwise.
    /// Requires 2 <= p <= n - 1.
    auto ex_star(int n, int p) -> int;

    /**
     * ex(n, B_p) at the two orders where it is known in closed form:
     *   n = p+2: p(p+2)/2 (p even), (p+1)^2/2 (p odd)
     *   n = p+3: p(p+4)/2 (p even), (p+1)(p+3)/2 (p odd)
     * Throws RangeError for any other order.
     */
    auto ex_book(int n, int p) -> int;

    /// Tabulated ex(n, C4) for 6 <= n <= 13: 7, 9, 11, 13, 16, 18, 21, 24.
    auto ex_c4_table(int n) -> int;

    /// True for the entries (n = 12, 13) taken from the literature; they are
    /// beyond the exhaustive envelope and are not recomputed here.
    auto ex_c4_table_is_trusted_input(int n) -> bool;

    /// ex(n, {C3, P4, K_{1,3}}): 2k for n = 3k or 3k+1, 2k+1 for n = 3k+2.
    auto ex_triangle_p4_claw_free(int n) -> int;

    /// Mantel: floor(n^2 / 4).
    auto ex_triangle(int n) -> int;
}

#endif
