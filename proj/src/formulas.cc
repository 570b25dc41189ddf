#include <extremal/formulas.hh>
#include <extremal/errors.hh>

#include <string>

using std::to_string;

namespace extremal
{
    namespace
    {
        auto exact_half(int twice) -> int
        {
            if (twice % 2 != 0)
                throw RangeError{ "internal: odd numerator " + to_string(twice) + " in a closed form" };
            return twice / 2;
        }
    }

    auto ex_star(int n, int p) -> int
    {
        if (p < 2 || p > n - 1)
            throw RangeError{ "ex_star needs 2 <= p <= n - 1 (n = " + to_string(n) + ", p = " + to_string(p) + ")" };
        int d = p - 1;
        if (n % 2 == 1 && d % 2 == 1)
            return exact_half(n * d - 1);
        return exact_half(n * d);
    }

    auto ex_book(int n, int p) -> int
    {
        if (p < 1)
            throw RangeError{ "ex_book needs p >= 1" };
        bool even = p % 2 == 0;
        if (n == p + 2)
            return even ? exact_half(p * (p + 2)) : exact_half((p + 1) * (p + 1));
        if (n == p + 3)
            return even ? exact_half(p * (p + 4)) : exact_half((p + 1) * (p + 3));
        throw RangeError{ "ex_book is only known in closed form for n = p + 2 and n = p + 3 (n = "
            + to_string(n) + ", p = " + to_string(p) + ")" };
    }

    auto ex_c4_table(int n) -> int
    {
        static const int table[] = { 7, 9, 11, 13, 16, 18, 21, 24 };
        if (n < 6 || n > 13)
            throw RangeError{ "ex(n, C4) table covers 6 <= n <= 13, got " + to_string(n) };
        return table[n - 6];
    }

    auto ex_c4_table_is_trusted_input(int n) -> bool
    {
        return n == 12 || n == 13;
    }

    auto ex_triangle_p4_claw_free(int n) -> int
    {
        if (n < 1)
            throw RangeError{ "ex_triangle_p4_claw_free needs n >= 1" };
        int k = n / 3;
        return n % 3 == 2 ? 2 * k + 1 : 2 * k;
    }

    auto ex_triangle(int n) -> int
    {
        if (n < 0)
            throw RangeError{ "ex_triangle needs n >= 0" };
        return n * n / 4;
    }
}
