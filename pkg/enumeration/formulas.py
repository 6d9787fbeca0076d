"""
Closed-form counts: refined Baxter numbers, Schroder numbers, and fixed-point-free
Baxter involutions. Exact integer / rational arithmetic throughout.
"""

from fractions import Fraction

from scipy.special import comb, factorial


def ext_binom(a, b):
    """Binomial with C(a, a) = 1 for every integer a and 0 outside 0 <= b <= a otherwise."""
    if a == b:
        return 1
    if b < 0 or b > a:
        return 0
    return int(comb(a, b, exact=True))


def baxter_count(n, m, i, j):
    """Baxter permutations of size n with m ascents, i lr-maxima and j rl-maxima."""
    if n < 1:
        raise ValueError("n must be >= 1, got {}".format(n))
    if not 0 <= m <= n - 1:
        raise ValueError("m must lie in 0..{}, got {}".format(n - 1, m))
    for name, value in (("i", i), ("j", j)):
        if not 1 <= value <= n:
            raise ValueError("{} must lie in 1..{}, got {}".format(name, n, value))
    bracket = (
        ext_binom(n - i - 1, n - m - 2) * ext_binom(n - j - 1, m - 1)
        - ext_binom(n - i - 1, n - m - 1) * ext_binom(n - j - 1, m)
    )
    value = Fraction(i * j, n * (n + 1)) * ext_binom(n + 1, m + 1) * bracket
    if value.denominator != 1:
        raise ArithmeticError("non-integral count {} at (n={}, m={}, i={}, j={})".format(value, n, m, i, j))
    return int(value)


def formula_cells(n):
    """{(m, i, j): count} over the nonzero cells."""
    cells = {}
    for m in range(n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                c = baxter_count(n, m, i, j)
                if c:
                    cells[(m, i, j)] = c
    return cells


def baxter_number(n):
    if n < 1:
        raise ValueError("n must be >= 1, got {}".format(n))
    return sum(formula_cells(n).values())


def schroder(n):
    """Large Schroder numbers 1, 2, 6, 22, 90, ... indexed from n = 1."""
    if n < 1:
        raise ValueError("n must be >= 1, got {}".format(n))
    total = 0
    for k in range(n):
        num = factorial(n - 1 + k, exact=True)
        den = factorial(k, exact=True) * factorial(k + 1, exact=True) * factorial(n - 1 - k, exact=True)
        total += num // den
    return total


def ffp_involution_count(n):
    """Fixed-point-free Baxter involutions of length 2n."""
    if n < 1:
        raise ValueError("n must be >= 1, got {}".format(n))
    value = Fraction(3 * 2 ** (n - 1), (n + 1) * (n + 2)) * comb(2 * n, n, exact=True)
    if value.denominator != 1:
        raise ArithmeticError("non-integral involution count at n={}".format(n))
    return int(value)
