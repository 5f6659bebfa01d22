"""Independent brute-force oracles for the test suite.

Everything in this module is deliberately written from scratch on plain
lists of Fractions, without importing any series or family code from the
package, so that agreement between an oracle and the implementation is a
genuine two-route check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial


# -- series arithmetic on plain coefficient lists ---------------------------


def convolve(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    """Cauchy product truncated at ``order``."""
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if i > order:
            break
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return out


def brute_compose(outer: list[Fraction], inner: list[Fraction], order: int) -> list[Fraction]:
    """sum_j outer[j] * inner**j, term by term (inner[0] must be 0)."""
    assert inner[0] == 0
    out = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    for j, oj in enumerate(outer):
        if j > order:
            break
        for idx in range(order + 1):
            out[idx] += oj * power[idx]
        power = convolve(power, inner, order)
    return out


def long_divide(num: list[Fraction], den: list[Fraction], order: int) -> list[Fraction]:
    """Series division num/den where both share the same valuation v and
    den[v] != 0; result truncated at ``order``."""
    v = 0
    while den[v] == 0:
        assert num[v] == 0
        v += 1
    n = [Fraction(c) for c in num[v:]]
    d = [Fraction(c) for c in den[v:]]
    out = []
    for k in range(order + 1):
        acc = n[k] if k < len(n) else Fraction(0)
        for i in range(k):
            dj = d[k - i] if k - i < len(d) else Fraction(0)
            acc -= out[i] * dj
        out.append(acc / d[0])
    return out


# -- combinatorial counts ----------------------------------------------------


def chain_coefficient(ks: tuple[int, ...], n: int) -> Fraction:
    """Coefficient of x^n of the multiple polylogarithm by enumerating all
    strictly increasing chains ending at n."""
    if n == 0:
        return Fraction(0)
    r = len(ks)
    total = Fraction(0)
    for chain in combinations(range(1, n), r - 1):
        term = Fraction(1)
        for k_i, n_i in zip(ks, chain):
            term *= Fraction(1, n_i**k_i) if k_i >= 0 else Fraction(n_i ** (-k_i))
        total += term
    last = Fraction(1, n ** ks[-1]) if ks[-1] >= 0 else Fraction(n ** (-ks[-1]))
    return total * last


def count_set_partitions(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k blocks.

    Elements are assigned one at a time; a new block may be opened or the
    element may join any of the `used` existing blocks, so identical
    shapes are counted by weight instead of re-enumerated.
    """
    count = 0

    def assign(i: int, used: int, weight: int):
        nonlocal count
        if i == n:
            if used == k:
                count += weight
            return
        if used + (n - i) < k:
            return
        assign(i + 1, used + 1, weight)
        if used:
            assign(i + 1, used, weight * used)

    assign(0, 0, 1)
    return count


def cycle_count_histogram(n: int) -> list[int]:
    """histogram[k] = number of permutations of n elements with exactly k
    cycles, by enumerating all n! permutations once."""
    hist = [0] * (n + 1)
    if n == 0:
        return [1]
    for perm in permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
        hist[cycles] += 1
    return hist


def count_permutations_by_cycles(n: int, k: int) -> int:
    """Number of permutations of n elements with exactly k cycles."""
    if n == 0:
        return 1 if k == 0 else 0
    return cycle_count_histogram(n)[k]


# -- classical Bernoulli -----------------------------------------------------


def bernoulli_numbers(order: int) -> list[Fraction]:
    """B_0..B_order by the recurrence sum_{j<n} C(n+1, j) B_j = -(n+1) B_n
    rearranged, with the B_1 = -1/2 convention."""
    b = [Fraction(1)]
    for n in range(1, order + 1):
        acc = sum(comb(n + 1, j) * b[j] for j in range(n))
        b.append(Fraction(-acc, n + 1))
    return b


def bernoulli_polynomial(n: int, x: Fraction, numbers: list[Fraction] | None = None) -> Fraction:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
    if numbers is None:
        numbers = bernoulli_numbers(n)
    x = Fraction(x)
    return sum((comb(n, k) * numbers[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))


# -- a classical (non-degenerate) family pipeline, from scratch --------------


def classical_multi_poly_values(ks: tuple[int, ...], x: Fraction, order: int) -> list[Fraction]:
    """Values of the non-degenerate family r! Li_ks(1-e^{-t})/(e^t-1)^r e^{xt}
    built entirely from list arithmetic and brute-force chain sums."""
    r = len(ks)
    work = order + r
    li = [chain_coefficient(ks, n) for n in range(work + 1)]
    u = [Fraction(0)] + [Fraction((-1) ** (m + 1), factorial(m)) for m in range(1, work + 1)]
    numerator = brute_compose(li, u, work)
    numerator = [c * factorial(r) for c in numerator]
    expm1 = [Fraction(0)] + [Fraction(1, factorial(m)) for m in range(1, work + 1)]
    den = [Fraction(1)] + [Fraction(0)] * work
    for _ in range(r):
        den = convolve(den, expm1, work)
    quotient = long_divide(numerator, den, order)
    x = Fraction(x)
    ext = [x**m / factorial(m) for m in range(order + 1)]
    series = convolve(quotient, ext, order)
    return [factorial(n) * series[n] for n in range(order + 1)]
