"""Named series constructors and combinatorial tables.

This module builds the raw ingredients every Bernoulli-type family is
assembled from: degenerate exponentials, the inner series 1 - e^{-t} and
log(1 + t), polyexponentials, multiple polylogarithms, and Stirling
triangles of both kinds.

Index vectors (k_1, ..., k_r) are plain tuples of ints throughout the
package; entries may be negative.  Series are returned in the package's
exact :class:`~polybern.series.TruncatedSeries` form; tables hold plain
Python ints (themselves arbitrary precision).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .rationals import inv_pow
from .series import TruncatedSeries

STIRLING_KINDS = ("second", "first_unsigned", "first_signed")


def index_vector(ks: Sequence[int]) -> tuple[int, ...]:
    """Validate and normalize an index vector (k_1, ..., k_r), r >= 1."""
    out = tuple(int(k) for k in ks)
    if not out:
        raise ValueError("index vector must be non-empty")
    return out


def falling_factorial(x, n: int, lam) -> Fraction:
    """The product x (x - lam) ... (x - (n-1) lam); equals x**n at lam = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = Fraction(x)
    lam = Fraction(lam)
    result = Fraction(1)
    for j in range(n):
        result *= x - j * lam
    return result


def generalized_binomial(a: int, m: int) -> int:
    """Binomial coefficient C(a, m) for any integer a and m >= 0.

    Computed as a(a-1)...(a-m+1)/m!, which is always an exact integer.
    For a < 0 this realizes the upper-negation values used in binomial
    series; note it vanishes once the falling product crosses zero.
    """
    if m < 0:
        return 0
    num = 1
    for i in range(m):
        num *= a - i
    return num // factorial(m)


def degenerate_exp(x, lam, order: int) -> TruncatedSeries:
    """The degenerate exponential (1 + lam*t)^(x/lam) as a series.

    Coefficient n is the falling product x(x-lam)...(x-(n-1)lam) over n!.
    The product form is regular at lam = 0 (where the closed form is
    singular) and there reduces to the classical e^{xt}.
    """
    x = Fraction(x)
    lam = Fraction(lam)
    coeffs = [Fraction(1)]
    ff = Fraction(1)
    fact = 1
    for n in range(1, order + 1):
        ff *= x - (n - 1) * lam
        fact *= n
        coeffs.append(ff / fact)
    return TruncatedSeries(coeffs)


def one_minus_exp_neg(order: int) -> TruncatedSeries:
    """1 - e^{-t}: coefficient n is (-1)^(n+1)/n! for n >= 1."""
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(Fraction((-1) ** (n + 1), factorial(n)))
    return TruncatedSeries(coeffs)


def log1p_series(order: int) -> TruncatedSeries:
    """log(1 + t): coefficient n is (-1)^(n+1)/n for n >= 1."""
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(Fraction((-1) ** (n + 1), n))
    return TruncatedSeries(coeffs)


def polyexp(k: int, order: int) -> TruncatedSeries:
    """Polyexponential series: coefficient n is 1/((n-1)! n^k) for n >= 1.

    At k = 1 this is e^x - 1.
    """
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(Fraction(1, factorial(n - 1)) * inv_pow(n, k))
    return TruncatedSeries(coeffs)


def multi_polylog(ks: Sequence[int], order: int) -> TruncatedSeries:
    """Multiple polylogarithm of depth r = len(ks) as a series in x.

    The coefficient of x^n is the chain sum over 0 < n_1 < ... < n_{r-1} < n
    of the product of n_i^{-k_i}, times n^{-k_r}.  It vanishes for n < r
    (the shortest chain is 1 < 2 < ... < r).

    Computed by the prefix-sum recurrence A_1(m) = m^{-k_1},
    A_j(m) = m^{-k_j} * sum_{m' < m} A_{j-1}(m'), answer A_r(n); cost
    O(r * order).  Chain enumeration would visit C(n-1, r-1) chains per
    coefficient and is kept only as a test oracle.
    """
    ks = index_vector(ks)
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)] * (order + 1)
    if order == 0:
        return TruncatedSeries(coeffs)
    level = [inv_pow(m, ks[0]) for m in range(1, order + 1)]
    for k in ks[1:]:
        running = Fraction(0)
        nxt = []
        for m in range(1, order + 1):
            nxt.append(inv_pow(m, k) * running)
            running += level[m - 1]
        level = nxt
    for n in range(1, order + 1):
        coeffs[n] = level[n - 1]
    return TruncatedSeries(coeffs)


@dataclass(frozen=True)
class StirlingTable:
    """Triangle T[n][k] of Stirling numbers up to max_n.

    kind "second" counts set partitions into k blocks; "first_unsigned"
    counts permutations with k cycles; "first_signed" carries the
    alternating sign (-1)^(n-k) on the unsigned values.
    """

    kind: str
    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, n: int, k: int) -> int:
        """T[n][k]; zero outside the triangle."""
        if n < 0 or n > self.max_n:
            raise IndexError(f"row {n} outside table (max_n={self.max_n})")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "max_n": self.max_n,
            "rows": [list(row) for row in self.rows],
        }

    def to_csv(self) -> str:
        """Rectangular CSV, rows indexed by n, columns by k (zero padded)."""
        width = self.max_n + 1
        lines = ["n," + ",".join(str(k) for k in range(width))]
        for n, row in enumerate(self.rows):
            padded = list(row) + [0] * (width - len(row))
            lines.append(str(n) + "," + ",".join(str(v) for v in padded))
        return "\n".join(lines) + "\n"


def stirling_table(kind: str, max_n: int) -> StirlingTable:
    """Build a Stirling triangle by its two-term recurrence.

    second:          T[n][k] = k*T[n-1][k] + T[n-1][k-1]
    first_unsigned:  T[n][k] = (n-1)*T[n-1][k] + T[n-1][k-1]
    first_signed:    (-1)^(n-k) times the unsigned triangle
    """
    if kind not in STIRLING_KINDS:
        raise ValueError(f"kind must be one of {STIRLING_KINDS}, got {kind!r}")
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, max_n + 1):
        prev = rows[n - 1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            above = prev[k] if k <= n - 1 else 0
            row[k] = (k if kind == "second" else (n - 1)) * above + prev[k - 1]
        rows.append(tuple(row))
    if kind == "first_signed":
        rows = [
            tuple((-1) ** (n - k) * v for k, v in enumerate(row))
            for n, row in enumerate(rows)
        ]
    return StirlingTable(kind=kind, max_n=max_n, rows=tuple(rows))
