"""Exact truncated power series: the arithmetic everything else stands on.

Every coefficient in this package is an arbitrary-precision rational, so
identities that hold, hold on the nose; there is no epsilon anywhere.
This script walks the core series toolkit: products, inversion,
composition, and monomial shifts, ending with the classical observation
that inverting (e^t - 1)/t produces the Bernoulli numbers.
"""

from fractions import Fraction
from math import factorial

from polybern import TruncatedSeries

N = 8

print("== building blocks ==")
exp = TruncatedSeries([Fraction(1, factorial(n)) for n in range(N + 1)])
exp_neg = TruncatedSeries([Fraction((-1) ** n, factorial(n)) for n in range(N + 1)])
print("exp(t)      :", exp)
print("exp(-t)     :", exp_neg)
print("product     :", exp * exp_neg, " (exactly 1: no rounding to hide behind)")

print()
print("== inversion ==")
geometric = TruncatedSeries([1, -1, 0, 0, 0]).invert()
print("1/(1-t)     :", geometric)
unit = TruncatedSeries([Fraction(1, factorial(n + 1)) for n in range(N + 1)])
print("(e^t-1)/t   :", unit)
inv = unit.invert()
print("its inverse :", inv)
print("n! * coeffs :", [factorial(n) * c for n, c in enumerate(inv)])
print("              ^ the Bernoulli numbers, from nothing but the recurrence")

print()
print("== composition ==")
neg_log = TruncatedSeries([Fraction(0)] + [Fraction(1, n) for n in range(1, N + 1)])
inner = TruncatedSeries(
    [Fraction(0)] + [Fraction((-1) ** (n + 1), factorial(n)) for n in range(1, N + 1)]
)
print("-log(1-x) composed with x = 1 - e^{-t}:")
print("  ", neg_log.compose(inner), " (collapses to plain t)")

print()
print("== valuation-aware monomial shifts ==")
shifted = inner.div_tpow(1)
print("(1-e^{-t})/t:", shifted)
print("round trip  :", shifted.mul_tpow(1) == inner)
try:
    TruncatedSeries([0, 1, 1]).div_tpow(2)
except ArithmeticError as exc:
    print("dividing t+t^2 by t^2 refuses to guess:", exc)
