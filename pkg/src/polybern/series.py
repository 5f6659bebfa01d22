"""Dense truncated formal power series over exact rationals.

A :class:`TruncatedSeries` holds the coefficients ``c[0..order]`` of a
formal power series in one variable ``t``; nothing beyond ``order`` is
known, as opposed to zero.  The truncation order is part of the value and
every binary operation truncates its result to the smaller operand order,
so the order of a series is always a trustworthy statement of how many
coefficients are exact.  Silent order extension is the classic source of
wrong generating-function code and is never performed; the one deliberate
exception is multiplication by a monomial ``t**r`` (:meth:`mul_tpow`),
whose result is exactly determined up to ``order + r``.

Coefficients are ``fractions.Fraction``; integers are accepted and
coerced, floats are rejected.  Values are immutable and safe to share.

Representation is dense: these series are dense in practice and orders
stay at desk scale, so the O(N^2) product and O(N^3) composition are the
right trade against exactness (there is no useful FFT over rationals).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Union

from .rationals import format_rational, parse_rational

Scalar = Union[int, Fraction]


class ValuationError(ArithmeticError):
    """A series had a nonzero coefficient below a required valuation.

    Raised by :meth:`TruncatedSeries.div_tpow`.  This is a correctness
    guard, not an input error: a nonzero coefficient below the expected
    valuation of a generating-function numerator indicates an upstream
    math bug (most plausibly in chain-sum construction), so callers should
    not catch and continue.
    """


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"series coefficients must be exact rationals, got {type(value).__name__}")


class TruncatedSeries:
    """Coefficients c[0..order] of a series in one variable, all exact."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(_coeff(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: Scalar = 1) -> "TruncatedSeries":
        """The series coeff * t**power known up to ``order``."""
        if not 0 <= power <= order:
            raise ValueError("monomial power must lie within the order")
        cs = [Fraction(0)] * (order + 1)
        cs[power] = _coeff(coeff)
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> Fraction:
        """Coefficient of t**n; n beyond the order is unknown, hence an error."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self._coeffs[n]

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"TruncatedSeries([{body}])"

    # -- ring operations ----------------------------------------------------

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order``.  Extension is forbidden."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        if order == self.order:
            return self
        return TruncatedSeries(self._coeffs[: order + 1])

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(
                [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)]
            )
        c = _coeff(other)
        return TruncatedSeries((self._coeffs[0] + c,) + self._coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs])

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other if isinstance(other, TruncatedSeries) else -_coeff(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            a, b = self._coeffs, other._coeffs
            out = []
            for k in range(n + 1):
                lo = max(0, k - other.order)
                hi = min(k, self.order)
                out.append(sum((a[i] * b[k - i] for i in range(lo, hi + 1)), Fraction(0)))
            return TruncatedSeries(out)
        c = _coeff(other)
        return TruncatedSeries([c * ci for ci in self._coeffs])

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a non-negative integer (invert first for negative powers)")
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the same order.

        Standard recurrence b0 = 1/a0, b_n = -(1/a0) * sum a_i b_{n-i}.
        Requires a unit series (nonzero constant term).
        """
        a = self._coeffs
        if a[0] == 0:
            raise ValueError("non-unit series")
        inv0 = Fraction(1) / a[0]
        b = [inv0]
        for n in range(1, self.order + 1):
            acc = sum((a[i] * b[n - i] for i in range(1, n + 1)), Fraction(0))
            b.append(-inv0 * acc)
        return TruncatedSeries(b)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(t)) by Horner iteration.

        ``inner`` must have zero constant term; then coefficient n of the
        result depends only on coefficients up to n of both operands, so
        the result is exact up to min(order, inner.order).
        """
        if inner._coeffs[0] != 0:
            raise ValueError("composition requires zero constant term")
        target = min(self.order, inner.order)
        inner_t = inner.truncate(target)
        result = TruncatedSeries.zero(target)
        for j in range(target, -1, -1):
            result = result * inner_t + self._coeffs[j]
        return result

    def div_tpow(self, r: int) -> "TruncatedSeries":
        """Exact division by t**r, dropping the order by r.

        Every coefficient below r must be zero; a nonzero one raises
        :class:`ValuationError` instead of being silently discarded.
        """
        if r < 0:
            raise ValueError("shift must be non-negative")
        if r == 0:
            return self
        if r > self.order:
            raise ValueError("shift exceeds series order")
        if any(c != 0 for c in self._coeffs[:r]):
            raise ValuationError("valuation too small")
        return TruncatedSeries(self._coeffs[r:])

    def mul_tpow(self, r: int) -> "TruncatedSeries":
        """Multiply by t**r.  The product is exactly determined up to
        order + r, so this is the one operation allowed to raise the order
        (it inverts :meth:`div_tpow`).
        """
        if r < 0:
            raise ValueError("shift must be non-negative")
        return TruncatedSeries((Fraction(0),) * r + self._coeffs)

    def derive(self) -> "TruncatedSeries":
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series has no known coefficients")
        return TruncatedSeries(
            [(n + 1) * self._coeffs[n + 1] for n in range(self.order)]
        )

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [format_rational(c) for c in self._coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TruncatedSeries":
        coeffs = [parse_rational(c) for c in data["coeffs"]]
        series = cls(coeffs)
        if series.order != data["order"]:
            raise ValueError("order field disagrees with coefficient count")
        return series
