"""Running the exact identity checks.

Every identity that is finitary at fixed order is verified with exact
rational equality on both sides, each side computed through a route that
shares as little code as possible with the other.  The chain/Stirling
check is the strongest one: it recomputes the full family by explicit
chain sums with Stirling-expanded powers of 1 - e^{-t} and must agree
with the composition pipeline coefficient by coefficient.
"""

from fractions import Fraction

from polybern import (
    verify_addition,
    verify_chain_stirling,
    verify_deriv_recurrences,
    verify_li_ones,
    verify_polynomial_expansion,
)

half, third = Fraction(1, 2), Fraction(1, 3)

checks = [
    ("li-ones r=3", verify_li_ones(3, 15)),
    ("li-ones r=5", verify_li_ones(5, 24)),
    ("expansion ks=(2,1)", verify_polynomial_expansion((2, 1), third, Fraction(2, 3), 10)),
    ("expansion ks=(1,1,1)", verify_polynomial_expansion((1, 1, 1), Fraction(1, 5), 0, 12)),
    ("deriv ks=(3,2)", verify_deriv_recurrences((3, 2), 12)),
    ("deriv ks=(2,-1,1)", verify_deriv_recurrences((2, -1, 1), 12)),
    ("chain-stirling ks=(1,1)", verify_chain_stirling((1, 1), half, 0, 8)),
    ("chain-stirling ks=(2,1)", verify_chain_stirling((2, 1), third, half, 8)),
    ("addition ks=(2,1)", verify_addition((2, 1), third, half, third, 10)),
]

width = max(len(name) for name, _ in checks)
for name, report in checks:
    rows = len(report.rows)
    print(f"{name:<{width}}  {report.status.upper():<4}  ({rows} exact rows)")

print()
report = verify_chain_stirling((2, 1), third, half, 6)
print("sample rows from the chain/Stirling check (both sides exact):")
for row in report.rows[:4]:
    print(f"  n={row.n}: {row.lhs} == {row.rhs}")
