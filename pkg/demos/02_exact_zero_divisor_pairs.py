#!/usr/bin/env python3
"""Detecting exact zero divisor pairs.

A pair (x, y) is exact when Ann(x) = (y) and Ann(y) = (x). The check runs
degree by degree: the annihilator piece is the kernel of a multiplication
map, the principal-ideal piece is a span of shifted normal forms, and the
two canonical subspaces must coincide everywhere.
"""

from ezdlab import (
    build_quotient,
    find_ezd_complement,
    format_poly,
    generic_ezd_decision,
    is_ezd_pair,
    parse_ideal,
    parse_poly,
)

ring = build_quotient(parse_ideal("x1^2, x2^2", 2), 3)
x = parse_poly("x1 + x2", 2)
y = parse_poly("x1 - x2", 2)
report = is_ezd_pair(ring, x, y)
print(f"({format_poly(x)}, {format_poly(y)}) in k[x1,x2]/(x1^2, x2^2):", report.verdict.value)
for row in report.table:
    print(
        f"  degree {row.degree}: dim R = {row.dim_ring}, dim Ann(x) = {row.dim_ann_x}, "
        f"dim (y) = {row.dim_ideal_y}, equal = {row.equal_xy and row.equal_yx}"
    )
print()

# The partner is forced: it generates the least nonzero annihilator piece.
found = find_ezd_complement(ring, x)
print("canonical partner found for x1 + x2:", format_poly(found[0]))
print()

# Generic decision. Monomial ideals reduce to the all-ones form exactly;
# the ring below has a two-dimensional annihilator in degree 1, so no
# linear form has a principal annihilator and the answer is no.
blocked = build_quotient(parse_ideal("x1^2, x1*x2, x2^2", 2), 3)
verdict = generic_ezd_decision(blocked)
print("k[x1,x2]/(x1^2, x1*x2, x2^2):", verdict.decision.value, "(exact =", str(verdict.exact) + ")")

# A non-monomial ideal is sampled instead: several independent random
# forms, and the verdict is tagged non-exact.
binom = build_quotient(parse_ideal("x1^2, x1*x2 + x2^2", 2), 3)
verdict = generic_ezd_decision(binom, trials=5, seed=42)
print(
    "k[x1,x2]/(x1^2, x1*x2 + x2^2):",
    verdict.decision.value,
    "with witness",
    format_poly(verdict.witness),
)
