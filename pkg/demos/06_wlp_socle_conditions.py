#!/usr/bin/env python3
"""Weak Lefschetz checks, socle, Gorenstein detection, short-ring conditions.

Monomial complete intersections have the weak Lefschetz property, so
multiplication by a sampled linear form reaches maximal rank in every
degree. Short non-Gorenstein rings (everything from degree 3 on zero)
that carry exact pairs must drop exactly one dimension into degree 2 and
be generated in degree 2, with a forced generator count.
"""

from ezdlab import (
    build_quotient,
    degree2_generator_count,
    is_gorenstein,
    parse_ideal,
    socle_dims,
    wlp_check,
    yoshino_conditions,
)

ci = build_quotient(parse_ideal("x1^3, x2^3", 2), 5)
report = wlp_check(ci, trials=3, seed=0)
print("k[x1,x2]/(x1^3, x2^3)")
for row in report.degrees:
    print(f"  R_{row.degree - 1} -> R_{row.degree}: rank {row.rank} "
          f"of max {min(row.dim_source, row.dim_target)}  (maximal: {row.maximal})")
print("weak Lefschetz property:", "holds" if report.holds else "fails")
print()

gor = build_quotient(parse_ideal("x1^2, x2^2", 2), 3)
print("socle of k[x1,x2]/(x1^2, x2^2):", socle_dims(gor), "gorenstein:", is_gorenstein(gor))
short = build_quotient(parse_ideal("x1^2, x1*x2, x2^2", 2), 2)
print("socle of k[x1,x2]/(all squares):", socle_dims(short), "gorenstein:", is_gorenstein(short))
print()

ring = build_quotient(parse_ideal("x1^2, x2^2, x2*x3, x3^2", 3), 3)
conditions = yoshino_conditions(ring)
print("k[x1,x2,x3]/(x1^2, x2^2, x2*x3, x3^2)")
print(f"  dim R_1 = {conditions.r1}, dim R_2 = {conditions.r2}")
print(f"  drop by one: {conditions.c1}, degree-2 generated: {conditions.c2}, "
      f"gorenstein: {conditions.gorenstein}")
print(f"  forced generator count at the boundary: {degree2_generator_count(3)}")
