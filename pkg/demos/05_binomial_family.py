#!/usr/bin/env python3
"""The degree-2 family with one non-monomial generator: I = J + (f1 + f2).

Off the boundary stratum dim R_2 = n - 1, sampled linear forms never admit
a verified degree-1 partner. On the stratum pairs do occur, and each
partner Q splits as Q1 + Q2 with ell*Q1 in J + (f1) and ell*Q2 in J + (f2);
the scan performs that split and checks the degree-2 colon-dimension
identity dim (P/(I+(ell)))_2 = dim R_2 - rank(ell: R_1 -> R_2) throughout.
"""

from ezdlab import (
    ScanConfig,
    build_quotient,
    decompose_partner,
    find_ezd_complement,
    format_poly,
    generic_linear_form,
    parse_ideal,
    scan_binomial,
)

report = scan_binomial(ScanConfig(nvars=3, max_degree=2, trials=5, seed=0))
print(f"instances examined: {report.examined} (skipped {len(report.skipped)})")
boundary = [r for r in report.instances if r.boundary]
print(f"boundary stratum dim R_2 = 2: {len(boundary)} instances, "
      f"{sum(1 for r in boundary if r.deg1_witness_trials > 0)} with pairs")
off = [r for r in report.instances if not r.boundary]
print(f"off boundary: {len(off)} instances, "
      f"{sum(r.deg1_witness_trials for r in off)} degree-1 partners (expected 0)")
print(f"counterexamples: {len(report.counterexamples)}")
print()

# One split in full detail.
spec = parse_ideal("x1^2, x1*x2 + x2^2", 2)
ring = build_quotient(spec, 3)
ell = generic_linear_form(2, seed=9)
q, _ = find_ezd_complement(ring, ell)
split = decompose_partner(spec, ell, q)
print("worked split in k[x1,x2]/(x1^2, x1*x2 + x2^2):")
print(f"  ell = {format_poly(ell)}")
print(f"  Q   = {format_poly(q)}")
print(f"  Q1  = {format_poly(split.q1)}   (ell*Q1 in (x1^2, x1*x2))")
print(f"  Q2  = {format_poly(split.q2)}   (ell*Q2 in (x1^2, x2^2))")
print(f"  alpha = {split.alpha}")
