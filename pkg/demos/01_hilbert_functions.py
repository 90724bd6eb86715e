#!/usr/bin/env python3
"""Hilbert functions of graded quotients, computed exactly.

Build R = P/I degree by degree and read off dim R_d. For monomial ideals
the bases are the standard monomials; for anything else each degree is one
exact elimination over the rationals.
"""

from ezdlab import build_quotient, default_bound, format_monomial, parse_ideal

# A complete intersection of two cubes in two variables.
spec = parse_ideal("x1^3, x2^3", 2)
ring = build_quotient(spec, default_bound(spec))
print("I = (x1^3, x2^3)")
print("H(0..{}) = {}".format(ring.bound, " ".join(map(str, ring.hilbert.values))))
print("top degree:", ring.top_degree)
print()

# Quotient bases are explicit monomial lists.
for d in range(ring.bound + 1):
    names = [format_monomial(m) for m in ring.basis_monomials(d)]
    print(f"  basis of R_{d}: {names or ['(zero)']}")
print()

# One non-monomial generator: the relations now need elimination, and the
# quotient dies one degree earlier than the monomial count would suggest.
binom = parse_ideal("x1^2, x1*x2 + x2^2", 2)
ring2 = build_quotient(binom, 4)
print("I = (x1^2, x1*x2 + x2^2)")
print("H(0..4) =", " ".join(map(str, ring2.hilbert.values)))
nf = ring2.normal_form(parse_ideal("x1*x2", 2).generators[0])
print("normal form of x1*x2 in R_2 coordinates:", nf)
