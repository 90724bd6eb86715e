"""Multiplication maps, annihilators, and exact zero divisor detection.

A pair (x, y) is a pair of exact zero divisors when Ann(x) = (y) and
Ann(y) = (x). Everything here works degree by degree on a built
GradedQuotient: annihilator pieces are kernels of multiplication maps,
principal-ideal pieces are spans of shifted normal forms, and the two
sides are compared as canonical subspaces. Both directions are always
checked even where Artinian-ness makes one imply the other; the second
check is cheap and catches truncation mistakes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exactmat import QMatrix, Subspace, kernel_basis, rank, subspace_equal
from .gradedring import GradedQuotient, build_quotient
from .polyring import (
    HomogPoly,
    IdealKind,
    Monomial,
    format_ideal,
    format_poly,
    linear_form,
    make_ideal,
    monomials_of_degree,
)

ZERO = Fraction(0)
ONE = Fraction(1)

COEFF_RANGE = 10**6  # sampled coefficients are nonzero integers in [-10^6, 10^6]


def derived_seed(seed: int, index: int) -> int:
    """Stable child seed for independent sampling streams."""
    return seed * 1_000_003 + index + 1


def mult_map(ring: GradedQuotient, f: HomogPoly, d: int) -> QMatrix:
    """Matrix of q -> f*q from R_d to R_{d+deg f} on the quotient bases.

    Columns correspond to the degree-d basis monomials. When the target
    degree lies past the bound of an Artinian-within-bound ring the target
    space is zero and a 0-row matrix is returned.
    """
    if f.nvars != ring.nvars:
        raise ValueError("variable counts differ")
    source = ring.basis_monomials(d)
    target_degree = d + f.degree
    if target_degree > ring.bound:
        if ring.complete:
            return QMatrix(0, len(source), ())
        raise ValueError(f"target degree {target_degree} outside bound {ring.bound}")
    nrows = ring.dim(target_degree)
    cols = [ring.normal_form(f * HomogPoly.from_monomial(b)) for b in source]
    entries = [cols[j][i] for i in range(nrows) for j in range(len(source))]
    return QMatrix(nrows, len(source), entries)


def annihilator_degree(ring: GradedQuotient, f: HomogPoly, d: int) -> Subspace:
    """Degree-d piece of Ann(f) as a subspace of R_d."""
    return kernel_basis(mult_map(ring, f, d))


def principal_ideal_degree(ring: GradedQuotient, y: HomogPoly, d: int) -> Subspace:
    """Degree-d piece of the principal ideal (y) as a subspace of R_d."""
    dim_d = ring.dim(d)
    if y.is_zero() or d < y.degree:
        return Subspace.zero(dim_d)
    shift = d - y.degree
    vectors = [ring.normal_form(HomogPoly.from_monomial(m) * y) for m in monomials_of_degree(ring.nvars, shift)]
    return Subspace.from_vectors(dim_d, vectors)


class PairVerdict(Enum):
    EXACT_PAIR = "exact_pair"
    NOT_PAIR = "not_pair"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class DegreeRow:
    degree: int
    dim_ring: int
    dim_ann_x: int
    dim_ideal_y: int
    dim_ann_y: int
    dim_ideal_x: int
    equal_xy: bool
    equal_yx: bool


@dataclass(frozen=True)
class EzdReport:
    """Outcome of an exact-zero-divisor pair check, with the per-degree table."""

    ring: str
    x: HomogPoly
    y: HomogPoly
    product_zero: bool
    table: tuple[DegreeRow, ...]
    verdict: PairVerdict
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "ring": self.ring,
            "x": format_poly(self.x),
            "y": format_poly(self.y),
            "product_zero": self.product_zero,
            "verdict": self.verdict.value,
            "reason": self.reason,
            "table": [
                {
                    "degree": r.degree,
                    "dim_ring": r.dim_ring,
                    "dim_ann_x": r.dim_ann_x,
                    "dim_ideal_y": r.dim_ideal_y,
                    "dim_ann_y": r.dim_ann_y,
                    "dim_ideal_x": r.dim_ideal_x,
                    "equal_xy": r.equal_xy,
                    "equal_yx": r.equal_yx,
                }
                for r in self.table
            ],
        }


def is_ezd_pair(ring: GradedQuotient, x: HomogPoly, y: HomogPoly) -> EzdReport:
    """Check whether (x, y) is a pair of exact zero divisors in the ring."""
    ring_id = format_ideal(ring.spec)
    if not ring.complete:
        return EzdReport(
            ring_id, x, y, False, (), PairVerdict.TRUNCATED,
            "ring does not vanish within the degree bound; raise the bound",
        )
    if x.is_zero() or y.is_zero():
        return EzdReport(ring_id, x, y, True, (), PairVerdict.NOT_PAIR, "zero element")

    top = ring.top_degree
    assert top is not None
    prod_degree = x.degree + y.degree
    if prod_degree <= ring.bound:
        product_zero = not any(ring.normal_form(x * y))
    else:
        product_zero = True  # the ring has already vanished below that degree

    rows = []
    all_equal = True
    reason = None
    for d in range(top + 1):
        ann_x = annihilator_degree(ring, x, d)
        ideal_y = principal_ideal_degree(ring, y, d)
        ann_y = annihilator_degree(ring, y, d)
        ideal_x = principal_ideal_degree(ring, x, d)
        eq_xy = subspace_equal(ann_x, ideal_y)
        eq_yx = subspace_equal(ann_y, ideal_x)
        rows.append(
            DegreeRow(d, ring.dim(d), ann_x.dim, ideal_y.dim, ann_y.dim, ideal_x.dim, eq_xy, eq_yx)
        )
        if all_equal and not (eq_xy and eq_yx):
            all_equal = False
            side = "Ann(x) vs (y)" if not eq_xy else "Ann(y) vs (x)"
            reason = f"{side} differ in degree {d}"

    if not product_zero:
        verdict = PairVerdict.NOT_PAIR
        reason = "product x*y is nonzero"
    elif not all_equal:
        verdict = PairVerdict.NOT_PAIR
    else:
        verdict = PairVerdict.EXACT_PAIR
    return EzdReport(ring_id, x, y, product_zero, tuple(rows), verdict, reason)


def find_ezd_complement(ring: GradedQuotient, ell: HomogPoly) -> tuple[HomogPoly, EzdReport] | None:
    """Locate the canonical exact partner of `ell`, if one exists.

    Any homogeneous partner must live in the least degree where Ann(ell)
    is nonzero, and that piece must be one-dimensional to be principal.
    The candidate is the canonical generator of that piece (first nonzero
    coordinate scaled to 1); the full pair check then decides.
    """
    if not ring.complete:
        return None
    if ell.is_zero():
        return None
    top = ring.top_degree
    assert top is not None
    for t in range(top + 1):
        sub = annihilator_degree(ring, ell, t)
        if sub.dim == 0:
            continue
        if sub.dim >= 2:
            return None
        q = ring.basis_poly(t, sub.basis[0])
        report = is_ezd_pair(ring, ell, q)
        if report.verdict is PairVerdict.EXACT_PAIR:
            return q, report
        return None
    return None


def generic_linear_form(nvars: int, seed: int) -> HomogPoly:
    """Linear form with nonzero integer coefficients sampled from the seed."""
    rng = random.Random(seed)
    coeffs = []
    for _ in range(nvars):
        c = 0
        while c == 0:
            c = rng.randint(-COEFF_RANGE, COEFF_RANGE)
        coeffs.append(c)
    return linear_form(coeffs)


class GenericDecision(Enum):
    GENERICALLY_YES = "generically_yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class GenericVerdict:
    """Decision on whether generic linear forms are exact zero divisors."""

    decision: GenericDecision
    witness: HomogPoly | None
    trials: int
    seed: int
    exact: bool
    report: EzdReport | None = None

    def to_json_dict(self) -> dict:
        return {
            "decision": self.decision.value,
            "witness": format_poly(self.witness) if self.witness is not None else None,
            "trials": self.trials,
            "seed": self.seed,
            "exact": self.exact,
        }


def generic_ezd_decision(ring: GradedQuotient, trials: int = 3, seed: int = 0) -> GenericVerdict:
    """Decide whether a generic linear form is part of an exact pair.

    Monomial ideals admit a deterministic reduction: rescaling variables is
    a ring automorphism, so the all-ones form stands in for every form with
    all coefficients nonzero and the answer is exact. Other ideals are
    sampled `trials` times with independent large random coefficients;
    mixed outcomes are reported inconclusive, never resolved by majority.
    """
    if not ring.complete:
        raise ValueError("ring does not vanish within the degree bound; raise the bound")
    if ring.spec.kind is IdealKind.MONOMIAL:
        ell = linear_form([1] * ring.nvars)
        found = find_ezd_complement(ring, ell)
        if found is None:
            return GenericVerdict(GenericDecision.NO, None, 1, seed, True)
        q, report = found
        return GenericVerdict(GenericDecision.GENERICALLY_YES, q, 1, seed, True, report)

    successes = 0
    witness = None
    witness_report = None
    for t in range(trials):
        ell = generic_linear_form(ring.nvars, derived_seed(seed, t))
        found = find_ezd_complement(ring, ell)
        if found is not None:
            successes += 1
            witness, witness_report = found
    if successes == trials:
        return GenericVerdict(
            GenericDecision.GENERICALLY_YES, witness, trials, seed, False, witness_report
        )
    if successes == 0:
        return GenericVerdict(GenericDecision.NO, None, trials, seed, False)
    return GenericVerdict(GenericDecision.INCONCLUSIVE, witness, trials, seed, False, witness_report)


@dataclass(frozen=True)
class WlpDegree:
    degree: int
    dim_source: int
    dim_target: int
    rank: int
    maximal: bool


@dataclass(frozen=True)
class WlpReport:
    degrees: tuple[WlpDegree, ...]
    holds: bool
    trials: int
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "holds": self.holds,
            "trials": self.trials,
            "seed": self.seed,
            "degrees": [
                {
                    "degree": r.degree,
                    "dim_source": r.dim_source,
                    "dim_target": r.dim_target,
                    "rank": r.rank,
                    "maximal": r.maximal,
                }
                for r in self.degrees
            ],
        }


def wlp_check(ring: GradedQuotient, trials: int = 3, seed: int = 0) -> WlpReport:
    """Weak Lefschetz check: multiplication by a sampled linear form must
    have maximal rank between every pair of consecutive degrees.

    Maximal rank is an open condition, so one witnessing trial suffices for
    the generic statement; per-degree rows report the best rank seen.
    """
    top = ring.top_degree if ring.complete else ring.bound
    assert top is not None
    per_trial_ranks = []
    for t in range(trials):
        ell = generic_linear_form(ring.nvars, derived_seed(seed, t))
        per_trial_ranks.append([rank(mult_map(ring, ell, i - 1)) for i in range(1, top + 1)])
    rows = []
    for i in range(1, top + 1):
        dim_src = ring.dim(i - 1)
        dim_tgt = ring.dim(i)
        best = max(tr[i - 1] for tr in per_trial_ranks) if per_trial_ranks else 0
        rows.append(WlpDegree(i, dim_src, dim_tgt, best, best == min(dim_src, dim_tgt)))
    holds = any(
        all(tr[i - 1] == min(ring.dim(i - 1), ring.dim(i)) for i in range(1, top + 1))
        for tr in per_trial_ranks
    )
    return WlpReport(tuple(rows), holds, trials, seed)


def socle_dims(ring: GradedQuotient) -> tuple[int, ...]:
    """Per-degree dimensions of {r : x_i * r = 0 for every variable x_i}."""
    if not ring.complete:
        raise ValueError("socle needs a ring that vanishes within the degree bound")
    top = ring.top_degree
    assert top is not None
    dims = []
    for d in range(top + 1):
        blocks = []
        for i in range(ring.nvars):
            exps = [0] * ring.nvars
            exps[i] = 1
            m = mult_map(ring, HomogPoly.from_monomial(Monomial(tuple(exps))), d)
            blocks.extend(m.row(r) for r in range(m.rows))
        if blocks:
            stacked = QMatrix.from_rows(blocks)
        else:
            stacked = QMatrix(0, ring.dim(d), ())
        dims.append(kernel_basis(stacked).dim)
    return tuple(dims)


def is_gorenstein(ring: GradedQuotient) -> bool:
    """Artinian Gorenstein means a one-dimensional socle."""
    return sum(socle_dims(ring)) == 1


@dataclass(frozen=True)
class YoshinoReport:
    """The two necessary conditions from Yoshino's theorem, plus Gorenstein-ness.

    For a non-Gorenstein ring vanishing from degree 3 on, exact zero
    divisors force c1 (dim R_2 = dim R_1 - 1) and c2 (generation in
    degree 2).
    """

    r1: int
    r2: int
    c1: bool
    c2: bool
    gorenstein: bool | None

    def to_json_dict(self) -> dict:
        return {
            "r1": self.r1,
            "r2": self.r2,
            "c1": self.c1,
            "c2": self.c2,
            "gorenstein": self.gorenstein,
        }


def yoshino_conditions(ring: GradedQuotient) -> YoshinoReport:
    """Evaluate the Yoshino conditions on the ring."""
    if ring.bound < 2:
        raise ValueError("need the ring built to degree 2 at least")
    r1 = ring.dim(1)
    r2 = ring.dim(2)
    c1 = r2 == r1 - 1
    c2 = all(g.degree == 2 for g in ring.spec.generators) and bool(ring.spec.generators)
    gor = is_gorenstein(ring) if ring.complete else None
    return YoshinoReport(r1, r2, c1, c2, gor)


def degree2_generator_count(nvars: int) -> int:
    """Generator count C(n+1, 2) - n + 1 forced by dim R_2 = dim R_1 - 1
    for ideals generated in degree 2."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    return nvars * (nvars + 1) // 2 - nvars + 1


def colon_identity_dims(ring: GradedQuotient, ell: HomogPoly) -> tuple[int, int]:
    """Both sides of dim (P/(I+(l)))_2 = dim R_2 - rank(l : R_1 -> R_2).

    The left side is computed directly from the extended ideal, the right
    side from the multiplication map; the two short exact sequences behind
    the identity make them agree for any linear form.
    """
    extended = make_ideal(ring.nvars, list(ring.spec.generators) + [ell])
    section = build_quotient(extended, 2)
    lhs = section.dim(2)
    rhs = ring.dim(2) - rank(mult_map(ring, ell, 1))
    return lhs, rhs
