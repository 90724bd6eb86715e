"""Graded quotients R = P/I built degree by degree up to a bound.

For each degree d the relation space I_d is spanned by the products m*g of
the generators by complementary-degree monomials. For monomial ideals that
span is a coordinate subspace and is found purely by divisibility tests;
otherwise the product rows go through one exact elimination per degree.
Either way each degree stores a set of canonical reducers (rref rows keyed
by pivot column), so normal forms are a single linear pass and the quotient
basis is the set of non-pivot monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmat import QMatrix, Subspace, rref
from .polyring import (
    HomogPoly,
    IdealKind,
    IdealSpec,
    Monomial,
    in_monomial_ideal,
    minimalize_monomial_gens,
    monomials_of_degree,
)

ZERO = Fraction(0)
ONE = Fraction(1)

Reducer = tuple[int, tuple[tuple[int, Fraction], ...]]  # pivot column, other nonzeros


@dataclass(frozen=True)
class HilbertFn:
    """Hilbert function values H(0..D) with the within-bound Artinian flag."""

    values: tuple[int, ...]
    artinian_within_bound: bool
    top_degree: int | None


@dataclass(frozen=True)
class _DegreeComponent:
    monomials: tuple[Monomial, ...]
    reducers: tuple[Reducer, ...]
    quotient_cols: tuple[int, ...]


class GradedQuotient:
    """Per-degree bases and normal-form operators for R = P/I, degrees 0..bound."""

    __slots__ = (
        "spec", "bound", "_components", "_indexes", "_dims", "_hilbert", "_first_vanishing",
    )

    def __init__(self, spec: IdealSpec, bound: int, components: tuple[_DegreeComponent, ...]):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "_components", components)
        object.__setattr__(
            self,
            "_indexes",
            tuple({m: i for i, m in enumerate(c.monomials)} for c in components),
        )
        object.__setattr__(self, "_dims", tuple(len(c.quotient_cols) for c in components))
        object.__setattr__(self, "_hilbert", _hilbert_from_dims(self._dims))
        first = self._dims.index(0) if 0 in self._dims else None
        if first is None and spec.kind is IdealKind.MONOMIAL:
            powers = pure_power_exponents(spec)
            # Standard monomials die after sum(a_i - 1), so a bound reaching
            # that degree already shows every later degree is zero.
            if powers is not None and sum(a - 1 for a in powers.values()) <= bound:
                first = bound + 1
        object.__setattr__(self, "_first_vanishing", first)

    def __setattr__(self, name, value):
        raise AttributeError("GradedQuotient is immutable")

    @property
    def nvars(self) -> int:
        return self.spec.nvars

    @property
    def hilbert(self) -> HilbertFn:
        return self._hilbert

    @property
    def artinian_within_bound(self) -> bool:
        return self._hilbert.artinian_within_bound

    @property
    def complete(self) -> bool:
        """Whether every degree past the bound is known to vanish."""
        return self._first_vanishing is not None

    @property
    def top_degree(self) -> int | None:
        """Last degree with a nonzero piece, when the ring is complete."""
        if self._first_vanishing is None:
            return None
        return self._first_vanishing - 1

    def dim(self, degree: int) -> int:
        if not 0 <= degree <= self.bound:
            raise ValueError(f"degree {degree} outside bound {self.bound}")
        return self._dims[degree]

    def dim_extended(self, degree: int) -> int:
        """dim R_degree, extending past the bound when the ring has vanished."""
        if degree <= self.bound:
            return self.dim(degree)
        if self.complete:
            return 0
        raise ValueError(f"degree {degree} outside bound {self.bound}")

    def basis_monomials(self, degree: int) -> tuple[Monomial, ...]:
        if not 0 <= degree <= self.bound:
            raise ValueError(f"degree {degree} outside bound {self.bound}")
        comp = self._components[degree]
        return tuple(comp.monomials[j] for j in comp.quotient_cols)

    def relation_subspace(self, degree: int) -> Subspace:
        """I_d as a canonical subspace of the degree-d coefficient space."""
        comp = self._components[degree]
        ncols = len(comp.monomials)
        rows = []
        for pivot, rest in comp.reducers:
            row = [ZERO] * ncols
            row[pivot] = ONE
            for j, c in rest:
                row[j] = c
            rows.append(tuple(row))
        return Subspace(ncols, tuple(rows))

    def normal_form(self, p: HomogPoly) -> tuple[Fraction, ...]:
        """Coordinates of p in the degree-deg(p) quotient basis; zero iff p is in I."""
        if p.nvars != self.nvars:
            raise ValueError("variable counts differ")
        d = p.degree
        if not 0 <= d <= self.bound:
            raise ValueError(f"degree {d} outside bound {self.bound}")
        comp = self._components[d]
        index = self._indexes[d]
        v = [ZERO] * len(comp.monomials)
        for m, c in p.coeffs.items():
            v[index[m]] = c
        for pivot, rest in comp.reducers:
            c = v[pivot]
            if c:
                v[pivot] = ZERO
                for j, rj in rest:
                    v[j] -= c * rj
        return tuple(v[j] for j in comp.quotient_cols)

    def basis_poly(self, degree: int, coords) -> HomogPoly:
        """The polynomial with the given coordinates in the quotient basis."""
        basis = self.basis_monomials(degree)
        if len(coords) != len(basis):
            raise ValueError("coordinate length does not match quotient dimension")
        return HomogPoly(self.nvars, degree, list(zip(basis, coords)))


def _hilbert_from_dims(dims: tuple[int, ...]) -> HilbertFn:
    artinian = 0 in dims
    top = None
    if artinian:
        first_zero = dims.index(0)
        top = first_zero - 1
    return HilbertFn(dims, artinian, top)


def _component_combinatorial(nvars: int, degree: int, gens: tuple[Monomial, ...]) -> _DegreeComponent:
    monos = monomials_of_degree(nvars, degree)
    pivots = tuple(i for i, m in enumerate(monos) if in_monomial_ideal(m, gens))
    pivot_set = set(pivots)
    free = tuple(i for i in range(len(monos)) if i not in pivot_set)
    reducers = tuple((p, ()) for p in pivots)
    return _DegreeComponent(monos, reducers, free)


def _component_elimination(spec: IdealSpec, degree: int) -> _DegreeComponent:
    monos = monomials_of_degree(spec.nvars, degree)
    index = {m: i for i, m in enumerate(monos)}
    ncols = len(monos)
    rows: list[list[Fraction]] = []
    for g in spec.generators:
        if g.degree > degree:
            continue
        for m in monomials_of_degree(spec.nvars, degree - g.degree):
            row = [ZERO] * ncols
            for gm, c in g.coeffs.items():
                row[index[m * gm]] = c
            rows.append(row)
    if rows:
        red, pivots = rref(QMatrix.from_rows(rows))
        reducers = []
        for i, p in enumerate(pivots):
            row = red.row(i)
            rest = tuple((j, row[j]) for j in range(ncols) if j != p and row[j])
            reducers.append((p, rest))
        reducers = tuple(reducers)
    else:
        pivots = ()
        reducers = ()
    pivot_set = set(pivots)
    free = tuple(i for i in range(ncols) if i not in pivot_set)
    return _DegreeComponent(monos, reducers, free)


def build_quotient(spec: IdealSpec, bound: int, *, force_elimination: bool = False) -> GradedQuotient:
    """Construct R = P/I with all per-degree data for degrees 0..bound.

    Monomial ideals go through the divisibility path unless
    `force_elimination` asks for the generic elimination path (used as a
    cross-check oracle in the tests).
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    combinatorial = spec.kind is IdealKind.MONOMIAL and not force_elimination
    gens = minimalize_monomial_gens(spec.monomial_generators()) if combinatorial else ()
    components = []
    prev_dim = None
    for d in range(bound + 1):
        comp = (
            _component_combinatorial(spec.nvars, d, gens)
            if combinatorial
            else _component_elimination(spec, d)
        )
        dim = len(comp.quotient_cols)
        # The irrelevant ideal is generated in degree 1, so a vanished degree
        # can never be followed by a nonzero one.
        if prev_dim == 0:
            assert dim == 0, f"H({d}) = {dim} after H({d - 1}) = 0"
        prev_dim = dim
        components.append(comp)
    return GradedQuotient(spec, bound, tuple(components))


def hilbert_function(ring: GradedQuotient) -> HilbertFn:
    """Hilbert function H(0..bound) of the quotient."""
    return ring.hilbert


def normal_form(p: HomogPoly, ring: GradedQuotient) -> tuple[Fraction, ...]:
    """Coordinates of p in the quotient basis of its degree."""
    return ring.normal_form(p)


def pure_power_exponents(spec: IdealSpec) -> dict[int, int] | None:
    """For a monomial ideal: minimal pure-power exponent per variable.

    Returns None unless every variable has a pure power among the
    generators (the exact Artinian test for monomial ideals).
    """
    if spec.kind is not IdealKind.MONOMIAL:
        return None
    best: dict[int, int] = {}
    for m in spec.monomial_generators():
        nz = [(i, e) for i, e in enumerate(m.exps) if e]
        if len(nz) == 1:
            i, e = nz[0]
            if i not in best or e < best[i]:
                best[i] = e
    if len(best) != spec.nvars:
        return None
    return best


def is_artinian_within(ring: GradedQuotient) -> bool:
    """Whether the ring is Artinian; exact for monomial ideals, else within bound."""
    if ring.spec.kind is IdealKind.MONOMIAL:
        return pure_power_exponents(ring.spec) is not None
    return ring.artinian_within_bound


def default_bound(spec: IdealSpec) -> int | None:
    """Degree bound sum(a_i - 1) + 1 for Artinian monomial ideals, else None.

    With pure powers x_i^{a_i} among the generators no standard monomial
    survives past degree sum(a_i - 1), so this bound always witnesses the
    vanishing degree.
    """
    powers = pure_power_exponents(spec)
    if powers is None:
        return None
    return sum(a - 1 for a in powers.values()) + 1
