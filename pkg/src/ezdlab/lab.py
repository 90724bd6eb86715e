"""Ideal-family enumeration and the experiment suite.

Two families are scanned exhaustively at desk scale:

* Artinian monomial ideals with generators up to a degree cap. For these
  the generic-linear-form question is decided exactly through the all-ones
  form, and whenever a generic exact pair with partner degree t exists the
  scan asserts the Hilbert drop dim R_{t+1} = dim R_t - 1.

* "Monomial plus one binomial" ideals J + (f1 + f2) with everything in
  degree 2. Off the boundary stratum dim R_2 = n - 1 no sampled linear
  form may admit a verified degree-1 partner; on the stratum the verdict
  is recorded without assertion, the partner is split into halves
  compatible with J + (f1) and J + (f2), and the degree-2 colon-dimension
  identity is checked on every instance.

Scans are deterministic: per-instance seeds depend only on the configured
seed and the instance index, work is distributed in enumeration order, and
reports serialize without timing data, so re-runs with different worker
counts emit byte-identical JSON.
"""

from __future__ import annotations

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from io import StringIO
from itertools import combinations, permutations
from typing import Iterator

from .ezd import (
    EzdReport,
    GenericDecision,
    annihilator_degree,
    colon_identity_dims,
    derived_seed,
    find_ezd_complement,
    generic_ezd_decision,
    generic_linear_form,
    is_ezd_pair,
)
from .gradedring import GradedQuotient, build_quotient, default_bound
from .polyring import (
    HomogPoly,
    IdealKind,
    IdealSpec,
    Monomial,
    format_ideal,
    format_poly,
    in_monomial_ideal,
    linear_form,
    make_ideal,
    minimalize_monomial_gens,
    monomial_ideal,
    monomials_of_degree,
    parse_ideal,
    variable,
)

BINOMIAL_DEFAULT_BOUND = 6  # vanishing cap for the degree-2 family


@dataclass(frozen=True)
class ScanConfig:
    """Configuration shared by the family scans."""

    nvars: int
    max_degree: int = 2
    bound: int | None = None
    require_artinian: bool = True
    symmetry_reduction: bool = True
    seed: int = 0
    trials: int = 3
    workers: int = 1

    def __post_init__(self):
        if self.nvars < 2:
            raise ValueError("need at least two variables")
        if self.max_degree < 2:
            raise ValueError("max generator degree must be at least 2")
        if self.bound is not None and self.bound < self.max_degree:
            raise ValueError("bound must be at least the max generator degree")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.workers < 1:
            raise ValueError("need at least one worker")

    def echo(self) -> dict:
        # Workers are an execution detail and stay out of serialized reports.
        return {
            "nvars": self.nvars,
            "max_degree": self.max_degree,
            "bound": self.bound,
            "require_artinian": self.require_artinian,
            "symmetry_reduction": self.symmetry_reduction,
            "seed": self.seed,
            "trials": self.trials,
        }


# ---------------------------------------------------------------------------
# enumeration


def _has_all_pure_powers(chosen: list[Monomial], nvars: int) -> bool:
    covered = set()
    for m in chosen:
        nz = [i for i, e in enumerate(m.exps) if e]
        if len(nz) == 1:
            covered.add(nz[0])
    return len(covered) == nvars


def _multiset_key(exps_list) -> tuple:
    return tuple(sorted((sum(e), tuple(-x for x in e)) for e in exps_list))


def _is_canonical(chosen: list[Monomial], nvars: int) -> bool:
    """Least generator multiset over all variable permutations."""
    base = _multiset_key([m.exps for m in chosen])
    for perm in permutations(range(nvars)):
        permuted = [tuple(m.exps[p] for p in perm) for m in chosen]
        if _multiset_key(permuted) < base:
            return False
    return True


def enumerate_monomial_ideals(cfg: ScanConfig) -> Iterator[IdealSpec]:
    """All monomial ideals with minimal generators of degree 2..max_degree.

    Minimal generating sets are exactly the divisibility antichains, so each
    ideal appears once. With `require_artinian` only ideals containing a
    pure power of every variable are emitted; with `symmetry_reduction`
    only the canonical representative of each variable-permutation class.
    """
    candidates = [
        m for d in range(2, cfg.max_degree + 1) for m in monomials_of_degree(cfg.nvars, d)
    ]

    def dfs(i: int, chosen: list[Monomial]) -> Iterator[IdealSpec]:
        if i == len(candidates):
            if not chosen:
                return
            if cfg.require_artinian and not _has_all_pure_powers(chosen, cfg.nvars):
                return
            if cfg.symmetry_reduction and not _is_canonical(chosen, cfg.nvars):
                return
            yield monomial_ideal(cfg.nvars, chosen)
            return
        m = candidates[i]
        if not any(c.divides(m) or m.divides(c) for c in chosen):
            chosen.append(m)
            yield from dfs(i + 1, chosen)
            chosen.pop()
        yield from dfs(i + 1, chosen)

    yield from dfs(0, [])


# ---------------------------------------------------------------------------
# scan records


@dataclass(frozen=True)
class Counterexample:
    index: int
    ideal: str
    reason: str

    def to_json_dict(self) -> dict:
        return {"index": self.index, "ideal": self.ideal, "reason": self.reason}


@dataclass(frozen=True)
class SkippedInstance:
    index: int
    ideal: str
    reason: str

    def to_json_dict(self) -> dict:
        return {"index": self.index, "ideal": self.ideal, "reason": self.reason}


@dataclass(frozen=True)
class MonomialInstance:
    index: int
    ideal: str
    hilbert: tuple[int, ...]
    decision: str
    exact: bool
    witness: str | None
    witness_degree: int | None
    dim_prev: int | None
    dim_at: int | None
    hilbert_drop_ok: bool | None

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "ideal": self.ideal,
            "hilbert": list(self.hilbert),
            "decision": self.decision,
            "exact": self.exact,
            "witness": self.witness,
            "witness_degree": self.witness_degree,
            "dim_prev": self.dim_prev,
            "dim_at": self.dim_at,
            "hilbert_drop_ok": self.hilbert_drop_ok,
        }


@dataclass(frozen=True)
class BinomialInstance:
    index: int
    ideal: str
    hilbert: tuple[int, ...]
    r2: int
    boundary: bool  # dim R_2 == n - 1
    decision: str
    ann1_dims: tuple[int, ...]
    deg1_witness_trials: int
    witness: str | None
    decompose_ok: bool | None
    support_ok: bool | None
    colon_identity_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "ideal": self.ideal,
            "hilbert": list(self.hilbert),
            "r2": self.r2,
            "boundary": self.boundary,
            "decision": self.decision,
            "ann1_dims": list(self.ann1_dims),
            "deg1_witness_trials": self.deg1_witness_trials,
            "witness": self.witness,
            "decompose_ok": self.decompose_ok,
            "support_ok": self.support_ok,
            "colon_identity_ok": self.colon_identity_ok,
        }


@dataclass(frozen=True)
class ScanReport:
    family: str
    config: ScanConfig
    instances: tuple
    counterexamples: tuple[Counterexample, ...]
    skipped: tuple[SkippedInstance, ...]
    elapsed: float

    @property
    def examined(self) -> int:
        return len(self.instances)

    @property
    def with_generic_ezd(self) -> int:
        if self.family == "monomial":
            return sum(1 for r in self.instances if r.decision == "generically_yes")
        return sum(1 for r in self.instances if r.deg1_witness_trials > 0)

    @property
    def passes(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self, full: bool = False) -> dict:
        out = {
            "schema_version": 1,
            "family": self.family,
            "config": self.config.echo(),
            "examined": self.examined,
            "with_generic_ezd": self.with_generic_ezd,
            "skipped": len(self.skipped),
            "counterexamples": [c.to_json_dict() for c in self.counterexamples],
        }
        if full:
            out["instances"] = [r.to_json_dict() for r in self.instances]
            out["skipped_instances"] = [s.to_json_dict() for s in self.skipped]
        return out

    def to_json(self, full: bool = False) -> str:
        return json.dumps(self.to_json_dict(full), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.family == "monomial":
            writer.writerow(
                [
                    "index", "ideal", "hilbert", "decision", "exact", "witness_degree",
                    "witness", "dim_prev", "dim_at", "hilbert_drop_ok",
                ]
            )
            for r in self.instances:
                writer.writerow(
                    [
                        r.index, r.ideal, " ".join(map(str, r.hilbert)), r.decision,
                        _csv_bool(r.exact), _csv_opt(r.witness_degree), _csv_opt(r.witness),
                        _csv_opt(r.dim_prev), _csv_opt(r.dim_at), _csv_bool(r.hilbert_drop_ok),
                    ]
                )
        else:
            writer.writerow(
                [
                    "index", "ideal", "hilbert", "r2", "boundary", "decision", "ann1_dims",
                    "deg1_witness_trials", "witness", "decompose_ok", "support_ok",
                    "colon_identity_ok",
                ]
            )
            for r in self.instances:
                writer.writerow(
                    [
                        r.index, r.ideal, " ".join(map(str, r.hilbert)), r.r2,
                        _csv_bool(r.boundary), r.decision, " ".join(map(str, r.ann1_dims)),
                        r.deg1_witness_trials, _csv_opt(r.witness), _csv_bool(r.decompose_ok),
                        _csv_bool(r.support_ok), _csv_bool(r.colon_identity_ok),
                    ]
                )
        return buf.getvalue()


def _csv_bool(v) -> str:
    if v is None:
        return ""
    return "true" if v else "false"


def _csv_opt(v) -> str:
    return "" if v is None else str(v)


# ---------------------------------------------------------------------------
# monomial scan


def _monomial_task(cfg: ScanConfig, payload: tuple[int, str]):
    idx, text = payload
    spec = parse_ideal(text, cfg.nvars)
    bound = cfg.bound if cfg.bound is not None else default_bound(spec)
    if bound is None:
        return SkippedInstance(idx, text, "no degree bound available for a non-Artinian ideal")
    ring = build_quotient(spec, bound)
    if not ring.complete:
        return SkippedInstance(idx, text, f"does not vanish by degree {bound}")
    verdict = generic_ezd_decision(ring, cfg.trials, derived_seed(cfg.seed, idx))
    witness = verdict.witness
    if verdict.decision is GenericDecision.GENERICALLY_YES:
        assert witness is not None
        t = witness.degree
        dim_prev = ring.dim(t)
        dim_at = ring.dim_extended(t + 1)
        drop_ok = dim_at == dim_prev - 1
    else:
        t = dim_prev = dim_at = drop_ok = None
    record = MonomialInstance(
        idx,
        text,
        ring.hilbert.values,
        verdict.decision.value,
        verdict.exact,
        format_poly(witness) if witness is not None else None,
        t,
        dim_prev,
        dim_at,
        drop_ok,
    )
    counterexample = None
    if drop_ok is False:
        counterexample = Counterexample(
            idx,
            text,
            f"generic exact pair with partner degree {t} but "
            f"dim R_{t + 1} = {dim_at} while dim R_{t} - 1 = {dim_prev - 1}",
        )
    return record, counterexample


def _run_ordered(fn, payloads: list, workers: int) -> list:
    if workers > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunk = max(1, len(payloads) // (workers * 4))
            return list(ex.map(fn, payloads, chunksize=chunk))
    return [fn(p) for p in payloads]


def scan_monomial(cfg: ScanConfig) -> ScanReport:
    """Exhaustive generic-pair scan over the configured monomial family."""
    start = time.perf_counter()
    payloads = [
        (idx, format_ideal(spec)) for idx, spec in enumerate(enumerate_monomial_ideals(cfg))
    ]
    results = _run_ordered(partial(_monomial_task, cfg), payloads, cfg.workers)
    instances = []
    counterexamples = []
    skipped = []
    for res in results:
        if isinstance(res, SkippedInstance):
            skipped.append(res)
            continue
        record, counterexample = res
        instances.append(record)
        if counterexample is not None:
            counterexamples.append(counterexample)
    return ScanReport(
        "monomial", cfg, tuple(instances), tuple(counterexamples), tuple(skipped),
        time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# binomial family scan


def _binomial_task(cfg: ScanConfig, payload: tuple[int, str]):
    idx, text = payload
    spec = parse_ideal(text, cfg.nvars)
    bound = cfg.bound if cfg.bound is not None else BINOMIAL_DEFAULT_BOUND
    ring = build_quotient(spec, bound)
    if not ring.complete:
        return SkippedInstance(idx, text, f"does not vanish by degree {bound}")
    n = cfg.nvars
    r2 = ring.dim(2)
    boundary = r2 == n - 1
    instance_seed = derived_seed(cfg.seed, idx)
    ann1_dims = []
    deg1_found = 0
    witness = None
    decompose_ok: bool | None = None
    support_ok: bool | None = None
    colon_ok = True
    counterexamples: list[Counterexample] = []
    for t in range(cfg.trials):
        ell = generic_linear_form(n, derived_seed(instance_seed, t))
        lhs, rhs = colon_identity_dims(ring, ell)
        if lhs != rhs:
            colon_ok = False
            counterexamples.append(
                Counterexample(idx, text, f"colon identity failed: {lhs} != {rhs}")
            )
        ann1_dims.append(annihilator_degree(ring, ell, 1).dim)
        found = find_ezd_complement(ring, ell)
        if found is None or found[0].degree != 1:
            continue
        q = found[0]
        deg1_found += 1
        witness = q
        if not boundary:
            counterexamples.append(
                Counterexample(
                    idx, text,
                    f"dim R_2 = {r2} != {n - 1} yet {format_poly(ell)} has the verified "
                    f"degree-1 partner {format_poly(q)}",
                )
            )
        split = decompose_partner(spec, ell, q)
        if split is None:
            decompose_ok = False
            counterexamples.append(
                Counterexample(idx, text, f"partner split failed for {format_poly(ell)}")
            )
        else:
            if decompose_ok is None:
                decompose_ok = True
            bad = check_split_support(spec, ell, split.q1, split.q2)
            if bad:
                support_ok = False
                counterexamples.append(
                    Counterexample(idx, text, f"split support check failed: {bad[0]}")
                )
            elif support_ok is None:
                support_ok = True
    if deg1_found == cfg.trials:
        decision = GenericDecision.GENERICALLY_YES
    elif deg1_found == 0:
        decision = GenericDecision.NO
    else:
        decision = GenericDecision.INCONCLUSIVE
    record = BinomialInstance(
        idx,
        text,
        ring.hilbert.values,
        r2,
        boundary,
        decision.value,
        tuple(ann1_dims),
        deg1_found,
        format_poly(witness) if witness is not None else None,
        decompose_ok,
        support_ok,
        colon_ok,
    )
    return record, counterexamples


def scan_binomial(cfg: ScanConfig) -> ScanReport:
    """Scan J + (f1 + f2) with J and f1, f2 in degree 2, f1 != f2.

    Instances whose binomial collapses modulo J (some f_i already in J) are
    recorded as skipped, as are quotients that fail to vanish by the bound.
    """
    start = time.perf_counter()
    deg2 = monomials_of_degree(cfg.nvars, 2)
    payloads: list[tuple[int, str]] = []
    skipped: list[SkippedInstance] = []
    idx = 0
    for mask in range(1 << len(deg2)):
        j_monos = [m for i, m in enumerate(deg2) if mask >> i & 1]
        for f1, f2 in combinations(deg2, 2):
            gens = [HomogPoly.from_monomial(m) for m in j_monos]
            gens.append(HomogPoly.from_monomial(f1) + HomogPoly.from_monomial(f2))
            ideal = make_ideal(cfg.nvars, gens)
            text = format_ideal(ideal)
            if f1 in j_monos or f2 in j_monos:
                skipped.append(
                    SkippedInstance(idx, text, "binomial collapses to a monomial modulo J")
                )
                idx += 1
                continue
            payloads.append((idx, text))
            idx += 1
    results = _run_ordered(partial(_binomial_task, cfg), payloads, cfg.workers)
    instances = []
    counterexamples: list[Counterexample] = []
    for res in results:
        if isinstance(res, SkippedInstance):
            skipped.append(res)
            continue
        record, cexs = res
        instances.append(record)
        counterexamples.extend(cexs)
    skipped.sort(key=lambda s: s.index)
    return ScanReport(
        "binomial", cfg, tuple(instances), tuple(counterexamples), tuple(skipped),
        time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# named experiments


def power_ideal_example(n: int, d: int) -> EzdReport:
    """Exact pair in k[x1..xn] / ((x1^d) + (x2..xn)^d).

    The all-ones form L pairs with the alternating geometric partner
    Q = sum_{i<d} (-1)^i l0^i x1^{d-1-i} where l0 = x2 + ... + xn, since
    L*Q telescopes to x1^d - l0^d which lies in the ideal.
    """
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    gens = [Monomial((d,) + (0,) * (n - 1))]
    gens.extend(Monomial((0,) + m.exps) for m in monomials_of_degree(n - 1, d))
    spec = monomial_ideal(n, gens)
    bound = default_bound(spec)
    assert bound is not None
    ring = build_quotient(spec, bound)
    ell = linear_form([1] * n)
    ell0 = linear_form([0] + [1] * (n - 1))
    x1 = variable(n, 0)
    q = HomogPoly.zero(n, d - 1)
    for i in range(d):
        term = (ell0 ** i) * (x1 ** (d - 1 - i))
        q = q + term if i % 2 == 0 else q - term
    return is_ezd_pair(ring, ell, q)


def check_support_multiples(ring: GradedQuotient, ell: HomogPoly, q: HomogPoly) -> list[tuple[Monomial, Monomial]]:
    """Brute-force oracle for kernel elements of monomial quotients.

    Requires ell*q = 0 in the ring. Every monomial in the support of q,
    multiplied up to degree 2*deg(q)+1, must land in the ideal; offending
    (support monomial, multiple) pairs are returned and expected absent.
    """
    if ring.spec.kind is not IdealKind.MONOMIAL:
        raise ValueError("oracle applies to monomial ideals")
    if any(ring.normal_form(ell * q)):
        raise ValueError("precondition failed: ell*q is nonzero in the ring")
    t = q.degree
    gens = minimalize_monomial_gens(ring.spec.monomial_generators())
    support = [
        m for m, c in zip(ring.basis_monomials(t), ring.normal_form(q)) if c
    ]
    violations = []
    for mu in support:
        for big in monomials_of_degree(ring.nvars, 2 * t + 1):
            if mu.divides(big) and not in_monomial_ideal(big, gens):
                violations.append((mu, big))
    return violations


@dataclass(frozen=True)
class PartnerSplit:
    """Degree-1 partner split Q = Q1 + Q2 with ell*Q1 in J+(f1), ell*Q2 in J+(f2)."""

    q1: HomogPoly
    q2: HomogPoly
    alpha: Fraction


def _drop_monomials(p: HomogPoly, gens: tuple[Monomial, ...]) -> HomogPoly:
    return HomogPoly(
        p.nvars, p.degree,
        [(m, c) for m, c in p.coeffs.items() if not in_monomial_ideal(m, gens)],
    )


def decompose_partner(spec: IdealSpec, ell: HomogPoly, q: HomogPoly) -> PartnerSplit | None:
    """Split a verified degree-1 partner across the two monomial halves.

    With ell*q = alpha*(f1 + f2) modulo J, solves ell*q1 in J + (f1) over
    linear forms, rescales a solution so that ell*q1 = alpha*f1 modulo J,
    and sets q2 = q - q1. Returns None only if no split exists, which would
    contradict the theory and is treated as a red flag by the scans.
    """
    j_monos, f1, f2 = spec.binomial_parts()
    if q.degree != 1:
        raise ValueError("partner must be a linear form")
    remainder = _drop_monomials(ell * q, j_monos)
    alpha = remainder.coefficient(f1)
    if remainder != HomogPoly(spec.nvars, 2, [(f1, alpha), (f2, alpha)]):
        raise ValueError("precondition failed: ell*q is not in the ideal")
    half1 = monomial_ideal(spec.nvars, j_monos + (f1,))
    ring1 = build_quotient(half1, 2)
    solutions = annihilator_degree(ring1, ell, 1)
    # No linear generators, so degree-1 coordinates are variable coefficients.
    for vec in solutions.basis:
        cand = linear_form(vec)
        a1 = _drop_monomials(ell * cand, j_monos).coefficient(f1)
        if a1:
            q1 = (alpha / a1) * cand
            q2 = q - q1
            tail = _drop_monomials(ell * q2, j_monos)
            if tail != HomogPoly(spec.nvars, 2, [(f2, alpha)]):
                return None
            return PartnerSplit(q1, q2, alpha)
    if alpha == 0:
        # ell*q already lies in J, so q itself works against either half.
        return PartnerSplit(q, HomogPoly.zero(spec.nvars, 1), alpha)
    return None


def check_split_support(
    spec: IdealSpec, ell: HomogPoly, q1: HomogPoly, q2: HomogPoly
) -> list[tuple[str, Monomial, Monomial]]:
    """Support facts for a partner split, checked by brute force.

    For every variable u in the support of q1 that does not divide f1 and
    every degree-2 monomial M other than f1, u*M must lie in J; same for
    q2 against f2. Violations are returned and expected absent.
    """
    j_monos, f1, f2 = spec.binomial_parts()
    n = spec.nvars
    for qq, f, label in ((q1, f1, "q1"), (q2, f2, "q2")):
        tail = _drop_monomials(ell * qq, j_monos)
        if any(m != f for m in tail.support()):
            raise ValueError(f"precondition failed: ell*{label} is not in J + ({format_poly(HomogPoly.from_monomial(f))})")
    violations = []
    vars_ = monomials_of_degree(n, 1)
    for part, qq, f in (("a", q1, f1), ("b", q2, f2)):
        for u in vars_:
            if not qq.coefficient(u) or u.divides(f):
                continue
            for big in monomials_of_degree(n, 2):
                if big == f:
                    continue
                if not in_monomial_ideal(u * big, j_monos):
                    violations.append((part, u, big))
    return violations


@dataclass(frozen=True)
class ProbeReport:
    """One exact pair implies generic forms are exact: sampled evidence."""

    searched: int
    base_form: str | None
    base_witness: str | None
    skipped_reason: str | None
    samples: int
    successes: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.successes, self.samples) if self.samples else Fraction(0)


def generic_form_probe(
    ring: GradedQuotient, samples: int = 20, seed: int = 0, search_budget: int | None = None
) -> ProbeReport:
    """For rings vanishing from degree 3 on: find one exact pair by sampling,
    then report how many further sampled forms are exact (expected all)."""
    if ring.dim_extended(3) != 0:
        raise ValueError("ring must vanish from degree 3 on")
    budget = search_budget if search_budget is not None else samples
    base = None
    searched = 0
    for i in range(budget):
        ell = generic_linear_form(ring.nvars, derived_seed(seed, i))
        searched += 1
        found = find_ezd_complement(ring, ell)
        if found is not None:
            base = (ell, found[0])
            break
    if base is None:
        return ProbeReport(
            searched, None, None, f"no exact pair found in {budget} sampled forms", samples, 0
        )
    successes = 0
    for j in range(samples):
        ell = generic_linear_form(ring.nvars, derived_seed(seed, budget + j))
        if find_ezd_complement(ring, ell) is not None:
            successes += 1
    return ProbeReport(
        searched, format_poly(base[0]), format_poly(base[1]), None, samples, successes
    )
