"""Enumeration, scans, the named experiments, and their negative controls."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from ezdlab.ezd import PairVerdict, find_ezd_complement, generic_linear_form
from ezdlab.gradedring import build_quotient, default_bound
from ezdlab.lab import (
    ScanConfig,
    check_split_support,
    check_support_multiples,
    decompose_partner,
    enumerate_monomial_ideals,
    generic_form_probe,
    power_ideal_example,
    scan_binomial,
    scan_monomial,
)
from ezdlab.polyring import (
    HomogPoly,
    Monomial,
    format_ideal,
    format_poly,
    in_monomial_ideal,
    minimalize_monomial_gens,
    monomial_ideal,
    monomials_of_degree,
    parse_ideal,
    parse_poly,
)

F = Fraction


def brute_force_monomial_ideals(nvars, max_degree, artinian=True):
    """Independent oracle: enumerate every subset, minimalize, deduplicate."""
    pool = [m for d in range(2, max_degree + 1) for m in monomials_of_degree(nvars, d)]
    seen = set()
    for size in range(1, len(pool) + 1):
        for subset in combinations(pool, size):
            minimal = minimalize_monomial_gens(subset)
            if artinian:
                vars_with_power = {
                    next(i for i, e in enumerate(m.exps) if e)
                    for m in minimal
                    if sum(1 for e in m.exps if e) == 1
                }
                if len(vars_with_power) != nvars:
                    continue
            seen.add(minimal)
    return seen


def test_enumerate_two_vars_degree_two():
    cfg = ScanConfig(nvars=2, max_degree=2, symmetry_reduction=False)
    ideals = {s.monomial_generators() for s in enumerate_monomial_ideals(cfg)}
    squares = monomial_ideal(2, [Monomial((2, 0)), Monomial((0, 2))]).monomial_generators()
    full = monomial_ideal(
        2, [Monomial((2, 0)), Monomial((1, 1)), Monomial((0, 2))]
    ).monomial_generators()
    assert ideals == {squares, full}


def test_enumerate_matches_brute_force():
    cfg = ScanConfig(nvars=2, max_degree=3, symmetry_reduction=False)
    enumerated = {frozenset(s.monomial_generators()) for s in enumerate_monomial_ideals(cfg)}
    oracle = {frozenset(g) for g in brute_force_monomial_ideals(2, 3)}
    assert enumerated == oracle


def test_enumerate_emits_antichains_once():
    cfg = ScanConfig(nvars=3, max_degree=2, symmetry_reduction=False)
    seen = []
    for spec in enumerate_monomial_ideals(cfg):
        gens = spec.monomial_generators()
        assert gens == minimalize_monomial_gens(gens)
        seen.append(frozenset(gens))
    assert len(seen) == len(set(seen))


def test_symmetry_reduction_never_increases():
    for nvars, max_degree in [(2, 3), (3, 2)]:
        base = ScanConfig(nvars=nvars, max_degree=max_degree, symmetry_reduction=False)
        reduced = ScanConfig(nvars=nvars, max_degree=max_degree, symmetry_reduction=True)
        count_all = sum(1 for _ in enumerate_monomial_ideals(base))
        count_reduced = sum(1 for _ in enumerate_monomial_ideals(reduced))
        assert 0 < count_reduced <= count_all


def test_symmetry_classes_cover_everything():
    base = ScanConfig(nvars=2, max_degree=3, symmetry_reduction=False)
    reduced = ScanConfig(nvars=2, max_degree=3, symmetry_reduction=True)
    all_sets = {frozenset(m.exps for m in s.monomial_generators())
                for s in enumerate_monomial_ideals(base)}
    reps = [s.monomial_generators() for s in enumerate_monomial_ideals(reduced)]
    covered = set()
    for gens in reps:
        for perm in [(0, 1), (1, 0)]:
            covered.add(frozenset(tuple(m.exps[p] for p in perm) for m in gens))
    assert covered == all_sets


def test_scan_monomial_small():
    report = scan_monomial(ScanConfig(nvars=2, max_degree=2))
    assert report.examined == 2
    assert report.passes
    by_ideal = {r.ideal: r for r in report.instances}
    assert by_ideal["x1^2, x2^2"].decision == "generically_yes"
    assert by_ideal["x1^2, x2^2"].witness == "x1 - x2"
    assert by_ideal["x1^2, x2^2"].hilbert_drop_ok is True
    assert by_ideal["x1^2, x1*x2, x2^2"].decision == "no"


def test_scan_monomial_three_vars_passes():
    report = scan_monomial(ScanConfig(nvars=3, max_degree=2))
    assert report.passes
    assert report.examined > 0


def test_scan_binomial_examples():
    report = scan_binomial(ScanConfig(nvars=3, max_degree=2, trials=3, seed=2))
    assert report.passes
    by_ideal = {r.ideal: r for r in report.instances}
    key = "x1^2, x2^2, x1*x2 + x3^2"
    assert key in by_ideal
    rec = by_ideal[key]
    assert rec.r2 == 3 and not rec.boundary
    assert rec.deg1_witness_trials == 0
    assert rec.colon_identity_ok
    # skipped bookkeeping: instances whose binomial collapses modulo J
    assert any("collapses" in s.reason for s in report.skipped)


def test_scan_binomial_boundary_stratum_two_vars():
    report = scan_binomial(ScanConfig(nvars=2, max_degree=2, trials=3, seed=5))
    assert report.passes
    boundary = [r for r in report.instances if r.boundary]
    assert boundary, "expected boundary instances for n=2"
    yes = [r for r in boundary if r.decision == "generically_yes"]
    assert yes
    assert all(r.decompose_ok and r.support_ok for r in yes)


def test_scan_determinism_across_workers():
    cfg1 = ScanConfig(nvars=2, max_degree=3, seed=7, workers=1)
    cfg2 = ScanConfig(nvars=2, max_degree=3, seed=7, workers=3)
    r1, r2 = scan_monomial(cfg1), scan_monomial(cfg2)
    assert r1.to_json(full=True) == r2.to_json(full=True)
    assert r1.to_csv() == r2.to_csv()


def test_power_ideal_example_instances():
    for n, d, q_text in [
        (2, 2, "x1 - x2"),
        (3, 2, "x1 - x2 - x3"),
        (2, 3, "x1^2 - x1*x2 + x2^2"),
    ]:
        rep = power_ideal_example(n, d)
        assert rep.verdict is PairVerdict.EXACT_PAIR
        assert format_poly(rep.y) == q_text


def test_power_ideal_example_usage():
    with pytest.raises(ValueError):
        power_ideal_example(1, 2)
    with pytest.raises(ValueError):
        power_ideal_example(2, 1)


def test_support_multiples_oracle_clean():
    ring = build_quotient(parse_ideal("x1^2, x2^2", 2), 3)
    assert check_support_multiples(
        ring, parse_poly("x1 + x2", 2), parse_poly("x1 - x2", 2)
    ) == []
    spec3 = parse_ideal("x1^2, x2^2, x2*x3, x3^2", 3)
    ring3 = build_quotient(spec3, 3)
    assert check_support_multiples(
        ring3, parse_poly("x1 + x2 + x3", 3), parse_poly("x1 - x2 - x3", 3)
    ) == []


def test_support_multiples_negative_control():
    ring = build_quotient(parse_ideal("x1^2, x2^2", 2), 3)
    ell = parse_poly("x1 + x2", 2)
    corrupted = parse_poly("x1 - 2*x2", 2)
    with pytest.raises(ValueError):
        check_support_multiples(ring, ell, corrupted)


def test_decompose_partner_worked_instance():
    spec = parse_ideal("x1^2, x1*x2 + x2^2", 2)
    ell = parse_poly("x1 + 2*x2", 2)
    q = parse_poly("x1 + 2*x2", 2)
    split = decompose_partner(spec, ell, q)
    assert split is not None
    assert format_poly(split.q1) == "2*x1"
    assert format_poly(split.q2) == "-x1 + 2*x2"
    assert split.alpha == 4
    assert check_split_support(spec, ell, split.q1, split.q2) == []


def test_decompose_partner_alpha_zero_branch():
    # ell*q lies inside J and no solution reaches f1, so q splits as (q, 0)
    spec = parse_ideal("x1^2, x1*x2, x2*x3 + x3^2", 3)
    ell = parse_poly("x1", 3)
    q = parse_poly("x1", 3)
    split = decompose_partner(spec, ell, q)
    assert split is not None
    assert split.alpha == 0
    assert split.q1 == q and split.q2.is_zero()


def test_decompose_partner_found_on_sampled_instances():
    spec = parse_ideal("x1^2, x1*x2 + x2^2", 2)
    ring = build_quotient(spec, 3)
    for seed in range(6):
        ell = generic_linear_form(2, seed)
        found = find_ezd_complement(ring, ell)
        assert found is not None and found[0].degree == 1
        split = decompose_partner(spec, ell, found[0])
        assert split is not None
        assert split.q1 + split.q2 == found[0]
        assert check_split_support(spec, ell, split.q1, split.q2) == []


def test_split_support_negative_control():
    spec = parse_ideal("x1^2, x1*x2 + x2^2", 2)
    ell = parse_poly("x1 + 2*x2", 2)
    q1 = parse_poly("2*x1 + x2", 2)  # corrupted: ell*q1 leaves J + (f1)
    q2 = parse_poly("-x1 + x2", 2)
    with pytest.raises(ValueError):
        check_split_support(spec, ell, q1, q2)


def test_probe_power_example_ring():
    ring = build_quotient(parse_ideal("x1^2, x2^2, x2*x3, x3^2", 3), 4)
    rep = generic_form_probe(ring, samples=20, seed=3)
    assert rep.skipped_reason is None
    assert rep.successes == rep.samples == 20
    assert rep.fraction == 1


def test_probe_skips_without_pair():
    ring = build_quotient(parse_ideal("x1^2, x1*x2, x2^2", 2), 3)
    rep = generic_form_probe(ring, samples=10, seed=3)
    assert rep.skipped_reason is not None
    assert rep.successes == 0


def test_probe_gorenstein_ring_still_probed():
    ring = build_quotient(parse_ideal("x1^2, x2^2", 2), 3)
    rep = generic_form_probe(ring, samples=10, seed=3)
    assert rep.skipped_reason is None
    assert rep.successes == 10


def test_probe_requires_short_ring():
    with pytest.raises(ValueError):
        generic_form_probe(build_quotient(parse_ideal("x1^3, x2^3", 2), 5))


def test_scan_config_validation():
    with pytest.raises(ValueError):
        ScanConfig(nvars=1)
    with pytest.raises(ValueError):
        ScanConfig(nvars=2, max_degree=3, bound=2)
    with pytest.raises(ValueError):
        ScanConfig(nvars=2, trials=0)
