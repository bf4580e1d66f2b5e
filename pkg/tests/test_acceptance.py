"""Release gate: ten end-to-end checks, one test per criterion.

Each test exercises a full feature path at its stated numeric tolerance and
runtime budget.  The terminal summary hook in conftest.py prints one PASS or
FAIL line per criterion at the end of the run, so this module doubles as the
release checklist.
"""

import time

import numpy as np
from conftest import perturbed

from fusionring.cli import run_command
from fusionring.enumeration import EnumerationQuery, build_candidate, enumerate_gng
from fusionring.families import (
    ising_ring,
    near_group_ring,
    pointed_ring,
    psl2_level8_ring,
    su2_ring,
    tambara_yamagami_ring,
    yang_lee_ring,
)
from fusionring.gng import (
    detect_gng,
    exact_factorization_pt_ad,
    gng_type,
    verify_fusion_rules,
)
from fusionring.grading import (
    adjoint_subring,
    universal_grading,
    verify_component_structure,
    verify_subring_correspondence,
)
from fusionring.groups import group_by_name, identify
from fusionring.invertibles import invertible_labels, orbits_noninvertible
from fusionring.isomorphism import canonical_key
from fusionring.premodular import (
    MuegerClass,
    balancing_residual,
    dispatch_degenerate_class,
    ising_standard_data,
    mueger_center_classify,
    product_data,
    psl2_level8_data,
    svect_data,
    verify_slightly_degenerate,
    verlinde_tensor,
    yang_lee_standard_data,
)
from fusionring.ring import deligne_product, validate_ring
from fusionring.serialize import serialize_ring


def _passed(report, name):
    """The named check exists in the report and passed."""
    for check in report.checks:
        if check.name == name:
            return check.passed
    raise AssertionError(f"report has no check named {name!r}")


def test_criterion_01_ising_analysis(tmp_path, capsys):
    ring = tambara_yamagami_ring("Z2")
    path = tmp_path / "ty_z2.ring"
    path.write_text(serialize_ring(ring), encoding="utf-8")

    start = time.perf_counter()
    rc = run_command(["analyze", str(path)])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out

    assert rc == 0
    assert ring.rank == 3
    assert abs(ring.global_fp_dim() - 4.0) <= 1e-9, (
        "global dimension should be 4 within 1e-9, got %r" % ring.global_fp_dim())
    t = gng_type(ring)
    assert identify(t.group) == "Z2"
    assert len(t.gamma) == 2, "the stabilizer should be all of Z2"
    assert t.k == (0,), "the self-product should contain no non-invertible"
    assert len(invertible_labels(ring)) == 2
    assert "rank 3" in out and "transitive type: G = Z2" in out
    assert "variant: NEAR_GROUP (tambara-yamagami shape)" in out
    assert elapsed < 1.0, f"analyze took {elapsed:.2f}s, budget is 1s"


def test_criterion_02_enumeration_satisfies_rank_and_dimension_formulas():
    start = time.perf_counter()
    rings = enumerate_gng(EnumerationQuery(max_group_order=4, max_k=2))
    assert rings, "the (4, 2) search space should produce rings"
    for ring in rings:
        t = gng_type(ring)
        index = t.index
        gamma = len(t.gamma)
        ksum = sum(t.k)
        assert ring.rank == index * (1 + gamma), (
            f"rank {ring.rank} != {index}*(1+{gamma})")
        d = (ksum + (ksum * ksum + 4 * gamma) ** 0.5) / 2
        expected_global = index * (d * d + gamma)
        assert abs(ring.global_fp_dim() - expected_global) <= 1e-8, (
            f"global {ring.global_fp_dim()!r} != {expected_global!r} "
            f"for type (|G|={t.group_order}, |Gamma|={gamma}, k={t.k})")
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"enumeration check took {elapsed:.1f}s, budget is 60s"


def test_criterion_03_fusion_rule_template_on_named_rings():
    rings = [ising_ring(), yang_lee_ring(), psl2_level8_ring(),
             near_group_ring("Z2", 1),
             deligne_product(yang_lee_ring(), pointed_ring("Z2"))]
    start = time.perf_counter()
    for ring in rings:
        report = verify_fusion_rules(ring)
        assert report.ok, (
            f"fusion-rule template failed on rank-{ring.rank} ring: "
            + "; ".join(str(c) for c in report.checks if not c.passed))
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"template checks took {elapsed:.2f}s, budget is 1s"


def test_criterion_04_component_and_subring_structure():
    for ring in (psl2_level8_ring(),
                 deligne_product(yang_lee_ring(), pointed_ring("Z2"))):
        start = time.perf_counter()
        comp = verify_component_structure(ring)
        corr = verify_subring_correspondence(ring)
        elapsed = time.perf_counter() - start

        assert comp.ok, "component structure: " + "; ".join(
            str(c) for c in comp.checks if not c.passed)
        assert _passed(comp, "components-are-invertible-translates")
        assert _passed(comp, "adjoint-idempotent")
        assert corr.ok, "subring correspondence: " + "; ".join(
            str(c) for c in corr.checks if not c.passed)
        assert _passed(corr, "components-met-bijects-with-subgroups")

        from fusionring.ring import restrict
        ad = restrict(ring, adjoint_subring(ring))
        assert universal_grading(ad).order == 1, (
            "the adjoint subring should have trivial grading group")
        assert elapsed < 1.0, f"structure checks took {elapsed:.2f}s per ring"


def test_criterion_05_pointed_adjoint_exact_factorization():
    ring = deligne_product(yang_lee_ring(), pointed_ring("Z2"))
    start = time.perf_counter()
    result = exact_factorization_pt_ad(ring)
    elapsed = time.perf_counter() - start
    assert result.ok, f"factorization failed: {result.reason}"
    assert result.witness is not None
    assert len(result.witness) == ring.rank, "witness should hit every label once"
    assert sorted(result.witness.values()) == sorted(ring.labels)
    assert elapsed < 1.0, f"factorization took {elapsed:.2f}s, budget is 1s"


def test_criterion_06_braided_oracles_balance_and_recover_fusion_rules():
    for data in (ising_standard_data(), yang_lee_standard_data()):
        resid = balancing_residual(data)
        assert resid <= 1e-8, f"balancing residual {resid:.3e} exceeds 1e-8"
        err = float(np.max(np.abs(verlinde_tensor(data) - data.ring.N)))
        assert err <= 1e-6, f"round-trip through the s-matrix is off by {err:.3e}"
        report = mueger_center_classify(data)
        assert report.classification is MuegerClass.NONDEGENERATE, (
            f"expected NONDEGENERATE, got {report.classification.value}")


def test_criterion_07_twisted_even_rings_are_slightly_degenerate():
    for t in (1, 3, 5, 7):
        start = time.perf_counter()
        data = psl2_level8_data(t)
        report = mueger_center_classify(data)
        assert report.classification is MuegerClass.SLIGHTLY_DEGENERATE, (
            f"t={t}: got {report.classification.value}")
        assert report.center == {0, 3}, f"t={t}: center should be {{f0, f6}}"
        assert data.ring.labels[3] == "f6"
        assert abs(data.theta[3] + 1.0) <= 1e-8, (
            f"t={t}: the transparent fermion should have twist -1")

        ring = data.ring
        assert len(invertible_labels(ring)) == 2 * universal_grading(ring).order

        structure = verify_slightly_degenerate(data)
        assert _passed(structure, "pointed-dimension-vs-grading")
        assert _passed(structure, "delta-pairing-even-clusters"), (
            f"t={t}: dimension clusters should pair off evenly under delta")
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"t={t} took {elapsed:.2f}s, budget is 1s"


def test_criterion_08_degenerate_class_dispatch():
    cls1, _ = dispatch_degenerate_class(
        product_data(ising_standard_data(), svect_data()).ring)
    assert cls1 == 1

    cls2, _ = dispatch_degenerate_class(
        product_data(yang_lee_standard_data(), svect_data()).ring)
    assert cls2 == 2

    cls3, _ = dispatch_degenerate_class(psl2_level8_data(1).ring)
    assert cls3 == 3

    synthetic = build_candidate(group_by_name("Z4"), frozenset({0, 2}),
                                (1, 0), (0, 0))
    cls4, detail = dispatch_degenerate_class(synthetic)
    assert cls4 == 4, f"synthetic sqrt(2)-generated ring dispatched to {cls4}"
    assert "sqrt(2)" in detail or "generator" in detail


def test_criterion_09_enumeration_rediscovers_named_rings_deterministically():
    start = time.perf_counter()
    rings = enumerate_gng(EnumerationQuery(max_group_order=2, max_k=1))
    keys = {canonical_key(r) for r in rings}
    named = {
        "yang_lee": yang_lee_ring(),
        "ising": ising_ring(),
        "near_group(Z2,1)": near_group_ring("Z2", 1),
        "psl2_level8": psl2_level8_ring(),
        "yang_lee x Z2": deligne_product(yang_lee_ring(), pointed_ring("Z2")),
    }
    for name, ring in named.items():
        assert canonical_key(ring) in keys, f"{name} missing from enumeration"

    baseline = "".join(serialize_ring(r) for r in rings)
    for workers in (1, 2, 3):
        again = enumerate_gng(EnumerationQuery(max_group_order=2, max_k=1),
                              workers=workers)
        assert "".join(serialize_ring(r) for r in again) == baseline, (
            f"output with workers={workers} is not byte-identical")
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"rediscovery took {elapsed:.1f}s, budget is 30s"


def test_criterion_10_negative_controls(ising):
    start = time.perf_counter()
    six = su2_ring(6)
    assert not detect_gng(six), "the level-6 ring is not transitive"
    assert len(orbits_noninvertible(six)) == 3

    broken = perturbed(ising, 1, 1, 0, 0)
    report = validate_ring(broken)
    assert not report.ok
    located = [v for v in report.violations
               if v.axiom == "associativity" and len(v.where) == 4]
    assert located, ("a perturbed structure constant should produce a located "
                     "associativity violation, got: %s"
                     % [v.axiom for v in report.violations])
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"negative controls took {elapsed:.2f}s, budget is 1s"
