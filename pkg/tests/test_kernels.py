"""Both associativity backends must agree exactly (the compiled one is an
optimization, never a semantic fork)."""

import numpy as np
import pytest

from fusionring import BACKEND
from fusionring._kernels import available_backends
from fusionring.families import ising_ring, near_group_ring, su2_ring
from fusionring.groups import group_by_name
from fusionring.ring import deligne_product

from conftest import perturbed

BACKENDS = available_backends()


def brute_force_violations(N):
    """Dumb four-index reference: both bracketings of x_i x_j x_k."""
    r = N.shape[0]
    out = []
    for i in range(r):
        for j in range(r):
            for k in range(r):
                for m in range(r):
                    lhs = sum(N[i, j, s] * N[s, k, m] for s in range(r))
                    rhs = sum(N[j, k, s] * N[i, s, m] for s in range(r))
                    if lhs != rhs:
                        out.append((i, j, k, m, lhs, rhs))
    return out


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_valid_rings_pass(name, zoo):
    mod = BACKENDS[name]
    for ring in zoo.values():
        assert mod.associativity_ok(ring.N), ring.labels
        assert mod.associativity_violations(ring.N, 10) == []


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_violations_match_brute_force(name, ising):
    mod = BACKENDS[name]
    bad = perturbed(ising, 1, 1, 0, 0)  # kill g1 (x) g1 = e
    expected = brute_force_violations(bad.N)
    assert expected, "perturbation should break associativity"
    got = mod.associativity_violations(bad.N, 10 ** 6)
    assert sorted(got) == sorted(expected)
    assert not mod.associativity_ok(bad.N)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_violation_cap(name, ising):
    mod = BACKENDS[name]
    bad = perturbed(ising, 1, 1, 0, 0)
    assert len(mod.associativity_violations(bad.N, 2)) == 2


def test_backends_agree_on_larger_ring():
    ring = deligne_product(near_group_ring(group_by_name("Z2"), 1), su2_ring(4))
    results = {name: mod.associativity_ok(ring.N) for name, mod in BACKENDS.items()}
    assert all(results.values()), results


def test_backend_reported():
    assert BACKEND in BACKENDS
