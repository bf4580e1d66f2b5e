import numpy as np
import pytest

from fusionring.errors import (
    InvertibleInputError,
    MultiplicityViolationError,
    NotInvertibleError,
)
from fusionring.families import su2_ring, tambara_yamagami_ring
from fusionring.groups import group_by_name, identify, tables_isomorphic
from fusionring.invertibles import (
    invertible_action,
    invertible_group,
    invertible_labels,
    orbits_noninvertible,
    self_product_decomposition,
    stabilizer,
)

from conftest import perturbed


def test_invertible_labels(zoo):
    want = {"ising": [0, 1], "yang_lee": [0], "psl2_level8": [0, 3],
            "near_group_z2_1": [0, 1], "svect": [0, 1], "yl_x_z2": [0, 1]}
    for name, ring in zoo.items():
        assert invertible_labels(ring) == want[name], name


def test_invertible_group_structure(ising, psl2):
    assert tables_isomorphic(invertible_group(ising), group_by_name("Z2"))
    assert tables_isomorphic(invertible_group(psl2), group_by_name("Z2"))
    ty8 = tambara_yamagami_ring(group_by_name("Z4xZ2"))
    assert identify(invertible_group(ty8)) == "Z4xZ2"


def test_action_is_a_group_action(zoo):
    for name, ring in zoo.items():
        group = invertible_group(ring)
        invs = invertible_labels(ring)
        for a_pos, a in enumerate(invs):
            for b_pos, b in enumerate(invs):
                ab = invs[group.mul(a_pos, b_pos)]
                for x in range(ring.rank):
                    assert invertible_action(ring, ab, x) == \
                        invertible_action(ring, a, invertible_action(ring, b, x)), name


def test_action_rejects_noninvertible(ising):
    with pytest.raises(NotInvertibleError):
        invertible_action(ising, "X", "e")


def test_orbits(ising, psl2):
    assert orbits_noninvertible(ising) == ((2,),)
    assert orbits_noninvertible(psl2) == ((1, 2),)
    # su2 level 6: f1<->f5, f2<->f4 swapped by the end label, f3 fixed
    orbits = orbits_noninvertible(su2_ring(6))
    assert orbits == ((1, 5), (2, 4), (3,))


def test_stabilizer(ising, psl2):
    # sigma is fixed by all of Z2; the psl2 orbit is free
    assert stabilizer(ising, "X") == frozenset({0, 1})
    assert stabilizer(psl2, "f2") == frozenset({0})
    with pytest.raises(InvertibleInputError):
        stabilizer(ising, "g1")


def test_self_product_decomposition(ising, ng21, yang_lee):
    dec = self_product_decomposition(ising, "X")
    assert dec.invertibles == frozenset({0, 1})
    assert dec.noninvertible_mult == {}
    dec = self_product_decomposition(ng21, ng21.labels[-1])
    assert dec.invertibles == frozenset({0, 1})
    assert dec.noninvertible_mult == {2: 1}
    dec = self_product_decomposition(yang_lee, "X")
    assert dec.invertibles == frozenset({0})
    assert dec.noninvertible_mult == {1: 1}
    with pytest.raises(InvertibleInputError):
        self_product_decomposition(ising, "e")


def test_multiplicity_violation_detected(ising):
    bad = perturbed(ising, 2, 2, 0, 2)  # unit twice in X (x) X*
    with pytest.raises(MultiplicityViolationError):
        self_product_decomposition(bad, "X")
