import itertools

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionring.families import (
    ising_ring,
    near_group_ring,
    pointed_ring,
    psl2_level8_ring,
    tambara_yamagami_ring,
    yang_lee_ring,
)
from fusionring.groups import group_by_name
from fusionring.isomorphism import canonical_form, canonical_key, rings_isomorphic
from fusionring.ring import deligne_product


def brute_force_isomorphic(a, b):
    """Oracle: try every unit-fixing relabeling (rank <= 5 only)."""
    if a.rank != b.rank:
        return False
    for tail in itertools.permutations(range(1, a.rank)):
        p = (0,) + tail
        # b == a relabeled by p: N_b[p(i),p(j),p(k)] == N_a[i,j,k]
        ok = all(
            b.N[p[i], p[j], p[k]] == a.N[i, j, k]
            for i in range(a.rank) for j in range(a.rank) for k in range(a.rank)
        ) and all(p[a.dual[i]] == b.dual[p[i]] for i in range(a.rank))
        if ok:
            return True
    return False


def scrambled(ring, seed):
    rng = np.random.default_rng(seed)
    perm = [0] + list(rng.permutation(np.arange(1, ring.rank)))
    return ring.permuted([int(x) for x in perm])


SMALL = [
    ("ising", ising_ring()),
    ("yang_lee", yang_lee_ring()),
    ("psl2", psl2_level8_ring()),
    ("ng21", near_group_ring(group_by_name("Z2"), 1)),
    ("z4", pointed_ring(group_by_name("Z4"))),
    ("z2z2", pointed_ring(group_by_name("Z2xZ2"))),
    ("ty_z3", tambara_yamagami_ring(group_by_name("Z3"))),
]


def test_detector_matches_brute_force_on_pairs():
    for (na, a), (nb, b) in itertools.combinations_with_replacement(SMALL, 2):
        want = brute_force_isomorphic(a, b)
        got = rings_isomorphic(a, b) is not None
        assert got == want, (na, nb)


def test_isomorphism_map_is_a_real_map(ising):
    moved = scrambled(ising, 7)
    mapping = rings_isomorphic(ising, moved)
    assert mapping is not None
    assert set(mapping) == set(ising.labels)
    assert set(mapping.values()) == set(moved.labels)
    # the map must send products to products
    for x in ising.labels:
        for y in ising.labels:
            image = {mapping[z]: m for z, m in ising.tensor(x, y).items()}
            assert image == dict(moved.tensor(mapping[x], mapping[y]))


def test_canonical_form_is_permutation_invariant():
    for name, ring in SMALL:
        base = canonical_key(ring)
        for seed in range(6):
            assert canonical_key(scrambled(ring, seed)) == base, name


def test_canonical_form_is_idempotent():
    for name, ring in SMALL:
        c1 = canonical_form(ring)
        c2 = canonical_form(c1)
        assert np.array_equal(c1.N, c2.N) and c1.dual == c2.dual, name


def test_canonical_labels_are_normalized(psl2):
    c = canonical_form(psl2)
    assert c.labels[0] == "e"
    assert all(l.startswith(("g", "X")) for l in c.labels[1:])


def test_canonical_key_orders_bytes_like_entries():
    # big-endian int64 serialization: byte order must equal entrywise order
    a = pointed_ring(group_by_name("Z2"))
    b = ising_ring()
    ka, kb = canonical_key(a), canonical_key(b)
    assert (len(ka), ka) < (len(kb), kb)  # rank first
    assert np.frombuffer(ka, dtype=">i8").min() >= 0


def test_distinct_rings_have_distinct_keys():
    keys = {canonical_key(r) for _, r in SMALL}
    assert len(keys) == len(SMALL)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([n for n, _ in SMALL]), st.integers(0, 10 ** 6))
def test_scrambling_never_changes_the_key(name, seed):
    ring = dict(SMALL)[name]
    assert canonical_key(scrambled(ring, seed)) == canonical_key(ring)


def test_product_rings_isomorphic_regardless_of_factor_order():
    a = deligne_product(ising_ring(), yang_lee_ring())
    b = deligne_product(yang_lee_ring(), ising_ring())
    assert rings_isomorphic(a, b) is not None
    assert canonical_key(a) == canonical_key(b)
