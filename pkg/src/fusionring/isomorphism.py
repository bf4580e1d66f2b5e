"""Ring isomorphism and canonical labeling.

Two rings are isomorphic when a unit-fixing label bijection carries one
structure tensor onto the other; such a bijection automatically matches the
dual maps because duality is determined by N (through the pairing
N[i][j][0] = delta_{j,i*}).

Both the isomorphism test and the deduplication key go through a canonical
relabeling: the minimum of the relabeled tensor over all admissible
permutations, where tensor cells are flattened in the order
(max(i,j,k), i, j, k) so that a partial relabeling decides a contiguous
prefix.  Permutations are restricted to preserve label fingerprints -
permutation-invariant data (invertibility, self-duality, entry multisets) -
which is sound because any isomorphism preserves them, and positions are
allocated to fingerprint classes in sorted order so the restriction itself
is canonical.  Exhaustive search is feasible for the ranks this package
works at (about 16 and below); the test suite cross-checks against a brute
force permutation search at rank <= 5.
"""

from __future__ import annotations

import numpy as np

from fusionring.ring import FusionRing


def _fingerprints(ring: FusionRing) -> list[tuple]:
    N = ring.N
    fps = []
    for i in range(ring.rank):
        Ni = N[i]
        fps.append(
            (
                0 if ring.is_invertible(i) else 1,
                0 if ring.dual[i] == i else 1,
                int(N[i, i, i]),
                int(Ni.sum()),
                tuple(sorted(int(x) for x in Ni.sum(axis=1))),
                tuple(sorted(int(x) for x in Ni.sum(axis=0))),
                tuple(sorted(int(x) for x in Ni.ravel())),
                tuple(sorted(int(x) for x in N[i, ring.dual[i]])),
            )
        )
    return fps


def _cells_by_depth(r: int) -> list[list[tuple[int, int, int]]]:
    out = []
    for m in range(r):
        cs = [
            (i, j, k)
            for i in range(m + 1)
            for j in range(m + 1)
            for k in range(m + 1)
            if max(i, j, k) == m
        ]
        out.append(cs)
    return out


def canonical_permutation(ring: FusionRing) -> tuple[int, ...]:
    """A relabeling sigma (new position -> old label) minimizing the
    flattened relabeled tensor; equal across isomorphic rings."""
    r = ring.rank
    N = ring.N
    fps = _fingerprints(ring)

    blocks: dict[tuple, list[int]] = {}
    for i in range(1, r):
        blocks.setdefault(fps[i], []).append(i)
    pos_candidates: list[list[int]] = [[0]]
    for _, members in sorted(blocks.items()):
        for _ in members:
            pos_candidates.append(members)

    cells = _cells_by_depth(r)
    sigma = [0] * r
    used = [False] * r
    used[0] = True

    def min_tail(m: int) -> tuple[list[int], list[int]]:
        """(minimal flattened continuation from depth m, achieving sigma tail)."""
        if m == r:
            return [], []
        scored = []
        for c in pos_candidates[m]:
            if used[c]:
                continue
            sigma[m] = c
            seg = tuple(int(N[sigma[i], sigma[j], sigma[k]]) for (i, j, k) in cells[m])
            scored.append((seg, c))
        minseg = min(s for s, _ in scored)
        best_rest: list[int] | None = None
        best_tail: list[int] = []
        for seg, c in scored:
            if seg != minseg:
                continue
            sigma[m] = c
            used[c] = True
            rest, tail = min_tail(m + 1)
            used[c] = False
            if best_rest is None or rest < best_rest:
                best_rest, best_tail = rest, [c] + tail
        return list(minseg) + best_rest, best_tail

    _, tail = min_tail(1)
    return tuple([0] + tail)


def canonical_key(ring: FusionRing) -> bytes:
    """Dedup/sort key: the canonically relabeled tensor, row-major bytes."""
    sigma = canonical_permutation(ring)
    p = list(sigma)
    return ring.N[np.ix_(p, p, p)].astype(">i8").tobytes()


def canonical_form(ring: FusionRing) -> FusionRing:
    """The ring relabeled into canonical positions, with generic labels:
    'e', then 'g1'.. for the remaining invertibles, then 'X0'.. ."""
    out = ring.permuted(list(canonical_permutation(ring)))
    labels = []
    gi = xi = 0
    for i in range(out.rank):
        if i == 0:
            labels.append("e")
        elif out.is_invertible(i):
            gi += 1
            labels.append(f"g{gi}")
        else:
            labels.append(f"X{xi}")
            xi += 1
    return out.relabel(labels)


def rings_isomorphic(a: FusionRing, b: FusionRing) -> dict[str, str] | None:
    """A label mapping a -> b if the rings are isomorphic, else None."""
    if a.rank != b.rank:
        return None
    if sorted(_fingerprints(a)) != sorted(_fingerprints(b)):
        return None
    sa, sb = canonical_permutation(a), canonical_permutation(b)
    pa, pb = list(sa), list(sb)
    if not np.array_equal(a.N[np.ix_(pa, pa, pa)], b.N[np.ix_(pb, pb, pb)]):
        return None
    # N_a[sa(x),..] = N_b[sb(x),..]  =>  u -> sb(sa^{-1}(u)) is an isomorphism
    inv_a = {old: new for new, old in enumerate(sa)}
    return {a.labels[u]: b.labels[sb[inv_a[u]]] for u in range(a.rank)}
