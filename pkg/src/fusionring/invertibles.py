"""Invertible labels, their group, and the left tensor action.

Invertibility is detected combinatorially (every row of the fusion matrix
sums to 1, i.e. left tensoring is a permutation of labels), never through
floating-point dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from fusionring.errors import (
    InconsistentDataError,
    InvertibleInputError,
    MultiplicityViolationError,
    NotInvertibleError,
)
from fusionring.groups import GroupTable
from fusionring.ring import FusionRing


def invertible_labels(ring: FusionRing) -> list[int]:
    return [i for i in range(ring.rank) if ring.is_invertible(i)]


def invertible_group(ring: FusionRing) -> GroupTable:
    """The invertibles as a group table (elements are ring label indices,
    the unit first)."""
    elems = invertible_labels(ring)
    pos = {e: p for p, e in enumerate(elems)}
    n = len(elems)
    table = np.zeros((n, n), dtype=np.int64)
    for pa, a in enumerate(elems):
        for pb, b in enumerate(elems):
            row = ring.N[a, b]
            k = int(np.nonzero(row)[0][0])
            if k not in pos:
                raise InconsistentDataError(
                    f"product of invertibles {ring.labels[a]} and {ring.labels[b]} "
                    f"is not invertible; ring fails the axioms"
                )
            table[pa, pb] = pos[k]
    inverse = tuple(pos[ring.dual[e]] for e in elems)
    return GroupTable(elements=tuple(elems), table=table, inverse=inverse)


def invertible_action(ring: FusionRing, g, x) -> int:
    """The unique label of g (x) x, for invertible g."""
    gi, xi = ring.index(g), ring.index(x)
    if not ring.is_invertible(gi):
        raise NotInvertibleError(f"{ring.labels[gi]} is not invertible")
    row = ring.N[gi, xi]
    return int(np.nonzero(row)[0][0])


def orbits_noninvertible(ring: FusionRing) -> tuple[tuple[int, ...], ...]:
    """Orbits of the non-invertible labels under the left action by all
    invertibles; orbits sorted by smallest member, members ascending."""
    invs = invertible_labels(ring)
    noninv = [i for i in range(ring.rank) if i not in set(invs)]
    seen: set[int] = set()
    orbits = []
    for x in noninv:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in invs:
                z = invertible_action(ring, g, y)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return tuple(sorted(orbits))


def stabilizer(ring: FusionRing, x) -> frozenset[int]:
    """Invertibles g with g (x) x = x. Cross-checked against the invertibles
    appearing in x (x) x*."""
    xi = ring.index(x)
    if ring.is_invertible(xi):
        raise InvertibleInputError(f"{ring.labels[xi]} is invertible; stabilizers "
                                   "are taken for non-invertible labels")
    fixing = frozenset(g for g in invertible_labels(ring)
                       if invertible_action(ring, g, xi) == xi)
    row = ring.N[xi, ring.dual[xi]]
    in_self_product = frozenset(
        g for g in invertible_labels(ring) if row[g] > 0
    )
    if fixing != in_self_product:
        raise InconsistentDataError(
            "stabilizer mismatch: fixing set differs from the invertibles in "
            "x (x) x*; ring fails reciprocity"
        )
    return fixing


@dataclass(frozen=True)
class SelfProductDecomposition:
    """x (x) x* split into its invertible part (each with multiplicity one)
    and the non-invertible multiplicities."""

    invertibles: frozenset[int]
    noninvertible_mult: dict[int, int]


def self_product_decomposition(ring: FusionRing, x) -> SelfProductDecomposition:
    xi = ring.index(x)
    if ring.is_invertible(xi):
        raise InvertibleInputError(f"{ring.labels[xi]} is invertible")
    row = ring.N[xi, ring.dual[xi]]
    invs = set(invertible_labels(ring))
    inv_part = set()
    noninv = {}
    for k in np.nonzero(row)[0]:
        k = int(k)
        if k in invs:
            if row[k] != 1:
                raise MultiplicityViolationError(
                    f"invertible {ring.labels[k]} appears with multiplicity "
                    f"{int(row[k])} in {ring.labels[xi]} (x) its dual"
                )
            inv_part.add(k)
        else:
            noninv[k] = int(row[k])
    return SelfProductDecomposition(frozenset(inv_part), noninv)
