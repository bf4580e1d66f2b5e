"""Adjoint and pointed subrings, the universal grading, and the subring
lattice.

The universal grading partitions the labels into components: the identity
component is the adjoint subring (generated by all x (x) x*), and two labels
share a component exactly when one appears in the other tensored by an
adjoint label.  For a well-graded ring the induced product on components is
single-valued and forms a group; rings that fail this (they cannot carry a
grading) raise ILL_DEFINED_GRADING with the offending product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from fusionring.errors import (
    HypothesisFailError,
    IllDefinedGradingError,
    RankLimitError,
)
from fusionring.groups import GroupTable
from fusionring.invertibles import invertible_labels, orbits_noninvertible
from fusionring.reports import Check, VerificationReport
from fusionring.ring import FusionRing, restrict, subring_closure

_DIM_TOL = 1e-8
_SUBRING_RANK_LIMIT = 12


def adjoint_subring(ring: FusionRing) -> set[int]:
    """Closure of all summands of x (x) x* over every label x."""
    seed: set[int] = set()
    for x in range(ring.rank):
        seed |= set(np.nonzero(ring.N[x, ring.dual[x]])[0].tolist())
    return set(subring_closure(ring, seed))


def pointed_subring(ring: FusionRing) -> set[int]:
    """The invertible labels (always a closed subring)."""
    return set(invertible_labels(ring))


class _Dsu:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass(frozen=True)
class GradingInfo:
    """Universal grading: a group over component ids, the component
    partition (identity component first), and the label -> component map."""

    group: GroupTable
    components: tuple[tuple[int, ...], ...]
    assignment: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.components)

    def component_of(self, label: int) -> int:
        return self.assignment[label]

    def is_trivial(self) -> bool:
        return self.order == 1


def universal_grading(ring: FusionRing) -> GradingInfo:
    r = ring.rank
    ad = adjoint_subring(ring)

    dsu = _Dsu(r)
    for x in range(r):
        for a in ad:
            for y in np.nonzero(ring.N[x, a])[0]:
                dsu.union(x, int(y))
            for y in np.nonzero(ring.N[a, x])[0]:
                dsu.union(x, int(y))
    # all summands of one product carry one degree
    for i in range(r):
        for j in range(r):
            supp = np.nonzero(ring.N[i, j])[0]
            for y in supp[1:]:
                dsu.union(int(supp[0]), int(y))

    roots = sorted({dsu.find(x) for x in range(r)},
                   key=lambda rt: (rt != dsu.find(0), rt))
    comp_id = {rt: c for c, rt in enumerate(roots)}
    assignment = tuple(comp_id[dsu.find(x)] for x in range(r))
    components = tuple(
        tuple(x for x in range(r) if assignment[x] == c)
        for c in range(len(roots)))

    if set(components[0]) != ad:
        raise IllDefinedGradingError(
            "identity component does not equal the adjoint subring")

    m = len(components)
    table = -np.ones((m, m), dtype=np.int64)
    for i in range(r):
        for j in range(r):
            supp = np.nonzero(ring.N[i, j])[0]
            if supp.size == 0:
                continue
            u, v = assignment[i], assignment[j]
            w = assignment[int(supp[0])]
            if table[u, v] == -1:
                table[u, v] = w
            elif table[u, v] != w:
                raise IllDefinedGradingError(
                    f"component product [{u}][{v}] is multi-valued: "
                    f"{table[u, v]} vs {w} (from "
                    f"{ring.labels[i]} (x) {ring.labels[j]})")
            for y in supp:
                if assignment[int(y)] != w:
                    raise IllDefinedGradingError(
                        f"summand {ring.labels[int(y)]} of {ring.labels[i]} "
                        f"(x) {ring.labels[j]} escapes component {w}")
    if (table < 0).any():
        raise IllDefinedGradingError("component product is not total")
    for u in range(m):
        if sorted(table[u]) != list(range(m)) or sorted(table[:, u]) != list(range(m)):
            raise IllDefinedGradingError(
                f"component {u} does not act invertibly on components")
    for u in range(m):
        for v in range(m):
            for w in range(m):
                if table[table[u, v], w] != table[u, table[v, w]]:
                    raise IllDefinedGradingError(
                        "component product is not associative")
    group = GroupTable(elements=tuple(range(m)), table=table,
                       inverse=(), name=f"grading-group-{m}")
    return GradingInfo(group=group, components=components, assignment=assignment)


def component_dims(ring: FusionRing, grading: GradingInfo) -> list[float]:
    """Total FP dimension sum(d_x^2) of each component; a faithful grading
    makes these all equal, with order * dims[0] = global_fp_dim."""
    dims = ring.fp_dims()
    return [float(sum(dims[x] ** 2 for x in comp)) for comp in grading.components]


def verify_component_structure(ring: FusionRing) -> VerificationReport:
    """For transitive rings with k != 0: each grading component contains an
    invertible a_g and equals {a_g (x) Y : Y adjoint}; the adjoint subring is
    non-pointed and is its own adjoint."""
    from fusionring.gng import gng_type
    from fusionring.invertibles import invertible_action

    t = gng_type(ring)
    if sum(t.k) == 0:
        raise HypothesisFailError("k = 0: component structure statement "
                                  "requires k != 0")
    grading = universal_grading(ring)
    ad = adjoint_subring(ring)
    checks = []

    nonpointed_ad = any(not ring.is_invertible(x) for x in ad)
    checks.append(Check("adjoint-non-pointed", nonpointed_ad,
                        f"adjoint subring has {len(ad)} labels"))

    sub = restrict(ring, ad)
    ad_of_ad = adjoint_subring(sub)
    checks.append(Check("adjoint-idempotent", len(ad_of_ad) == sub.rank,
                        "adjoint of the adjoint subring is the whole adjoint"
                        if len(ad_of_ad) == sub.rank else
                        f"adjoint of adjoint has {len(ad_of_ad)} of {sub.rank} labels"))

    bad = None
    for c, comp in enumerate(grading.components):
        alphas = [x for x in comp if ring.is_invertible(x)]
        if not alphas:
            bad = f"component {c} has no invertible label"
            break
        alpha = alphas[0]
        translate = {invertible_action(ring, alpha, y) for y in ad}
        if translate != set(comp):
            bad = (f"component {c} is not alpha (x) adjoint for "
                   f"alpha = {ring.labels[alpha]}")
            break
    checks.append(Check("components-are-invertible-translates", bad is None,
                        bad or f"all {grading.order} components check out"))
    return VerificationReport(tuple(checks))


def enumerate_subrings(ring: FusionRing) -> list[set[int]]:
    """All closed subrings, smallest first then lexicographic.

    Every subring is a join of single-label closures, so the family of all
    singleton closures closed under pairwise joins is complete; intersections
    are added too (they are again subrings), keeping the output a lattice.
    """
    if ring.rank > _SUBRING_RANK_LIMIT:
        raise RankLimitError(
            f"subring enumeration is guarded at rank {_SUBRING_RANK_LIMIT}; "
            f"got {ring.rank}")
    family: set[frozenset[int]] = {frozenset(subring_closure(ring, {0}))}
    for x in range(ring.rank):
        family.add(frozenset(subring_closure(ring, {x})))
    changed = True
    while changed:
        changed = False
        items = sorted(family, key=lambda s: (len(s), sorted(s)))
        for a in items:
            for b in items:
                join = frozenset(subring_closure(ring, set(a | b)))
                if join not in family:
                    family.add(join)
                    changed = True
                meet = frozenset(a & b)
                if meet not in family:
                    family.add(meet)
                    changed = True
    return [set(s) for s in sorted(family, key=lambda s: (len(s), sorted(s)))]


def verify_subring_correspondence(ring: FusionRing) -> VerificationReport:
    """For transitive rings with k != 0: every non-pointed subring contains
    the adjoint; mapping a non-pointed subring to the set of grading
    components it meets is a bijection onto the subgroups of the grading
    group; and every non-pointed subring is itself transitive."""
    from fusionring.gng import detect_gng, gng_type

    t = gng_type(ring)
    if sum(t.k) == 0:
        raise HypothesisFailError("k = 0: subring correspondence requires k != 0")
    grading = universal_grading(ring)
    ad = adjoint_subring(ring)
    subrings = enumerate_subrings(ring)
    nonpointed = [s for s in subrings
                  if any(not ring.is_invertible(x) for x in s)]
    checks = []

    missing = [s for s in nonpointed if not ad <= s]
    checks.append(Check(
        "non-pointed-subrings-contain-adjoint", not missing,
        f"all {len(nonpointed)} contain the adjoint" if not missing
        else f"{sorted(missing[0])} misses the adjoint"))

    images = [frozenset(grading.assignment[x] for x in s) for s in nonpointed]
    subgroups = {frozenset(h) for h in grading.group.subgroups()}
    bijective = (len(set(images)) == len(images) and set(images) == subgroups)
    checks.append(Check(
        "components-met-bijects-with-subgroups", bijective,
        f"{len(nonpointed)} non-pointed subrings <-> {len(subgroups)} subgroups"
        if bijective else
        f"images {sorted(map(sorted, set(images)))} vs "
        f"subgroups {sorted(map(sorted, subgroups))}"))

    not_gng = [s for s in nonpointed if not detect_gng(restrict(ring, s))]
    checks.append(Check(
        "non-pointed-subrings-transitive", not not_gng,
        "every non-pointed subring is transitive" if not not_gng
        else f"subring {sorted(not_gng[0])} is not"))
    return VerificationReport(tuple(checks))
