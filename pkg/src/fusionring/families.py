"""Constructors for the named fusion rings used throughout the package.

Every constructor returns a fully validated FusionRing; a descriptor that
produces an inconsistent tensor is rejected, not repaired.
"""

from __future__ import annotations

import numpy as np

from fusionring.errors import InvalidDescriptorError, NotAssociativeError
from fusionring.groups import GroupTable, element_names, group_by_name
from fusionring.ring import FusionRing, restrict, validate_ring

_SU2_LEVEL_CAP = 10


def _validated(ring: FusionRing, what: str) -> FusionRing:
    report = validate_ring(ring)
    if not report.ok:
        raise NotAssociativeError(
            f"{what} does not define a consistent fusion ring: "
            f"{report.violations[0]}")
    return ring


def _as_group(group) -> GroupTable:
    if isinstance(group, GroupTable):
        return group
    return group_by_name(str(group))


def pointed_ring(group) -> FusionRing:
    """The group ring: every label invertible, g (x) h = gh."""
    g = _as_group(group)
    n = g.order
    N = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            N[a, b, g.mul(a, b)] = 1
    dual = tuple(g.inv(a) for a in range(n))
    return _validated(
        FusionRing(element_names(g), dual, N), f"pointed({g.name or n})")


def tambara_yamagami_ring(group) -> FusionRing:
    """Invertibles A plus one X with a (x) X = X and X (x) X = sum over A."""
    g = _as_group(group)
    if not g.is_abelian():
        raise InvalidDescriptorError(
            "tambara_yamagami needs an abelian invertible group")
    n = g.order
    N = np.zeros((n + 1, n + 1, n + 1), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            N[a, b, g.mul(a, b)] = 1
        N[a, n, n] = 1
        N[n, a, n] = 1
        N[n, n, a] = 1
    dual = tuple(g.inv(a) for a in range(n)) + (n,)
    labels = element_names(g) + ["X"]
    return _validated(FusionRing(labels, dual, N),
                      f"tambara_yamagami({g.name or n})")


def near_group_ring(group, k: int) -> FusionRing:
    """Invertibles G plus one X with X (x) X = sum over G (+) k X."""
    g = _as_group(group)
    if k < 1:
        raise InvalidDescriptorError("near_group needs k >= 1 (k = 0 is the "
                                     "tambara_yamagami shape)")
    n = g.order
    N = np.zeros((n + 1, n + 1, n + 1), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            N[a, b, g.mul(a, b)] = 1
        N[a, n, n] = 1
        N[n, a, n] = 1
        N[n, n, a] = 1
    N[n, n, n] = k
    dual = tuple(g.inv(a) for a in range(n)) + (n,)
    labels = element_names(g) + ["X"]
    return _validated(FusionRing(labels, dual, N),
                      f"near_group({g.name or n}, {k})")


def su2_ring(level: int) -> FusionRing:
    """Truncated Clebsch-Gordan ring on labels f0..f_level:
    f_a (x) f_b = (+) f_c for |a-b| <= c <= min(a+b, 2*level-a-b), step 2."""
    if not 0 <= level <= _SU2_LEVEL_CAP:
        raise InvalidDescriptorError(
            f"su2 level must be between 0 and {_SU2_LEVEL_CAP}")
    r = level + 1
    N = np.zeros((r, r, r), dtype=np.int64)
    for a in range(r):
        for b in range(r):
            for c in range(abs(a - b), min(a + b, 2 * level - a - b) + 1, 2):
                N[a, b, c] = 1
    labels = [f"f{a}" for a in range(r)]
    return _validated(FusionRing(labels, tuple(range(r)), N), f"su2({level})")


def psl2_level8_ring() -> FusionRing:
    """The even-label subring {f0,f2,f4,f6} of su2(6)."""
    big = su2_ring(6)
    return restrict(big, {0, 2, 4, 6})


def yang_lee_ring() -> FusionRing:
    """Rank 2: X (x) X = 1 (+) X (golden-ratio dimension)."""
    ring = near_group_ring(group_by_name("Z1"), 1)
    return ring.relabel(["1", "X"])


def ising_ring() -> FusionRing:
    """Rank 3: Z2 invertibles plus X of dimension sqrt(2)."""
    return tambara_yamagami_ring(group_by_name("Z2"))


def svect_ring() -> FusionRing:
    return pointed_ring(group_by_name("Z2"))


_NO_ARG = {
    "yang_lee": yang_lee_ring,
    "ising": ising_ring,
    "psl2_level8": psl2_level8_ring,
    "svect": svect_ring,
}


def build_family(name: str, group=None, k: int | None = None,
                 level: int | None = None) -> FusionRing:
    """Dispatch on a family name.  Recognized: pointed, tambara_yamagami,
    near_group, su2, yang_lee, ising, psl2_level8, svect."""
    if name in _NO_ARG:
        return _NO_ARG[name]()
    if name == "pointed":
        if group is None:
            raise InvalidDescriptorError("pointed needs a group")
        return pointed_ring(group)
    if name == "tambara_yamagami":
        if group is None:
            raise InvalidDescriptorError("tambara_yamagami needs a group")
        return tambara_yamagami_ring(group)
    if name == "near_group":
        if group is None or k is None:
            raise InvalidDescriptorError("near_group needs a group and k")
        return near_group_ring(group, k)
    if name == "su2":
        if level is None:
            raise InvalidDescriptorError("su2 needs a level")
        return su2_ring(level)
    known = sorted(list(_NO_ARG) + ["pointed", "tambara_yamagami",
                                    "near_group", "su2"])
    raise InvalidDescriptorError(f"unknown family {name!r}; known: "
                                 + ", ".join(known))
