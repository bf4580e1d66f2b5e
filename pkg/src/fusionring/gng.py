"""Rings whose invertibles act transitively on the non-invertible labels.

For such a ring the structure is controlled by the data (G, Gamma, k):
G the invertible group, Gamma the common stabilizer of the non-invertible
labels (normal in G), and the k-vector reading off

    X1 (x) X1* = (+)_{h in Gamma} h (+) sum_s k_s X_s

over coset representatives s.  All non-invertibles share one dimension d
with d^2 = |Gamma| + d * sum(k).  Product decompositions follow a single
template: for non-invertibles X_i, X_j there is an invertible witness g
(unique modulo Gamma; the smallest-index witness is recorded) with

    X_i (x) X_j = (+)_{h in Gamma} g h (+) sum_s k_s (g (x) X_s).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from fusionring.errors import NotGngError, NotSubringError, PointedInputError, HypothesisFailError
from fusionring.groups import GroupTable
from fusionring.invertibles import (
    invertible_action,
    invertible_group,
    invertible_labels,
    orbits_noninvertible,
    self_product_decomposition,
    stabilizer,
)
from fusionring.reports import Check, VerificationReport
from fusionring.ring import FusionRing, is_closed

_DIM_TOL = 1e-9
_GLOBAL_TOL = 1e-8


def detect_gng(ring: FusionRing) -> bool:
    """True when the invertibles act transitively on the non-invertibles."""
    orbits = orbits_noninvertible(ring)
    if not orbits:
        raise PointedInputError("all labels are invertible; transitivity is "
                                "about the non-invertible labels")
    return len(orbits) == 1


@dataclass(frozen=True)
class GngType:
    """(G, Gamma, k) plus the common non-invertible dimension d.

    coset_reps are invertible ring labels g, ascending, one per coset of
    Gamma, enumerating the non-invertibles through g (x) X1 (X1 = the
    lowest-indexed non-invertible).  k[s] is the multiplicity of
    coset_reps[s] (x) X1 in X1 (x) X1*.
    """

    group: GroupTable
    gamma: tuple[int, ...]
    coset_reps: tuple[int, ...]
    k: tuple[int, ...]
    d: float

    @property
    def group_order(self) -> int:
        return self.group.order

    @property
    def index(self) -> int:
        return len(self.coset_reps)

    def summary(self, ring: FusionRing) -> str:
        gl = ",".join(ring.labels[i] for i in self.gamma)
        kv = ",".join(str(x) for x in self.k)
        return (f"|G| = {self.group_order}, Gamma = {{{gl}}}, "
                f"k = ({kv}), d = {self.d:.10f}")


def base_noninvertible(ring: FusionRing) -> int:
    noninv = [i for i in range(ring.rank) if not ring.is_invertible(i)]
    if not noninv:
        raise PointedInputError("all labels are invertible")
    return noninv[0]


def gng_type(ring: FusionRing) -> GngType:
    if not detect_gng(ring):
        raise NotGngError(f"the invertible action has "
                          f"{len(orbits_noninvertible(ring))} orbits, not 1")
    x1 = base_noninvertible(ring)
    group = invertible_group(ring)
    gamma = tuple(sorted(stabilizer(ring, x1)))
    gamma_set = set(gamma)

    if not group.is_normal([group.elements.index(g) for g in gamma]):
        raise NotGngError("stabilizer is not normal in the invertible group")

    # coset representatives: smallest invertible per coset, sorted
    reps = []
    covered: set[int] = set()
    for g in group.elements:  # ascending ring indices
        if g in covered:
            continue
        gp = group.elements.index(g)
        coset = {group.elements[group.mul(gp, group.elements.index(h))] for h in gamma}
        covered |= coset
        reps.append(min(coset))
    reps = sorted(reps)

    decomp = self_product_decomposition(ring, x1)
    if decomp.invertibles != gamma_set:
        raise NotGngError("invertible part of X1 (x) X1* differs from the stabilizer")
    k = []
    for g in reps:
        xs = invertible_action(ring, g, x1)
        k.append(decomp.noninvertible_mult.get(xs, 0))
    d = ring.fp_dim(x1)
    if abs(d * d - (len(gamma) + d * sum(k))) > max(1.0, d * d) * _DIM_TOL:
        raise NotGngError("d^2 = |Gamma| + d*sum(k) fails; ring is not of the "
                          "expected transitive type")
    return GngType(group=group, gamma=gamma, coset_reps=tuple(reps), k=tuple(k), d=d)


class Variant(enum.Enum):
    GENERALIZED_TY = "GENERALIZED_TY"
    NEAR_GROUP = "NEAR_GROUP"
    GENERAL = "GENERAL"


@dataclass(frozen=True)
class VariantCall:
    variant: Variant
    tambara_yamagami: bool  # flags the overlap: one non-invertible and k = 0


def classify_variant(t: GngType) -> VariantCall:
    """k = 0 everywhere -> GENERALIZED_TY; a single non-invertible ->
    NEAR_GROUP; the overlap is reported as NEAR_GROUP with the flag set."""
    ty = all(x == 0 for x in t.k)
    near = t.index == 1
    if near:
        return VariantCall(Variant.NEAR_GROUP, ty)
    if ty:
        return VariantCall(Variant.GENERALIZED_TY, False)
    return VariantCall(Variant.GENERAL, False)


def _template_row(ring: FusionRing, t: GngType, g: int, x1: int) -> np.ndarray:
    """Expected decomposition vector for witness g: the coset g*Gamma plus
    sum_s k_s (g (x) X_s)."""
    v = np.zeros(ring.rank, dtype=np.int64)
    gp = t.group.elements.index(g)
    for h in t.gamma:
        hp = t.group.elements.index(h)
        v[t.group.elements[t.group.mul(gp, hp)]] += 1
    for s, rep in enumerate(t.coset_reps):
        xs = invertible_action(ring, rep, x1)
        v[invertible_action(ring, g, xs)] += t.k[s]
    return v


def verify_fusion_rules(ring: FusionRing) -> VerificationReport:
    """The two product statements for transitive rings: all self-products
    X_i (x) X_i* agree with X1 (x) X1*, and every X_i (x) X_j matches the
    invertible-translate template for some witness g (smallest recorded)."""
    t = gng_type(ring)
    x1 = base_noninvertible(ring)
    noninv = [i for i in range(ring.rank) if not ring.is_invertible(i)]
    checks = []

    base_row = ring.N[x1, ring.dual[x1]]
    bad = [i for i in noninv if not np.array_equal(ring.N[i, ring.dual[i]], base_row)]
    checks.append(Check(
        "self-products-coincide",
        not bad,
        "all X (x) X* equal X1 (x) X1*" if not bad
        else f"first differing label: {ring.labels[bad[0]]}",
    ))

    missing = []
    witnesses = []
    for i in noninv:
        for j in noninv:
            row = ring.N[i, j]
            for g in t.group.elements:  # ascending: smallest witness recorded
                if np.array_equal(row, _template_row(ring, t, g, x1)):
                    witnesses.append((ring.labels[i], ring.labels[j], ring.labels[g]))
                    break
            else:
                missing.append((ring.labels[i], ring.labels[j]))
    checks.append(Check(
        "products-match-translate-template",
        not missing,
        f"witnesses found for all {len(witnesses)} pairs" if not missing
        else f"no witness for {missing[0]}",
    ))
    return VerificationReport(tuple(checks))


def verify_structure(ring: FusionRing) -> VerificationReport:
    """Rank and dimension bookkeeping for transitive rings: Gamma normal,
    labels = G plus coset translates of X1 (coset labeling bijective),
    rank = [G:Gamma](1+|Gamma|) exactly, and
    global dim = [G:Gamma](d^2+|Gamma|) within 1e-8."""
    t = gng_type(ring)
    x1 = base_noninvertible(ring)
    checks = []

    gpos = [t.group.elements.index(h) for h in t.gamma]
    normal = t.group.is_normal(gpos)
    checks.append(Check("stabilizer-normal", normal,
                        f"|Gamma| = {len(t.gamma)} inside G of order {t.group_order}"))

    translate = {}
    ok_bijection = True
    for g in t.group.elements:
        translate.setdefault(invertible_action(ring, g, x1), set()).add(g)
    noninv = {i for i in range(ring.rank) if not ring.is_invertible(i)}
    if set(translate) != noninv:
        ok_bijection = False
    else:
        # g X1 = h X1 exactly when g and h share a Gamma-coset
        gamma_set = set(t.gamma)
        for xs, gs in translate.items():
            base = min(gs)
            bp = t.group.elements.index(base)
            coset = {t.group.elements[t.group.mul(bp, t.group.elements.index(h))]
                     for h in gamma_set}
            if gs != coset:
                ok_bijection = False
    checks.append(Check("coset-labeling-bijective", ok_bijection,
                        f"{len(noninv)} non-invertibles = {t.index} cosets"))

    expected_rank = t.index * (1 + len(t.gamma))
    checks.append(Check("rank-formula", ring.rank == expected_rank,
                        f"rank {ring.rank} vs [G:Gamma](1+|Gamma|) = {expected_rank}"))

    expected_dim = t.index * (t.d ** 2 + len(t.gamma))
    got = ring.global_fp_dim()
    checks.append(Check("global-dimension-formula",
                        abs(got - expected_dim) <= _GLOBAL_TOL,
                        f"{got:.10f} vs {expected_dim:.10f}"))
    return VerificationReport(tuple(checks))


@dataclass(frozen=True)
class FactorizationResult:
    ok: bool
    witness: dict[tuple[str, str], str] | None
    reason: str = ""


def exact_factorization_check(ring: FusionRing, a, b) -> FactorizationResult:
    """Exact factorization by two closed subrings: trivial intersection and
    (x, y) -> x (x) y a bijection onto the labels with every product simple."""
    sa = {ring.index(x) for x in a}
    sb = {ring.index(x) for x in b}
    for name, s in (("first", sa), ("second", sb)):
        if not is_closed(ring, s):
            raise NotSubringError(f"{name} label set is not a closed subring")
    if sa & sb != {0}:
        inter = ", ".join(ring.labels[i] for i in sorted(sa & sb))
        return FactorizationResult(False, None, f"intersection is {{{inter}}}, not the unit alone")
    if len(sa) * len(sb) != ring.rank:
        return FactorizationResult(
            False, None, f"|A| |B| = {len(sa) * len(sb)} != rank {ring.rank}")
    witness = {}
    hit = set()
    for x in sorted(sa):
        for y in sorted(sb):
            row = ring.N[x, y]
            if int(row.sum()) != 1:
                return FactorizationResult(
                    False, None,
                    f"{ring.labels[x]} (x) {ring.labels[y]} is not simple")
            z = int(np.nonzero(row)[0][0])
            if z in hit:
                return FactorizationResult(
                    False, None, f"label {ring.labels[z]} hit twice")
            hit.add(z)
            witness[(ring.labels[x], ring.labels[y])] = ring.labels[z]
    return FactorizationResult(True, witness, "bijection onto all labels")


def exact_factorization_pt_ad(ring: FusionRing) -> FactorizationResult:
    """Convenience instance A = the pointed subring, B = the adjoint subring.
    Hypotheses checked first: the ring is transitive with k != 0 and the
    adjoint subring has trivial invertible group."""
    from fusionring.grading import adjoint_subring, pointed_subring
    from fusionring.ring import restrict

    t = gng_type(ring)
    if sum(t.k) == 0:
        raise HypothesisFailError("k = 0: the pointed/adjoint factorization "
                                  "needs k != 0")
    ad = adjoint_subring(ring)
    sub = restrict(ring, ad)
    if len(invertible_labels(sub)) != 1:
        raise HypothesisFailError("adjoint subring has nontrivial invertibles")
    return exact_factorization_check(ring, pointed_subring(ring), ad)
