"""Premodular data: an unnormalized s-matrix and twists over a fusion ring.

The single source of truth is the balancing identity

    s[i][j] = theta_i^-1 theta_j^-1 sum_k N[i*][j][k] theta_k dims[k]

checked to 1e-8 on construction.  When the transparent labels reduce to the
unit, the data is modular and the Verlinde formula must reproduce the
integer fusion rules to 1e-6 — that cross-check is the main guard against
wrong twist choices.  Quantum dimensions may be negative (non-unitary
variants); they agree with the ring's FP dimensions only in unitary cases.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from fusionring.errors import (
    HypothesisFailError,
    InconsistentDataError,
    InvalidDescriptorError,
    NotSubringError,
)
from fusionring.families import (
    ising_ring,
    psl2_level8_ring,
    svect_ring,
    yang_lee_ring,
)
from fusionring.groups import GroupTable
from fusionring.reports import Check, VerificationReport
from fusionring.ring import FusionRing, deligne_product, is_closed

_S_TOL = 1e-8
_VERLINDE_TOL = 1e-6
_TWIST_ROOT_ORDER = 80


def balancing_matrix(ring: FusionRing, theta: np.ndarray,
                     dims: np.ndarray) -> np.ndarray:
    """s[i][j] from the balancing identity (the defining formula)."""
    weighted = theta * dims
    dualized = ring.N[list(ring.dual), :, :]
    s = np.einsum("ijk,k->ij", dualized, weighted)
    return s / np.outer(theta, theta)


@dataclass(frozen=True)
class PremodularData:
    ring: FusionRing
    s_tilde: np.ndarray
    theta: np.ndarray
    dims: np.ndarray
    variant: str = field(default="", compare=False)

    def __post_init__(self):
        r = self.ring.rank
        s = np.asarray(self.s_tilde, dtype=np.complex128)
        th = np.asarray(self.theta, dtype=np.complex128)
        d = np.asarray(self.dims, dtype=np.float64)
        object.__setattr__(self, "s_tilde", s)
        object.__setattr__(self, "theta", th)
        object.__setattr__(self, "dims", d)
        if s.shape != (r, r) or th.shape != (r,) or d.shape != (r,):
            raise InconsistentDataError("s/theta/dims shapes do not match the ring")
        if abs(d[0] - 1.0) > _S_TOL:
            raise InconsistentDataError(f"dims[0] = {d[0]!r}, expected 1")
        off = np.max(np.abs(np.abs(th) - 1.0))
        if off > _S_TOL:
            raise InconsistentDataError(f"twists leave the unit circle by {off:.3e}")
        if np.max(np.abs(s - s.T)) > _S_TOL:
            raise InconsistentDataError("s-matrix is not symmetric")
        if np.max(np.abs(s[0] - d)) > _S_TOL:
            raise InconsistentDataError("first s-row does not equal dims")
        resid = np.max(np.abs(s - balancing_matrix(self.ring, th, d)))
        if resid > _S_TOL:
            raise InconsistentDataError(f"balancing identity fails by {resid:.3e}")

    @property
    def rank(self) -> int:
        return self.ring.rank

    def global_dim(self) -> float:
        return float(np.sum(self.dims ** 2))


def balancing_residual(data: PremodularData) -> float:
    return float(np.max(np.abs(
        data.s_tilde - balancing_matrix(data.ring, data.theta, data.dims))))


def verlinde_tensor(data: PremodularData) -> np.ndarray:
    """N[i][j][k] = sum_x S_ix S_jx conj(S_kx) / S_0x for normalized S."""
    S = data.s_tilde / math.sqrt(data.global_dim())
    return np.einsum("ix,jx,kx,x->ijk", S, S, np.conj(S), 1.0 / S[0])


def verlinde_check(data: PremodularData, tol: float = _VERLINDE_TOL) -> Check:
    err = float(np.max(np.abs(verlinde_tensor(data) - data.ring.N)))
    return Check("verlinde-recovers-fusion-rules", err <= tol,
                 f"max deviation {err:.3e} (tolerance {tol:g})")


def _transparent_with(data: PremodularData, x: int, y: int) -> bool:
    return abs(data.s_tilde[x, y] - data.dims[x] * data.dims[y]) <= _S_TOL


def mueger_centralizer(data: PremodularData, labels) -> set[int]:
    """Labels whose s-entry against every member of `labels` degenerates to
    the product of dimensions."""
    s = {data.ring.index(x) for x in labels}
    if not is_closed(data.ring, s):
        raise NotSubringError("centralizer argument is not a closed subring")
    out = {y for y in range(data.rank)
           if all(_transparent_with(data, x, y) for x in s)}
    if not is_closed(data.ring, out):
        raise InconsistentDataError(
            "centralizer is not a subring; the s-matrix data is inconsistent")
    return out


class MuegerClass(enum.Enum):
    NONDEGENERATE = "NONDEGENERATE"
    SLIGHTLY_DEGENERATE = "SLIGHTLY_DEGENERATE"
    SYMMETRIC_TANNAKIAN = "SYMMETRIC_TANNAKIAN"
    SYMMETRIC_SUPER = "SYMMETRIC_SUPER"
    OTHER_DEGENERATE = "OTHER_DEGENERATE"


@dataclass(frozen=True)
class MuegerReport:
    center: frozenset[int]
    classification: MuegerClass

    def describe(self, ring: FusionRing) -> str:
        names = ", ".join(ring.labels[i] for i in sorted(self.center))
        return f"{self.classification.value} (center {{{names}}})"


def mueger_center_classify(data: PremodularData) -> MuegerReport:
    center = frozenset(mueger_centralizer(data, range(data.rank)))
    full = frozenset(range(data.rank))
    if center == {0}:
        cls = MuegerClass.NONDEGENERATE
    elif center == full:
        tannakian = bool(np.all(np.abs(data.theta - 1.0) <= _S_TOL))
        cls = (MuegerClass.SYMMETRIC_TANNAKIAN if tannakian
               else MuegerClass.SYMMETRIC_SUPER)
    elif len(center) == 2:
        delta = max(center)
        slight = (data.ring.is_invertible(delta)
                  and data.ring.N[delta, delta, 0] == 1
                  and abs(data.theta[delta] + 1.0) <= _S_TOL)
        cls = (MuegerClass.SLIGHTLY_DEGENERATE if slight
               else MuegerClass.OTHER_DEGENERATE)
    else:
        cls = MuegerClass.OTHER_DEGENERATE
    return MuegerReport(center=center, classification=cls)


# -- named data sets ----------------------------------------------------------


def svect_data() -> PremodularData:
    ring = svect_ring()
    return PremodularData(ring, np.ones((2, 2), dtype=np.complex128),
                          np.array([1.0, -1.0], dtype=np.complex128),
                          np.array([1.0, 1.0]), variant="svect")


def pointed_metric_data(group, q_values) -> PremodularData:
    """Pointed data from per-element twists q on an abelian group; the
    s-matrix is whatever the balancing identity forces."""
    from fusionring.families import pointed_ring, _as_group

    g = _as_group(group)
    if not g.is_abelian():
        raise InvalidDescriptorError("pointed_metric needs an abelian group")
    ring = pointed_ring(g)
    q = np.asarray([complex(v) for v in q_values], dtype=np.complex128)
    if q.shape != (g.order,):
        raise InvalidDescriptorError(
            f"need exactly {g.order} twist values, got {q.shape}")
    dims = np.ones(g.order)
    s = balancing_matrix(ring, q, dims)
    return PremodularData(ring, s, q, dims, variant="pointed_metric")


def _root_candidates(order: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(order) / order)


def second_indicators(ring: FusionRing, theta: np.ndarray,
                      dims: np.ndarray) -> np.ndarray:
    """nu2(k) = (1/D^2) sum_{i,j} N[i][j][k] d_i d_j (theta_i/theta_j)^2.
    Genuine braided data gives 0 on non-self-dual labels and +-1 on
    self-dual ones; that integrality cuts down spurious twist choices the
    Verlinde formula alone cannot see."""
    th2 = theta ** 2
    glob = float(np.sum(dims ** 2))
    return np.einsum("ijk,i,j->k", ring.N, dims * th2, dims / th2) / glob


def _indicators_consistent(ring: FusionRing, nu2: np.ndarray) -> bool:
    for k in range(ring.rank):
        rounded = round(float(nu2[k].real))
        if abs(nu2[k] - rounded) > _VERLINDE_TOL:
            return False
        expected = {0} if ring.dual[k] != k else {1, -1}
        if rounded not in expected:
            return False
    return True


def solve_modular_twists(ring: FusionRing,
                         root_order: int = _TWIST_ROOT_ORDER) -> list[np.ndarray]:
    """All twist vectors over `root_order`-th roots of unity (theta_0 = 1,
    dims = FP dims) whose balancing s-matrix satisfies the Verlinde formula
    and whose second indicators are honest (+-1 on self-dual labels, 0
    otherwise).  Candidates in lexicographic root-index order."""
    r = ring.rank
    if r > 3:
        raise InvalidDescriptorError("twist search is intended for rank <= 3")
    dims = ring.fp_dims()
    roots = _root_candidates(root_order)
    solutions = []
    idx = [0] * (r - 1)
    total = root_order ** (r - 1)
    for flat in range(total):
        rem = flat
        for pos in range(r - 2, -1, -1):
            idx[pos] = rem % root_order
            rem //= root_order
        theta = np.concatenate(([1.0 + 0j], roots[idx]))
        s = balancing_matrix(ring, theta, dims)
        if np.max(np.abs(s - s.T)) > _S_TOL:
            continue
        S = s / math.sqrt(float(np.sum(dims ** 2)))
        if np.min(np.abs(S[0])) < 1e-12:
            continue
        n_back = np.einsum("ix,jx,kx,x->ijk", S, S, np.conj(S), 1.0 / S[0])
        if np.max(np.abs(n_back - ring.N)) > _VERLINDE_TOL:
            continue
        if _indicators_consistent(ring, second_indicators(ring, theta, dims)):
            solutions.append(theta)
    return solutions


def _first_modular_data(ring: FusionRing, variant: str) -> PremodularData:
    solutions = solve_modular_twists(ring)
    if not solutions:
        raise InconsistentDataError(
            f"no modular twists over {_TWIST_ROOT_ORDER}th roots for {variant}")
    theta = solutions[0]
    dims = ring.fp_dims()
    s = balancing_matrix(ring, theta, dims)
    return PremodularData(ring, s, theta, dims, variant=variant)


@lru_cache(maxsize=None)
def ising_standard_data() -> PremodularData:
    """First solution of the twist search on the Ising ring: theta =
    (1, -1, exp(i pi/8))."""
    return _first_modular_data(ising_ring(), "ising_standard")


@lru_cache(maxsize=None)
def yang_lee_standard_data() -> PremodularData:
    """First solution of the twist search on the golden ring: theta =
    (1, exp(4 pi i/5))."""
    return _first_modular_data(yang_lee_ring(), "yang_lee_standard")


def psl2_level8_data(t: int) -> PremodularData:
    """Rank-4 data on {f0,f2,f4,f6}: s[a][b] = sin((a+1)(b+1) t pi/8) /
    sin(t pi/8) and theta_a = exp(i pi t a(a+2)/16), for odd t."""
    if t % 2 == 0:
        raise InvalidDescriptorError("t must be odd")
    ring = psl2_level8_ring()
    a_vals = [0, 2, 4, 6]
    denom = math.sin(t * math.pi / 8)
    s = np.array([[math.sin((a + 1) * (b + 1) * t * math.pi / 8) / denom
                   for b in a_vals] for a in a_vals], dtype=np.complex128)
    theta = np.array([cmath.exp(1j * math.pi * t * a * (a + 2) / 16)
                      for a in a_vals])
    dims = np.real(s[0]).copy()
    return PremodularData(ring, s, theta, dims, variant=f"psl2_level8(t={t})")


def product_data(a: PremodularData, b: PremodularData) -> PremodularData:
    ring = deligne_product(a.ring, b.ring)
    s = np.kron(a.s_tilde, b.s_tilde)
    theta = np.kron(a.theta, b.theta)
    dims = np.kron(a.dims, b.dims)
    variant = f"product({a.variant or 'a'}, {b.variant or 'b'})"
    return PremodularData(ring, s, theta, dims, variant=variant)


_BRAIDED_NO_ARG = {
    "svect": svect_data,
    "ising_standard": ising_standard_data,
    "yang_lee_standard": yang_lee_standard_data,
}


def braided_family_data(name: str, group=None, q_values=None,
                        t: int | None = None) -> PremodularData:
    """Dispatch on a braided family name.  Recognized: svect, ising_standard,
    yang_lee_standard, psl2_level8 (needs odd t), pointed_metric (needs a
    group and twist values)."""
    if name in _BRAIDED_NO_ARG:
        return _BRAIDED_NO_ARG[name]()
    if name == "psl2_level8":
        if t is None:
            raise InvalidDescriptorError("psl2_level8 data needs odd t")
        return psl2_level8_data(t)
    if name == "pointed_metric":
        if group is None or q_values is None:
            raise InvalidDescriptorError("pointed_metric needs a group and twists")
        return pointed_metric_data(group, q_values)
    known = sorted(list(_BRAIDED_NO_ARG) + ["psl2_level8", "pointed_metric"])
    raise InvalidDescriptorError(f"unknown braided family {name!r}; known: "
                                 + ", ".join(known))


# -- slightly degenerate structure --------------------------------------------


def dispatch_degenerate_class(ring: FusionRing) -> tuple[int, str]:
    """Ring-level four-way split for transitive rings that sit over a
    two-element transparent center:

      1: shaped like (sqrt2-ring) x pointed, not generated by one sqrt2 label
      2: adjoint subring is the golden ring (X (x) X = 1 (+) X)
      3: adjoint subring is the rank-4 ring {f0,f2,f4,f6}
      4: generated by a single label of dimension sqrt2 (no product shape)

    Returns (class, detail).  Raises InconsistentDataError when none or more
    than one branch fits — the honest outcome for rings outside the statement.
    """
    from fusionring.gng import gng_type
    from fusionring.grading import adjoint_subring
    from fusionring.isomorphism import rings_isomorphic
    from fusionring.ring import restrict, subring_closure

    t = gng_type(ring)
    dims = ring.fp_dims()
    sqrt2_gens = [x for x in range(ring.rank)
                  if not ring.is_invertible(x)
                  and abs(dims[x] - math.sqrt(2)) <= 1e-9
                  and len(subring_closure(ring, {x})) == ring.rank]
    ad = adjoint_subring(ring)
    matches: list[tuple[int, str]] = []

    if sum(t.k) == 0:
        if sqrt2_gens:
            matches.append((4, f"generated by {ring.labels[sqrt2_gens[0]]} "
                               f"of dimension sqrt(2)"))
        else:
            witness = _product_shape_witness(ring, ising_ring())
            if witness:
                matches.append((1, witness))
    else:
        sub = restrict(ring, ad)
        if rings_isomorphic(sub, yang_lee_ring()) is not None:
            witness = _product_shape_witness(ring, yang_lee_ring())
            matches.append((2, witness or "adjoint is the golden ring"))
        elif rings_isomorphic(sub, psl2_level8_ring()) is not None:
            witness = _product_shape_witness(ring, psl2_level8_ring())
            matches.append((3, witness or "adjoint is the rank-4 even ring"))

    if len(matches) != 1:
        raise InconsistentDataError(
            f"expected exactly one structural class, found {len(matches)}")
    return matches[0]


def _product_shape_witness(ring: FusionRing, factor: FusionRing) -> str | None:
    """Find a subring isomorphic to `factor` and a pointed complement giving
    an exact factorization; report it, or None."""
    from fusionring.gng import exact_factorization_check
    from fusionring.grading import enumerate_subrings
    from fusionring.isomorphism import rings_isomorphic
    from fusionring.ring import restrict

    subrings = enumerate_subrings(ring)
    factors = [s for s in subrings
               if len(s) == factor.rank
               and rings_isomorphic(restrict(ring, s), factor) is not None]
    pointed = [s for s in subrings
               if all(ring.is_invertible(x) for x in s)]
    for a in factors:
        for b in pointed:
            res = exact_factorization_check(
                ring, [ring.labels[i] for i in sorted(a)],
                [ring.labels[i] for i in sorted(b)])
            if res.ok:
                an = "{" + ",".join(ring.labels[i] for i in sorted(a)) + "}"
                bn = "{" + ",".join(ring.labels[i] for i in sorted(b)) + "}"
                return f"exact factorization {an} * {bn}"
    return None


def verify_slightly_degenerate(data: PremodularData) -> VerificationReport:
    """The structural facts that hold over a two-element transparent center:
    pointed-part dimension is |U| or 2|U| (with delta inside the adjoint
    exactly in the doubled case), delta-pairing makes every dimension class
    even, a minimal pointed part with k != 0 forces a golden adjoint, and
    exactly one of the four structural classes fits."""
    from fusionring.gng import detect_gng, gng_type
    from fusionring.grading import adjoint_subring, universal_grading
    from fusionring.invertibles import invertible_action, invertible_labels
    from fusionring.isomorphism import rings_isomorphic
    from fusionring.ring import restrict

    report = mueger_center_classify(data)
    if report.classification is not MuegerClass.SLIGHTLY_DEGENERATE:
        raise HypothesisFailError(
            f"data classifies {report.classification.value}, not "
            "SLIGHTLY_DEGENERATE")
    ring = data.ring
    if not detect_gng(ring):
        raise HypothesisFailError("ring is not transitive under invertibles")
    delta = max(report.center)
    t = gng_type(ring)
    grading = universal_grading(ring)
    ad = adjoint_subring(ring)
    checks = []

    pt_dim = float(len(invertible_labels(ring)))
    u = grading.order
    if abs(pt_dim - u) <= _S_TOL:
        factor2 = False
        size_ok = True
    elif abs(pt_dim - 2 * u) <= _S_TOL:
        factor2 = True
        size_ok = True
    else:
        factor2 = False
        size_ok = False
    containment_ok = size_ok and ((delta in ad) == factor2)
    checks.append(Check(
        "pointed-dimension-vs-grading", size_ok and containment_ok,
        f"FPdim(pointed) = {pt_dim:g}, |U| = {u}, delta "
        + ("inside" if delta in ad else "outside") + " the adjoint"))

    dims = ring.fp_dims()
    order = np.argsort(dims, kind="stable")
    clusters: list[list[int]] = []
    for x in order:
        if clusters and abs(dims[int(x)] - dims[clusters[-1][-1]]) <= 1e-6:
            clusters[-1].append(int(x))
        else:
            clusters.append([int(x)])
    pairing_ok = True
    detail = []
    for cluster in clusters:
        img = {invertible_action(ring, delta, x) for x in cluster}
        fixed = [x for x in cluster if invertible_action(ring, delta, x) == x]
        if img != set(cluster) or fixed or len(cluster) % 2:
            pairing_ok = False
            detail.append(f"cluster at dim {dims[cluster[0]]:.6f} broken")
        else:
            detail.append(f"{len(cluster)} at dim {dims[cluster[0]]:.4f}")
    checks.append(Check("delta-pairing-even-clusters", pairing_ok,
                        "; ".join(detail)))

    if not factor2 and sum(t.k) != 0:
        golden = rings_isomorphic(restrict(ring, ad), yang_lee_ring()) is not None
        checks.append(Check("minimal-pointed-forces-golden-adjoint", golden,
                            "adjoint subring is the golden ring" if golden
                            else "adjoint subring is not the golden ring"))

    try:
        cls, detail_str = dispatch_degenerate_class(ring)
        checks.append(Check("four-class-dispatch", True,
                            f"class ({cls}): {detail_str}"))
    except InconsistentDataError as exc:
        checks.append(Check("four-class-dispatch", False, str(exc)))
    return VerificationReport(tuple(checks))
