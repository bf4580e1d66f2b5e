"""Fusion rings as integer structure-constant tensors.

A ring is a finite label list (index 0 is the unit), a dual involution on
labels, and a rank^3 tensor N with N[i][j][k] = multiplicity of k in i (x) j.
Validation checks four axiom families:

  unit          N[0][j][k] = N[j][0][k] = delta_{jk}
  duality       dual is an involution fixing 0, and N[i][j][0] = delta_{j,i*}
  reciprocity   N[i][j][k] = N[i*][k][j] = N[k][j*][i]
  associativity sum_m N[i][j][m] N[m][k][l] = sum_m N[j][k][m] N[i][m][l]

Frobenius-Perron dimensions are the largest nonnegative eigenvalues of the
fusion matrices (N[i])_{jk}, computed by power iteration.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

import numpy as np

from fusionring import _kernels
from fusionring.errors import (
    NegativeEntryError,
    NonconvergenceError,
    NotSubringError,
    ShapeMismatchError,
    UnknownLabelError,
)
from fusionring.reports import ValidationReport, Violation

_POWER_CAP = 100_000
_STEP_TOL = 1e-12
_VIOLATION_CAP = 1000


class FusionRing:
    """Immutable based ring. N is stored as a read-only int64 array."""

    def __init__(self, labels: Iterable[str], dual: Iterable[int], N):
        labels = tuple(str(s) for s in labels)
        if not labels:
            raise ShapeMismatchError("label list is empty")
        if len(set(labels)) != len(labels):
            raise ShapeMismatchError("labels are not unique")
        r = len(labels)
        dual = tuple(int(d) for d in dual)
        if len(dual) != r or any(not (0 <= d < r) for d in dual):
            raise ShapeMismatchError(f"dual must be {r} indices in range")
        arr = np.ascontiguousarray(np.asarray(N, dtype=np.int64))
        if arr.shape != (r, r, r):
            raise ShapeMismatchError(f"N has shape {arr.shape}, expected {(r, r, r)}")
        if (arr < 0).any():
            i, j, k = (int(x) for x in np.argwhere(arr < 0)[0])
            raise NegativeEntryError(f"N[{i}][{j}][{k}] = {int(arr[i, j, k])} < 0")
        arr.flags.writeable = False
        self.labels = labels
        self.dual = dual
        self.N = arr
        self._fp_cache: dict[int, float] = {}

    # -- basic structure ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, x) -> int:
        """Accept a label string or an index; return the index."""
        if isinstance(x, str):
            try:
                return self.labels.index(x)
            except ValueError:
                raise UnknownLabelError(f"no label {x!r}") from None
        i = int(x)
        if not 0 <= i < self.rank:
            raise UnknownLabelError(f"index {i} out of range for rank {self.rank}")
        return i

    def dual_index(self, x) -> int:
        return self.dual[self.index(x)]

    def fusion_matrix(self, x) -> np.ndarray:
        """(N[i])_{jk}: the matrix of left tensoring by label i."""
        return self.N[self.index(x)]

    def tensor(self, x, y) -> Counter:
        """Decomposition of x (x) y as a label multiset."""
        i, j = self.index(x), self.index(y)
        row = self.N[i, j]
        return Counter({self.labels[k]: int(row[k]) for k in np.nonzero(row)[0]})

    def is_invertible(self, x) -> bool:
        """Combinatorial test: every row of the fusion matrix sums to 1."""
        return bool((self.fusion_matrix(x).sum(axis=1) == 1).all())

    # -- Frobenius-Perron ---------------------------------------------------

    def fp_dim(self, x) -> float:
        """Perron root of the fusion matrix of x.

        Computed on the canonical index min(i, i*): the two matrices are
        mutual transposes under reciprocity, so this makes fp_dim(i) and
        fp_dim(i*) bit-identical.
        """
        i = self.index(x)
        key = min(i, self.dual[i])
        if key not in self._fp_cache:
            self._fp_cache[key] = _perron_root(self.N[key])
        return self._fp_cache[key]

    def fp_dims(self) -> np.ndarray:
        return np.array([self.fp_dim(i) for i in range(self.rank)])

    def global_fp_dim(self) -> float:
        d = self.fp_dims()
        return float(np.dot(d, d))

    # -- derived rings ------------------------------------------------------

    def relabel(self, new_labels: Iterable[str]) -> "FusionRing":
        return FusionRing(new_labels, self.dual, self.N)

    def permuted(self, perm: Iterable[int]) -> "FusionRing":
        """Relabeled copy: new index x holds old index perm[x]."""
        p = list(perm)
        if sorted(p) != list(range(self.rank)):
            raise ShapeMismatchError("perm is not a permutation of the labels")
        q = [0] * self.rank
        for new, old in enumerate(p):
            q[old] = new
        labels = [self.labels[old] for old in p]
        dual = [q[self.dual[old]] for old in p]
        N = self.N[np.ix_(p, p, p)]
        return FusionRing(labels, dual, N)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FusionRing)
            and self.labels == other.labels
            and self.dual == other.dual
            and np.array_equal(self.N, other.N)
        )

    def __hash__(self):
        return hash((self.labels, self.dual, self.N.tobytes()))

    def __repr__(self):
        shown = ", ".join(self.labels[:6]) + (", ..." if self.rank > 6 else "")
        return f"FusionRing(rank={self.rank}, labels=[{shown}])"


def _perron_root(M: np.ndarray) -> float:
    """Largest nonnegative eigenvalue of a nonnegative integer matrix.

    Power iteration on M + I (the shift makes periodic fusion matrices
    converge), with the Collatz-Wielandt max-ratio estimate.
    """
    r = M.shape[0]
    A = M.astype(float) + np.eye(r)
    v = np.full(r, 1.0 / np.sqrt(r))
    for _ in range(_POWER_CAP):
        w = A @ v
        est = float((w / v).max())
        w /= np.linalg.norm(w)
        # converge on the iterate, not the ratio estimate: the max-ratio can
        # plateau for several steps (e.g. on path-shaped fusion matrices)
        # while the vector is still rotating toward the Perron direction
        if float(np.max(np.abs(w - v))) < _STEP_TOL:
            return est - 1.0
        v = w
    raise NonconvergenceError(f"power iteration did not settle in {_POWER_CAP} steps")


# -- validation --------------------------------------------------------------


def validate_ring(ring: FusionRing) -> ValidationReport:
    """Full axiom scan with located diagnostics (capped at 1000 violations)."""
    N = ring.N
    r = ring.rank
    dual = ring.dual
    out: list[Violation] = []

    def add(axiom, where, expected, found):
        if len(out) < _VIOLATION_CAP:
            out.append(Violation(axiom, tuple(int(w) for w in where), int(expected), int(found)))

    eye = np.eye(r, dtype=np.int64)
    for j, k in np.argwhere(N[0] != eye):
        add("unit-left", (0, j, k), eye[j, k], N[0, j, k])
    right = N[:, 0, :]
    for j, k in np.argwhere(right != eye):
        add("unit-right", (j, 0, k), eye[j, k], right[j, k])

    if dual[0] != 0:
        add("dual-involution", (0,), 0, dual[0])
    for i in range(r):
        if dual[dual[i]] != i:
            add("dual-involution", (i,), i, dual[dual[i]])

    pairing = N[:, :, 0]
    expected_pairing = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        expected_pairing[i, dual[i]] = 1
    for i, j in np.argwhere(pairing != expected_pairing):
        add("dual-pairing", (i, j, 0), expected_pairing[i, j], pairing[i, j])

    d = np.asarray(dual)
    left = N[d][:, :, :].transpose(0, 2, 1)  # left[i,j,k] = N[i*][k][j]
    for i, j, k in np.argwhere(N != left):
        add("reciprocity-left", (i, j, k), N[i, j, k], left[i, j, k])
    rightrec = N[:, d, :].transpose(2, 1, 0)  # rightrec[i,j,k] = N[k][j*][i]
    for i, j, k in np.argwhere(N != rightrec):
        add("reciprocity-right", (i, j, k), N[i, j, k], rightrec[i, j, k])

    for i, j, k, l, lhs, rhs in _kernels.associativity_violations(N, _VIOLATION_CAP):
        add("associativity", (i, j, k, l), lhs, rhs)

    return ValidationReport.from_violations(out)


def ring_is_valid(ring: FusionRing) -> bool:
    """Boolean fast path used by the enumerator (early-exit associativity)."""
    N = ring.N
    r = ring.rank
    dual = ring.dual
    if dual[0] != 0 or any(dual[dual[i]] != i for i in range(r)):
        return False
    eye = np.eye(r, dtype=np.int64)
    if not np.array_equal(N[0], eye) or not np.array_equal(N[:, 0, :], eye):
        return False
    expected_pairing = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        expected_pairing[i, dual[i]] = 1
    if not np.array_equal(N[:, :, 0], expected_pairing):
        return False
    d = np.asarray(dual)
    if not np.array_equal(N, N[d].transpose(0, 2, 1)):
        return False
    if not np.array_equal(N, N[:, d, :].transpose(2, 1, 0)):
        return False
    return _kernels.associativity_ok(N)


# -- label-set operations ----------------------------------------------------


def _as_index_set(ring: FusionRing, labels) -> set[int]:
    return {ring.index(x) for x in labels}


def subring_closure(ring: FusionRing, seed) -> frozenset[int]:
    """Smallest label set containing the seed and the unit that is closed
    under duals and under taking all tensor-product summands."""
    s = _as_index_set(ring, seed)
    s.add(0)
    while True:
        nxt = set(s)
        nxt.update(ring.dual[i] for i in s)
        for i in s:
            for j in s:
                nxt.update(int(k) for k in np.nonzero(ring.N[i, j])[0])
        if nxt == s:
            return frozenset(s)
        s = nxt


def is_closed(ring: FusionRing, labels) -> bool:
    s = _as_index_set(ring, labels)
    if 0 not in s:
        return False
    if any(ring.dual[i] not in s for i in s):
        return False
    for i in s:
        for j in s:
            if any(int(k) not in s for k in np.nonzero(ring.N[i, j])[0]):
                return False
    return True


def restrict(ring: FusionRing, labels) -> FusionRing:
    """The closed label set as a fusion ring of its own (original label
    strings kept, indices remapped in ascending order so the unit stays 0)."""
    s = _as_index_set(ring, labels)
    if not is_closed(ring, s):
        raise NotSubringError(f"label set {sorted(s)} is not a closed subring")
    keep = sorted(s)
    pos = {old: new for new, old in enumerate(keep)}
    labels_out = [ring.labels[i] for i in keep]
    dual_out = [pos[ring.dual[i]] for i in keep]
    N_out = ring.N[np.ix_(keep, keep, keep)]
    return FusionRing(labels_out, dual_out, N_out)


# -- products ----------------------------------------------------------------


def deligne_product(a: FusionRing, b: FusionRing) -> FusionRing:
    """Product ring on pair labels: N[(i,p)][(j,q)][(k,s)] = Na[ijk] Nb[pqs]."""
    ra, rb = a.rank, b.rank
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    dual = [a.dual[i] * rb + b.dual[p] for i in range(ra) for p in range(rb)]
    N = np.einsum("ijk,pqs->ipjqks", a.N, b.N).reshape(ra * rb, ra * rb, ra * rb)
    return FusionRing(labels, dual, N)
