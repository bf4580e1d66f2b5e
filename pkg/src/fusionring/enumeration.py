"""Brute-force synthesis of small transitive fusion rings.

Every candidate is built from a tuple (G, Gamma, sigma, k): a group G of
order <= 8, a normal subgroup Gamma, an involution sigma on the coset set
Q = G/Gamma giving the duality of the non-invertible labels, and a
multiplicity vector k over Q.  The tensor is then forced:

    a (x) b        = ab
    a (x) X_s      = X_{q(a) s}
    X_s (x) a      = X_{sigma(q(a)^-1 sigma(s))}        (dual of a^-1 (x) X_s*)
    X_i (x) X_j    = (+)_{u in w Gamma} u (+) sum_t k[w^-1 t] X_t,
                     with w = i sigma(j)^-1

and only candidates passing the full axiom check (and, when requested, the
transitivity test) are kept, deduplicated up to ring isomorphism, and
emitted in canonical order.  Nothing here certifies categorifiability.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from fusionring.errors import GuardExceededError, InvalidDescriptorError
from fusionring.gng import detect_gng
from fusionring.groups import GroupTable, element_names, groups_of_order, involutions
from fusionring.isomorphism import canonical_form, canonical_key
from fusionring.ring import FusionRing, ring_is_valid

_CANDIDATE_GUARD = 10_000_000
_GROUP_ORDER_CAP = 8


@dataclass(frozen=True)
class EnumerationQuery:
    max_group_order: int
    max_k: int
    require_gng: bool = True

    def __post_init__(self):
        if self.max_group_order < 1:
            raise InvalidDescriptorError("max_group_order must be >= 1")
        if self.max_k < 0:
            raise InvalidDescriptorError("max_k must be >= 0")
        if self.max_group_order > _GROUP_ORDER_CAP:
            raise GuardExceededError(
                f"group catalog covers order <= {_GROUP_ORDER_CAP}; "
                f"got {self.max_group_order}")


def build_candidate(group: GroupTable, gamma: tuple[int, ...],
                    sigma: tuple[int, ...], k: tuple[int, ...]) -> FusionRing:
    """The forced tensor for one parameter tuple (no validity check)."""
    quotient, coset_of = group.quotient(gamma)
    n = quotient.order
    go = group.order
    rank = go + n
    N = np.zeros((rank, rank, rank), dtype=np.int64)

    for a in range(go):
        for b in range(go):
            N[a, b, group.mul(a, b)] = 1
        qa = coset_of[a]
        for s in range(n):
            N[a, go + s, go + quotient.mul(qa, s)] = 1
            N[go + s, a, go + sigma[quotient.mul(quotient.inv(qa), sigma[s])]] = 1

    members = [[] for _ in range(n)]
    for u in range(go):
        members[coset_of[u]].append(u)
    for i in range(n):
        for j in range(n):
            w = quotient.mul(i, quotient.inv(sigma[j]))
            for u in members[w]:
                N[go + i, go + j, u] = 1
            for t in range(n):
                N[go + i, go + j, go + t] = k[quotient.mul(quotient.inv(w), t)]

    dual = tuple(group.inv(a) for a in range(go)) + tuple(go + sigma[s]
                                                          for s in range(n))
    labels = element_names(group) + [f"X{s}" for s in range(n)]
    return FusionRing(labels, dual, N)


def _parameter_tuples(query: EnumerationQuery) -> list[tuple]:
    """(order, group_index, gamma, sigma, k) tuples in deterministic order."""
    params = []
    for order in range(1, query.max_group_order + 1):
        for gi, group in enumerate(groups_of_order(order)):
            for gamma in group.normal_subgroups():
                n = order // len(gamma)
                gamma_t = tuple(sorted(gamma))
                for sigma in involutions(n):
                    for k in itertools.product(range(query.max_k + 1),
                                               repeat=n):
                        if len(gamma) == 1 and not any(k):
                            continue  # forces dimension 1, not a new label
                        params.append((order, gi, gamma_t, sigma, k))
    return params


def estimate_candidates(query: EnumerationQuery) -> int:
    total = 0
    for order in range(1, query.max_group_order + 1):
        for group in groups_of_order(order):
            for gamma in group.normal_subgroups():
                n = order // len(gamma)
                total += len(involutions(n)) * (query.max_k + 1) ** n
    return total


def _keep(param, require_gng: bool):
    order, gi, gamma, sigma, k = param
    group = groups_of_order(order)[gi]
    ring = build_candidate(group, gamma, sigma, k)
    if not ring_is_valid(ring):
        return None
    if require_gng and not detect_gng(ring):
        return None
    canon = canonical_form(ring)
    return canonical_key(canon), canon


def _keep_batch(batch, require_gng: bool):
    out = []
    for param in batch:
        kept = _keep(param, require_gng)
        if kept is not None:
            out.append(kept)
    return out


def enumerate_gng(query: EnumerationQuery, workers: int = 1) -> list[FusionRing]:
    """All valid rings from the template within the query bounds, one per
    isomorphism class, sorted by (rank, canonical tensor)."""
    estimate = estimate_candidates(query)
    if estimate > _CANDIDATE_GUARD:
        raise GuardExceededError(
            f"query spans about {estimate} candidates; the guard is "
            f"{_CANDIDATE_GUARD}")
    params = _parameter_tuples(query)

    found: dict[bytes, FusionRing] = {}
    if workers <= 1 or len(params) < 2 * workers:
        results = _keep_batch(params, query.require_gng)
    else:
        chunks = [params[i::workers] for i in range(workers)]
        results = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_keep_batch, chunk, query.require_gng)
                       for chunk in chunks]
            for fut in futures:
                results.extend(fut.result())
    for key, ring in results:
        found.setdefault(key, ring)
    return [found[key] for key in sorted(found, key=lambda b: (len(b), b))]
