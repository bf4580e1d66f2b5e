"""Numpy fallback kernels; reference semantics for the compiled versions."""

from __future__ import annotations

import numpy as np


def _both_orders(N: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    r = N.shape[0]
    # lhs[i,j,k,l] = sum_m N[i,j,m] N[m,k,l]
    lhs = (N.reshape(r * r, r) @ N.reshape(r, r * r)).reshape(r, r, r, r)
    # rhs[i,j,k,l] = sum_m N[j,k,m] N[i,m,l]
    rhs = np.tensordot(N, N, axes=([2], [1])).transpose(2, 0, 1, 3)
    return lhs, rhs


def associativity_ok(N: np.ndarray) -> bool:
    lhs, rhs = _both_orders(N)
    return bool(np.array_equal(lhs, rhs))


def associativity_violations(N: np.ndarray, cap: int) -> list[tuple[int, int, int, int, int, int]]:
    lhs, rhs = _both_orders(N)
    bad = np.argwhere(lhs != rhs)
    out = []
    for i, j, k, l in bad[:cap]:
        out.append((int(i), int(j), int(k), int(l), int(lhs[i, j, k, l]), int(rhs[i, j, k, l])))
    return out
