# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled associativity kernels.

Semantics must match fusionring._kernels._pykern exactly; the test suite
cross-checks both backends on the same tensors.
"""


def associativity_ok(const long long[:, :, ::1] N):
    """Early-exit scan of sum_m N[i,j,m]N[m,k,l] == sum_m N[j,k,m]N[i,m,l]."""
    cdef Py_ssize_t r = N.shape[0]
    cdef Py_ssize_t i, j, k, l, m
    cdef long long lhs, rhs
    for i in range(r):
        for j in range(r):
            for k in range(r):
                for l in range(r):
                    lhs = 0
                    rhs = 0
                    for m in range(r):
                        lhs += N[i, j, m] * N[m, k, l]
                        rhs += N[j, k, m] * N[i, m, l]
                    if lhs != rhs:
                        return False
    return True


def associativity_violations(const long long[:, :, ::1] N, Py_ssize_t cap):
    """All quadruples where the two association orders disagree, up to cap."""
    cdef Py_ssize_t r = N.shape[0]
    cdef Py_ssize_t i, j, k, l, m
    cdef long long lhs, rhs
    out = []
    for i in range(r):
        for j in range(r):
            for k in range(r):
                for l in range(r):
                    lhs = 0
                    rhs = 0
                    for m in range(r):
                        lhs += N[i, j, m] * N[m, k, l]
                        rhs += N[j, k, m] * N[i, m, l]
                    if lhs != rhs:
                        out.append((i, j, k, l, lhs, rhs))
                        if len(out) >= cap:
                            return out
    return out
