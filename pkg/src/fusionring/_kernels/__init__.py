"""Hot-loop kernels with import-time backend selection.

The compiled Cython backend is used when present; otherwise the numpy
fallback.  ``BACKEND`` records which one won.  Both expose:

    associativity_ok(N)               -> bool           (early exit)
    associativity_violations(N, cap)  -> [(i,j,k,l,lhs,rhs), ...]

with N a C-contiguous int64 (r, r, r) array.
"""

from fusionring._kernels import _pykern

try:  # pragma: no cover - exercised only when the extension built
    from fusionring._kernels import _ckern

    _impl = _ckern
    BACKEND = "compiled"
except ImportError:  # pragma: no cover
    _impl = _pykern
    BACKEND = "python"

associativity_ok = _impl.associativity_ok
associativity_violations = _impl.associativity_violations


def available_backends():
    """Name -> module map of importable backends (for benchmarks/tests)."""
    out = {"python": _pykern}
    if _impl is not _pykern:
        out["compiled"] = _impl
    return out
