"""Ring documents: a flat JSON text format for rings and optional braided
data.

Canonical output is bit-exact: sorted keys, no insignificant whitespace, one
trailing newline.  Complex numbers are stored as two-element [re, im]
arrays.  Parsing validates the ring and refuses documents whose tensor fails
the axioms, embedding the validation report in the error.
"""

from __future__ import annotations

import json

import numpy as np

from fusionring.errors import ParseError, ValidationFailedError
from fusionring.ring import FusionRing, validate_ring

FORMAT_VERSION = 1


def _complex_pairs(vec) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(vec).ravel()]


def _matrix_pairs(mat) -> list[list[list[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row]
            for row in np.asarray(mat)]


def document_dict(ring: FusionRing, premodular=None) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "labels": list(ring.labels),
        "dual": [int(d) for d in ring.dual],
        "N": ring.N.tolist(),
    }
    if premodular is not None:
        doc["premodular"] = {
            "s_tilde": _matrix_pairs(premodular.s_tilde),
            "theta": _complex_pairs(premodular.theta),
        }
        if premodular.variant:
            doc["premodular"]["variant"] = premodular.variant
    return doc


def serialize_ring(ring: FusionRing, premodular=None) -> str:
    report = validate_ring(ring)
    if not report.ok:
        raise ValidationFailedError(
            f"refusing to serialize an invalid ring: {report.violations[0]}",
            report=report)
    return json.dumps(document_dict(ring, premodular),
                      sort_keys=True, separators=(",", ":")) + "\n"


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise ParseError(what)


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        err = ParseError(f"not valid JSON at line {exc.lineno} column "
                         f"{exc.colno}: {exc.msg}")
        err.line, err.column = exc.lineno, exc.colno
        raise err from None
    _expect(isinstance(doc, dict), "document is not a JSON object")
    return doc


def parse_document(text: str):
    """(FusionRing, PremodularData-or-None) from document text."""
    doc = _load_json(text)
    for key in ("format_version", "labels", "dual", "N"):
        _expect(key in doc, f"missing field {key!r}")
    _expect(doc["format_version"] == FORMAT_VERSION,
            f"unsupported format_version {doc['format_version']!r}")
    labels = doc["labels"]
    _expect(isinstance(labels, list) and labels
            and all(isinstance(x, str) for x in labels),
            "labels must be a non-empty list of strings")
    r = len(labels)
    dual = doc["dual"]
    _expect(isinstance(dual, list) and len(dual) == r
            and all(isinstance(x, int) and 0 <= x < r for x in dual),
            "dual must be a list of in-range label indices")
    try:
        raw = np.array(doc["N"])
    except (TypeError, ValueError):
        raise ParseError("N is not a rectangular nested array") from None
    _expect(raw.dtype.kind in "iu", "N entries must all be integers")
    N = raw.astype(np.int64)
    _expect(N.shape == (r, r, r), f"N must have shape ({r},{r},{r})")

    from fusionring.errors import FusionRingError
    try:
        ring = FusionRing(labels, tuple(dual), N)
    except FusionRingError as exc:
        raise ParseError(f"tensor rejected: {exc}") from None
    report = validate_ring(ring)
    if not report.ok:
        lines = "; ".join(str(v) for v in report.violations[:5])
        raise ValidationFailedError(
            f"document violates the ring axioms: {lines}", report=report)

    prem = None
    if "premodular" in doc:
        prem = _parse_premodular(doc["premodular"], ring)
    return ring, prem


def _parse_premodular(block, ring: FusionRing):
    from fusionring.premodular import PremodularData

    _expect(isinstance(block, dict), "premodular block must be an object")
    for key in ("s_tilde", "theta"):
        _expect(key in block, f"premodular block missing {key!r}")
    r = ring.rank

    def one(z, where):
        _expect(isinstance(z, list) and len(z) == 2
                and all(isinstance(v, (int, float)) for v in z),
                f"{where} entries must be [re, im] pairs")
        return complex(z[0], z[1])

    theta = np.array([one(z, "theta") for z in block["theta"]])
    _expect(theta.shape == (r,), f"theta must have {r} entries")
    st = block["s_tilde"]
    _expect(isinstance(st, list) and len(st) == r
            and all(isinstance(row, list) and len(row) == r for row in st),
            f"s_tilde must be a {r}x{r} matrix")
    s = np.array([[one(z, "s_tilde") for z in row] for row in st])
    dims = s[0].real.copy()
    _expect(bool(np.max(np.abs(s[0].imag)) <= 1e-8),
            "first s_tilde row (the dimensions) must be real")
    return PremodularData(ring, s, theta, dims,
                          variant=str(block.get("variant", "")))


def parse_ring(text: str) -> FusionRing:
    return parse_document(text)[0]
