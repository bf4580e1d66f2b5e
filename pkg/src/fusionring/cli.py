"""Command-line front end.

Subcommands: validate, analyze, family, product, enumerate, verify.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from fusionring.errors import (
    FusionRingError,
    GuardExceededError,
    HypothesisFailError,
    IllDefinedGradingError,
    InconsistentDataError,
    InvalidDescriptorError,
    ParseError,
    PointedInputError,
    RankLimitError,
    ValidationFailedError,
)
def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionring",
        description="fusion-ring validation, analysis, and enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a ring document against the axioms")
    p.add_argument("file")

    p = sub.add_parser("analyze", help="type, variant, grading, and subring survey")
    p.add_argument("file")

    p = sub.add_parser("family", help="write a named family as a ring document")
    p.add_argument("name")
    p.add_argument("--group", help="group name (Z1..Z8, Z2xZ2, S3, D4, Q8, ...)")
    p.add_argument("--k", type=int, help="near_group multiplicity")
    p.add_argument("--level", type=int, help="su2 level")
    p.add_argument("--t", type=int, help="odd twisting exponent for psl2_level8 data")
    p.add_argument("--q", help="comma-separated complex twists for pointed_metric")
    p.add_argument("-o", "--output", help="output file (default: stdout)")

    p = sub.add_parser("product", help="product of two ring documents")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output", help="output file (default: stdout)")

    p = sub.add_parser("enumerate", help="synthesize small transitive rings")
    p.add_argument("--max-group", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--include-non-gng", action="store_true",
                   help="keep valid template rings even if not transitive")
    p.add_argument("-o", "--output", help="output directory (default: stdout)")

    p = sub.add_parser("verify", help="run every applicable check on a document")
    p.add_argument("file")
    return parser


def _read_document(path: str):
    from fusionring.serialize import parse_document

    text = Path(path).read_text(encoding="utf-8")
    return parse_document(text)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _print_report(title: str, report) -> bool:
    print(f"-- {title}")
    for check in report.checks:
        print(f"   {check}")
    return report.ok


# -- subcommands ---------------------------------------------------------------


def _print_invalid(exc: ValidationFailedError) -> None:
    if exc.report is None:
        print(f"INVALID: {exc}")
        return
    print(f"INVALID: {str(exc).split(':', 1)[0]}")
    for v in exc.report.violations:
        print(f"  {v}")


def _cmd_validate(args) -> int:
    try:
        ring, _ = _read_document(args.file)
    except ValidationFailedError as exc:
        _print_invalid(exc)
        return 1
    print(f"OK: valid fusion ring of rank {ring.rank} "
          f"({', '.join(ring.labels)})")
    return 0


def _cmd_analyze(args) -> int:
    from fusionring.gng import classify_variant, detect_gng, gng_type, verify_fusion_rules, verify_structure
    from fusionring.grading import enumerate_subrings, universal_grading, verify_component_structure, verify_subring_correspondence
    from fusionring.groups import identify
    from fusionring.invertibles import invertible_labels, orbits_noninvertible
    from fusionring.premodular import mueger_center_classify

    ring, prem = _read_document(args.file)
    failed = False
    dims = ring.fp_dims()
    print(f"rank {ring.rank}; labels: {', '.join(ring.labels)}")
    print("dimensions: "
          + ", ".join(f"{ring.labels[i]}={dims[i]:.6f}" for i in range(ring.rank)))
    print(f"global dimension: {ring.global_fp_dim():.10f}")
    inv = invertible_labels(ring)
    print(f"invertibles ({len(inv)}): "
          + ", ".join(ring.labels[i] for i in inv))

    try:
        grading = universal_grading(ring)
        sizes = ", ".join(str(len(c)) for c in grading.components)
        print(f"grading group of order {grading.order} "
              f"(component sizes {sizes})")
    except IllDefinedGradingError as exc:
        print(f"grading: FAIL {exc}")
        failed = True
        grading = None

    try:
        subrings = enumerate_subrings(ring)
        print(f"subrings ({len(subrings)}): sizes "
              + ", ".join(str(len(s)) for s in subrings))
    except RankLimitError as exc:
        print(f"subrings: skipped ({exc})")

    try:
        gng = detect_gng(ring)
    except PointedInputError:
        print("pointed ring: transitivity analysis not applicable")
        gng = None
    if gng is False:
        print(f"not transitive: {len(orbits_noninvertible(ring))} orbits")
    if gng:
        t = gng_type(ring)
        call = classify_variant(t)
        print(f"transitive type: G = {identify(t.group)}, {t.summary(ring)}")
        print(f"variant: {call.variant.value}"
              + (" (tambara-yamagami shape)" if call.tambara_yamagami else ""))
        failed |= not _print_report("fusion-rule template", verify_fusion_rules(ring))
        failed |= not _print_report("rank and dimension bookkeeping",
                                    verify_structure(ring))
        for title, fn in (("component structure", verify_component_structure),
                          ("subring correspondence", verify_subring_correspondence)):
            try:
                failed |= not _print_report(title, fn(ring))
            except HypothesisFailError as exc:
                print(f"-- {title}: not applicable ({exc})")

    if prem is not None:
        report = mueger_center_classify(prem)
        print(f"braided data: {report.describe(ring)}")
    return 1 if failed else 0


def _parse_q(value: str):
    return [complex(part) for part in value.split(",")]


def _cmd_family(args) -> int:
    from fusionring.families import build_family
    from fusionring.premodular import braided_family_data
    from fusionring.serialize import serialize_ring

    name = args.name
    prem = None
    if name in ("ising_standard", "yang_lee_standard", "pointed_metric", "svect"):
        prem = braided_family_data(
            name, group=args.group,
            q_values=_parse_q(args.q) if args.q else None)
        ring = prem.ring
    elif name == "psl2_level8" and args.t is not None:
        prem = braided_family_data("psl2_level8", t=args.t)
        ring = prem.ring
    else:
        try:
            ring = build_family(name, group=args.group, k=args.k, level=args.level)
        except InvalidDescriptorError as exc:
            if str(exc).startswith("unknown family"):
                raise InvalidDescriptorError(
                    f"{exc}; braided: ising_standard, pointed_metric, "
                    "psl2_level8 (--t), svect, yang_lee_standard") from exc
            raise
    _emit(serialize_ring(ring, prem), args.output)
    return 0


def _cmd_product(args) -> int:
    from fusionring.premodular import product_data
    from fusionring.ring import deligne_product
    from fusionring.serialize import serialize_ring

    ring_a, prem_a = _read_document(args.a)
    ring_b, prem_b = _read_document(args.b)
    if prem_a is not None and prem_b is not None:
        data = product_data(prem_a, prem_b)
        _emit(serialize_ring(data.ring, data), args.output)
    else:
        _emit(serialize_ring(deligne_product(ring_a, ring_b)), args.output)
    return 0


def _cmd_enumerate(args) -> int:
    from fusionring.enumeration import EnumerationQuery, enumerate_gng
    from fusionring.serialize import serialize_ring

    query = EnumerationQuery(max_group_order=args.max_group, max_k=args.max_k,
                             require_gng=not args.include_non_gng)
    rings = enumerate_gng(query, workers=max(1, args.workers))
    if args.output:
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, ring in enumerate(rings, start=1):
            (outdir / f"ring-{i:04d}.ring").write_text(
                serialize_ring(ring), encoding="utf-8")
        print(f"wrote {len(rings)} rings to {outdir}")
    else:
        for ring in rings:
            sys.stdout.write(serialize_ring(ring))
    return 0


def _cmd_verify(args) -> int:
    from fusionring.gng import detect_gng, gng_type, verify_fusion_rules, verify_structure
    from fusionring.grading import universal_grading, verify_component_structure, verify_subring_correspondence
    from fusionring.premodular import (
        MuegerClass,
        balancing_residual,
        mueger_center_classify,
        verlinde_check,
        verify_slightly_degenerate,
    )
    from fusionring.reports import Check, VerificationReport

    ring, prem = _read_document(args.file)
    failed = False
    failed |= not _print_report("axioms", VerificationReport((
        Check("tensor-axioms", True, f"rank {ring.rank}, all axioms hold"),)))

    try:
        grading = universal_grading(ring)
        failed |= not _print_report("grading", VerificationReport((
            Check("grading-well-defined", True,
                  f"group of order {grading.order}"),)))
    except IllDefinedGradingError as exc:
        failed |= not _print_report("grading", VerificationReport((
            Check("grading-well-defined", False, str(exc)),)))

    try:
        gng = detect_gng(ring)
    except PointedInputError:
        gng = False
        print("-- transitive structure: not applicable (pointed ring)")
    if gng:
        failed |= not _print_report("fusion-rule template", verify_fusion_rules(ring))
        failed |= not _print_report("rank and dimension bookkeeping",
                                    verify_structure(ring))
        for title, fn in (("component structure", verify_component_structure),
                          ("subring correspondence", verify_subring_correspondence)):
            try:
                failed |= not _print_report(title, fn(ring))
            except HypothesisFailError as exc:
                print(f"-- {title}: not applicable ({exc})")

    if prem is not None:
        resid = balancing_residual(prem)
        report = mueger_center_classify(prem)
        checks = [Check("balancing-identity", resid <= 1e-8,
                        f"residual {resid:.3e}")]
        if report.classification is MuegerClass.NONDEGENERATE:
            checks.append(verlinde_check(prem))
        failed |= not _print_report("braided data", VerificationReport(tuple(checks)))
        print(f"   classification: {report.describe(ring)}")
        if report.classification is MuegerClass.SLIGHTLY_DEGENERATE and gng:
            failed |= not _print_report("slightly degenerate structure",
                                        verify_slightly_degenerate(prem))
    print("RESULT: " + ("FAIL" if failed else "PASS"))
    return 1 if failed else 0


_COMMANDS = {
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "family": _cmd_family,
    "product": _cmd_product,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationFailedError as exc:
        _print_invalid(exc)
        return 1
    except InconsistentDataError as exc:
        print(f"FAIL inconsistent data: {exc}")
        return 1
    except (ParseError, InvalidDescriptorError, GuardExceededError,
            RankLimitError) as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except FusionRingError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
