"""End-to-end checks for the command-line driver.

Every test goes through ``run_command(argv)`` the same way the console
script does, asserting on exit codes and captured output rather than on
internals.  Exit code convention: 0 all checks passed, 1 a check failed,
2 usage or input error.
"""

import json

from fusionring.cli import run_command
from fusionring.families import su2_ring
from fusionring.serialize import parse_document, serialize_ring


def write_doc(tmp_path, name, ring, prem=None):
    path = tmp_path / name
    path.write_text(serialize_ring(ring, prem), encoding="utf-8")
    return str(path)


def test_validate_accepts_good_ring(tmp_path, capsys, ising):
    rc = run_command(["validate", write_doc(tmp_path, "i.ring", ising)])
    out = capsys.readouterr().out
    assert rc == 0, "validate should exit 0 on a valid document"
    assert "OK: valid fusion ring of rank 3 (e, g1, X)" in out


def test_validate_reports_located_violation(tmp_path, capsys, ising):
    doc = json.loads(serialize_ring(ising))
    doc["N"][1][1][0] = 0  # break g1 (x) g1 = e
    path = tmp_path / "broken.ring"
    path.write_text(json.dumps(doc), encoding="utf-8")
    rc = run_command(["validate", str(path)])
    out = capsys.readouterr().out
    assert rc == 1, "a ring that fails the axioms should exit 1"
    assert out.startswith("INVALID:"), out
    assert "associativity" in out or "duality" in out, (
        "the itemized report should name the broken axiom: %r" % out)
    assert any(line.startswith("  ") for line in out.splitlines()[1:]), (
        "violations should be listed indented under the headline")


def test_validate_bad_json_is_a_usage_error(tmp_path, capsys):
    path = tmp_path / "garbage.ring"
    path.write_text("{not json", encoding="utf-8")
    rc = run_command(["validate", str(path)])
    captured = capsys.readouterr()
    assert rc == 2
    assert "error [PARSE_ERROR]" in captured.err
    assert captured.out == "", "parse failures should go to stderr only"


def test_missing_file_is_a_usage_error(tmp_path, capsys):
    rc = run_command(["validate", str(tmp_path / "nope.ring")])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_analyze_ising_survey(tmp_path, capsys, ising):
    rc = run_command(["analyze", write_doc(tmp_path, "i.ring", ising)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "rank 3; labels: e, g1, X" in out
    assert "global dimension: 4.0000000000" in out
    assert "invertibles (2): e, g1" in out
    assert "grading group of order 2" in out
    assert "transitive type: G = Z2" in out
    assert "variant: NEAR_GROUP (tambara-yamagami shape)" in out
    assert "-- fusion-rule template" in out
    assert "-- subring correspondence" in out


def test_analyze_pointed_skips_transitivity(tmp_path, capsys, svect):
    rc = run_command(["analyze", write_doc(tmp_path, "p.ring", svect)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "pointed ring: transitivity analysis not applicable" in out
    assert "transitive type" not in out


def test_analyze_reports_orbit_count_when_not_transitive(tmp_path, capsys):
    rc = run_command(["analyze", write_doc(tmp_path, "s.ring", su2_ring(6))])
    out = capsys.readouterr().out
    assert rc == 0, "analyze only fails on broken invariants, not shape"
    assert "not transitive: 3 orbits" in out


def test_family_writes_parseable_document(capsys):
    rc = run_command(["family", "near_group", "--group", "Z2", "--k", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    ring, prem = parse_document(out)
    assert ring.rank == 3 and prem is None
    assert ring.N[2, 2, 2] == 2, "requested multiplicity should appear in N"


def test_family_unknown_name_lists_both_catalogs(capsys):
    rc = run_command(["family", "does_not_exist"])
    err = capsys.readouterr().err
    assert rc == 2
    assert "error [INVALID_DESCRIPTOR]" in err
    assert "near_group" in err and "yang_lee_standard" in err, (
        "the error should advertise plain and braided family names: %r" % err)


def test_family_braided_then_verify_passes(tmp_path, capsys):
    path = str(tmp_path / "ising.ring")
    assert run_command(["family", "ising_standard", "-o", path]) == 0
    ring, prem = parse_document((tmp_path / "ising.ring").read_text())
    assert prem is not None, "braided families should carry premodular data"
    rc = run_command(["verify", path])
    out = capsys.readouterr().out
    assert rc == 0
    assert "-- braided data" in out
    assert "NONDEGENERATE" in out
    assert out.rstrip().endswith("RESULT: PASS")


def test_family_psl2_twisted_verify(tmp_path, capsys):
    path = str(tmp_path / "psl2.ring")
    assert run_command(["family", "psl2_level8", "--t", "3", "-o", path]) == 0
    rc = run_command(["verify", path])
    out = capsys.readouterr().out
    assert rc == 0
    assert "SLIGHTLY_DEGENERATE" in out
    assert "-- slightly degenerate structure" in out
    assert out.rstrip().endswith("RESULT: PASS")


def test_product_of_plain_documents(tmp_path, capsys, ising, yang_lee):
    a = write_doc(tmp_path, "a.ring", ising)
    b = write_doc(tmp_path, "b.ring", yang_lee)
    out_path = tmp_path / "prod.ring"
    rc = run_command(["product", a, b, "-o", str(out_path)])
    assert rc == 0
    ring, prem = parse_document(out_path.read_text())
    assert ring.rank == 6 and prem is None


def test_product_keeps_braided_data(tmp_path, capsys):
    a = str(tmp_path / "yl.ring")
    b = str(tmp_path / "sv.ring")
    run_command(["family", "yang_lee_standard", "-o", a])
    run_command(["family", "svect", "-o", b])
    capsys.readouterr()
    rc = run_command(["product", a, b])
    out = capsys.readouterr().out
    assert rc == 0
    ring, prem = parse_document(out)
    assert ring.rank == 4
    assert prem is not None, "product of two braided documents stays braided"


def test_enumerate_writes_numbered_files(tmp_path, capsys):
    outdir = tmp_path / "rings"
    rc = run_command(["enumerate", "--max-group", "2", "--max-k", "1",
                      "-o", str(outdir)])
    out = capsys.readouterr().out
    assert rc == 0
    assert f"wrote 6 rings to {outdir}" in out
    files = sorted(p.name for p in outdir.iterdir())
    assert files == [f"ring-{i:04d}.ring" for i in range(1, 7)]
    for name in files:
        assert run_command(["validate", str(outdir / name)]) == 0, (
            "every enumerated ring should validate: %s" % name)
    capsys.readouterr()


def test_enumerate_stdout_emits_one_document_per_ring(capsys):
    rc = run_command(["enumerate", "--max-group", "2", "--max-k", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.count('"format_version"') == 6


def test_verify_plain_ring(tmp_path, capsys, ising):
    rc = run_command(["verify", write_doc(tmp_path, "i.ring", ising)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "-- axioms" in out
    assert "-- fusion-rule template" in out
    assert "braided data" not in out, "no premodular block, no braided section"
    assert out.rstrip().endswith("RESULT: PASS")


def test_verify_rejects_inconsistent_braided_block(tmp_path, capsys):
    doc = json.loads((lambda p: (run_command(["family", "ising_standard",
                                              "-o", str(p)]), p.read_text())[1])(
        tmp_path / "i.ring"))
    doc["premodular"]["theta"][1] = [1.0, 0.0]  # flip the fermion twist
    path = tmp_path / "bad.ring"
    path.write_text(json.dumps(doc), encoding="utf-8")
    capsys.readouterr()
    rc = run_command(["verify", str(path)])
    out = capsys.readouterr().out
    assert rc == 1
    assert "FAIL inconsistent data:" in out


def test_help_and_unknown_command_exit_codes(capsys):
    assert run_command(["--help"]) == 0
    assert run_command(["frobnicate"]) == 2
    capsys.readouterr()
