import csv
import json

import pytest

from parafock import presets as P
from parafock.algebra import Affine, AlgebraSpec
from parafock.cli import main
from parafock.presets import PresetId
from parafock.report import SECTIONS, build_report, dumps, emit, load, parse_rational


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def km_report():
    report, code = build_report(P.klein_marshalek(3, max_n=2), PresetId("klein-marshalek"))
    assert code == 0
    return report


def test_report_has_every_section(km_report):
    assert set(km_report["sections"]) == set(SECTIONS)
    assert all(s["status"] == "ok" for s in km_report["sections"].values())
    assert km_report["schema_version"] == 1


def test_km_dimension_rows(km_report):
    dims = km_report["sections"]["dimensions"]
    assert list(zip(dims["N"], dims["D"])) == [(0, 1), (1, 3), (2, 0)]


def test_rationals_are_strings(km_report):
    (rec,) = [r for r in km_report["sections"]["haldane"]["records"] if (r["n"], r["k"]) == (1, 1)]
    assert rec["g"] == "3/1" and parse_rational(rec["g"]) == 3


def test_report_is_deterministic():
    spec = P.palev_fermi(3, 2, max_n=3)
    a, _ = build_report(spec, PresetId("palev-fermi", {"p": 2}))
    b, _ = build_report(spec, PresetId("palev-fermi", {"p": 2}))
    assert dumps(a) == dumps(b)
    assert "seconds" not in dumps(a)


def test_timing_is_opt_in():
    report, _ = build_report(P.quon(2, 0, max_n=2), sections=["dimensions"], timing=True)
    assert "seconds" in report["sections"]["dimensions"]


def test_empty_section_list():
    report, code = build_report(P.quon(2, 0), sections=[])
    assert report["sections"] == {} and code == 0


def test_okubo_positivity_entry():
    report, _ = build_report(P.okubo(2, 2, max_n=2), PresetId("okubo", {"p": 2}), ["positivity"])
    pos = report["sections"]["positivity"]
    assert pos["note"] == "indefinite by design" and not pos["all_psd"]
    (bad,) = [b for b in pos["blocks"] if b["verdict"] == "INDEFINITE"]
    assert bad["full"] and bad["witness_value"] == "-1/1"
    assert bad["witness_state"] == {"1,1": "1/1"}


def test_json_round_trip(tmp_path, km_report):
    (path,) = emit(km_report, "json", tmp_path / "r.json")
    assert load(path) == km_report
    assert path.read_text() == dumps(km_report)


def test_csv_emission(tmp_path, km_report):
    written = emit(km_report, "csv", tmp_path / "out")
    names = {p.name for p in written}
    assert {"dimensions.csv", "totals.csv", "haldane.csv", "positivity.csv",
            "diagnostics.csv", "verify.csv", "report.json", "manifest.csv"} == names
    with open(tmp_path / "out" / "totals.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert [(r["N"], r["D"]) for r in rows] == [("0", "1"), ("1", "3"), ("2", "0")]
    with open(tmp_path / "out" / "manifest.csv") as fh:
        manifest = {r["file"]: r["rows"] for r in csv.DictReader(fh)}
    assert manifest["totals.csv"] == "3"
    meta = load(tmp_path / "out" / "report.json")
    assert meta["section_status"]["verify"] == "ok"


def test_emit_rejects_unknown_format(tmp_path, km_report):
    with pytest.raises(ValueError):
        emit(km_report, "xml", tmp_path / "x")


# -- command line --------------------------------------------------------------

def test_cli_report_stdout(capsys):
    code, out, _ = run(capsys, "report", "--preset", "palev-fermi", "--p", "2", "--modes", "4",
                       "--max-n", "4", "--sections", "dimensions")
    assert code == 0
    assert json.loads(out)["sections"]["dimensions"]["D"] == [1, 4, 6, 0, 0]


def test_cli_report_is_byte_identical(capsys, tmp_path):
    args = ["report", "--preset", "quon", "--q", "1/2", "--modes", "2", "--max-n", "3"]
    run(capsys, *args, "--out", str(tmp_path / "a.json"))
    run(capsys, *args, "--out", str(tmp_path / "b.json"))
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_cli_report_csv(capsys, tmp_path):
    code, _, _ = run(capsys, "report", "--preset", "klein-marshalek", "--modes", "3", "--max-n", "2",
                     "--format", "csv", "--out", str(tmp_path / "km"))
    assert code == 0 and (tmp_path / "km" / "manifest.csv").exists()


@pytest.mark.parametrize("argv", [
    ["report", "--preset", "quon", "--modes", "2"],
    ["report", "--preset", "palev-fermi", "--p", "0", "--modes", "2"],
    ["report", "--preset", "quon", "--q", "x", "--modes", "2"],
    ["report", "--preset", "quon", "--q", "0", "--modes", "2", "--sections", "bogus"],
    ["report", "--preset", "quon", "--q", "0"],
    ["gram", "--preset", "quon", "--q", "0", "--indices", "1,a"],
    ["gram", "--preset", "quon", "--q", "0", "--indices", "1,1"],
])
def test_cli_bad_arguments_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_cli_unknown_preset_is_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        main(["report", "--preset", "nope", "--modes", "2"])
    assert info.value.code == 2


def test_cli_guard_exit_3(capsys, tmp_path):
    out = tmp_path / "g.json"
    code, _, _ = run(capsys, "report", "--preset", "okubo", "--p", "2", "--modes", "11",
                     "--max-n", "3", "--sections", "positivity", "--out", str(out))
    assert code == 3
    assert load(out)["sections"]["positivity"]["status"] == "skipped"
    code, _, err = run(capsys, "gram", "--preset", "quon", "--q", "0", "--indices", "1,2,3", "--max-n", "2")
    assert code == 3 and "guard" in err


def _asymmetric_spec(tmp_path):
    spec = AlgebraSpec(M=2, f=Affine(1), h=Affine(1), q=[[0, 0], [0, 0]],
                       y=[[0, 1], [0, 0]], z=[[0, 0], [0, 0]], max_n=2)
    path = tmp_path / "spec.json"
    path.write_text(spec.to_json())
    return path


def test_cli_symmetry_violation_exit_4(capsys, tmp_path):
    path = _asymmetric_spec(tmp_path)
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "report", "--spec", str(path), "--sections", "dimensions", "--out", str(out))
    assert code == 4
    diag = load(out)["sections"]["diagnostics"]
    assert diag["symmetry"] is False and len(diag["symmetry_violation"]["pair"]) == 2


def test_cli_spec_file(capsys, tmp_path):
    path = tmp_path / "pf.json"
    path.write_text(P.palev_fermi(4, 2, max_n=4).to_json())
    code, out, _ = run(capsys, "report", "--spec", str(path), "--sections", "dimensions")
    assert code == 0
    doc = json.loads(out)
    assert doc["preset"] is None and doc["sections"]["dimensions"]["D"] == [1, 4, 6, 0, 0]


def test_cli_unreadable_spec(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "report", "--spec", str(bad))[0] == 2
    assert run(capsys, "report", "--spec", str(tmp_path / "missing.json"))[0] == 2


def test_cli_gram(capsys):
    code, out, _ = run(capsys, "gram", "--preset", "quon", "--q", "1/2", "--indices", "1,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["matrix"] == [["1/1", "1/2"], ["1/2", "1/1"]]
    assert doc["permutations"] == ["1,2", "2,1"]
    assert doc["decomposition"] == {"c": {"1,2": "1/1", "2,1": "1/2"}, "residual": False}
    assert doc["rank"] == 2 and doc["verdict"] == "PSD" and doc["left_invariance"]


def test_cli_gram_indefinite(capsys):
    code, out, _ = run(capsys, "gram", "--preset", "quon", "--q", "2", "--indices", "1,2")
    doc = json.loads(out)
    assert doc["verdict"] == "INDEFINITE" and doc["witness_value"] == "-2/1"


def test_cli_verify(capsys, tmp_path):
    out = tmp_path / "v.json"
    code, _, _ = run(capsys, "verify", "--preset", "palev-fermi", "--p", "3", "--modes", "3", "--out", str(out))
    assert code == 0
    v = load(out)["verify"]
    assert v["triple_relation"]["holds"] and v["transition_expansion"]["holds"]
    assert v["triple_relation"]["x"] == "-1/3"


def test_cli_verify_skips_without_expansion(capsys):
    code, out, _ = run(capsys, "verify", "--preset", "okubo", "--p", "2", "--modes", "2")
    v = json.loads(out)["verify"]
    assert code == 0 and v["transition_expansion"]["status"] == "skipped"
    assert v["triple_relation"]["holds"]


def test_cli_verify_affine_preset(capsys):
    code, out, _ = run(capsys, "verify", "--preset", "affine", "--x", "1/3", "--y=-2/5",
                       "--z", "1/2", "--q", "3/4", "--modes", "2")
    assert code == 0 and json.loads(out)["verify"]["triple_relation"]["holds"]


def test_cli_palev_super(capsys):
    code, out, _ = run(capsys, "report", "--preset", "palev-super", "--mb", "1", "--mf", "1",
                       "--p", "2", "--max-n", "3", "--sections", "dimensions,verify")
    doc = json.loads(out)
    assert code == 0
    assert doc["sections"]["dimensions"]["mode"]["2"] == "multisets"
    assert doc["sections"]["verify"]["transition_expansion"]["holds"]
