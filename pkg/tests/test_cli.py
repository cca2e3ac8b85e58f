import json

import pytest

from biplot.cli import main
from biplot.data import case_csv


@pytest.fixture
def case1_csv(tmp_path):
    path = tmp_path / "case1.csv"
    path.write_text(case_csv(1), encoding="utf-8")
    return path


def test_analyze_case1(tmp_path, case1_csv, capsys):
    out = tmp_path / "r.json"
    code = main(["analyze", str(case1_csv), "--type", "jk",
                 "--scale", "zscore", "--json", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert abs(doc["quality"]["qr_overall"] - 0.899) <= 0.03
    assert "qr_overall" in capsys.readouterr().out


def test_analyze_ragged_csv_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text(",a,b\nr1,1,2\nr2,3\nr3,5,6\n", encoding="utf-8")
    code = main(["analyze", str(bad)])
    assert code == 2
    assert "r2" in capsys.readouterr().err


def test_analyze_type_gamma_mutually_exclusive(case1_csv, capsys):
    code = main(["analyze", str(case1_csv), "--type", "jk", "--gamma", "0.3"])
    assert code == 2
    assert "mutually exclusive" in capsys.readouterr().err


def test_analyze_gamma_out_of_range(case1_csv, capsys):
    assert main(["analyze", str(case1_csv), "--gamma", "1.5"]) == 2


def test_analyze_missing_file(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.csv")]) == 2


def test_analyze_constant_column_zscore_exits_2(tmp_path, capsys):
    bad = tmp_path / "const.csv"
    bad.write_text(",a,b\nr1,5,1\nr2,5,2\nr3,5,3\n", encoding="utf-8")
    assert main(["analyze", str(bad), "--scale", "zscore"]) == 2


def test_case_json_values(tmp_path):
    out2 = tmp_path / "c2.json"
    out3 = tmp_path / "c3.json"
    assert main(["case", "2", "--json", str(out2)]) == 0
    assert main(["case", "3", "--json", str(out3)]) == 0
    assert abs(json.loads(out2.read_text())["quality"]["qr_overall"] - 0.879) <= 0.03
    assert abs(json.loads(out3.read_text())["quality"]["qr_overall"] - 0.722) <= 0.03


def test_case_bad_id_exits_2():
    assert main(["case", "4"]) == 2


def test_case_dump_then_analyze_round_trip(tmp_path):
    dump = tmp_path / "t.csv"
    assert main(["case", "1", "--dump-csv", str(dump)]) == 0
    direct = tmp_path / "direct.json"
    via_csv = tmp_path / "via_csv.json"
    assert main(["case", "1", "--json", str(direct)]) == 0
    assert main(["analyze", str(dump), "--type", "jk", "--scale", "zscore",
                 "--json", str(via_csv)]) == 0
    a = json.loads(direct.read_text())
    b = json.loads(via_csv.read_text())
    # dataset names differ (file stem vs fixture name); numbers must not
    a["dataset"]["name"] = b["dataset"]["name"] = ""
    assert a == b


def test_cli_outputs_are_deterministic(tmp_path, case1_csv):
    j1, j2 = tmp_path / "a.json", tmp_path / "b.json"
    s1, s2 = tmp_path / "a.svg", tmp_path / "b.svg"
    for j, s in ((j1, s1), (j2, s2)):
        assert main(["analyze", str(case1_csv), "--type", "jk",
                     "--json", str(j), "--svg", str(s)]) == 0
    assert j1.read_bytes() == j2.read_bytes()
    assert s1.read_bytes() == s2.read_bytes()


def test_compare_all_methods(tmp_path, case1_csv, capsys):
    out = tmp_path / "panels"
    code = main(["compare", str(case1_csv), "--methods", "jk,pca,mds,ca",
                 "--out", str(out)])
    assert code == 0
    svgs = sorted(p.name for p in out.glob("*.svg"))
    assert len(svgs) == 4
    jsons = sorted(p.name for p in out.glob("*.json"))
    assert len(jsons) == 5  # four methods + summary
    summary = json.loads(next(out.glob("*_summary.json")).read_text())
    assert {m["method"] for m in summary["methods"]} == {"jk", "pca", "mds", "ca"}
    for m in summary["methods"]:
        assert 0 < m["share_2d"] <= 1


def test_compare_jk_only_matches_analyze(tmp_path, case1_csv):
    out = tmp_path / "only"
    assert main(["compare", str(case1_csv), "--methods", "jk",
                 "--out", str(out)]) == 0
    jk_json = next(p for p in out.glob("*.json") if "summary" not in p.name)
    direct = tmp_path / "direct.json"
    assert main(["analyze", str(case1_csv), "--type", "jk",
                 "--json", str(direct)]) == 0
    assert json.loads(jk_json.read_text()) == json.loads(direct.read_text())


def test_compare_unknown_method_exits_2(case1_csv, capsys):
    assert main(["compare", str(case1_csv), "--methods", "jk,tsne"]) == 2
    assert "tsne" in capsys.readouterr().err


def test_compare_ca_on_negative_table_exits_2(tmp_path, capsys):
    bad = tmp_path / "neg.csv"
    bad.write_text(",a,b\nr1,1,2\nr2,3,-1\nr3,5,6\n", encoding="utf-8")
    assert main(["compare", str(bad), "--methods", "ca", "--out", str(tmp_path)]) == 2
    assert "nonnegative" in capsys.readouterr().err
