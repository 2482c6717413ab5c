import json

import pytest

from kconvex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def comb3(tmp_path, capsys):
    path = tmp_path / "comb3.json"
    assert main(["gen", "comb", "--params", "k=3", "-o", str(path)]) == 0
    capsys.readouterr()
    return path


def test_stab_round_trip(capsys, comb3, tmp_path):
    svg = tmp_path / "w.svg"
    code, out, _ = run(capsys, "stab", str(comb3), "--svg", str(svg))
    assert code == 0
    assert json.loads(out)["stabbing_number"] == 6
    assert svg.read_text().startswith("<?xml")


def test_output_is_deterministic(capsys, comb3):
    first = run(capsys, "triangulate", str(comb3), "--stats")[1]
    second = run(capsys, "triangulate", str(comb3), "--stats")[1]
    assert first == second
    obj = json.loads(first)
    n = len(json.loads(comb3.read_text())["vertices"])
    assert len(obj["triangles"]) == n - 2
    assert "comparison_count" in obj


def test_kconvex_expect(capsys, comb3):
    code, out, _ = run(capsys, "kconvex", str(comb3), "--k", "2", "--expect")
    assert code == 1 and json.loads(out)["k_convex"] is False
    code, out, _ = run(capsys, "kconvex", str(comb3), "--k", "3", "--expect")
    assert code == 0 and json.loads(out)["k_convex"] is True


def test_recognize2(capsys, tmp_path):
    path = tmp_path / "pt.json"
    main(["gen", "pseudo_triangle", "--params", "a=3", "-o", str(path)])
    code, out, _ = run(capsys, "recognize2", str(path), "--expect")
    assert code == 0
    assert json.loads(out)["is_two_convex"] is True


def test_shape_error_on_non_two_convex(capsys, comb3):
    code, out, _ = run(capsys, "chains", str(comb3))
    assert code == 1
    assert "error" in json.loads(out)


def test_convex_subset_and_partition(capsys, tmp_path):
    path = tmp_path / "am.json"
    main(["gen", "amoeba", "--params", "k=3", "-o", str(path)])
    capsys.readouterr()
    code, out, _ = run(capsys, "convex-subset", str(path))
    assert code == 0 and len(json.loads(out)["subset"]) >= 3
    code, out, _ = run(capsys, "partition", str(path))
    assert code == 0 and json.loads(out)["parts"]


def test_reduce3sum(capsys, tmp_path):
    poly = tmp_path / "p2.json"
    code, out, _ = run(capsys, "reduce3sum", "--input", "-3,1,2", "--decide", "--emit-polygon", str(poly))
    obj = json.loads(out)
    assert code == 0 and obj["decision"] is True and obj["brute_force"] is True
    assert "vertices" in json.loads(poly.read_text())
    code, out, _ = run(capsys, "reduce3sum", "--input", "0,0,0")
    assert json.loads(out)["early_exit"]


def test_region_degree(capsys, tmp_path):
    sq = {"vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]}
    far = {"vertices": [["3", "0"], ["4", "0"], ["4", "1"], ["3", "1"]]}
    spec = tmp_path / "r.json"
    spec.write_text(json.dumps({"polygons": {"a": sq, "b": far}, "expr": ["union", "a", "b"]}))
    code, out, _ = run(capsys, "region-degree", str(spec), "--random-lines", "20")
    assert code == 0 and json.loads(out)["degree"] == 2
    spec.write_text(json.dumps({"polygons": {"a": sq}, "expr": ["union", "a", "zzz"]}))
    assert run(capsys, "region-degree", str(spec))[0] == 2


def test_helly(capsys):
    code, out, _ = run(capsys, "helly", "--m", "3", "--expect")
    assert code == 0 and json.loads(out)["ok"] is True


def test_ggp(capsys, tmp_path):
    fam = tmp_path / "q.json"
    main(["gen", "quad_row", "--params", "n=3", "-o", str(fam)])
    capsys.readouterr()
    svg = tmp_path / "q.svg"
    code, out, _ = run(capsys, "ggp", str(fam), "--render", str(svg))
    assert code == 0 and json.loads(out)["count"] == 8
    assert svg.exists()


def test_render(capsys, comb3, tmp_path):
    out_svg = tmp_path / "c.svg"
    code, out, _ = run(capsys, "render", str(comb3), "-o", str(out_svg), "--witness")
    assert code == 0 and "<line" in out_svg.read_text()


def test_input_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "stab", str(bad))[0] == 2
    bowtie = tmp_path / "bowtie.json"
    bowtie.write_text(json.dumps({"vertices": [[0, 0], [1, 1], [1, 0], [0, 1]]}))
    assert run(capsys, "stab", str(bowtie))[0] == 2
    assert run(capsys, "gen", "comb", "--params", "k=0")[0] == 2
    assert run(capsys, "reduce3sum", "--input", "a,b")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
