import json

import pytest

from flagsub.cli import main

HEX = {
    "labels": ["a", "b", "c", "d", "e", "f"],
    "facets": [
        ["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "f"], ["f", "a"]
    ],
}


@pytest.fixture
def hex_path(tmp_path):
    path = tmp_path / "hex.json"
    path.write_text(json.dumps(HEX))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.lstrip().startswith("{") else out)


def test_hvec(capsys, hex_path):
    code, doc = run(capsys, "hvec", hex_path)
    assert code == 0
    assert doc == {"f": [1, 6, 6], "h": [1, 4, 1]}


def test_gamma(capsys, hex_path):
    code, doc = run(capsys, "gamma", hex_path)
    assert code == 0
    assert doc == {"d": 2, "gamma": [1, 2]}


def test_gamma_reports_symmetry_failure(capsys, tmp_path):
    path = tmp_path / "path.json"
    path.write_text(json.dumps({"labels": ["a", "b"], "facets": [["a", "b"]]}))
    code, doc = run(capsys, "gamma", str(path))
    assert code == 0
    assert doc["symmetry_failure"]["pair"] == [0, 2]


def test_classify(capsys, hex_path):
    for field in ("gf2", "q", "gf3"):
        code, doc = run(capsys, "classify", hex_path, "--field", field)
        assert code == 0
        assert doc["verdict"] == "sphere"
        assert doc["dimension"] == 1
        assert doc["betti"] == {"-1": 0, "0": 0, "1": 1}


def test_classify_ball_reports_boundary(capsys, tmp_path):
    path = tmp_path / "tri.json"
    path.write_text(
        json.dumps({"labels": ["a", "b", "c"], "facets": [["a", "b", "c"]]})
    )
    code, doc = run(capsys, "classify", str(path))
    assert code == 0
    assert doc["verdict"] == "ball"
    assert doc["boundary_facets"] == [["a", "b"], ["a", "c"], ["b", "c"]]


def test_stellar_barycentric_compose_pipeline(capsys, tmp_path, hex_path):
    code, sub = run(capsys, "stellar", hex_path, "--face", "a,b")
    assert code == 0
    assert len(sub["total"]["labels"]) == 7
    outer = tmp_path / "outer.json"
    outer.write_text(json.dumps(sub))

    code, inner = run(
        capsys, "stellar", str(tmp_path / "outer.json"), "--face", "c,d"
    )
    # stellar expects a complex document, not a subdivision
    assert code == 3

    code, bary = run(capsys, "barycentric", "--vertices", "p,q,r")
    assert code == 0
    assert len(bary["total"]["labels"]) == 7


def test_local_h_and_gamma(capsys, tmp_path):
    code, bary = run(capsys, "barycentric", "--vertices", "p,q,r")
    sub = tmp_path / "bary.json"
    sub.write_text(json.dumps(bary))
    code, doc = run(capsys, "local-h", str(sub))
    assert code == 0 and doc == {"local_h": [0, 1, 1]}
    code, doc = run(capsys, "local-gamma", str(sub))
    assert code == 0
    assert doc["xi"] == [0, 1]
    assert doc["interior_stats"]["interior_vertices"] == 1


def test_check_subdivision(capsys, tmp_path):
    code, fx = run(capsys, "fixture", "ex-2.3b")
    sub = tmp_path / "fx.json"
    sub.write_text(json.dumps(fx))
    code, doc = run(capsys, "check-subdivision", str(sub))
    assert code == 0
    assert doc["homology_subdivision"] is True
    assert doc["quasi_geometric"] is True
    assert doc["vertex_induced"] is False
    code, fast = run(capsys, "check-subdivision", str(sub), "--fast", "--field", "q")
    assert fast["quasi_geometric"] is True


def test_sigma_map_and_ball_to_sphere(capsys, tmp_path, hex_path):
    code, doc = run(capsys, "sigma-map", hex_path, "--facet", "a,b", "--verify")
    assert code == 0
    assert sorted(doc["base"]["labels"]) == ["u1", "u2", "v1", "v2"]

    code, bary = run(capsys, "barycentric", "--vertices", "p,q,r")
    sub = tmp_path / "bary.json"
    sub.write_text(json.dumps(bary))
    code, doc = run(capsys, "ball-to-sphere", str(sub))
    assert code == 0
    assert len(doc["total"]["labels"]) == 10


def test_generate_is_reproducible(capsys):
    code, a = run(capsys, "generate", "--dim", "2", "--steps", "3", "--seed", "5")
    code, b = run(capsys, "generate", "--dim", "2", "--steps", "3", "--seed", "5")
    assert a == b
    assert a["spec"]["moves"] == ["edge-subdivide"]
    assert "rng" in a


def test_generate_size_guard(capsys):
    code, _ = run(capsys, "generate", "--dim", "15", "--steps", "0", "--seed", "0")
    assert code == 3


def test_suite_exit_codes_and_tsv(capsys, tmp_path):
    out = tmp_path / "report.json"
    code = main(
        [
            "suite",
            "--checks",
            "gal,local-gamma,local-h-symmetry,h-decomposition",
            "--count",
            "4",
            "--dim",
            "2",
            "--seed",
            "3",
            "--out",
            str(out),
        ]
    )
    tsv = capsys.readouterr().out
    assert code == 0
    lines = tsv.strip().splitlines()
    assert lines[0] == "check\ttier\tpass\tfail\tskipped"
    assert len(lines) == 5
    report = json.loads(out.read_text())
    assert report["summary"]["gal"]["pass"] == 4
    assert report["checks"]["h-decomposition"]["tier"] == "theorem"
    assert len(report["reports"]) == 4


def test_malformed_input_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["hvec", str(bad)]) == 3
    missing_keys = tmp_path / "mk.json"
    missing_keys.write_text(json.dumps({"labels": ["a"]}))
    assert main(["hvec", str(missing_keys)]) == 3
    assert main(["suite", "--checks", "bogus", "--count", "1"]) == 3


def test_fixture_names_are_wired(capsys):
    for name in ("ex-2.3a", "ex-2.3b", "ex-2.3c", "rem-4.5"):
        code, doc = run(capsys, "fixture", name)
        assert code == 0
        assert {"base", "total", "carrier"} <= doc.keys()
