import json

import pytest

from iconic import __version__
from iconic.algebras import small_fixtures
from iconic.base import terminal
from iconic.cli import CAP_ENV, build_parser, config_from_args, main
from iconic.pseudo import cocycle_bicategory
from iconic.wgraph import graph_from_edges, two_graph

SMALL = ["--max-cells", "2", "--max-three-cells", "4", "--exhaustive-three-cells", "4"]


@pytest.fixture
def files(tmp_path):
    docs = {
        "terminal": terminal().to_json(),
        "loop": graph_from_edges(("x",), {("x", "x"): 1}).to_json(),
        "twograph": two_graph(("x", "y"), {"f": ("x", "y"), "g": ("x", "y")}, {("f", "g"): 1}).to_json(),
        "cocycle": cocycle_bicategory().to_json(),
        "perturbed": cocycle_bicategory({(1, 1, 0): 1}).to_json(),
        "strict3": small_fixtures()[2].to_json(),
    }
    out = {}
    for name, doc in docs.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc))
        out[name] = str(p)
    (tmp_path / "broken.json").write_text("{not json")
    out["broken"] = str(tmp_path / "broken.json")
    return out


def invoke(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate_category(files, capsys):
    code, out = invoke(capsys, "validate", "--kind", "category", files["terminal"])
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass"
    assert doc["version"] == __version__ and doc["checked"] > 0 and doc["seed"] == 0


@pytest.mark.parametrize("kind,name,expected", [
    ("strict3", "strict3", 0),
    ("bicat", "cocycle", 0),
    ("bicat", "perturbed", 1),
    ("unbiased", "cocycle", 0),
    ("strict3", "terminal", 2),
    ("category", "broken", 2),
])
def test_validate_kinds(files, capsys, kind, name, expected):
    code, _ = invoke(capsys, "validate", "--kind", kind, files[name])
    assert code == expected


def test_violation_report_is_located(files, capsys):
    code, out = invoke(capsys, "validate", "--kind", "bicat", files["perturbed"])
    laws = {v["law"] for r in json.loads(out)["reports"] for v in r["violations"]}
    assert code == 1 and laws == {"pentagon"}


def test_missing_file(capsys):
    assert invoke(capsys, "validate", "/nonexistent/x.json")[0] == 2


def test_free_and_distributive(files, capsys):
    code, out = invoke(capsys, "free", files["loop"], "--max-cells", "3")
    assert code == 0 and json.loads(out)["bounds"]["max_cells"] == 3
    code, out = invoke(capsys, "distributive-check", files["twograph"], "--max-cells", "4")
    assert code == 0 and json.loads(out)["reports"][0]["checked"] > 0


def test_strictify_seeded_and_byte_identical(files, capsys):
    a = invoke(capsys, "strictify", files["cocycle"], "--seed", "7", "--samples", "10")
    b = invoke(capsys, "strictify", files["cocycle"], "--seed", "7", "--samples", "10")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["seed"] == 7
    assert invoke(capsys, "strictify", files["perturbed"])[0] == 1


def test_text_format(files, capsys):
    code, out = invoke(capsys, "validate", "--kind", "bicat", files["cocycle"], "--format", "text")
    assert code == 0 and out.startswith(f"iconic {__version__} validate: PASS")


def test_witness_small_bounds(capsys):
    code, out = invoke(capsys, "witness", "--group", "Z3", "--scalars", "Z3", "--bicharacter", "omega^{ab}", *SMALL)
    doc = json.loads(out)
    assert code == 0 and doc["witness_report"]["conclusive"]
    assert doc["bounds"]["max_three_cells"] == 4


def test_witness_exit_codes(capsys):
    assert invoke(capsys, "witness", "--group", "Z2", "--scalars", "Z2", *SMALL)[0] == 2
    assert invoke(capsys, "witness", "--bicharacter", "omega^{a}", *SMALL)[0] == 1
    assert invoke(capsys, "witness", "--group", "S3", *SMALL)[0] == 2
    assert invoke(capsys, "witness", "--cap", "20", *SMALL)[0] == 3


def test_enumerate(capsys):
    code, out = invoke(capsys, "enumerate", *SMALL)
    doc = json.loads(out)
    assert code == 0 and doc["enumeration"]["non_symmetric"] == 0


def test_bad_flags(capsys):
    assert main(["validate", "--max-cells", "0", "x.json"]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_env_overrides_cap_only():
    args = build_parser().parse_args(["enumerate"])
    assert config_from_args(args, {CAP_ENV: "123"}).cap == 123
    args = build_parser().parse_args(["enumerate", "--cap", "9"])
    assert config_from_args(args, {CAP_ENV: "123"}).cap == 9
    cfg = config_from_args(build_parser().parse_args(["enumerate"]), {CAP_ENV: "123", "ICONIC_MAX_CELLS": "1"})
    assert cfg.max_cells is None


def test_env_cap_reaches_run(monkeypatch, capsys):
    monkeypatch.setenv(CAP_ENV, "20")
    assert invoke(capsys, "enumerate", *SMALL)[0] == 3
