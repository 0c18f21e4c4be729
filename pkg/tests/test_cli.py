import json
from fractions import Fraction

import pytest

from slice_lab import cli
from slice_lab.catalog import CATALOG, CatalogRow, run_catalog
from slice_lab.cli import main
from slice_lab.numbers import SurdValue


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_slice_json_1111(capsys):
    code, out, _ = run(capsys, "slice", "--normal", "1,1,1,1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["zonotope_verdict"] == "NotZonoid"
    assert data["witness"]["class"] == "Triangle"
    assert data["volume_exact"] == "4/3"
    assert data["facet_census"] == {"Triangle": 8}
    assert data["ball_bounds_ok"] is True
    assert data["face_at_t"]["class"] == "Triangle"
    assert abs(data["volume_float"] - float(SurdValue.parse(data["volume_exact"]))) <= 1e-12


def test_slice_json_is_exact_text(capsys):
    _, out, _ = run(capsys, "slice", "--normal", "2,1,1,1", "--section", "0,1/4", "--json")
    data = json.loads(out)
    for v in data["vertices"]:
        for c in v:
            assert isinstance(c, str)
            Fraction(c)
    assert SurdValue.parse(data["volume_exact"]) == SurdValue.parse("23/48*sqrt(7)")
    assert [row["level"] for row in data["sections"]] == ["0/1", "1/4"]
    for row in data["sections"]:
        SurdValue.parse(row["area"])


def test_slice_rational_normal_canonicalised(capsys):
    _, out, _ = run(capsys, "slice", "--normal", "1/2,1/2,1/2,1/2", "--json")
    assert json.loads(out)["normal"] == [1, 1, 1, 1]


def test_slice_3111(capsys):
    _, out, _ = run(capsys, "slice", "--normal", "3,1,1,1", "--json")
    data = json.loads(out)
    assert data["zonotope_verdict"] == "Zonotope"
    assert data["witness"] is None
    assert data["facet_census"] == {"Parallelogram": 6}


def test_slice_degenerate(capsys):
    _, out, _ = run(capsys, "slice", "--normal", "1,0,0,0", "--json")
    data = json.loads(out)
    assert data["degenerate"] is True
    assert data["zonotope_verdict"] == "DegenerateCube"
    assert data["volume_exact"] == "1"


def test_slice_high_dimension(capsys):
    code, out, _ = run(capsys, "slice", "--normal", "1,2,3,4,5", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["volume_exact"] is None and data["zonotope_verdict"] is None
    assert 1 <= data["volume_float"] <= 2 ** 0.5


def test_slice_table(capsys):
    code, out, _ = run(capsys, "slice", "--normal", "1,1,1,1", "--section", "0,1/2")
    assert code == 0
    assert "NotZonoid" in out and "4/3" in out and "section t=1/2" in out


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "slice", "--normal", "5,4,3,1", "--section", "1/3", "--json")
    _, second, _ = run(capsys, "slice", "--normal", "5,4,3,1", "--section", "1/3", "--json")
    assert first == second


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["slice", "--normal", "1,x"], "--normal"),
        (["slice", "--normal", "1"], "--normal"),
        (["slice", "--normal", "0,0"], "--normal"),
        (["slice", "--normal", "1,1", "--section", "a"], "--section"),
        (["integral", "--p", "1"], "--p"),
        (["integral", "--p", "4", "--tol", "1e-20"], "--tol"),
        (["slice", "--normal", "1,1,1", "--section", "1"], None),
    ],
)
def test_usage_errors(capsys, argv, flag):
    code, _, err = run(capsys, *argv)
    assert code == 2
    if flag:
        assert flag in err


def test_no_command_is_usage_error(capsys):
    assert run(capsys)[0] == 2


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    rows = json.loads(out)
    assert code == 0
    assert len(rows) == len(CATALOG)
    assert all(r["match"] for r in rows)
    first = rows[0]
    assert first["normal"] == [1, 1, 1, 1]
    assert (first["computed_verdict"], first["computed_face_class"]) == ("NotZonoid", "Triangle")
    by_normal = {tuple(r["normal"]): r for r in rows}
    assert by_normal[(2, 1, 1, 1)]["computed_face_class"] == "Pentagon"
    assert by_normal[(5, 2, 1, 1)]["computed_verdict"] == "Zonotope"


def test_catalog_thread_cap_does_not_change_output(capsys, monkeypatch):
    _, serial, _ = run(capsys, "catalog")
    monkeypatch.setenv("SLICE_LAB_THREADS", "4")
    _, threaded, _ = run(capsys, "catalog")
    assert serial == threaded


def test_catalog_mismatch_exit_code(capsys, monkeypatch):
    bad = CatalogRow("bogus", (1, 1, 1, 1), "parallelogram", "NotZonoid", "Triangle", False)
    monkeypatch.setattr(cli, "run_catalog", lambda: run_catalog() + [bad])
    assert run(capsys, "catalog")[0] == 1


def test_integral_p4(capsys):
    code, out, _ = run(capsys, "integral", "--p", "4")
    assert code == 0
    assert "0.6666667" in out and "0.7071" in out
    assert out.strip().endswith("false")


def test_integral_p2_equality(capsys):
    _, out, _ = run(capsys, "integral", "--p", "2", "--json")
    data = json.loads(out)
    assert data["equality"] is True
    assert f"{data['value']:.7f}" == "1.0000000"


def test_integral_normal(capsys):
    _, out, _ = run(capsys, "integral", "--normal", "1,1,1,1", "--tol", "1e-8")
    assert "1.33333333" in out


def test_census(capsys):
    _, out, _ = run(capsys, "census", "--normal", "2,1,1,1", "--json")
    data = json.loads(out)
    assert data["census"] == {"Triangle": 2, "Pentagon": 6}
    assert data["facet_count"] == 8


def test_census_needs_three_dimensions(capsys):
    code, _, err = run(capsys, "census", "--normal", "1,1,1")
    assert code == 2 and "error" in err


def test_project(capsys):
    _, out, _ = run(capsys, "project", "--normal", "1,1,1", "--json")
    data = json.loads(out)
    assert data["vertex_count"] == 6 and data["polygon_class"] == "Hexagon"
    _, out, _ = run(capsys, "project", "--normal", "1,1,1,1", "--json")
    data = json.loads(out)
    assert data["generator_count"] == 4 and data["zonotope_verdict"] == "Zonotope"
