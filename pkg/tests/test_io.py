import json
from io import StringIO

import pytest
from pydantic import ValidationError
from rich.console import Console

from autgadgets.analysis.automorph import check_automorphism
from autgadgets.io.formatter import (
    ReportOutput,
    RunManifest,
    digest_input,
    format_output,
    generate_summary,
    save_output,
)
from autgadgets.io.parser import (
    LiftFile,
    RunSettings,
    build_code,
    build_graph,
    format_f2m,
    format_graph,
    format_orientation,
    load_f2m,
    parse_codeword,
    parse_f2m,
    parse_graph,
    parse_orientation,
    spec_generators,
    spec_graph,
)
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.visualizer.html import HTMLVisualizer
from autgadgets.visualizer.terminal import TerminalVisualizer, is_matrix, plain_text


@pytest.fixture
def output():
    manifest = RunManifest.build(["code", "cycle:k4"], ["cycle:k4"], seed=5)
    manifest.elapsed = 0.25
    reports = {"code": {"n": 6, "k": 3, "H": ["111000", "100110"], "exact": True}}
    return format_output("code", "cycle:K4", manifest, reports)


@pytest.fixture
def lift_file(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"base": ["11"], "shifts": [[[0], [1]]], "ell": 3, "name": "pair"}))
    return path


def test_f2m_text():
    m = parse_f2m("# checks\n2 3\n101\n\n010\n")
    assert m == BitMatrix.from_rows(["101", "010"])
    assert format_f2m(m) == "2 3\n101\n010\n"
    assert parse_f2m("0 4\n").shape == (0, 4)


@pytest.mark.parametrize(
    "text",
    ["", "2\n10\n01\n", "2 2\n10\n", "2 2\n10\n0a\n", "2 2\n10\n011\n"],
)
def test_f2m_errors(text):
    with pytest.raises(ValueError):
        parse_f2m(text)


def test_missing_files(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_f2m(tmp_path / "absent.f2m")
    with pytest.raises(FileNotFoundError):
        build_code(f"lift:{tmp_path / 'absent.json'}")


def test_graph_text(k4):
    text = format_graph(k4)
    assert text.splitlines()[:2] == ["4", "0 1"]
    again = parse_graph(text, "K4")
    assert again.edges == k4.edges
    with pytest.raises(ValueError):
        parse_graph("3\n0 1 2\n")


def test_orientation_and_codeword_text(k4):
    o = parse_orientation("f\n.\nb\n.\nf\n.\n", k4)
    assert o.to_symbols() == "f.b.f."
    assert format_orientation(o) == "f\n.\nb\n.\nf\n.\n"
    assert parse_codeword("1010 10", 6) == [1, 0, 1, 0, 1, 0]
    with pytest.raises(ValueError):
        parse_codeword("1012", 4)


@pytest.mark.parametrize(
    "spec, vertices, edges",
    [("k4", 4, 6), ("K2,3", 5, 6), ("k33", 6, 9), ("petersen", 10, 15), ("ring:5", 5, 5), ("path:4", 4, 3)],
)
def test_build_graph(spec, vertices, edges):
    g = build_graph(spec)
    assert (g.num_vertices, g.num_edges) == (vertices, edges)


def test_build_graph_errors(tmp_path):
    with pytest.raises(ValueError):
        build_graph("cube")
    with pytest.raises(ValueError):
        build_graph("ring:x")
    with pytest.raises(FileNotFoundError):
        build_graph(f"graph:{tmp_path / 'none.txt'}")


def test_graph_file(tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text("3\n0 1\n1 2\n0 2\n")
    code = build_code(f"cycle:graph:{path}")
    assert (code.n, code.k) == (3, 1)


@pytest.mark.parametrize(
    "spec, n, k",
    [
        ("rep:5", 5, 1),
        ("cycle:k4", 6, 3),
        ("cycle:k4^T", 4, 1),
        ("ga:z7:1+x+x3", 7, 3),
        ("ga:d3:1+r+sr^-1", 6, None),
        ("hamming:3", 7, 4),
        ("simplex:3", 7, 3),
        ("rm:1,3", 8, 4),
        ("rm*:1,3", 7, 3),
    ],
)
def test_build_code(spec, n, k):
    code = build_code(spec)
    assert code.n == n
    if k is not None:
        assert code.k == k


def test_build_code_names_and_errors():
    assert build_code("ga:z7:1+x+x3").name == "ga:Z7:1+x+x3"
    assert build_code("cycle:k4").name == "cycle:K4"
    for spec in ("golay:23", "rep:x", "rm:3", "ga:q5:1+x"):
        with pytest.raises(ValueError):
            build_code(spec)


def test_f2m_code(tmp_path):
    path = tmp_path / "h.f2m"
    path.write_text("2 3\n110\n011\n")
    code = build_code(f"f2m:{path}")
    assert code.name == "h"
    assert (code.n, code.k) == (3, 1)


def test_lift_file(lift_file):
    code = build_code(f"lift:{lift_file}")
    assert code.name == "pair"
    assert (code.n, code.m) == (6, 3)
    (shift,) = spec_generators(f"lift:{lift_file}")
    assert shift.images == (1, 2, 0, 4, 5, 3)
    assert check_automorphism(code, shift) is not None


def test_lift_file_validation():
    with pytest.raises(ValidationError):
        LiftFile.model_validate({"base": [], "shifts": [], "ell": 2})
    with pytest.raises(ValidationError):
        LiftFile.model_validate({"base": ["12"], "shifts": [[None, None]], "ell": 2})
    with pytest.raises(ValidationError):
        LiftFile.model_validate({"base": ["1"], "shifts": [[[0]]], "ell": 0})


def test_group_algebra_generators():
    code = build_code("ga:z7:1+x+x3")
    generators = spec_generators("ga:z7:1+x+x3")
    assert len(generators) == 6
    assert all(check_automorphism(code, g) is not None for g in generators)
    assert spec_generators("hamming:3") == []
    assert spec_generators("ga:z7:1+x+x3^T") == []


def test_spec_graph():
    assert spec_graph("cycle:k4").num_vertices == 4
    assert spec_graph("cycle:k4^T") is None
    assert spec_graph("hamming:3") is None


def test_run_settings():
    s = RunSettings(format=" JSON ")
    assert s.format == "json"
    assert s.workers >= 1
    with pytest.raises(ValidationError):
        RunSettings(format="pdf")
    with pytest.raises(ValidationError):
        RunSettings(cap=0)


def test_digest_input(tmp_path):
    path = tmp_path / "h.f2m"
    path.write_text("1 2\n11\n")
    assert digest_input(f"f2m:{path}") == digest_input(f"f2m:{path}^T")
    assert digest_input(f"f2m:{path}") != digest_input("cycle:k4")
    assert len(digest_input("cycle:k4")) == 64


def test_manifest_timing_is_opt_in(output):
    assert "elapsed_s" not in output.to_dict()["manifest"]
    assert output.to_dict(timing=True)["manifest"]["elapsed_s"] == 0.25
    assert output.manifest.seed == 5
    assert list(output.manifest.inputs) == ["cycle:k4"]


def test_save_output(output, tmp_path):
    path = save_output(output, tmp_path / "reports")
    assert path.name == "code_cycle_K4.json"
    text = path.read_text()
    assert text.endswith("\n")
    data = json.loads(text)
    assert data["sections"]["code"]["k"] == 3
    assert data["certified"] is True


def test_generate_summary(output):
    summary = generate_summary(output)
    assert "CODE: cycle:K4" in summary
    assert "[code]" in summary
    assert "H: 111000 / 100110" in summary
    assert "All reported values certified" in summary
    output.certified = False
    assert "uncertified" in generate_summary(output)


def test_html_report(output):
    html = HTMLVisualizer(RunSettings(cap=4)).render_to_string(output)
    assert "<h1>code: cycle:K4</h1>" in html
    assert "cap=4" in html
    assert "111000" in html
    assert "All reported values certified" in html


def test_terminal_report(output, tmp_path):
    console = Console(file=StringIO(), width=120, record=True)
    TerminalVisualizer(RunSettings(), console).visualize(output)
    text = console.export_text()
    assert "code: cycle:K4" in text
    assert "100110" in text
    assert "All reported values certified" in text
    path = tmp_path / "report.txt"
    TerminalVisualizer(console=console).save(output, path)
    assert "cycle:K4" in path.read_text()


def test_cell_helpers():
    assert is_matrix(["101", "010"])
    assert not is_matrix([])
    assert not is_matrix(["L1,1"])
    assert plain_text({"a": [1, None]}) == "{a: [1, -]}"
