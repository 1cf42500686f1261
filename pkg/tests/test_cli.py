import json

import pytest

from autgadgets.main import EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION, build_parser, main


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_code_json(capsys):
    assert main(["-q", "--format", "json", "code", "cycle:k4"]) == EXIT_OK
    data = _json(capsys)
    assert data["command"] == "code"
    assert data["title"] == "cycle:K4"
    code = data["sections"]["code"]
    assert (code["n"], code["k"], code["d"]["value"]) == (6, 3, 3)
    assert data["manifest"]["argv"][-1] == "cycle:k4"
    assert "elapsed_s" not in data["manifest"]


def test_timing_flag(capsys):
    assert main(["-q", "--timing", "--format", "json", "code", "rep:3"]) == EXIT_OK
    assert "elapsed_s" in _json(capsys)["manifest"]


def test_bad_specification(capsys):
    assert main(["-q", "code", "golay:23"]) == EXIT_INPUT
    assert "Unknown code specification" in capsys.readouterr().err


def test_missing_file(capsys, tmp_path):
    assert main(["-q", "code", f"f2m:{tmp_path / 'none.f2m'}"]) == EXIT_INPUT


def test_group_enumeration(capsys):
    assert main(["-q", "--format", "json", "aut", "enumerate", "cycle:k4"]) == EXIT_OK
    group = _json(capsys)["sections"]["group"]
    assert group["order"] == 24
    assert group["complete"] is True


def test_group_closure_needs_generators(capsys):
    assert main(["-q", "aut", "close", "hamming:3"]) == EXIT_INPUT


def test_product_writes_files(capsys, tmp_path):
    code = main(["-q", "--format", "json", "-o", str(tmp_path), "product", "hgp", "rep:3", "rep:3"])
    assert code == EXIT_OK
    data = _json(capsys)
    assert data["sections"]["product"]["n"] == 13
    assert data["sections"]["product"]["k"] == 1
    assert len(list(tmp_path.glob("*.HX.f2m"))) == 1
    assert len(list(tmp_path.glob("*.HZ.f2m"))) == 1
    saved = list(tmp_path.glob("product_*.json"))
    assert len(saved) == 1
    assert json.loads(saved[0].read_text())["title"] == data["title"]


def test_gadget_lift(capsys):
    argv = ["-q", "--format", "json", "gadget", "lift", "hgp", "cycle:k4", "cycle:k4",
            "--which", "first", "--sigma", "(12)(56)", "--sigma", "(1463)(25)"]
    assert main(argv) == EXIT_OK
    sections = _json(capsys)["sections"]
    assert sections["gadget 1"]["permutation_only"] is True
    assert sections["group"]["logical_order"] == 24


def test_gadget_lift_rejects_non_automorphism(capsys):
    argv = ["-q", "gadget", "lift", "hgp", "cycle:k4", "cycle:k4", "--which", "first", "--sigma", "(15)(34)"]
    assert main(argv) == EXIT_INPUT


def test_wrong_arity(capsys):
    assert main(["-q", "product", "qc", "rep:3", "rep:3"]) == EXIT_INPUT


def test_kunneth_check(capsys):
    assert main(["-q", "--format", "json", "check", "kunneth", "hgp", "cycle:k4", "cycle:k4"]) == EXIT_OK
    kunneth = _json(capsys)["sections"]["kunneth"]
    assert kunneth["predicted"] == kunneth["k"] == 10


def test_sector_check(capsys):
    assert main(["-q", "--format", "json", "check", "sector", "hgp", "rep:3", "rep:3"]) == EXIT_OK
    assert _json(capsys)["sections"]["check"]["holds"] is True


def test_cup_verify(capsys):
    argv = ["-q", "--format", "json", "cup", "verify", "k4", "k4", "--row1", "1", "--row2", "1", "--sigma", "(12)(56)"]
    assert main(argv) == EXIT_OK
    sections = _json(capsys)["sections"]
    assert sorted(map(tuple, sections["cz"]["logical_cz"])) == [("L1,1", "R1,1"), ("R1,1", "L1,1")]
    assert "relabelled" in sections


def test_cup_orientation_file(capsys, tmp_path):
    odd = tmp_path / "odd.txt"
    odd.write_text("f.....\n")
    base = ["-q", "cup", "pairs", "k4", "k4", "--orient1", str(odd)]
    assert main(base) == EXIT_INPUT
    assert main(base + ["--allow-odd"]) == EXIT_OK
    assert main(["-q", "cup", "verify", "k4", "k4", "--row1", "9"]) == EXIT_INPUT


def test_html_output(capsys, tmp_path):
    assert main(["-q", "--format", "html", "-o", str(tmp_path), "code", "rep:3"]) == EXIT_OK
    pages = list(tmp_path.glob("*.html"))
    assert len(pages) == 1
    assert "All reported values certified" in pages[0].read_text()


def test_parser_requires_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["--format", "pdf", "code", "rep:3"])


def test_group_closure_of_petersen_cycle_code(capsys):
    assert main(["-q", "--format", "json", "aut", "close", "cycle:petersen"]) == EXIT_OK
    group = _json(capsys)["sections"]["group"]
    assert group["order"] == 120
    assert group["complete"] is False
    assert group["method"] == "graph-closure"


def test_group_closure_of_dihedral_code(capsys):
    assert main(["-q", "--format", "json", "aut", "close", "ga:d6:1+r+sr^-1"]) == EXIT_OK
    group = _json(capsys)["sections"]["group"]
    assert group["order"] >= 12
    assert group["method"] == "closure"
    assert len(group["generators"]) == 11
