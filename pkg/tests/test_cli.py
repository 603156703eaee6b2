"""Command-line behavior: exit codes, document shapes, determinism."""

import json

import pytest

from fanoconic.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- exit codes -------------------------------------------------------------


def test_certificate_exits_zero(capsys):
    code, out, err = run_cli(capsys, "certificate", "--m", "2")
    assert code == 0
    assert "valid: True" in out
    assert err == ""


def test_rejects_m_below_two(capsys):
    code, out, err = run_cli(capsys, "certificate", "--m", "1")
    assert code == 2
    assert "error:" in err


def test_rejects_garbage_class(capsys):
    code, out, err = run_cli(capsys, "baselocus", "--m", "2", "--class", "2X+1")
    assert code == 2
    assert "error:" in err


def test_rejects_missing_subcommand(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_rejects_unknown_subcommand(capsys):
    assert main(["frobnicate", "--m", "2"]) == 2
    capsys.readouterr()


def test_rejects_bad_sample_count(capsys):
    code, out, err = run_cli(capsys, "verify", "--m", "2", "--samples", "0")
    assert code == 2
    assert "samples" in err


def test_rejects_bad_coeff_range(capsys):
    code, out, err = run_cli(
        capsys, "verify", "--m", "2", "--samples", "1", "--coeff-range", "0"
    )
    assert code == 2


# -- documents --------------------------------------------------------------


def test_certificate_json(capsys):
    code, out, _ = run_cli(capsys, "certificate", "--m", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["m"] == 4
    assert doc["dims"]["dim_X"] == 15
    assert doc["valid"] is True
    assert len(doc["checks"]) == 36


def test_h0_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "h0", "--m", "2", "--class", "D")
    assert code == 0
    assert "h0(1D+0H) = 421" in out
    code, out, _ = run_cli(
        capsys, "h0", "--m", "2", "--class", "D", "--format", "json"
    )
    assert json.loads(out) == {"m": 2, "class": "1D+0H", "h0": 421}


def test_h0_accepts_loose_class_spelling(capsys):
    code, out, _ = run_cli(capsys, "h0", "--m", "2", "--class", "2D−4H")
    assert code == 0
    assert "h0(2D-4H) = 632" in out


def test_baselocus_document(capsys):
    code, out, _ = run_cli(
        capsys, "baselocus", "--m", "2", "--class", "2D-8H", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["strata"] == ["V"]
    assert doc["raw_primes"] == [["y1", "y2"]]
    code, out, _ = run_cli(capsys, "baselocus", "--m", "2", "--class", "2D-8H")
    assert "strata: V" in out
    assert "minimal primes: y1,y2" in out


def test_classify_document(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--m", "2", "--class", "3D-1H", "--format", "json"
    )
    doc = json.loads(out)
    assert doc == {
        "m": 2,
        "class": "3D-1H",
        "effective": True,
        "big": True,
        "movable": True,
        "nef": False,
        "ample": False,
    }
    code, out, _ = run_cli(capsys, "classify", "--m", "2", "--class", "3D-1H")
    assert "3D-1H: effective, big, movable, not nef, not ample" in out


def test_cones_document(capsys):
    code, out, _ = run_cli(capsys, "cones", "--m", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["nef_rays"] == [[1, 0], [0, 1]]
    assert doc["effective_rays"] == [[1, -4], [0, 1]]
    assert doc["walls"] == [[0, 1], [1, 0], [1, -4]]
    assert doc["interior_walls"] == [[1, 0]]
    assert doc["interior_wall_classes"] == ["1D+0H"]
    assert [c["label"] for c in doc["chambers"]] == ["NEF_Y", "FLIP_CHAMBER"]
    code, out, _ = run_cli(capsys, "cones", "--m", "2")
    assert "interior walls: 1D+0H" in out
    assert "chamber NEF_Y: rays (1,0), (0,1)" in out


def test_verify_small_run(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--m", "2", "--samples", "2", "--seed", "7",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["seed"] == 7
    assert doc["v_fibers"]["double_line"] == 2


def test_verify_text_run(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--m", "2", "--samples", "2", "--seed", "7"
    )
    assert code == 0
    assert "V fibers: 2/2 double lines" in out
    assert "boundary identity dF|_W: PASS" in out
    assert "passed: True" in out


# -- determinism ------------------------------------------------------------


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_certificate_output_is_reproducible(capsys, fmt):
    _, first, _ = run_cli(capsys, "certificate", "--m", "3", "--format", fmt)
    _, second, _ = run_cli(capsys, "certificate", "--m", "3", "--format", fmt)
    assert first == second


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_verify_output_is_reproducible(capsys, fmt):
    argv = ("verify", "--m", "2", "--samples", "2", "--seed", "5",
            "--format", fmt)
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second
