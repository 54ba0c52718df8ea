"""End-to-end tests for the command line interface."""

from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from eqlef import load_complex
from eqlef.cli import main

MINUS = "−"
OPLUS = "⊕"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def broken_square_document():
    """Two stacked boundaries whose composite is nonzero."""
    return {
        "format_version": 1,
        "group": {"builtin": "trivial"},
        "iso_classes": [
            {
                "subgroup_class": ["1"],
                "component": "c",
                "pi1_rank": 0,
                "phi_pi": [],
                "chain": [
                    {"degree": 0, "rank": 1, "relative_mask": [False], "map": [[1]]},
                    {
                        "degree": 1,
                        "rank": 1,
                        "relative_mask": [False],
                        "map": [[1]],
                        "boundary": [[1]],
                    },
                    {
                        "degree": 2,
                        "rank": 1,
                        "relative_mask": [False],
                        "map": [[1]],
                        "boundary": [[1]],
                    },
                ],
            }
        ],
    }


# ---------------------------------------------------------------------------
# class / factor


def test_class_identity_matrix(capsys):
    code, out, _ = run(capsys, ["class", "[[1,0],[0,1]]"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == f"+2·(x{MINUS}1)"
    assert lines[1] == f"characteristic polynomial: x²{MINUS}2x+1"
    assert lines[2] == f"factorization: (x{MINUS}1)^2"


def test_class_rotation_matrix(capsys):
    code, out, _ = run(capsys, ["class", "[[0,-1],[1,0]]"])
    assert code == 0
    assert out.splitlines()[0] == "+1·(x²+1)"


def test_class_nilpotent_matrix(capsys):
    code, out, _ = run(capsys, ["class", "[[0]]"])
    assert code == 0
    assert out.splitlines()[0] == "+1·(x)"


def test_class_empty_matrix(capsys):
    code, out, _ = run(capsys, ["class", "[]"])
    assert code == 0
    assert out.strip() == "0"


def test_factor_alias(capsys):
    code, out, _ = run(capsys, ["factor", "[[6]]"])
    assert code == 0
    assert out.splitlines()[0] == f"+1·(x{MINUS}6)"


def test_class_json_payload(capsys):
    code, out, _ = run(capsys, ["class", "--json", "[[1,0],[0,1]]"])
    assert code == 0
    payload = json.loads(out)
    assert payload["class"]["rendered"] == f"+2·(x{MINUS}1)"
    assert payload["class"]["terms"] == [
        {"coeff": 2, "coefficients": [-1, 1], "polynomial": f"x{MINUS}1"}
    ]
    assert payload["factorization"] == {
        "content": 1,
        "factors": [{"multiplicity": 2, "polynomial": f"x{MINUS}1"}],
    }


def test_class_rejects_rectangular(capsys):
    code, _, err = run(capsys, ["class", "[[1,2]]"])
    assert code == 1
    assert "matrix must be square" in err


def test_class_rejects_unparseable(capsys):
    code, _, err = run(capsys, ["class", "nonsense"])
    assert code == 1
    assert "could not parse matrix" in err


# ---------------------------------------------------------------------------
# invariants


def test_invariants_human_output(capsys):
    code, out, _ = run(capsys, ["invariants", "example1"])
    assert code == 0
    assert "example1 (group order 2)" in out
    assert f"u = +[{MINUS}g]" in out
    assert f"ell = 0 {OPLUS} 0" in out
    assert "vanishing: ell zero: yes; lambda zero: yes; consistent: yes" in out


def test_invariants_json_is_byte_stable(capsys):
    code, first, _ = run(capsys, ["invariants", "--json", "example2"])
    assert code == 0
    code, second, _ = run(capsys, ["invariants", "--json", "example2"])
    assert code == 0
    assert first == second
    payload = json.loads(first)
    assert payload["ell"]["rendered"] == f"2[1] {OPLUS} 0"


def test_invariants_human_and_json_agree(capsys):
    _, human, _ = run(capsys, ["invariants", "example2"])
    _, machine, _ = run(capsys, ["invariants", "--json", "example2"])
    payload = json.loads(machine)
    for entry in payload["classes"]:
        assert f"L = {entry['lefschetz']}" in human
    assert f"ell = {payload['ell']['rendered']}" in human


def test_invariants_verbose_notes(capsys):
    code, _, err = run(capsys, ["invariants", "--verbose", "example1"])
    assert code == 0
    assert "loaded complex (2 iso classes, group order 2)" in err


def test_invariants_rejects_unknown_input(capsys):
    code, _, err = run(capsys, ["invariants", "nosuch"])
    assert code == 1
    assert "is not a builtin name" in err


def test_invariants_reads_inline_and_file(capsys, tmp_path):
    _, document, _ = run(capsys, ["example", "example1"])
    code, inline_out, _ = run(capsys, ["invariants", document])
    assert code == 0
    path = tmp_path / "c.json"
    path.write_text(document, encoding="utf-8")
    code, file_out, _ = run(capsys, ["invariants", str(path)])
    assert code == 0
    assert inline_out == file_out


# ---------------------------------------------------------------------------
# realize


def test_realize_pinned_target(capsys):
    code, out, _ = run(capsys, ["realize", "[[0,1],[1,0]]", "[[3]]"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == f"+1·(x{MINUS}1) +1·(x+1) {MINUS}1·(x{MINUS}3)"
    document = json.loads("\n".join(lines[1:]))
    load_complex(document)  # must validate


def test_realize_output_file_passes_check(capsys, tmp_path):
    path = tmp_path / "wedge.json"
    code, out, _ = run(capsys, ["realize", "--output", str(path), "[[2]]", "[]"])
    assert code == 0
    assert out.strip() == f"+1·(x{MINUS}2)"
    code, out, _ = run(capsys, ["check", str(path)])
    assert code == 0
    assert out.strip() == "OK: 1 iso classes, group order 1, 0 fixed points"


def test_realize_json_payload_verified(capsys):
    code, out, _ = run(capsys, ["realize", "--json", "[[2]]", "[]"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert payload["class"]["rendered"] == f"+1·(x{MINUS}2)"
    load_complex(payload["document"])


def test_realize_rejects_rectangular(capsys):
    code, _, err = run(capsys, ["realize", "[[1,2]]", "[]"])
    assert code == 1
    assert "square" in err


# ---------------------------------------------------------------------------
# check


def test_check_builtin(capsys):
    code, out, _ = run(capsys, ["check", "example3"])
    assert code == 0
    assert out.strip() == "OK: 5 iso classes, group order 4, 5 fixed points"


def test_check_json_payload(capsys):
    code, out, _ = run(capsys, ["check", "--json", "example3"])
    assert code == 0
    assert json.loads(out) == {
        "valid": True,
        "iso_classes": 5,
        "group_order": 4,
        "fixed_points": 5,
    }


def test_check_reports_boundary_failure(capsys):
    code, out, err = run(capsys, ["check", json.dumps(broken_square_document())])
    assert code == 1
    assert out == ""
    assert (
        "error: boundary composition is nonzero between degrees 2 and 1 "
        "of (subgroup {1}, component 'c')." in err
    )


# ---------------------------------------------------------------------------
# example and argument handling


def test_example_emits_loadable_document(capsys):
    code, out, _ = run(capsys, ["example", "example2"])
    assert code == 0
    c = load_complex(json.loads(out))
    assert [iso.component for iso in c.classes] == ["S3", "S2"]


def test_example_rejects_unknown_name(capsys):
    code, _, err = run(capsys, ["example", "example9"])
    assert code == 1
    assert "invalid choice" in err


def test_unknown_subcommand_exits_one(capsys):
    code, _, err = run(capsys, ["bogus"])
    assert code == 1
    assert "invalid choice" in err


def test_missing_argument_exits_one(capsys):
    code, _, err = run(capsys, ["class"])
    assert code == 1
    assert "required: matrix" in err


# ---------------------------------------------------------------------------
# invocation forms


def test_module_invocation():
    result = subprocess.run(
        [sys.executable, "-m", "eqlef.cli", "class", "[[2]]"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == f"+1·(x{MINUS}2)"


@pytest.mark.skipif(shutil.which("eqlef") is None, reason="console script not on PATH")
def test_console_script():
    result = subprocess.run(
        ["eqlef", "check", "example1"], capture_output=True, text=True
    )
    assert result.returncode == 0
    assert "OK: 2 iso classes" in result.stdout
