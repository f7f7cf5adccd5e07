"""End-to-end CLI tests: golden output bytes and exit codes."""

import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "splitalg.cli", *args],
        capture_output=True,
        text=True,
    )


# ------------------------------------------------------------------- dims


def test_dims_dend():
    result = run_cli("dims", "--family", "dend", "--degree", "6")
    assert result.returncode == 0
    assert result.stdout == "1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n"


def test_dims_mag():
    result = run_cli("dims", "--family", "mag", "--degree", "5")
    assert result.returncode == 0
    assert result.stdout == "1 1\n2 1\n3 2\n4 5\n5 14\n"


def test_dims_unknown_family():
    result = run_cli("dims", "--family", "nope", "--degree", "3")
    assert result.returncode == 2
    assert "unknown family" in result.stderr


# --------------------------------------------------------------------- op


def test_op_star_of_generators():
    result = run_cli("op", "star", "(|,|)", "(|,|)", "--family", "dend")
    assert result.returncode == 0
    assert result.stdout == "(|,(|,|)) + ((|,|),|)\n"


def test_op_unit_annihilates_prec():
    result = run_cli("op", "prec", "|", "(|,|)", "--family", "dend")
    assert result.returncode == 0
    assert result.stdout == "0\n"


def test_op_undefined_unit_product_exits_3():
    result = run_cli("op", "prec", "|", "|", "--family", "dend")
    assert result.returncode == 3
    assert "undefined" in result.stderr


def test_op_unknown_operation_exits_2():
    result = run_cli("op", "wedge", "(|,|)", "(|,|)", "--family", "dend")
    assert result.returncode == 2


def test_op_malformed_tree_exits_2():
    result = run_cli("op", "star", "(|,", "(|,|)", "--family", "dend")
    assert result.returncode == 2


# -------------------------------------------------- coproduct and antipode


def test_coproduct_golden():
    result = run_cli("coproduct", "((|,|),|)", "--family", "dend")
    assert result.returncode == 0
    assert result.stdout == "((|,|),|)⊗| + |⊗((|,|),|) + (|,|)⊗(|,|)\n"


def test_coproduct_ascii():
    result = run_cli("coproduct", "((|,|),|)", "--family", "dend", "--ascii")
    assert result.returncode == 0
    assert result.stdout == "((|,|),|)(x)| + |(x)((|,|),|) + (|,|)(x)(|,|)\n"


def test_antipode_golden():
    result = run_cli("antipode", "((|,|),|)", "--family", "dend")
    assert result.returncode == 0
    assert result.stdout == "(|,(|,|))\n"


def test_output_is_deterministic():
    first = run_cli("coproduct", "(|,(|,(|,|)))", "--family", "dend")
    second = run_cli("coproduct", "(|,(|,(|,|)))", "--family", "dend")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


# -------------------------------------------------------------- primitives


def test_primitives_dend_degree_two():
    result = run_cli("primitives", "--family", "dend", "--degree", "2")
    assert result.returncode == 0
    assert result.stdout == "dim 1\n(|,(|,|)) - ((|,|),|)\n"


def test_primitives_mag_contains_associator():
    result = run_cli(
        "primitives", "--family", "mag", "--degree", "3", "--generators", "3"
    )
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("dim ")
    assert "(x1,(x2,x3))" in result.stdout


# ------------------------------------------------------------------- check


def test_check_builtin_dend():
    result = run_cli("check", "dend")
    assert result.returncode == 0
    assert result.stdout == (
        "presentation: dend (builtin)\n"
        "compatibility: pass (9 checks)\n"
        "star-associativity: pass\n"
        "coherence: pass (24 checks)\n"
        "compatible-space dimension: 3\n"
    )


def test_check_builtin_twoas_fails_with_witness():
    result = run_cli("check", "2as")
    assert result.returncode == 1
    assert "coherence: fail" in result.stdout
    assert "dot-assoc at (1, 1, generic)" in result.stdout
    assert "compatibility: pass" in result.stdout


def test_check_presentation_file():
    result = run_cli("check", str(GOLDEN / "dend.txt"))
    assert result.returncode == 0
    assert "compatibility: pass" in result.stdout
    assert "coherence: pass" in result.stdout


def test_check_presentation_flag(tmp_path):
    path = tmp_path / "assoc.txt"
    path.write_text(
        "ops: star\nunit: star 1 1\nstar: star\n"
        "rel: (x star y) star z = x star (y star z)\n"
    )
    result = run_cli("check", "--presentation", str(path))
    assert result.returncode == 0
    assert "compatible-space dimension: 1" in result.stdout


def test_check_malformed_file_reports_position(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("ops: a\nunit: a 1 1\nrel: (x a y) a\n")
    result = run_cli("check", str(path))
    assert result.returncode == 2
    assert "line 3" in result.stderr


def test_check_unknown_target():
    result = run_cli("check", "no-such-thing")
    assert result.returncode == 2


def test_check_requires_exactly_one_source():
    assert run_cli("check").returncode == 2
    result = run_cli("check", "dend", "--presentation", "x.txt")
    assert result.returncode == 2


# ------------------------------------------------------------------ series


def test_series_invert_golden():
    result = run_cli("series", "invert", "-1+x+1/(1+x)^2", "--order", "5")
    assert result.returncode == 0
    assert result.stdout == (
        "series: -x + 3*x^2 - 4*x^3 + 5*x^4 - 6*x^5\n"
        "inverse: -x + 3*x^2 - 14*x^3 + 80*x^4 - 510*x^5\n"
        "dims: 1 3 14 80 510\n"
    )


def test_series_invert_quadri_tagged_conjectural():
    result = run_cli("series", "invert", "x*(-1+x)/(1+x)^3", "--order", "5")
    assert result.returncode == 0
    assert result.stdout.endswith(
        "dims: 1 4 23 156 1162\nnote: dimensions conjectural\n"
    )


def test_series_invert_admissible():
    result = run_cli("series", "invert", "-1+x^2+1/(1+x)", "--order", "5")
    assert result.returncode == 0
    assert "dims: 1 2 7 31 154\n" in result.stdout
    assert "conjectural" not in result.stdout


def test_series_check_alternating_pass_and_fail():
    ok = run_cli("series", "check-alternating", "0,-1,2,-5", "--order", "3")
    assert ok.returncode == 0
    assert "alternating integer coefficients: pass" in ok.stdout
    bad = run_cli("series", "check-alternating", "0,-1,-2", "--order", "2")
    assert bad.returncode == 1
    assert "alternating integer coefficients: fail" in bad.stdout


def test_series_coefficient_list_invert():
    result = run_cli("series", "invert", "0 -1 2", "--order", "4")
    assert result.returncode == 0
    assert "inverse: -x + 2*x^2 - 8*x^3 + 40*x^4\n" in result.stdout


def test_series_parse_error_exits_2():
    result = run_cli("series", "invert", "x+y", "--order", "3")
    assert result.returncode == 2
    assert "position" in result.stderr


def test_series_noninvertible_exits_2():
    result = run_cli("series", "invert", "1+x", "--order", "3")
    assert result.returncode == 2


# ---------------------------------------------------------------- selftest


def test_selftest_passes():
    result = run_cli("selftest")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    criterion_lines = [l for l in lines if l.startswith("criterion ")]
    assert len(criterion_lines) == 9
    assert all("[PASS]" in l for l in criterion_lines)
    assert lines[-1] == "selftest: 9/9 criteria passed"


# ------------------------------------------------------------------- usage


def test_no_arguments_is_usage_error():
    assert run_cli().returncode == 2


def test_unknown_subcommand_is_usage_error():
    assert run_cli("frobnicate").returncode == 2
