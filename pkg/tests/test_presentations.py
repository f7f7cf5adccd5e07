"""Tests for the presentation checkers: compatibility, star, coherence."""

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitalg.exactlin import rank, same_span, span_contains
from splitalg.presentations import (
    BUILTIN_NAMES,
    Presentation,
    PresentationError,
    builtin_presentation,
    check_coherence,
    check_compatibility,
    compatible_space,
    format_presentation,
    l_index,
    monomial_count,
    parse_presentation,
    r_index,
    star_is_associative,
    substitution_matrix,
)

GOLDEN = Path(__file__).parent / "golden"

DAGGER = ((1, 0), (0, 1))


def dagger_presentation(*relations, names=()):
    return Presentation(
        ("prec", "succ"), relations, (1, 0), (0, 1), star=(1, 1),
        relation_names=names,
    )


# ----------------------------------------------------------- construction


def test_builtin_names_cover_the_eight_presentations():
    assert set(BUILTIN_NAMES) == {
        "dend", "dipt", "noname", "admissible", "predend", "tridend",
        "2as", "quadri",
    }


def test_builtin_shapes():
    expected = {
        "dend": (2, 3),
        "dipt": (2, 2),
        "noname": (2, 2),
        "admissible": (2, 1),
        "predend": (3, 4),
        "tridend": (3, 7),
        "2as": (2, 2),
        "quadri": (4, 9),
    }
    for name, (k, n_rel) in expected.items():
        p = builtin_presentation(name)
        assert p.k == k
        assert len(p.relations) == n_rel
        for r in p.relations:
            assert len(r) == monomial_count(k)


def test_builtin_unknown_name():
    with pytest.raises(ValueError):
        builtin_presentation("shuffle")


def test_dend_unit_actions():
    p = builtin_presentation("dend")
    assert p.unit_alpha == (1, 0)
    assert p.unit_beta == (0, 1)
    assert p.star == (1, 1)


def test_quadri_unit_actions_single_nonzero_each_side():
    p = builtin_presentation("quadri")
    # a nw 1 = a and 1 se a = a are the only surviving unit products
    assert p.unit_alpha == (1, 0, 0, 0)
    assert p.unit_beta == (0, 0, 1, 0)


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation((), (), (), ())
    with pytest.raises(ValueError):
        Presentation(("a", "a"), ((1, 0, 0, 0, 0, 0, 0, 0),), (1, 1), (1, 1))
    with pytest.raises(ValueError):
        dagger_presentation((0,) * 8)  # zero relation
    with pytest.raises(ValueError):
        dagger_presentation((1,) * 7)  # wrong dimension
    with pytest.raises(ValueError):
        # star not unital: sigma . alpha = 2
        Presentation(("a", "b"), ((1,) + (0,) * 7,), (1, 1), (1, 1), star=(1, 1))


# ---------------------------------------------------------- compatibility


def test_all_builtins_are_compatible():
    for name in BUILTIN_NAMES:
        report = check_compatibility(builtin_presentation(name))
        assert report.passed, f"{name}: {report}"
        assert report.checks == 3 * len(builtin_presentation(name).relations)


def test_naive_left_relation_incompatible_with_dagger_units():
    # (x prec y) prec z = x prec (y prec z) alone breaks at y = 1:
    # the left side keeps x prec z while the right side vanishes
    k = 2
    vec = [Fraction(0)] * monomial_count(k)
    vec[l_index(k, 0, 0)] = Fraction(1)
    vec[r_index(k, 0, 0)] = Fraction(-1)
    report = check_compatibility(dagger_presentation(tuple(vec)))
    assert not report.passed
    assert len(report.witnesses) == 1
    witness = report.witnesses[0]
    assert witness.pattern == "y=1"
    assert witness.residual == "x prec z"


def test_compatibility_witness_rendering_with_coefficients():
    k = 2
    vec = [Fraction(0)] * monomial_count(k)
    vec[l_index(k, 0, 0)] = Fraction(2)
    vec[r_index(k, 0, 0)] = Fraction(-2)
    report = check_compatibility(dagger_presentation(tuple(vec)))
    assert report.witnesses[0].residual == "2 x prec z"


def test_compatibility_invariant_under_invertible_relation_change():
    p = builtin_presentation("dend")
    r1, r2, r3 = p.relations
    mixed = (
        tuple(a + b for a, b in zip(r1, r2)),
        tuple(2 * b for b in r2),
        tuple(c - a for a, c in zip(r1, r3)),
    )
    assert check_compatibility(dagger_presentation(*mixed)).passed

    k = 2
    bad = [Fraction(0)] * monomial_count(k)
    bad[l_index(k, 0, 0)] = Fraction(1)
    bad[r_index(k, 0, 0)] = Fraction(-1)
    bad = tuple(bad)
    scaled = tuple(3 * c for c in bad)
    assert not check_compatibility(dagger_presentation(bad)).passed
    assert not check_compatibility(dagger_presentation(scaled)).passed


# ------------------------------------------------------- compatible space


def test_dagger_compatible_space_is_spanned_by_the_three_relations():
    space = compatible_space(2, *DAGGER)
    assert len(space) == 3
    assert same_span(space, builtin_presentation("dend").relations)


def test_compatible_space_k1_succ_like_is_zero():
    assert compatible_space(1, (0,), (1,)) == []


def test_compatible_space_k1_associative_is_associativity():
    space = compatible_space(1, (1,), (1,))
    assert len(space) == 1
    assert space[0] == (Fraction(1), Fraction(-1))


def test_compatible_space_dimension_matches_rank_nullity():
    cases = [
        (1, (0,), (1,)),
        (1, (1,), (1,)),
        (2, (1, 0), (0, 1)),
        (2, (1, 1), (1, 1)),
        (3, (1, 0, 1), (0, 1, 1)),
        (4, (1, 0, 0, 0), (0, 0, 1, 0)),
    ]
    for k, alpha, beta in cases:
        space = compatible_space(k, alpha, beta)
        matrix = substitution_matrix(k, alpha, beta)
        assert len(space) == monomial_count(k) - rank(matrix)


def test_builtin_relations_lie_in_their_compatible_space():
    for name in BUILTIN_NAMES:
        p = builtin_presentation(name)
        space = compatible_space(p.k, p.unit_alpha, p.unit_beta)
        for relation in p.relations:
            assert span_contains(space, relation), name


# ---------------------------------------------------- star associativity


def test_star_associativity_of_builtins():
    for name in BUILTIN_NAMES:
        assert star_is_associative(builtin_presentation(name)), name


def test_magmatic_star_is_not_associative():
    p = Presentation(("dot",), (), (1,), (1,), star=(1,))
    # a relation list is required to be nonempty only in files; the object
    # itself may be relation-free, matching a magmatic operation
    assert not star_is_associative(p)


def test_star_associativity_requires_star():
    p = Presentation(("prec", "succ"), builtin_presentation("dend").relations,
                     (1, 0), (0, 1), star=None)
    with pytest.raises(ValueError):
        star_is_associative(p)


def test_dend_star_associativity_is_the_relation_sum():
    p = builtin_presentation("dend")
    total = tuple(
        a + b + c for a, b, c in zip(*p.relations)
    )
    from splitalg.presentations import star_associativity_vector

    assert star_associativity_vector(p) == total


# --------------------------------------------------------------- coherence


COHERENT_BUILTINS = (
    "dend", "dipt", "noname", "admissible", "predend", "tridend", "quadri",
)


@pytest.mark.parametrize("name", COHERENT_BUILTINS)
def test_coherent_builtins(name):
    report = check_coherence(builtin_presentation(name))
    assert report.passed, f"{name}: {report}"
    assert report.checks == 8 * len(builtin_presentation(name).relations)


def test_twoas_fails_coherence_with_the_documented_witness():
    report = check_coherence(builtin_presentation("2as"))
    assert not report.passed
    first = report.witnesses[0]
    assert first.relation == "dot-assoc"
    assert first.pattern == "(1, 1, generic)"
    assert "(a dot a') star a''" in first.residual
    assert "a star (a' star a'')" in first.residual


def test_twoas_star_relation_is_coherent():
    report = check_coherence(builtin_presentation("2as"))
    assert all(w.relation == "dot-assoc" for w in report.witnesses)


def test_coherence_requires_star():
    p = Presentation(("prec", "succ"), builtin_presentation("dend").relations,
                     (1, 0), (0, 1), star=None)
    with pytest.raises(ValueError):
        check_coherence(p)


def test_every_dagger_compatible_relation_is_coherent():
    space = compatible_space(2, *DAGGER)
    combos = [
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1),
        (Fraction(1, 2), -2, Fraction(3, 5)), (3, Fraction(-1, 7), 0),
    ]
    for combo in combos:
        vec = tuple(
            sum(Fraction(c) * basis[i] for c, basis in zip(combo, space))
            for i in range(monomial_count(2))
        )
        if not any(vec):
            continue
        p = dagger_presentation(vec)
        assert check_coherence(p).passed, combo


def test_coherence_implies_compatibility_on_builtins():
    for name in BUILTIN_NAMES:
        p = builtin_presentation(name)
        if check_coherence(p).passed:
            assert check_compatibility(p).passed, name


@st.composite
def random_dagger_presentations(draw):
    """Random single-relation k=2 presentations with the dagger unit."""
    coeffs = st.integers(min_value=-2, max_value=2)
    vec = tuple(Fraction(draw(coeffs)) for _ in range(monomial_count(2)))
    if not any(vec):
        vec = (Fraction(1),) + vec[1:]
    return dagger_presentation(vec)


@given(random_dagger_presentations())
@settings(deadline=None, max_examples=60)
def test_coherence_implies_compatibility_randomized(p):
    if check_coherence(p).passed:
        assert check_compatibility(p).passed


@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3))
@settings(deadline=None, max_examples=40)
def test_dagger_space_members_coherent_randomized(coeffs):
    space = compatible_space(2, *DAGGER)
    vec = tuple(
        sum(Fraction(c) * basis[i] for c, basis in zip(coeffs, space))
        for i in range(monomial_count(2))
    )
    if not any(vec):
        return
    assert check_coherence(dagger_presentation(vec)).passed


def test_report_renders_witnesses():
    report = check_coherence(builtin_presentation("2as"))
    text = str(report)
    assert text.startswith("fail")
    assert "dot-assoc at (1, 1, generic)" in text
    passed = check_coherence(builtin_presentation("dend"))
    assert str(passed) == "pass (24 checks)"


# -------------------------------------------------------------- file format


def test_format_parse_roundtrip_for_all_builtins():
    for name in BUILTIN_NAMES:
        p = builtin_presentation(name)
        q = parse_presentation(format_presentation(p))
        assert q.op_names == p.op_names
        assert q.relations == p.relations
        assert q.unit_alpha == p.unit_alpha
        assert q.unit_beta == p.unit_beta
        assert q.star == p.star


@pytest.mark.parametrize("name", sorted(BUILTIN_NAMES))
def test_golden_files_match_formatter(name):
    fname = "twoas" if name == "2as" else name
    golden = (GOLDEN / f"{fname}.txt").read_text()
    assert format_presentation(builtin_presentation(name)) == golden


def test_parse_accepts_comments_and_blank_lines():
    text = """
# dendriform, with noise
ops: prec succ

unit: prec 1 0   # a prec 1 = a
unit: succ 0 1
star: prec + succ
rel: (x succ y) prec z = x succ (y prec z)
"""
    p = parse_presentation(text)
    assert p.op_names == ("prec", "succ")
    assert p.star == (Fraction(1), Fraction(1))
    assert len(p.relations) == 1


def test_parse_rational_coefficients():
    text = (
        "ops: op\n"
        "unit: op 1 1\n"
        "rel: 1/2 (x op y) op z = 3 x op (y op z) - 5/2 x op (y op z)\n"
    )
    p = parse_presentation(text)
    assert p.relations[0] == (Fraction(1, 2), Fraction(-1, 2))


def test_parse_errors_carry_line_numbers():
    with pytest.raises(PresentationError) as exc:
        parse_presentation("ops: a\nunit: b 1 1\n")
    assert exc.value.line == 2

    with pytest.raises(PresentationError) as exc:
        parse_presentation("ops: a\nunit: a 1 1\nrel: (x a y) a z\n")
    assert exc.value.line == 3

    with pytest.raises(PresentationError) as exc:
        parse_presentation("unit: a 1 1\n")
    assert exc.value.line == 1


def test_parse_rejects_non_regular_variable_order():
    text = "ops: op\nunit: op 1 1\nrel: (y op x) op z = x op (y op z)\n"
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_parse_rejects_unknown_operation_in_relation():
    text = "ops: op\nunit: op 1 1\nrel: (x bad y) op z = x op (y op z)\n"
    with pytest.raises(PresentationError) as exc:
        parse_presentation(text)
    assert "bad" in str(exc.value)


def test_parse_error_column_points_at_offending_token():
    text = "ops: op\nunit: op 1 1\nrel: (x op y) op w = x op (y op z)\n"
    with pytest.raises(PresentationError) as exc:
        parse_presentation(text)
    assert exc.value.line == 3
    assert exc.value.column > 1


def test_parsed_files_reproduce_verdicts():
    for name in BUILTIN_NAMES:
        fname = "twoas" if name == "2as" else name
        p = parse_presentation((GOLDEN / f"{fname}.txt").read_text())
        assert check_compatibility(p).passed
        assert check_coherence(p).passed == (name != "2as")
