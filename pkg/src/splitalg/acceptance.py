"""The package's acceptance checklist, runnable as a self-test.

Each criterion function recomputes a frozen expectation from scratch and
reports one pass/fail result.  The CLI selftest subcommand and the test
suite both drive `run_all`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import trees
from .exactlin import same_span
from .freealg import (
    Element,
    Family,
    enumerate_basis,
    format_element,
    generator,
    key_degree,
    parse_element,
    product,
    star_name,
)
from .hopf import (
    Endomorphism,
    antipode,
    convolution,
    coproduct,
    counit,
    expand_leg,
    filtration_degree,
    is_primitive,
    primitive_basis,
    tensor_of,
    tensor_product_mixed,
)
from .presentations import (
    builtin_presentation,
    check_coherence,
    check_compatibility,
    compatible_space,
)
from .series import comp_inverse, dimension_sequence, named_series


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number} [{verdict}] {self.title}: {self.detail}"


def _result(number, title, failures, detail) -> CriterionResult:
    if failures:
        return CriterionResult(number, title, False, "; ".join(failures))
    return CriterionResult(number, title, True, detail)


def _el(family: Family, key) -> Element:
    return Element.from_key(family, key)


# ---------------------------------------------------------------- criteria


DIMENSION_TABLES = {
    Family.DENDRIFORM: (1, 2, 5, 14, 42, 132),
    Family.TRIDENDRIFORM: (1, 3, 11, 45, 197),
    Family.TWO_ASSOCIATIVE: (1, 2, 6, 22, 90),
    Family.MAGMATIC: (1, 1, 2, 5, 14),
}


def criterion_dimension_tables() -> CriterionResult:
    failures = []
    for family, expected in DIMENSION_TABLES.items():
        got = tuple(
            len(enumerate_basis(family, n)) for n in range(1, len(expected) + 1)
        )
        if got != expected:
            failures.append(f"{family.value}: got {got}, want {expected}")
    detail = "; ".join(
        f"{family.value} {' '.join(map(str, dims))}"
        for family, dims in DIMENSION_TABLES.items()
    )
    return _result(1, "dimension tables", failures, detail)


SERIES_TABLES = {
    "predend": (1, 3, 14, 80, 510),
    "admissible": (1, 2, 7, 31, 154),
    "quadri": (1, 4, 23, 156, 1162),
}


def criterion_series_inversions() -> CriterionResult:
    failures = []
    for name, expected in SERIES_TABLES.items():
        inverse = comp_inverse(named_series(name, len(expected)))
        got = dimension_sequence(inverse, len(expected))
        if got != expected:
            failures.append(f"{name}: got {got}, want {expected}")
    detail = "; ".join(
        f"{name} -> {' '.join(map(str, dims))}" for name, dims in SERIES_TABLES.items()
    ) + " (quadri conjectural)"
    return _result(2, "series inversions", failures, detail)


DEND_RELATIONS = (
    (("prec", "prec"), ("prec", "star")),
    (("succ", "prec"), ("succ", "prec")),
    (("star", "succ"), ("succ", "succ")),
)

TRIDEND_RELATIONS = (
    (("prec", "prec"), ("prec", "star")),
    (("succ", "prec"), ("succ", "prec")),
    (("star", "succ"), ("succ", "succ")),
    (("succ", "dot"), ("succ", "dot")),
    (("prec", "dot"), ("dot", "succ")),
    (("dot", "prec"), ("dot", "prec")),
    (("dot", "dot"), ("dot", "dot")),
)


def _basis_elements(family: Family, degree: int, generators: int = 1):
    return [_el(family, k) for k in enumerate_basis(family, degree, generators)]


def _triples(family: Family, max_total: int, generators: int = 1):
    for total in range(3, max_total + 1):
        for d1 in range(1, total - 1):
            for d2 in range(1, total - d1):
                d3 = total - d1 - d2
                for x in _basis_elements(family, d1, generators):
                    for y in _basis_elements(family, d2, generators):
                        for z in _basis_elements(family, d3, generators):
                            yield x, y, z


def _relation_failures(family, relations, max_total, generators=1) -> tuple[int, list]:
    failures = []
    checks = 0
    for x, y, z in _triples(family, max_total, generators):
        for (op1, op2), (op3, op4) in relations:
            checks += 1
            lhs = product(op2, product(op1, x, y), z)
            rhs = product(op3, x, product(op4, y, z))
            if lhs != rhs:
                failures.append(
                    f"{family.value} ({op1},{op2}) vs ({op3},{op4}) on "
                    f"{format_element(x)}, {format_element(y)}, {format_element(z)}"
                )
    return checks, failures


ASSOC_RANGES = (
    (Family.DENDRIFORM, 5, 1),
    (Family.TRIDENDRIFORM, 4, 1),
    (Family.ZINBIEL, 5, 2),
    (Family.TWO_ASSOCIATIVE, 4, 1),
    (Family.ASSOCIATIVE, 5, 2),
)


def criterion_relation_suites() -> CriterionResult:
    failures = []
    checks, fail = _relation_failures(Family.DENDRIFORM, DEND_RELATIONS, 5)
    failures.extend(fail)
    n, fail = _relation_failures(Family.TRIDENDRIFORM, TRIDEND_RELATIONS, 4)
    checks += n
    failures.extend(fail)
    # Zinbiel: (x succ y + y succ x) succ z = x succ (y succ z)
    zinbiel_checks = 0
    for x, y, z in _triples(Family.ZINBIEL, 5, 2):
        zinbiel_checks += 1
        lhs = product("succ", product("succ", x, y) + product("succ", y, x), z)
        rhs = product("succ", x, product("succ", y, z))
        if lhs != rhs:
            failures.append(
                f"zinbiel on {format_element(x)}, {format_element(y)}, "
                f"{format_element(z)}"
            )
    checks += zinbiel_checks
    # associativity of every family's combined product
    for family, max_total, gens in ASSOC_RANGES:
        mul = star_name(family)
        for x, y, z in _triples(family, max_total, gens):
            checks += 1
            if product(mul, product(mul, x, y), z) != product(
                mul, x, product(mul, y, z)
            ):
                failures.append(f"{family.value} star not associative")
    return _result(3, "relation suites", failures, f"{checks} checks, zero failures")


HOPF_FAMILIES = (
    Family.DENDRIFORM,
    Family.TRIDENDRIFORM,
    Family.TWO_ASSOCIATIVE,
    Family.ZINBIEL,
    Family.MAGMATIC,
    Family.ASSOCIATIVE,
)


def criterion_bialgebra_axioms() -> CriterionResult:
    failures = []
    checks = 0
    top = 4
    for family in HOPF_FAMILIES:
        mul = star_name(family) or "dot"
        unit_el = Element.unit(family)
        keys = [
            key
            for degree in range(1, top + 1)
            for key in enumerate_basis(family, degree)
        ]
        for key in keys:
            x = _el(family, key)
            cop = coproduct(x)
            checks += 4
            if expand_leg(cop, 0, coproduct) != expand_leg(cop, 1, coproduct):
                failures.append(f"{family.value} coassociativity at {key}")
            left = Element.zero(family)
            right = Element.zero(family)
            for (k1, k2), c in cop.value.raw_items():
                left = left + _el(family, k2).scale(c * counit(_el(family, k1)))
                right = right + _el(family, k1).scale(c * counit(_el(family, k2)))
            if left != x or right != x:
                failures.append(f"{family.value} counit law at {key}")
            acc = Element.zero(family)
            for (k1, k2), c in cop.value.raw_items():
                acc = acc + product(mul, antipode(_el(family, k1)), _el(family, k2)).scale(c)
            if acc != unit_el.scale(counit(x)):
                failures.append(f"{family.value} antipode law at {key}")
            if filtration_degree(x) > key_degree(family, key):
                failures.append(f"{family.value} filtration bound at {key}")
        for kx, ky in itertools.product(keys, repeat=2):
            x, y = _el(family, kx), _el(family, ky)
            if key_degree(family, kx) + key_degree(family, ky) > top:
                continue
            checks += 1
            if coproduct(product(mul, x, y)) != tensor_product_mixed(
                mul, coproduct(x), coproduct(y)
            ):
                failures.append(f"{family.value} morphism law at {kx}, {ky}")
    return _result(
        4, "bialgebra axioms", failures, f"six families, {checks} checks"
    )


def criterion_compatible_space() -> CriterionResult:
    failures = []
    space = compatible_space(2, (1, 0), (0, 1))
    relations = builtin_presentation("dend").relations
    if len(space) != 3:
        failures.append(f"dimension {len(space)}, want 3")
    if not same_span(space, relations):
        failures.append("kernel does not match the three relations")
    return _result(
        5,
        "compatible relation space",
        failures,
        "k=2 with the one-sided unit action: dimension 3, spans the three relations",
    )


def criterion_coherence_verdicts() -> CriterionResult:
    failures = []
    coherent = ("dend", "tridend", "predend", "noname", "admissible", "quadri")
    for name in coherent:
        p = builtin_presentation(name)
        if not check_compatibility(p).passed:
            failures.append(f"{name} compatibility")
        if not check_coherence(p).passed:
            failures.append(f"{name} coherence")
    twoas = builtin_presentation("2as")
    if not check_compatibility(twoas).passed:
        failures.append("2as compatibility should pass")
    report = check_coherence(twoas)
    if report.passed:
        failures.append("2as coherence should fail")
    else:
        first = report.witnesses[0]
        if first.pattern != "(1, 1, generic)" or "star" not in first.residual:
            failures.append(f"2as witness unexpected: {first}")
    detail = "six builtins coherent; 2as fails with witness "
    if not report.passed:
        detail += f"[{report.witnesses[0]}]"
    return _result(6, "coherence verdicts", failures, detail)


def _mag_associator(a: Element, b: Element, c: Element) -> Element:
    return product("dot", product("dot", a, b), c) - product(
        "dot", a, product("dot", b, c)
    )


def criterion_primitives() -> CriterionResult:
    failures = []
    fam = Family.DENDRIFORM
    basis1 = primitive_basis(fam, 1)
    basis2 = primitive_basis(fam, 2)
    if len(basis1) != 1 or len(basis2) != 1:
        failures.append(
            f"dend primitive dims {len(basis1)}, {len(basis2)}, want 1, 1"
        )
    expected2 = parse_element("(|,(|,|))", fam) - parse_element("((|,|),|)", fam)
    if basis2 and basis2[0] != expected2:
        failures.append("dend degree-2 primitive is not the tree difference")

    mag = Family.MAGMATIC
    x, y, z, t = (_el(mag, generator(mag, i)) for i in range(1, 5))
    commutator = product("dot", x, y) - product("dot", y, x)
    if not is_primitive(commutator):
        failures.append("commutator not primitive")
    associator = _mag_associator(x, y, z)
    if not is_primitive(associator):
        failures.append("associator not primitive")
    quad = (
        _mag_associator(x, y, product("dot", z, t))
        - product("dot", z, _mag_associator(x, y, t))
        - product("dot", _mag_associator(x, y, z), t)
    )
    if quad.is_zero() or not is_primitive(quad):
        failures.append("degree-4 associator combination not primitive")

    jac = (
        _mag_associator(x, y, z)
        + _mag_associator(y, z, x)
        + _mag_associator(z, x, y)
        - _mag_associator(x, z, y)
        - _mag_associator(y, x, z)
        - _mag_associator(z, y, x)
    )
    bracket = lambda a, b: product("dot", a, b) - product("dot", b, a)
    jacobi_rhs = (
        bracket(bracket(x, y), z)
        + bracket(bracket(y, z), x)
        + bracket(bracket(z, x), y)
    )
    if jac != jacobi_rhs:
        failures.append("alternating associator sum differs from the Jacobi sum")
    return _result(
        7,
        "primitive elements",
        failures,
        "dend dims 1,1 with the tree-difference generator; commutator, associator "
        "and the degree-4 combination primitive; Jacobi identity holds",
    )


def criterion_convolutions() -> CriterionResult:
    failures = []
    fam = Family.DENDRIFORM
    top = 3
    ident = Endomorphism.identity(fam, top)
    unit = Endomorphism.unit_counit(fam, top)
    proj = Endomorphism(
        fam, top, 1, {k: ident.images[k] - unit.images[k] for k in ident.images}
    )
    s_bar = Endomorphism(
        fam, top, 1, {k: antipode(proj.images[k]) for k in proj.images}
    )
    doubler = Endomorphism(
        fam, top, 1, {k: proj.images[k].scale(2) for k in proj.images}
    )
    maps = (proj, s_bar, doubler)
    checks = 0
    for f, g, h in itertools.product(maps, repeat=3):
        checks += 3
        r1 = convolution("prec", convolution("prec", f, g), h) == convolution(
            "prec", f, convolution("star", g, h)
        )
        r2 = convolution("prec", convolution("succ", f, g), h) == convolution(
            "succ", f, convolution("prec", g, h)
        )
        r3 = convolution("succ", convolution("star", f, g), h) == convolution(
            "succ", f, convolution("succ", g, h)
        )
        if not (r1 and r2 and r3):
            failures.append("dendriform convolution relation failed")
            break
    asfam = Family.ASSOCIATIVE
    ident_as = Endomorphism.identity(asfam, 4)
    s = Endomorphism.antipode_table(asfam, 4)
    unit_as = Endomorphism.unit_counit(asfam, 4)
    checks += 1
    if convolution("star", ident_as, s) != unit_as:
        failures.append("id (*) antipode differs from unit-counit")
    return _result(
        8,
        "convolution relations",
        failures,
        f"{checks} checks on truncated endomorphisms",
    )


def criterion_coproduct_cross_check() -> CriterionResult:
    failures = []
    fam = Family.DENDRIFORM
    one = Element.unit(fam)
    checks = 0
    for degree in range(1, 5):
        for left_deg in range(degree):
            for t in trees.enumerate_pbt(left_deg):
                for s in trees.enumerate_pbt(degree - 1 - left_deg):
                    checks += 1
                    tree = trees.graft(t, s)
                    expected = tensor_of(_el(fam, tree), one)
                    for (t1, t2), c in coproduct(_el(fam, t)).value.raw_items():
                        for (s1, s2), d in coproduct(_el(fam, s)).value.raw_items():
                            left = product("star", _el(fam, t1), _el(fam, s1))
                            right = _el(fam, trees.graft(t2, s2))
                            expected = expected + tensor_of(left, right).scale(c * d)
                    if coproduct(_el(fam, tree)) != expected:
                        failures.append(
                            f"mismatch at {trees.format_tree(tree, fam.value)}"
                        )
    return _result(
        9,
        "coproduct recursion cross-check",
        failures,
        f"{checks} grafted trees agree with the convolution-style formula",
    )


ALL_CRITERIA = (
    criterion_dimension_tables,
    criterion_series_inversions,
    criterion_relation_suites,
    criterion_bialgebra_axioms,
    criterion_compatible_space,
    criterion_coherence_verdicts,
    criterion_primitives,
    criterion_convolutions,
    criterion_coproduct_cross_check,
)


def run_all() -> list[CriterionResult]:
    return [fn() for fn in ALL_CRITERIA]
