"""Binary quadratic regular presentations with unit actions.

A presentation lists k binary operations, quadratic relations on three
variables in fixed order (regular: x, y, z never permute), a scalar unit
action per operation (a o 1 = alpha(o) a, 1 o a = beta(o) a) and an
associative combination * = sum of sigma(o) o.

Relations live in the 2k^2-dimensional monomial space with coordinates

    L(i, j) = (x o_i y) o_j z        at index i*k + j,
    R(i, j) = x o_i (y o_j z)        at index k^2 + i*k + j.

This module decides three questions by exact linear algebra:

  * compatibility: does every relation still hold after substituting the
    unit for a single variable?
  * star associativity: is the associativity of * a consequence of the
    relations?
  * coherence: does the mixed tensor-product rule make the tensor square
    of a generic algebra an algebra of the same type again?  Checked per
    relation and per pattern of unit/generic right-leg assignments, with
    vanishing decided leg by leg in the quotient by the relation span.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    RationalMatrix,
    as_fraction,
    kernel_basis,
    reduce_against,
    row_reduce,
    span_contains,
)

A_VARS = ("a", "a'", "a''")
B_VARS = ("b", "b'", "b''")
X_VARS = ("x", "y", "z")


def monomial_count(k: int) -> int:
    return 2 * k * k


def l_index(k: int, i: int, j: int) -> int:
    return i * k + j


def r_index(k: int, i: int, j: int) -> int:
    return k * k + i * k + j


def render_monomial(op_names, index: int, variables=X_VARS) -> str:
    """Text form of one arity-3 monomial, e.g. "(x prec y) succ z"."""
    k = len(op_names)
    x, y, z = variables
    if index < k * k:
        i, j = divmod(index, k)
        return f"({x} {op_names[i]} {y}) {op_names[j]} {z}"
    i, j = divmod(index - k * k, k)
    return f"{x} {op_names[i]} ({y} {op_names[j]} {z})"


def render_vector(op_names, vector, variables=X_VARS) -> str:
    parts = []
    for index, coeff in enumerate(vector):
        if not coeff:
            continue
        body = render_monomial(op_names, index, variables)
        if abs(coeff) != 1:
            body = f"{coeff} {body}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class Presentation:
    """A binary quadratic regular presentation with unit actions."""

    op_names: tuple[str, ...]
    relations: tuple[tuple[Fraction, ...], ...]
    unit_alpha: tuple[Fraction, ...]
    unit_beta: tuple[Fraction, ...]
    star: tuple[Fraction, ...] | None = None
    relation_names: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        k = len(self.op_names)
        if k < 1:
            raise ValueError("a presentation needs at least one operation")
        if len(set(self.op_names)) != k:
            raise ValueError("operation names must be distinct")
        object.__setattr__(
            self, "relations", tuple(tuple(map(as_fraction, r)) for r in self.relations)
        )
        object.__setattr__(
            self, "unit_alpha", tuple(map(as_fraction, self.unit_alpha))
        )
        object.__setattr__(self, "unit_beta", tuple(map(as_fraction, self.unit_beta)))
        if len(self.unit_alpha) != k or len(self.unit_beta) != k:
            raise ValueError("unit action needs one alpha and one beta per operation")
        for r in self.relations:
            if len(r) != monomial_count(k):
                raise ValueError("relation vector has the wrong dimension")
            if not any(r):
                raise ValueError("relation vectors must be nonzero")
        if not self.relation_names:
            object.__setattr__(
                self,
                "relation_names",
                tuple(f"rel{i + 1}" for i in range(len(self.relations))),
            )
        if len(self.relation_names) != len(self.relations):
            raise ValueError("one name per relation")
        if self.star is not None:
            star = tuple(map(as_fraction, self.star))
            object.__setattr__(self, "star", star)
            if len(star) != k:
                raise ValueError("star needs one coefficient per operation")
            if sum(s * a for s, a in zip(star, self.unit_alpha)) != 1:
                raise ValueError("unit must be a right unit for star")
            if sum(s * b for s, b in zip(star, self.unit_beta)) != 1:
                raise ValueError("unit must be a left unit for star")

    @property
    def k(self) -> int:
        return len(self.op_names)

    def relation_label(self, index: int) -> str:
        return self.relation_names[index]


@dataclass(frozen=True)
class Witness:
    """One failed check: which relation, which substitution, what is left."""

    relation: str
    pattern: str
    residual: str

    def __str__(self) -> str:
        return f"{self.relation} at {self.pattern}: residual {self.residual}"


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    checks: int = 0

    def __post_init__(self):
        assert self.passed == (not self.witnesses)

    def __str__(self) -> str:
        if self.passed:
            return f"pass ({self.checks} checks)"
        lines = [f"fail ({len(self.witnesses)} of {self.checks} checks)"]
        lines.extend(f"  {w}" for w in self.witnesses)
        return "\n".join(lines)


# ------------------------------------------------------------ compatibility


def substitution_matrix(k: int, unit_alpha, unit_beta) -> RationalMatrix:
    """Stacked matrix of the three single-variable unit substitutions.

    Rows come in three blocks of k (x=1, y=1, z=1), one row per surviving
    binary monomial; columns are the 2k^2 arity-3 monomials.
    """
    alpha = tuple(map(as_fraction, unit_alpha))
    beta = tuple(map(as_fraction, unit_beta))
    rows = [
        [Fraction(0)] * monomial_count(k) for _ in range(3 * k)
    ]
    for i in range(k):
        for j in range(k):
            l_col, r_col = l_index(k, i, j), r_index(k, i, j)
            # x = 1: both association orders start 1 o_i (...) or (1 o_i y)
            rows[j][l_col] += beta[i]
            rows[j][r_col] += beta[i]
            # y = 1
            rows[k + j][l_col] += alpha[i]
            rows[k + i][r_col] += beta[j]
            # z = 1
            rows[2 * k + i][l_col] += alpha[j]
            rows[2 * k + i][r_col] += alpha[j]
    return RationalMatrix(rows)


_SUB_PATTERNS = ("x=1", "y=1", "z=1")
_SUB_VARS = (("y", "z"), ("x", "z"), ("x", "y"))


def check_compatibility(p: Presentation) -> CheckReport:
    """Do the relations survive substituting the unit for one variable?"""
    k = p.k
    matrix = substitution_matrix(k, p.unit_alpha, p.unit_beta)
    witnesses = []
    checks = 0
    for r_idx, relation in enumerate(p.relations):
        image = [
            sum(row[c] * relation[c] for c in range(monomial_count(k)))
            for row in matrix.entries
        ]
        for block in range(3):
            checks += 1
            segment = image[block * k : (block + 1) * k]
            if any(segment):
                left, right = _SUB_VARS[block]
                parts = []
                for op_idx, coeff in enumerate(segment):
                    if not coeff:
                        continue
                    body = f"{left} {p.op_names[op_idx]} {right}"
                    if abs(coeff) != 1:
                        body = f"{coeff} {body}"
                    parts.append(
                        (body if coeff > 0 else f"-{body}")
                        if not parts
                        else (f" + {body}" if coeff > 0 else f" - {body}")
                    )
                witnesses.append(
                    Witness(
                        p.relation_label(r_idx),
                        _SUB_PATTERNS[block],
                        "".join(parts),
                    )
                )
    return CheckReport(not witnesses, tuple(witnesses), checks)


def compatible_space(k: int, unit_alpha, unit_beta) -> list[tuple[Fraction, ...]]:
    """All relation vectors compatible with the unit action, echelonized."""
    return kernel_basis(substitution_matrix(k, unit_alpha, unit_beta))


# ------------------------------------------------------- star associativity


def star_associativity_vector(p: Presentation) -> tuple[Fraction, ...]:
    if p.star is None:
        raise ValueError("presentation declares no star")
    k = p.k
    vec = [Fraction(0)] * monomial_count(k)
    for i in range(k):
        for j in range(k):
            c = p.star[i] * p.star[j]
            vec[l_index(k, i, j)] += c
            vec[r_index(k, i, j)] -= c
    return tuple(vec)


def star_is_associative(p: Presentation) -> bool:
    """Is associativity of * a linear consequence of the relations?"""
    return span_contains(p.relations, star_associativity_vector(p))


# ----------------------------------------------------------------- coherence

# Leg monomials during the tensor expansion.  Arity grows along the
# regular order, so these shapes are exhaustive:
#   ("1",)            the unit (B legs only)
#   ("v", p)          variable number p
#   ("2", i, p, q)    var_p o_i var_q with p < q
#   ("3L", i, j)      (v0 o_i v1) o_j v2
#   ("3R", i, j)      v0 o_i (v1 o_j v2)
_UNIT_MONO = ("1",)


def _combine_monomials(op: int, m1, m2) -> tuple:
    if m1[0] == "v" and m2[0] == "v":
        assert m1[1] < m2[1]
        return ("2", op, m1[1], m2[1])
    if m1[0] == "2" and m2[0] == "v":
        assert (m1[2], m1[3], m2[1]) == (0, 1, 2)
        return ("3L", m1[1], op)
    if m1[0] == "v" and m2[0] == "2":
        assert (m1[1], m2[2], m2[3]) == (0, 1, 2)
        return ("3R", op, m2[1])
    raise AssertionError("unexpected monomial arities")


def _leg_product(p: Presentation, op: int, m1, m2) -> dict:
    """Product of two leg monomials under o_op, with unit actions."""
    if m1 == _UNIT_MONO and m2 == _UNIT_MONO:
        raise AssertionError("unit times unit never reaches a leg product")
    if m1 == _UNIT_MONO:
        c = p.unit_beta[op]
        return {m2: c} if c else {}
    if m2 == _UNIT_MONO:
        c = p.unit_alpha[op]
        return {m1: c} if c else {}
    return {_combine_monomials(op, m1, m2): Fraction(1)}


def _leg_star(p: Presentation, m1, m2) -> dict:
    out: dict = {}
    for op, sigma in enumerate(p.star):
        if not sigma:
            continue
        for mono, c in _leg_product(p, op, m1, m2).items():
            out[mono] = out.get(mono, Fraction(0)) + sigma * c
    return {m: c for m, c in out.items() if c}


def _tensor_product(p: Presentation, op: int, u: dict, v: dict) -> dict:
    """The mixed rule on linear combinations of pure tensors.

    Keys are (A-monomial, B-monomial) pairs.  When both B legs are the
    unit, the operation acts on the A legs and the B leg stays the unit;
    otherwise the A legs multiply by * and the B legs by the operation.
    """
    out: dict = {}

    def add(a, b, c):
        if c:
            key = (a, b)
            out[key] = out.get(key, Fraction(0)) + c

    for (a1, b1), c1 in u.items():
        for (a2, b2), c2 in v.items():
            c = c1 * c2
            if b1 == _UNIT_MONO and b2 == _UNIT_MONO:
                for a_mono, ca in _leg_product(p, op, a1, a2).items():
                    add(a_mono, _UNIT_MONO, c * ca)
            else:
                a_part = _leg_star(p, a1, a2)
                b_part = _leg_product(p, op, b1, b2)
                for a_mono, ca in a_part.items():
                    for b_mono, cb in b_part.items():
                        add(a_mono, b_mono, c * ca * cb)
    return {key: c for key, c in out.items() if c}


def _arity3_index(k: int, mono) -> int:
    if mono[0] == "3L":
        return l_index(k, mono[1], mono[2])
    assert mono[0] == "3R"
    return r_index(k, mono[1], mono[2])


def _mono_from_index(k: int, index: int):
    if index < k * k:
        return ("3L", *divmod(index, k))
    return ("3R", *divmod(index - k * k, k))


def _render_leg(op_names, mono, variables) -> str:
    kind = mono[0]
    if kind == "1":
        return "1"
    if kind == "v":
        return variables[mono[1]]
    if kind == "2":
        _, op, pos1, pos2 = mono
        return f"{variables[pos1]} {op_names[op]} {variables[pos2]}"
    if kind == "3L":
        return render_monomial(op_names, mono[1] * len(op_names) + mono[2], variables)
    assert kind == "3R"
    k = len(op_names)
    return render_monomial(op_names, k * k + mono[1] * k + mono[2], variables)


def _render_tensor_residual(op_names, residual: dict) -> str:
    parts = []
    for (a_mono, b_mono), coeff in sorted(residual.items(), key=lambda kv: str(kv[0])):
        body = (
            f"({_render_leg(op_names, a_mono, A_VARS)})"
            f"(x)({_render_leg(op_names, b_mono, B_VARS)})"
        )
        if abs(coeff) != 1:
            body = f"{coeff} {body}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(parts) if parts else "0"


def check_coherence(p: Presentation) -> CheckReport:
    """Does the mixed rule preserve the relations on a tensor square?

    Every relation is evaluated on (a (x) b, a' (x) b', a'' (x) b'') for
    each of the eight assignments of unit/generic to b, b', b''.  The
    result must vanish in the tensor product of two generic algebras of
    the presentation: the A leg is reduced modulo the relation span
    (together with star associativity), then whatever survives has its B
    leg reduced the same way when three generic legs remain.
    """
    if p.star is None:
        raise ValueError("coherence needs a declared star")
    k = p.k
    quotient_rows = list(p.relations) + [star_associativity_vector(p)]
    rref, pivots = row_reduce(quotient_rows)
    witnesses = []
    checks = 0
    for r_idx, relation in enumerate(p.relations):
        for flags in itertools.product((True, False), repeat=3):
            checks += 1
            legs = [
                {(("v", pos), _UNIT_MONO if is_unit else ("v", pos)): Fraction(1)}
                for pos, is_unit in enumerate(flags)
            ]
            expansion: dict = {}
            for index, coeff in enumerate(relation):
                if not coeff:
                    continue
                if index < k * k:
                    i, j = divmod(index, k)
                    term = _tensor_product(
                        p, j, _tensor_product(p, i, legs[0], legs[1]), legs[2]
                    )
                else:
                    i, j = divmod(index - k * k, k)
                    term = _tensor_product(
                        p, i, legs[0], _tensor_product(p, j, legs[1], legs[2])
                    )
                for key, c in term.items():
                    expansion[key] = expansion.get(key, Fraction(0)) + coeff * c
            expansion = {key: c for key, c in expansion.items() if c}
            residual = _reduce_tensor(k, expansion, rref, pivots, flags)
            if residual:
                pattern = "(" + ", ".join(
                    "1" if f else "generic" for f in flags
                ) + ")"
                witnesses.append(
                    Witness(
                        p.relation_label(r_idx),
                        pattern,
                        _render_tensor_residual(p.op_names, residual),
                    )
                )
    return CheckReport(not witnesses, tuple(witnesses), checks)


def _reduce_tensor(k, expansion, rref, pivots, flags) -> dict:
    """Canonical residual of an A-B tensor modulo relations on both legs."""
    by_b: dict = {}
    for (a_mono, b_mono), c in expansion.items():
        by_b.setdefault(b_mono, [Fraction(0)] * monomial_count(k))[
            _arity3_index(k, a_mono)
        ] += c
    reduced_a = {
        b_mono: reduce_against(vec, rref, pivots) for b_mono, vec in by_b.items()
    }
    generics = sum(1 for f in flags if not f)
    residual: dict = {}
    if generics < 3:
        # relations are quadratic: nothing to quotient on the B side
        for b_mono, vec in reduced_a.items():
            for index, c in enumerate(vec):
                if c:
                    residual[(_mono_from_index(k, index), b_mono)] = c
        return residual
    # three generic legs: the B side is an arity-3 monomial space with the
    # same relations, reduced independently per surviving A coordinate
    by_a: dict = {}
    for b_mono, vec in reduced_a.items():
        for index, c in enumerate(vec):
            if c:
                by_a.setdefault(index, [Fraction(0)] * monomial_count(k))[
                    _arity3_index(k, b_mono)
                ] += c
    for a_index, vec in by_a.items():
        for b_idx, c in enumerate(reduce_against(vec, rref, pivots)):
            if c:
                residual[
                    (_mono_from_index(k, a_index), _mono_from_index(k, b_idx))
                ] = c
    return residual


# ------------------------------------------------------------------ builtins


def _vec(k: int, *terms) -> tuple[Fraction, ...]:
    """Terms are (coeff, 'L'|'R', i, j)."""
    out = [Fraction(0)] * monomial_count(k)
    for coeff, side, i, j in terms:
        index = l_index(k, i, j) if side == "L" else r_index(k, i, j)
        out[index] += Fraction(coeff)
    return tuple(out)


def _dend_relations():
    p, s = 0, 1
    r1 = _vec(2, (1, "L", p, p), (-1, "R", p, p), (-1, "R", p, s))
    r2 = _vec(2, (1, "L", s, p), (-1, "R", s, p))
    r3 = _vec(2, (1, "L", p, s), (1, "L", s, s), (-1, "R", s, s))
    return r1, r2, r3


def _builtin_dend() -> Presentation:
    r1, r2, r3 = _dend_relations()
    return Presentation(
        op_names=("prec", "succ"),
        relations=(r1, r2, r3),
        unit_alpha=(1, 0),
        unit_beta=(0, 1),
        star=(1, 1),
        relation_names=("R1", "R2", "R3"),
        name="dend",
    )


def _builtin_dipt() -> Presentation:
    st, s = 0, 1
    return Presentation(
        op_names=("star", "succ"),
        relations=(
            _vec(2, (1, "L", st, st), (-1, "R", st, st)),
            _vec(2, (1, "L", st, s), (-1, "R", s, s)),
        ),
        unit_alpha=(1, 0),
        unit_beta=(1, 1),
        star=(1, 0),
        relation_names=("as", "dipt"),
        name="dipt",
    )


def _builtin_noname() -> Presentation:
    r1, r2, r3 = _dend_relations()
    merged = tuple(a + b for a, b in zip(r1, r3))
    return Presentation(
        op_names=("prec", "succ"),
        relations=(merged, r2),
        unit_alpha=(1, 0),
        unit_beta=(0, 1),
        star=(1, 1),
        relation_names=("R1+R3", "R2"),
        name="noname",
    )


def _builtin_admissible() -> Presentation:
    r1, r2, r3 = _dend_relations()
    merged = tuple(a + b + c for a, b, c in zip(r1, r2, r3))
    return Presentation(
        op_names=("prec", "succ"),
        relations=(merged,),
        unit_alpha=(1, 0),
        unit_beta=(0, 1),
        star=(1, 1),
        relation_names=("R1+R2+R3",),
        name="admissible",
    )


def _builtin_predend() -> Presentation:
    p, s, st = 0, 1, 2
    return Presentation(
        op_names=("prec", "succ", "star"),
        relations=(
            _vec(3, (1, "L", st, st), (-1, "R", st, st)),
            _vec(3, (1, "L", p, p), (-1, "R", p, st)),
            _vec(3, (1, "L", s, p), (-1, "R", s, p)),
            _vec(3, (1, "L", st, s), (-1, "R", s, s)),
        ),
        unit_alpha=(1, 0, 1),
        unit_beta=(0, 1, 1),
        star=(0, 0, 1),
        relation_names=("R0", "R1", "R2", "R3"),
        name="predend",
    )


def _builtin_tridend() -> Presentation:
    p, s, d = 0, 1, 2
    return Presentation(
        op_names=("prec", "succ", "dot"),
        relations=(
            _vec(
                3,
                (1, "L", p, p),
                (-1, "R", p, p),
                (-1, "R", p, s),
                (-1, "R", p, d),
            ),
            _vec(3, (1, "L", s, p), (-1, "R", s, p)),
            _vec(
                3,
                (1, "L", p, s),
                (1, "L", s, s),
                (1, "L", d, s),
                (-1, "R", s, s),
            ),
            _vec(3, (1, "L", s, d), (-1, "R", s, d)),
            _vec(3, (1, "L", p, d), (-1, "R", d, s)),
            _vec(3, (1, "L", d, p), (-1, "R", d, p)),
            _vec(3, (1, "L", d, d), (-1, "R", d, d)),
        ),
        unit_alpha=(1, 0, 0),
        unit_beta=(0, 1, 0),
        star=(1, 1, 1),
        relation_names=("T1", "T2", "T3", "T4", "T5", "T6", "T7"),
        name="tridend",
    )


def _builtin_twoas() -> Presentation:
    st, d = 0, 1
    return Presentation(
        op_names=("star", "dot"),
        relations=(
            _vec(2, (1, "L", st, st), (-1, "R", st, st)),
            _vec(2, (1, "L", d, d), (-1, "R", d, d)),
        ),
        unit_alpha=(1, 1),
        unit_beta=(1, 1),
        star=(1, 0),
        relation_names=("star-assoc", "dot-assoc"),
        name="2as",
    )


def _builtin_quadri() -> Presentation:
    nw, ne, se, sw = 0, 1, 2, 3
    succ = (ne, se)
    prec = (nw, sw)
    vee = (se, sw)
    wedge = (ne, nw)
    every = (nw, ne, se, sw)

    def spread(side, fixed, group, fixed_first, sign):
        # expand e.g. (x wedge y) ne z into two L monomials
        terms = []
        for op in group:
            pair = (fixed, op) if fixed_first else (op, fixed)
            terms.append((sign, side, pair[0], pair[1]))
        return terms

    relations = (
        # (x nw y) nw z = x nw (y * z)
        _vec(4, (1, "L", nw, nw), *spread("R", nw, every, True, -1)),
        # (x ne y) nw z = x ne (y prec z)
        _vec(4, (1, "L", ne, nw), *spread("R", ne, prec, True, -1)),
        # (x wedge y) ne z = x ne (y succ z)
        _vec(
            4,
            *spread("L", ne, wedge, False, 1),
            *spread("R", ne, succ, True, -1),
        ),
        # (x sw y) nw z = x sw (y wedge z)
        _vec(4, (1, "L", sw, nw), *spread("R", sw, wedge, True, -1)),
        # (x se y) nw z = x se (y nw z)
        _vec(4, (1, "L", se, nw), (-1, "R", se, nw)),
        # (x vee y) ne z = x se (y ne z)
        _vec(4, *spread("L", ne, vee, False, 1), (-1, "R", se, ne)),
        # (x prec y) sw z = x sw (y vee z)
        _vec(
            4,
            *spread("L", sw, prec, False, 1),
            *spread("R", sw, vee, True, -1),
        ),
        # (x succ y) sw z = x se (y sw z)
        _vec(4, *spread("L", sw, succ, False, 1), (-1, "R", se, sw)),
        # (x * y) se z = x se (y se z)
        _vec(4, *spread("L", se, every, False, 1), (-1, "R", se, se)),
    )
    return Presentation(
        op_names=("nw", "ne", "se", "sw"),
        relations=relations,
        unit_alpha=(1, 0, 0, 0),
        unit_beta=(0, 0, 1, 0),
        star=(1, 1, 1, 1),
        relation_names=tuple(f"q{i + 1}" for i in range(9)),
        name="quadri",
    )


_BUILTINS = {
    "dend": _builtin_dend,
    "dipt": _builtin_dipt,
    "noname": _builtin_noname,
    "admissible": _builtin_admissible,
    "predend": _builtin_predend,
    "tridend": _builtin_tridend,
    "2as": _builtin_twoas,
    "quadri": _builtin_quadri,
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin_presentation(name: str) -> Presentation:
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise ValueError(
            f"unknown presentation {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None
    return factory()


# ---------------------------------------------------------------- file format


class PresentationError(ValueError):
    """Parse failure with 1-based line and column positions."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def format_presentation(p: Presentation) -> str:
    lines = [f"ops: {' '.join(p.op_names)}"]
    for op, alpha, beta in zip(p.op_names, p.unit_alpha, p.unit_beta):
        lines.append(f"unit: {op} {alpha} {beta}")
    if p.star is not None:
        terms = [
            f"{sigma}*{op}" for op, sigma in zip(p.op_names, p.star) if sigma
        ]
        lines.append("star: " + " + ".join(terms))
    for relation in p.relations:
        positive = [
            (c, i) for i, c in enumerate(relation) if c > 0
        ]
        negative = [(-c, i) for i, c in enumerate(relation) if c < 0]
        lines.append(
            "rel: "
            + _format_side(p.op_names, positive)
            + " = "
            + _format_side(p.op_names, negative)
        )
    return "\n".join(lines) + "\n"


def _format_side(op_names, terms) -> str:
    if not terms:
        return "0"
    parts = []
    for coeff, index in terms:
        body = render_monomial(op_names, index)
        if coeff != 1:
            body = f"{coeff} {body}"
        parts.append(body)
    return " + ".join(parts)


def parse_presentation(text: str) -> Presentation:
    op_names: tuple[str, ...] | None = None
    alphas: dict[str, Fraction] = {}
    betas: dict[str, Fraction] = {}
    star: tuple[Fraction, ...] | None = None
    relations: list[tuple[Fraction, ...]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise PresentationError("expected '<keyword>: ...'", line_no)
        keyword, _, rest = line.partition(":")
        keyword = keyword.strip()
        rest = rest.strip()
        if keyword == "ops":
            if op_names is not None:
                raise PresentationError("duplicate ops line", line_no)
            op_names = tuple(rest.split())
            if not op_names:
                raise PresentationError("ops line lists no operations", line_no)
            continue
        if op_names is None:
            raise PresentationError("ops line must come first", line_no)
        if keyword == "unit":
            parts = rest.split()
            if len(parts) != 3:
                raise PresentationError("expected 'unit: <op> <alpha> <beta>'", line_no)
            op, alpha_text, beta_text = parts
            if op not in op_names:
                raise PresentationError(f"unknown operation {op!r}", line_no)
            if op in alphas:
                raise PresentationError(f"duplicate unit line for {op!r}", line_no)
            alphas[op] = _parse_rational(alpha_text, line_no)
            betas[op] = _parse_rational(beta_text, line_no)
        elif keyword == "star":
            if star is not None:
                raise PresentationError("duplicate star line", line_no)
            coeffs = {name: Fraction(0) for name in op_names}
            for chunk in rest.split("+"):
                chunk = chunk.strip()
                if "*" in chunk:
                    coeff_text, _, op = chunk.partition("*")
                    coeff = _parse_rational(coeff_text.strip(), line_no)
                    op = op.strip()
                else:
                    coeff, op = Fraction(1), chunk
                if op not in coeffs:
                    raise PresentationError(f"unknown operation {op!r}", line_no)
                coeffs[op] += coeff
            star = tuple(coeffs[name] for name in op_names)
        elif keyword == "rel":
            relations.append(_parse_relation(rest, op_names, line_no))
        else:
            raise PresentationError(f"unknown keyword {keyword!r}", line_no)
    if op_names is None:
        raise PresentationError("empty presentation", 1)
    alpha = tuple(alphas.get(name, Fraction(0)) for name in op_names)
    beta = tuple(betas.get(name, Fraction(0)) for name in op_names)
    if not relations:
        raise PresentationError("presentation lists no relations", 1)
    try:
        return Presentation(
            op_names=op_names,
            relations=tuple(relations),
            unit_alpha=alpha,
            unit_beta=beta,
            star=star,
        )
    except ValueError as exc:
        raise PresentationError(str(exc), 1) from exc


def _parse_rational(text: str, line_no: int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise PresentationError(f"bad rational {text!r}", line_no) from None


class _TermCursor:
    def __init__(self, tokens: list[tuple[str, int]], line_no: int):
        self.tokens = tokens
        self.line_no = line_no
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, int]:
        if self.pos >= len(self.tokens):
            raise PresentationError("unexpected end of relation", self.line_no)
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, want: str):
        token, column = self.take()
        if token != want:
            raise PresentationError(
                f"expected {want!r}, found {token!r}", self.line_no, column
            )


def _tokenize_side(text: str, line_no: int, offset: int) -> list[tuple[str, int]]:
    tokens = []
    column = offset
    for chunk in text.split(" "):
        if chunk:
            tokens.append((chunk, column + 1))
        column += len(chunk) + 1
    return tokens


def _parse_relation(rest: str, op_names, line_no: int) -> tuple[Fraction, ...]:
    if rest.count("=") != 1:
        raise PresentationError("relation needs exactly one '='", line_no)
    lhs_text, _, rhs_text = rest.partition("=")
    vec = [Fraction(0)] * monomial_count(len(op_names))
    base = len("rel:")
    _parse_side(lhs_text, op_names, line_no, base, vec, Fraction(1))
    _parse_side(
        rhs_text,
        op_names,
        line_no,
        base + len(lhs_text) + 1,
        vec,
        Fraction(-1),
    )
    return tuple(vec)


def _parse_side(text, op_names, line_no, offset, vec, orientation):
    cursor = _TermCursor(_tokenize_side(text, line_no, offset), line_no)
    if cursor.peek() is None:
        raise PresentationError("empty relation side", line_no)
    if cursor.peek() == "0" and len(cursor.tokens) == 1:
        return
    sign = Fraction(1)
    first = True
    while cursor.peek() is not None:
        if not first:
            token, column = cursor.take()
            if token == "+":
                sign = Fraction(1)
            elif token == "-":
                sign = Fraction(-1)
            else:
                raise PresentationError(
                    f"expected '+' or '-', found {token!r}", line_no, column
                )
        first = False
        coeff, index = _parse_term(cursor, op_names, line_no)
        vec[index] += orientation * sign * coeff


def _op_index(op_names, token, line_no, column) -> int:
    try:
        return op_names.index(token)
    except ValueError:
        raise PresentationError(
            f"unknown operation {token!r}", line_no, column
        ) from None


def _parse_term(cursor: _TermCursor, op_names, line_no) -> tuple[Fraction, int]:
    k = len(op_names)
    coeff = Fraction(1)
    token, column = cursor.take()
    if token not in ("(x", "x"):
        coeff = _parse_rational(token, line_no)
        token, column = cursor.take()
    if token == "(x":
        op1, col1 = cursor.take()
        i = _op_index(op_names, op1, line_no, col1)
        cursor.expect("y)")
        op2, col2 = cursor.take()
        j = _op_index(op_names, op2, line_no, col2)
        cursor.expect("z")
        return coeff, l_index(k, i, j)
    if token == "x":
        op1, col1 = cursor.take()
        i = _op_index(op_names, op1, line_no, col1)
        cursor.expect("(y")
        op2, col2 = cursor.take()
        j = _op_index(op_names, op2, line_no, col2)
        cursor.expect("z)")
        return coeff, r_index(k, i, j)
    raise PresentationError(
        f"expected a term starting with '(x' or 'x', found {token!r}",
        line_no,
        column,
    )
