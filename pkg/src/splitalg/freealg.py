"""Free algebras for the six concrete operation families.

Each family fixes a basis (a key type from splitalg.trees), a set of binary
operations, and unit actions on the augmented algebra.  Products are defined
on basis keys by structural recursion and extended bilinearly; the defining
relations of each family are enforced by the test suite rather than assumed.

Unit actions follow the usual splitting conventions: for dendriform-style
operations 1 acts by

    1 < a = 0,   a < 1 = a,   1 > a = a,   a > 1 = 0,

the middle product of the tridendriform family has 1.a = 0 = a.1, and the
combined product * always satisfies 1*a = a = a*1.  Products of two pure
units are defined only for operations that are everywhere unital (both
products of the two-associative family, the magmatic product, concatenation,
and every family's *); the dendriform-style operations raise
UndefinedProductError there.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactlin import FreeModuleElement
from . import trees
from .trees import (
    ALT_DOT,
    ALT_STAR,
    AltTree,
    BinaryTree,
    EMPTY_WORD,
    LEAF,
    UNIT,
    Word,
)


class UndefinedProductError(ArithmeticError):
    """A product of two pure unit terms that the family leaves undefined."""


class Family(enum.Enum):
    DENDRIFORM = "dend"
    TRIDENDRIFORM = "tridend"
    TWO_ASSOCIATIVE = "2as"
    ZINBIEL = "zinbiel"
    ASSOCIATIVE = "as"
    MAGMATIC = "mag"

    @classmethod
    def from_id(cls, ident: "Family | str") -> "Family":
        if isinstance(ident, Family):
            return ident
        for fam in cls:
            if fam.value == ident:
                return fam
        raise ValueError(f"unknown family id {ident!r}")


# Operation tables: names, unit actions a∘1 = alpha·a and 1∘a = beta·a,
# the name of the combined associative product if the family has one, and
# whether 1∘1 is defined (and equal to 1) for each operation.
_OPS: dict[Family, tuple[str, ...]] = {
    Family.DENDRIFORM: ("prec", "succ"),
    Family.TRIDENDRIFORM: ("prec", "succ", "dot"),
    Family.TWO_ASSOCIATIVE: ("star", "dot"),
    Family.ZINBIEL: ("succ",),
    Family.ASSOCIATIVE: ("star",),
    Family.MAGMATIC: ("dot",),
}

_STAR: dict[Family, str | None] = {
    Family.DENDRIFORM: "star",
    Family.TRIDENDRIFORM: "star",
    Family.TWO_ASSOCIATIVE: "star",
    Family.ZINBIEL: "star",
    Family.ASSOCIATIVE: "star",
    Family.MAGMATIC: None,
}

_ALPHA: dict[tuple[Family, str], int] = {
    (Family.DENDRIFORM, "prec"): 1,
    (Family.DENDRIFORM, "succ"): 0,
    (Family.TRIDENDRIFORM, "prec"): 1,
    (Family.TRIDENDRIFORM, "succ"): 0,
    (Family.TRIDENDRIFORM, "dot"): 0,
    (Family.TWO_ASSOCIATIVE, "star"): 1,
    (Family.TWO_ASSOCIATIVE, "dot"): 1,
    (Family.ZINBIEL, "succ"): 0,
    (Family.ASSOCIATIVE, "star"): 1,
    (Family.MAGMATIC, "dot"): 1,
}

_BETA: dict[tuple[Family, str], int] = {
    (Family.DENDRIFORM, "prec"): 0,
    (Family.DENDRIFORM, "succ"): 1,
    (Family.TRIDENDRIFORM, "prec"): 0,
    (Family.TRIDENDRIFORM, "succ"): 1,
    (Family.TRIDENDRIFORM, "dot"): 0,
    (Family.TWO_ASSOCIATIVE, "star"): 1,
    (Family.TWO_ASSOCIATIVE, "dot"): 1,
    (Family.ZINBIEL, "succ"): 1,
    (Family.ASSOCIATIVE, "star"): 1,
    (Family.MAGMATIC, "dot"): 1,
}

# Operations for which 1∘1 = 1; all others raise on a pure unit pair.
_UNIT_TOTAL = {
    (Family.TWO_ASSOCIATIVE, "star"),
    (Family.TWO_ASSOCIATIVE, "dot"),
    (Family.ASSOCIATIVE, "star"),
    (Family.MAGMATIC, "dot"),
}


def operations(family: Family) -> tuple[str, ...]:
    return _OPS[family]

def star_name(family: Family) -> str | None:
    return _STAR[family]


def unit_key(family: Family):
    if family in (Family.DENDRIFORM,):
        return LEAF
    if family is Family.TRIDENDRIFORM:
        return trees.PLANAR_LEAF
    if family in (Family.TWO_ASSOCIATIVE, Family.MAGMATIC):
        return UNIT
    return EMPTY_WORD


def key_degree(family: Family, key) -> int:
    """Degree of a basis key in the family's grading."""
    if family is Family.DENDRIFORM:
        return key.degree
    if family is Family.TRIDENDRIFORM:
        return key.degree
    if family is Family.TWO_ASSOCIATIVE:
        return 0 if key == UNIT else key.degree
    if family is Family.MAGMATIC:
        return 0 if key == UNIT else key.leaf_count
    return key.degree


def key_content(family: Family, key) -> tuple[int, ...]:
    """Sorted generator multiset of a key; used for graded block splitting."""
    if family is Family.MAGMATIC:
        return () if key == UNIT else tuple(sorted(key.leaf_labels()))
    if family in (Family.ZINBIEL, Family.ASSOCIATIVE):
        return tuple(sorted(key.letters))
    if family is Family.TWO_ASSOCIATIVE:
        return () if key == UNIT else tuple(sorted(key.leaf_labels()))
    return (1,) * key_degree(family, key)


def enumerate_basis(family: Family, degree: int, generators: int = 1):
    """Basis keys of one homogeneous degree, in canonical order."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return (unit_key(family),)
    if family is Family.DENDRIFORM:
        _require_single_generator(family, generators)
        return trees.enumerate_pbt(degree)
    if family is Family.TRIDENDRIFORM:
        _require_single_generator(family, generators)
        return trees.enumerate_planar(degree)
    if family is Family.TWO_ASSOCIATIVE:
        return trees.enumerate_alt(degree, generators)
    if family is Family.MAGMATIC:
        return trees.enumerate_labeled_pbt(degree, generators)
    return trees.enumerate_words(degree, generators)


def _require_single_generator(family: Family, generators: int):
    if generators != 1:
        raise ValueError(
            f"{family.value} bases are implemented on one generator only"
        )


def generator(family: Family, index: int = 1):
    """The degree-one basis key for a numbered generator."""
    if family is Family.DENDRIFORM:
        if index != 1:
            _require_single_generator(family, index)
        return BinaryTree(LEAF, LEAF)
    if family is Family.TRIDENDRIFORM:
        if index != 1:
            _require_single_generator(family, index)
        return trees.graft_planar((trees.PLANAR_LEAF, trees.PLANAR_LEAF))
    if family is Family.TWO_ASSOCIATIVE:
        return AltTree(gen=index)
    if family is Family.MAGMATIC:
        return BinaryTree(label=index)
    return Word((index,))


@dataclass(frozen=True)
class Element:
    """A finite linear combination of basis keys of one family."""

    family: Family
    value: FreeModuleElement

    @classmethod
    def zero(cls, family: Family) -> "Element":
        return cls(family, FreeModuleElement())

    @classmethod
    def unit(cls, family: Family) -> "Element":
        return cls(family, FreeModuleElement.basis(unit_key(family)))

    @classmethod
    def from_key(cls, family: Family, key) -> "Element":
        return cls(family, FreeModuleElement.basis(key))

    @classmethod
    def from_terms(cls, family: Family, terms) -> "Element":
        return cls(family, FreeModuleElement(terms))

    def items(self):
        return self.value.items()

    def coefficient(self, key) -> Fraction:
        return self.value.coefficient(key)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.family, self.value + other.value)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.family, self.value - other.value)

    def __neg__(self) -> "Element":
        return Element(self.family, -self.value)

    def scale(self, scalar) -> "Element":
        return Element(self.family, self.value.scale(scalar))

    def _check(self, other: "Element"):
        if self.family is not other.family:
            raise ValueError("elements belong to different families")

    def __str__(self) -> str:
        return format_element(self)


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(element: Element) -> str:
    """Render an element in canonical term order.

    Coefficients of absolute value one are folded into the sign; other
    coefficients are printed as integers or p/q before the key.
    """
    items = element.items()
    if not items:
        return "0"
    parts = []
    for i, (key, coeff) in enumerate(items):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = trees.format_tree(key, element.family.value)
        if mag != 1:
            body = f"{format_coefficient(mag)} {body}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def parse_element(text: str, family: Family) -> Element:
    """Parse a single basis key as an element (the CLI input format)."""
    key = trees.parse_tree(text, family.value)
    return Element.from_key(family, key)


def product(op: str, x: Element, y: Element) -> Element:
    """Bilinear product for any family operation, including its *."""
    x._check(y)
    family = x.family
    if op != _STAR[family] and op not in _OPS[family]:
        raise ValueError(f"{family.value} has no operation {op!r}")
    out = FreeModuleElement()
    for k1, c1 in x.value.raw_items():
        for k2, c2 in y.value.raw_items():
            term = _key_product(family, op, k1, k2)
            out = out + term.scale(c1 * c2)
    return Element(family, out)


def _key_product(family: Family, op: str, k1, k2) -> FreeModuleElement:
    unit = unit_key(family)
    star = _STAR[family]
    if k1 == unit and k2 == unit:
        if op == star or (family, op) in _UNIT_TOTAL:
            return FreeModuleElement.basis(unit)
        raise UndefinedProductError(
            f"{family.value}: {op} is undefined on two unit terms"
        )
    if k1 == unit:
        beta = 1 if op == star else _BETA[(family, op)]
        return FreeModuleElement(((k2, beta),)) if beta else FreeModuleElement()
    if k2 == unit:
        alpha = 1 if op == star else _ALPHA[(family, op)]
        return FreeModuleElement(((k1, alpha),)) if alpha else FreeModuleElement()
    return _KEY_PRODUCTS[family](op, k1, k2)


def _elem(family: Family, key) -> Element:
    return Element.from_key(family, key)


# --- dendriform on planar binary trees ---------------------------------

@lru_cache(maxsize=None)
def _dend_key(op: str, t: BinaryTree, s: BinaryTree) -> FreeModuleElement:
    fam = Family.DENDRIFORM
    if op == "star":
        return _dend_key("prec", t, s) + _dend_key("succ", t, s)
    if op == "prec":
        # t < s = t_left ∨ (t_right * s)
        inner = product("star", _elem(fam, t.right), _elem(fam, s))
        return FreeModuleElement(
            (trees.graft(t.left, u), c) for u, c in inner.value.raw_items()
        )
    if op == "succ":
        # t > s = (t * s_left) ∨ s_right
        inner = product("star", _elem(fam, t), _elem(fam, s.left))
        return FreeModuleElement(
            (trees.graft(u, s.right), c) for u, c in inner.value.raw_items()
        )
    raise ValueError(f"dend has no operation {op!r}")


def dend_product(op: str, x: Element, y: Element) -> Element:
    if x.family is not Family.DENDRIFORM:
        raise ValueError("dend_product needs dendriform elements")
    return product(op, x, y)


# --- tridendriform on planar trees --------------------------------------

@lru_cache(maxsize=None)
def _tridend_key(op: str, t, s) -> FreeModuleElement:
    fam = Family.TRIDENDRIFORM
    if op == "star":
        return (
            _tridend_key("prec", t, s)
            + _tridend_key("succ", t, s)
            + _tridend_key("dot", t, s)
        )
    tc, sc = t.children, s.children
    if op == "prec":
        # absorb s into the last child of t: ∨(t0,...,t(n-1)*s)
        inner = product("star", _elem(fam, tc[-1]), _elem(fam, s))
        return FreeModuleElement(
            (trees.graft_planar(tc[:-1] + (u,)), c)
            for u, c in inner.value.raw_items()
        )
    if op == "succ":
        inner = product("star", _elem(fam, t), _elem(fam, sc[0]))
        return FreeModuleElement(
            (trees.graft_planar((u,) + sc[1:]), c)
            for u, c in inner.value.raw_items()
        )
    if op == "dot":
        # fuse the facing children at a common root
        inner = product("star", _elem(fam, tc[-1]), _elem(fam, sc[0]))
        return FreeModuleElement(
            (trees.graft_planar(tc[:-1] + (u,) + sc[1:]), c)
            for u, c in inner.value.raw_items()
        )
    raise ValueError(f"tridend has no operation {op!r}")


def tridend_product(op: str, x: Element, y: Element) -> Element:
    if x.family is not Family.TRIDENDRIFORM:
        raise ValueError("tridend_product needs tridendriform elements")
    return product(op, x, y)


# --- two associative products on alternating trees ----------------------

def _alt_factors(key: AltTree, op_label: str) -> tuple[AltTree, ...]:
    if not key.is_leaf and key.op == op_label:
        return key.children
    return (key,)


def _twoas_key(op: str, u: AltTree, v: AltTree) -> FreeModuleElement:
    label = ALT_STAR if op == "star" else ALT_DOT
    if op not in ("star", "dot"):
        raise ValueError(f"2as has no operation {op!r}")
    children = _alt_factors(u, label) + _alt_factors(v, label)
    return FreeModuleElement.basis(AltTree(label, children))


def twoas_product(op: str, x: Element, y: Element) -> Element:
    if x.family is not Family.TWO_ASSOCIATIVE:
        raise ValueError("twoas_product needs two-associative elements")
    return product(op, x, y)


# --- Zinbiel on words ----------------------------------------------------

@lru_cache(maxsize=None)
def _shuffles(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    if not u:
        return (v,)
    if not v:
        return (u,)
    first = tuple((u[0],) + w for w in _shuffles(u[1:], v))
    second = tuple((v[0],) + w for w in _shuffles(u, v[1:]))
    return first + second


def _zinbiel_key(op: str, u: Word, v: Word) -> FreeModuleElement:
    if op == "star":
        return _zinbiel_key("succ", u, v) + _zinbiel_key("succ", v, u)
    if op != "succ":
        raise ValueError(f"zinbiel has no operation {op!r}")
    # u > v shuffles u into everything before the last letter of v
    head, last = v.letters[:-1], v.letters[-1]
    return FreeModuleElement(
        (Word(w + (last,)), 1) for w in _shuffles(u.letters, head)
    )


def zinbiel_product(op: str, x: Element, y: Element) -> Element:
    if x.family is not Family.ZINBIEL:
        raise ValueError("zinbiel_product needs Zinbiel elements")
    return product(op, x, y)


# --- associative on words ------------------------------------------------

def _as_key(op: str, u: Word, v: Word) -> FreeModuleElement:
    if op != "star":
        raise ValueError(f"as has no operation {op!r}")
    return FreeModuleElement.basis(u + v)


def as_product(op: str, x: Element, y: Element) -> Element:
    if x.family is not Family.ASSOCIATIVE:
        raise ValueError("as_product needs associative elements")
    return product(op, x, y)


# --- magmatic on labeled binary trees ------------------------------------

def _mag_key(op: str, t: BinaryTree, s: BinaryTree) -> FreeModuleElement:
    if op != "dot":
        raise ValueError(f"mag has no operation {op!r}")
    return FreeModuleElement.basis(trees.graft(t, s))


def mag_product(x: Element, y: Element) -> Element:
    if x.family is not Family.MAGMATIC:
        raise ValueError("mag_product needs magmatic elements")
    return product("dot", x, y)


_KEY_PRODUCTS = {
    Family.DENDRIFORM: _dend_key,
    Family.TRIDENDRIFORM: _tridend_key,
    Family.TWO_ASSOCIATIVE: _twoas_key,
    Family.ZINBIEL: _zinbiel_key,
    Family.ASSOCIATIVE: _as_key,
    Family.MAGMATIC: _mag_key,
}
