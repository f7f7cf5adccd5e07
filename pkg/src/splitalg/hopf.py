"""Connected graded coalgebra and Hopf structure on the free algebras.

The coproduct is the unique extension of x -> x(x)1 + 1(x)x on generators
that is a morphism for the family operations, where products of pure
tensors follow the unit-aware mixed rule

    (a(x)b) o (a'(x)b') = (a * a') (x) (b o b')   if b or b' has positive
                                                  degree,
    (a(x)1) o (a'(x)1) = (a o a') (x) 1,

for the dendriform, tridendriform and Zinbiel families.  The families whose
operations are everywhere unital (two-associative, associative, magmatic)
use the componentwise rule (a(x)b) o (a'(x)b') = (a o a')(x)(b o b')
instead.

Explicit coproducts: deconcatenation for Zinbiel, unshuffling for the
associative family; the tree families recurse through decompositions of a
basis tree into products of strictly smaller trees.

All computations are exact and memoized per basis key.  The memo tables are
read-mostly dicts filled after each full computation, which is safe for the
single-threaded CLI and for CPython-style concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .exactlin import FreeModuleElement, RationalMatrix, kernel_basis
from . import trees
from .freealg import (
    Element,
    Family,
    enumerate_basis,
    format_coefficient,
    generator,
    key_content,
    product,
    star_name,
    unit_key,
)

# Families whose tensor square multiplies componentwise.
_DIAGONAL = {Family.TWO_ASSOCIATIVE, Family.ASSOCIATIVE, Family.MAGMATIC}


@dataclass(frozen=True)
class TensorElement:
    """A linear combination of tensors of basis keys, all with `legs` legs."""

    family: Family
    legs: int
    value: FreeModuleElement

    @classmethod
    def zero(cls, family: Family, legs: int = 2) -> "TensorElement":
        return cls(family, legs, FreeModuleElement())

    @classmethod
    def from_terms(cls, family: Family, legs: int, terms) -> "TensorElement":
        return cls(family, legs, FreeModuleElement(terms))

    def items(self):
        return self.value.items()

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        return TensorElement(self.family, self.legs, self.value + other.value)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        return TensorElement(self.family, self.legs, self.value - other.value)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.family, self.legs, -self.value)

    def scale(self, scalar) -> "TensorElement":
        return TensorElement(self.family, self.legs, self.value.scale(scalar))

    def swap(self) -> "TensorElement":
        """Flip the two legs of a twofold tensor."""
        if self.legs != 2:
            raise ValueError("swap needs a twofold tensor")
        return TensorElement(
            self.family,
            2,
            FreeModuleElement(((b, a), c) for (a, b), c in self.value.raw_items()),
        )

    def _check(self, other: "TensorElement"):
        if self.family is not other.family or self.legs != other.legs:
            raise ValueError("tensor shapes do not match")

    def __str__(self) -> str:
        return format_tensor(self)


def tensor_of(*factors: Element) -> TensorElement:
    """Outer product of elements, one per leg."""
    family = factors[0].family
    terms = [((), Fraction(1))]
    for el in factors:
        if el.family is not family:
            raise ValueError("tensor factors belong to different families")
        terms = [
            (keys + (k,), c * ck)
            for keys, c in terms
            for k, ck in el.value.raw_items()
        ]
    return TensorElement.from_terms(family, len(factors), terms)


def _el(family: Family, key) -> Element:
    return Element.from_key(family, key)


def tensor_product_mixed(op: str, u: TensorElement, v: TensorElement) -> TensorElement:
    """Product of twofold tensors for a family operation.

    Uses the unit-aware mixed rule, or the componentwise rule for the
    everywhere-unital families.
    """
    u._check(v)
    if u.legs != 2:
        raise ValueError("mixed products act on twofold tensors")
    family = u.family
    unit = unit_key(family)
    star = star_name(family)
    diagonal = family in _DIAGONAL
    out = TensorElement.zero(family, 2)
    for (a, b), cu in u.value.raw_items():
        for (a2, b2), cv in v.value.raw_items():
            c = cu * cv
            if diagonal:
                left = product(op, _el(family, a), _el(family, a2))
                right = product(op, _el(family, b), _el(family, b2))
            elif b == unit and b2 == unit:
                left = product(op, _el(family, a), _el(family, a2))
                right = Element.unit(family)
            else:
                left = product(star, _el(family, a), _el(family, a2))
                right = product(op, _el(family, b), _el(family, b2))
            out = out + tensor_of(left, right).scale(c)
    return out


_COPRODUCT_MEMO: dict[tuple[Family, object], TensorElement] = {}


def coproduct(x: Element) -> TensorElement:
    """The coassociative coproduct, extended linearly from basis keys."""
    family = x.family
    out = TensorElement.zero(family, 2)
    for key, c in x.value.raw_items():
        out = out + _coproduct_key(family, key).scale(c)
    return out


def _coproduct_key(family: Family, key) -> TensorElement:
    memo_key = (family, key)
    cached = _COPRODUCT_MEMO.get(memo_key)
    if cached is not None:
        return cached
    result = _COPRODUCT_RULES[family](family, key)
    _COPRODUCT_MEMO[memo_key] = result
    return result


def _primitive_pair(family: Family, key) -> TensorElement:
    unit = unit_key(family)
    return TensorElement.from_terms(
        family, 2, (((key, unit), 1), ((unit, key), 1))
    )


def _unit_tensor(family: Family) -> TensorElement:
    unit = unit_key(family)
    return TensorElement.from_terms(family, 2, (((unit, unit), 1),))


def _cop_dend(family: Family, key) -> TensorElement:
    if key.is_leaf:
        return _unit_tensor(family)
    if key.left.is_leaf and key.right.is_leaf:
        return _primitive_pair(family, key)
    # t ∨ s = t > Y < s, so the coproduct factors through smaller trees.
    cop_y = _coproduct_key(family, generator(family))
    left = tensor_product_mixed(
        "succ", _coproduct_key(family, key.left), cop_y
    )
    return tensor_product_mixed("prec", left, _coproduct_key(family, key.right))


def _cop_tridend(family: Family, key) -> TensorElement:
    if key.is_leaf:
        return _unit_tensor(family)
    kids = key.children
    y = generator(family)
    if key == y:
        return _primitive_pair(family, key)
    cop_y = _coproduct_key(family, y)
    if len(kids) == 2:
        tail = tensor_product_mixed("prec", cop_y, _coproduct_key(family, kids[1]))
        if kids[0].is_leaf:
            # ∨(|, s) = Y < s
            return tail
        # ∨(t, s) = t > (Y < s)
        return tensor_product_mixed("succ", _coproduct_key(family, kids[0]), tail)
    # ∨(t0,...,tn) = ∨(t0,...,t(n-1)) . (Y < tn)
    prefix = trees.graft_planar(kids[:-1])
    tail = tensor_product_mixed("prec", cop_y, _coproduct_key(family, kids[-1]))
    return tensor_product_mixed("dot", _coproduct_key(family, prefix), tail)


def _alt_split(key: trees.AltTree) -> tuple[trees.AltTree, trees.AltTree]:
    kids = key.children
    head = kids[0]
    rest = kids[1] if len(kids) == 2 else trees.AltTree(key.op, kids[1:])
    return head, rest


def _cop_twoas(family: Family, key) -> TensorElement:
    if key == trees.UNIT:
        return _unit_tensor(family)
    if key.is_leaf:
        return _primitive_pair(family, key)
    head, rest = _alt_split(key)
    if key.op == trees.ALT_STAR:
        return tensor_product_mixed(
            "star", _coproduct_key(family, head), _coproduct_key(family, rest)
        )
    # dot is only infinitesimally compatible:
    # cop(x.y) = (x(x)1).cop(y) + cop(x).(1(x)y) - x(x)y
    x_el = _el(family, head)
    y_el = _el(family, rest)
    first = tensor_product_mixed(
        "dot", tensor_of(x_el, Element.unit(family)), _coproduct_key(family, rest)
    )
    second = tensor_product_mixed(
        "dot", _coproduct_key(family, head), tensor_of(Element.unit(family), y_el)
    )
    return first + second - tensor_of(x_el, y_el)


def _cop_zinbiel(family: Family, key) -> TensorElement:
    letters = key.letters
    terms = [
        ((trees.Word(letters[:i]), trees.Word(letters[i:])), 1)
        for i in range(len(letters) + 1)
    ]
    return TensorElement.from_terms(family, 2, terms)


def _cop_as(family: Family, key) -> TensorElement:
    letters = key.letters
    n = len(letters)
    terms = []
    for mask in range(1 << n):
        left = tuple(letters[i] for i in range(n) if mask >> i & 1)
        right = tuple(letters[i] for i in range(n) if not mask >> i & 1)
        terms.append(((trees.Word(left), trees.Word(right)), 1))
    return TensorElement.from_terms(family, 2, terms)


def _cop_mag(family: Family, key) -> TensorElement:
    if key == trees.UNIT:
        return _unit_tensor(family)
    if key.is_leaf:
        return _primitive_pair(family, key)
    return tensor_product_mixed(
        "dot", _coproduct_key(family, key.left), _coproduct_key(family, key.right)
    )


_COPRODUCT_RULES: dict[Family, Callable] = {
    Family.DENDRIFORM: _cop_dend,
    Family.TRIDENDRIFORM: _cop_tridend,
    Family.TWO_ASSOCIATIVE: _cop_twoas,
    Family.ZINBIEL: _cop_zinbiel,
    Family.ASSOCIATIVE: _cop_as,
    Family.MAGMATIC: _cop_mag,
}


def counit(x: Element) -> Fraction:
    """Coefficient of the unit key; kills every positive-degree key."""
    return x.coefficient(unit_key(x.family))


def reduced_coproduct(x: Element) -> TensorElement:
    """cop(x) - x(x)1 - 1(x)x, for x in the augmentation ideal."""
    family = x.family
    if counit(x):
        raise ValueError("reduced coproduct needs a counit-free element")
    unit_el = Element.unit(family)
    return coproduct(x) - tensor_of(x, unit_el) - tensor_of(unit_el, x)


def expand_leg(t: TensorElement, leg: int, fn: Callable[[Element], TensorElement]) -> TensorElement:
    """Replace one leg by a twofold tensor, splicing it in place."""
    family = t.family
    out = TensorElement.zero(family, t.legs + 1)
    for keys, c in t.value.raw_items():
        inner = fn(_el(family, keys[leg]))
        out = out + TensorElement.from_terms(
            family,
            t.legs + 1,
            (
                (keys[:leg] + pair + keys[leg + 1 :], c * ci)
                for pair, ci in inner.value.raw_items()
            ),
        )
    return out


def coassociativity_check(family: Family, max_degree: int, generators: int = 1) -> bool:
    """(cop (x) id)cop = (id (x) cop)cop on every basis key up to max_degree."""
    for degree in range(max_degree + 1):
        for key in enumerate_basis(family, degree, generators):
            t = _coproduct_key(family, key)
            left = expand_leg(t, 0, coproduct)
            right = expand_leg(t, 1, coproduct)
            if left != right:
                return False
    return True


def _strip_unit(x: Element) -> Element:
    c = counit(x)
    return x - Element.unit(x.family).scale(c) if c else x


def _reduced_first_leg(t: TensorElement) -> TensorElement:
    family = t.family
    out = TensorElement.zero(family, t.legs + 1)
    for keys, c in t.value.raw_items():
        inner = reduced_coproduct(_el(family, keys[0]))
        if inner.is_zero():
            continue
        out = out + TensorElement.from_terms(
            family,
            t.legs + 1,
            ((pair + keys[1:], c * ci) for pair, ci in inner.value.raw_items()),
        )
    return out


def filtration_degree(x: Element) -> int:
    """Least r with x in F_r of the coradical-style filtration.

    F_0 is the line of the unit, and x lies in F_r when the reduced
    coproduct of x lands in F_(r-1) (x) F_(r-1).  For a connected grading
    this is the number of times the reduced coproduct can be iterated on x
    before it vanishes.
    """
    xbar = _strip_unit(x)
    if xbar.is_zero():
        return 0
    t = reduced_coproduct(xbar)
    r = 1
    while not t.is_zero():
        t = _reduced_first_leg(t)
        r += 1
    return r


_ANTIPODE_MEMO: dict[tuple[Family, object], Element] = {}


def antipode(x: Element) -> Element:
    """The convolution inverse of the identity.

    Computed by the standard connected recursion S(x) = -x - sum of
    S(x')*x'' over the reduced coproduct, with * the family's associative
    product (the magmatic family uses its single product).
    """
    family = x.family
    out = Element.zero(family)
    for key, c in x.value.raw_items():
        out = out + _antipode_key(family, key).scale(c)
    return out


def _antipode_key(family: Family, key) -> Element:
    memo_key = (family, key)
    cached = _ANTIPODE_MEMO.get(memo_key)
    if cached is not None:
        return cached
    unit = unit_key(family)
    if key == unit:
        result = Element.unit(family)
    else:
        mul = star_name(family) or "dot"
        acc = -_el(family, key)
        for (u, v), c in reduced_coproduct(_el(family, key)).value.raw_items():
            acc = acc - product(mul, _antipode_key(family, u), _el(family, v)).scale(c)
        result = acc
    _ANTIPODE_MEMO[memo_key] = result
    return result


def primitive_basis(family: Family, degree: int, generators: int = 1) -> list[Element]:
    """Basis of the primitives in one homogeneous degree.

    The kernel of the reduced coproduct is computed exactly, split into
    blocks by generator content (the coproduct never mixes contents).
    """
    if degree < 1:
        raise ValueError("primitives live in positive degree")
    keys = list(enumerate_basis(family, degree, generators))
    blocks: dict[tuple[int, ...], list] = {}
    for key in keys:
        blocks.setdefault(key_content(family, key), []).append(key)
    out: list[Element] = []
    for content in sorted(blocks):
        block = blocks[content]
        images = [reduced_coproduct(_el(family, k)) for k in block]
        pair_index: dict = {}
        for img in images:
            for pair, _ in img.items():
                if pair not in pair_index:
                    pair_index[pair] = len(pair_index)
        rows = [[Fraction(0)] * len(block) for _ in range(len(pair_index))]
        for col, img in enumerate(images):
            for pair, c in img.value.raw_items():
                rows[pair_index[pair]][col] = c
        if not rows:
            vectors = [
                tuple(Fraction(int(i == j)) for j in range(len(block)))
                for i in range(len(block))
            ]
        else:
            vectors = kernel_basis(RationalMatrix(rows))
        for vec in vectors:
            out.append(Element.from_terms(family, zip(block, vec)))
    return out


def is_primitive(x: Element) -> bool:
    return reduced_coproduct(x).is_zero()


@dataclass(frozen=True)
class Endomorphism:
    """A degree-truncated linear endomorphism, tabulated on basis keys."""

    family: Family
    max_degree: int
    generators: int
    images: Mapping

    @classmethod
    def tabulate(
        cls,
        family: Family,
        max_degree: int,
        fn: Callable[[Element], Element],
        generators: int = 1,
    ) -> "Endomorphism":
        images = {}
        for degree in range(max_degree + 1):
            for key in enumerate_basis(family, degree, generators):
                images[key] = fn(_el(family, key))
        return cls(family, max_degree, generators, images)

    @classmethod
    def identity(cls, family: Family, max_degree: int, generators: int = 1) -> "Endomorphism":
        return cls.tabulate(family, max_degree, lambda e: e, generators)

    @classmethod
    def unit_counit(cls, family: Family, max_degree: int, generators: int = 1) -> "Endomorphism":
        unit_el = Element.unit(family)
        return cls.tabulate(
            family, max_degree, lambda e: unit_el.scale(counit(e)), generators
        )

    @classmethod
    def antipode_table(cls, family: Family, max_degree: int, generators: int = 1) -> "Endomorphism":
        return cls.tabulate(family, max_degree, antipode, generators)

    def apply(self, x: Element) -> Element:
        out = Element.zero(self.family)
        for key, c in x.value.raw_items():
            image = self.images.get(key)
            if image is None:
                raise ValueError("input exceeds the tabulated degree")
            out = out + image.scale(c)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return (
            self.family is other.family
            and self.max_degree == other.max_degree
            and dict(self.images) == dict(other.images)
        )


def convolution(mu: str, f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """The convolution x -> mu((f (x) g)(cop x)), truncated like f and g."""
    if f.family is not g.family or f.max_degree != g.max_degree or f.generators != g.generators:
        raise ValueError("convolution needs endomorphisms of one truncation")
    family = f.family
    images = {}
    for key in f.images:
        acc = Element.zero(family)
        for (u, v), c in _coproduct_key(family, key).value.raw_items():
            acc = acc + product(
                mu, f.apply(_el(family, u)), g.apply(_el(family, v))
            ).scale(c)
        images[key] = acc
    return Endomorphism(family, f.max_degree, f.generators, images)


def format_tensor(t: TensorElement, ascii_mode: bool = False) -> str:
    """Render a tensor with x(x)1-style terms first, then 1(x)x, then the
    rest in canonical order."""
    sym = "(x)" if ascii_mode else "⊗"
    family = t.family
    unit = unit_key(family)

    def term_class(keys) -> int:
        if all(k == unit for k in keys[1:]):
            return 0
        if keys[0] == unit:
            return 1
        return 2

    items = sorted(
        t.value.raw_items(),
        key=lambda kv: (term_class(kv[0]), tuple(k.sort_key() for k in kv[0])),
    )
    if not items:
        return "0"
    parts = []
    for i, (keys, coeff) in enumerate(items):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = sym.join(trees.format_tree(k, family.value) for k in keys)
        if mag != 1:
            body = f"{format_coefficient(mag)} {body}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
