"""Combinatorial basis keys: planar binary trees, planar trees, alternating
trees for a pair of associative products, and words.

Every key type is immutable, hashable, and totally ordered by
(degree, recursive structure), which fixes a canonical term order for
serialization.  Text notation is bit-exact under parse/format round trips:

    binary tree      |            (|,|)        ((|,|),|)
    labeled binary   x1           (x1,(x2,x1))
    planar tree      |            (|,|,|)      ((|,|),|)
    alternating      x2           *(x,x)       .(*(x,x), x)
    word             1            x1x2x1

Whitespace is insignificant everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


class ParseError(ValueError):
    """Raised on malformed tree/word notation; carries the input offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Ordered:
    __slots__ = ()

    def sort_key(self):  # pragma: no cover - overridden
        raise NotImplementedError

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()


@dataclass(frozen=True)
class UnitKey(_Ordered):
    """Dedicated degree-zero basis key for families whose unit is not a tree."""

    def sort_key(self):
        return (0, ())

    def __repr__(self):
        return "UNIT"


UNIT = UnitKey()


@dataclass(frozen=True)
class BinaryTree(_Ordered):
    """Planar binary tree; leaves may carry generator labels.

    degree counts internal vertices, so the single leaf has degree 0 and the
    two-leaf tree has degree 1.
    """

    left: "BinaryTree | None" = None
    right: "BinaryTree | None" = None
    label: int | None = None
    degree: int = field(init=False, compare=False, hash=False)
    _enc: tuple = field(init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("binary tree vertices need both subtrees")
        if self.label is not None and self.left is not None:
            raise ValueError("only leaves carry labels")
        if self.left is None:
            object.__setattr__(self, "degree", 0)
            enc = (0,) if self.label is None else (0, self.label)
        else:
            object.__setattr__(self, "degree", self.left.degree + self.right.degree + 1)
            enc = (1, self.left._enc, self.right._enc)
        object.__setattr__(self, "_enc", enc)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaf_count(self) -> int:
        return self.degree + 1

    def leaf_labels(self) -> tuple[int, ...]:
        if self.is_leaf:
            return () if self.label is None else (self.label,)
        return self.left.leaf_labels() + self.right.leaf_labels()

    def sort_key(self):
        return (self.degree, self._enc)


LEAF = BinaryTree()


def graft(left: BinaryTree, right: BinaryTree) -> BinaryTree:
    """Join two binary trees under a new root."""
    return BinaryTree(left, right)


def decompose(tree: BinaryTree) -> tuple[BinaryTree, BinaryTree]:
    """Inverse of graft; rejects the leaf."""
    if tree.is_leaf:
        raise ValueError("the leaf does not decompose")
    return tree.left, tree.right


@lru_cache(maxsize=None)
def enumerate_pbt(degree: int) -> tuple[BinaryTree, ...]:
    """All unlabeled planar binary trees with the given number of internal
    vertices, in canonical order.  Counts are the Catalan numbers."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return (LEAF,)
    found = []
    for left_deg in range(degree):
        for left in enumerate_pbt(left_deg):
            for right in enumerate_pbt(degree - 1 - left_deg):
                found.append(BinaryTree(left, right))
    return tuple(sorted(found))


def _relabel(tree: BinaryTree, labels: tuple[int, ...]) -> BinaryTree:
    if tree.is_leaf:
        return BinaryTree(label=labels[0])
    n = tree.left.leaf_count
    return BinaryTree(_relabel(tree.left, labels[:n]), _relabel(tree.right, labels[n:]))


@lru_cache(maxsize=None)
def enumerate_labeled_pbt(leaves: int, generators: int) -> tuple[BinaryTree, ...]:
    """Binary trees with the given leaf count, leaves labeled 1..generators."""
    if leaves < 1:
        raise ValueError("need at least one leaf")
    if generators < 1:
        raise ValueError("need at least one generator")
    shapes = enumerate_pbt(leaves - 1)
    found = []
    assignments = [()]
    for _ in range(leaves):
        assignments = [a + (g,) for a in assignments for g in range(1, generators + 1)]
    for shape in shapes:
        for labels in assignments:
            found.append(_relabel(shape, labels))
    return tuple(sorted(found))


@dataclass(frozen=True)
class PlanarTree(_Ordered):
    """Planar rooted tree with no unary vertices.

    degree is the leaf count minus one, matching the grading in which the
    two-leaf tree is the degree-one generator.
    """

    children: tuple["PlanarTree", ...] = ()
    degree: int = field(init=False, compare=False, hash=False)
    _enc: tuple = field(init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if len(self.children) == 1:
            raise ValueError("planar tree vertices need at least two children")
        if not self.children:
            object.__setattr__(self, "degree", 0)
            object.__setattr__(self, "_enc", (0,))
        else:
            leaves = sum(c.degree + 1 for c in self.children)
            object.__setattr__(self, "degree", leaves - 1)
            object.__setattr__(self, "_enc", (1,) + tuple(c._enc for c in self.children))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def leaf_count(self) -> int:
        return self.degree + 1

    def sort_key(self):
        return (self.degree, self._enc)


PLANAR_LEAF = PlanarTree()


def graft_planar(children) -> PlanarTree:
    """Join planar trees under a new root; needs at least two of them."""
    kids = tuple(children)
    if len(kids) < 2:
        raise ValueError("grafting a planar tree needs at least two children")
    return PlanarTree(kids)


@lru_cache(maxsize=None)
def enumerate_planar(degree: int) -> tuple[PlanarTree, ...]:
    """All planar trees of the given degree (leaf count minus one), canonical
    order.  Counts are the super-Catalan numbers 1, 1, 3, 11, 45, 197, ..."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return (PLANAR_LEAF,)
    found = []

    def fill(prefix: tuple[PlanarTree, ...], leaves_left: int):
        if leaves_left == 0:
            found.append(PlanarTree(prefix))
            return
        for take in range(1, leaves_left + 1):
            if not prefix and take == degree + 1:
                continue  # a single child is not a valid vertex
            for child in enumerate_planar(take - 1):
                fill(prefix + (child,), leaves_left - take)

    fill((), degree + 1)
    return tuple(sorted(found))


ALT_STAR = "*"
ALT_DOT = "."


@dataclass(frozen=True)
class AltTree(_Ordered):
    """Tree over two associative products in normal form.

    Internal vertices carry one of two operation labels and never repeat the
    parent's label; leaves carry generator indices.  degree counts leaves.
    """

    op: str | None = None
    children: tuple["AltTree", ...] = ()
    gen: int | None = None
    degree: int = field(init=False, compare=False, hash=False)
    _enc: tuple = field(init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.op is None:
            if self.children or self.gen is None:
                raise ValueError("a leaf is a bare generator")
            object.__setattr__(self, "degree", 1)
            object.__setattr__(self, "_enc", (0, self.gen))
            return
        if self.op not in (ALT_STAR, ALT_DOT):
            raise ValueError(f"unknown operation label {self.op!r}")
        if len(self.children) < 2:
            raise ValueError("internal vertices need at least two children")
        if any(c.op == self.op for c in self.children):
            raise ValueError("children must not repeat the parent label")
        object.__setattr__(self, "degree", sum(c.degree for c in self.children))
        tag = 1 if self.op == ALT_STAR else 2
        object.__setattr__(self, "_enc", (tag,) + tuple(c._enc for c in self.children))

    @property
    def is_leaf(self) -> bool:
        return self.op is None

    def leaf_labels(self) -> tuple[int, ...]:
        if self.is_leaf:
            return (self.gen,)
        out: tuple[int, ...] = ()
        for c in self.children:
            out += c.leaf_labels()
        return out

    def sort_key(self):
        return (self.degree, self._enc)


def alt_generator(index: int = 1) -> AltTree:
    return AltTree(gen=index)


@lru_cache(maxsize=None)
def _enumerate_alt_rooted(degree: int, op: str, generators: int) -> tuple[AltTree, ...]:
    # Trees of the given degree whose root carries exactly the label op.
    if degree < 2:
        return ()
    other = ALT_DOT if op == ALT_STAR else ALT_STAR
    found = []

    def parts(prefix: tuple[AltTree, ...], left: int):
        if left == 0:
            found.append(AltTree(op, prefix))
            return
        for take in range(1, left + 1):
            if not prefix and take == degree:
                continue  # a single child is not a valid vertex
            if take == 1:
                for g in range(1, generators + 1):
                    parts(prefix + (AltTree(gen=g),), left - take)
            else:
                for sub in _enumerate_alt_rooted(take, other, generators):
                    parts(prefix + (sub,), left - take)

    parts((), degree)
    return tuple(found)


@lru_cache(maxsize=None)
def enumerate_alt(degree: int, generators: int = 1) -> tuple[AltTree, ...]:
    """Alternating trees of the given degree, canonical order.

    On one generator the counts are 1, 2, 6, 22, 90, ... (twice the
    super-Catalan numbers from degree two on).
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    if degree == 1:
        return tuple(AltTree(gen=g) for g in range(1, generators + 1))
    both = _enumerate_alt_rooted(degree, ALT_STAR, generators) + _enumerate_alt_rooted(
        degree, ALT_DOT, generators
    )
    return tuple(sorted(both))


@dataclass(frozen=True)
class Word(_Ordered):
    """A word in numbered generators; the empty word is the unit."""

    letters: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)


EMPTY_WORD = Word()


@lru_cache(maxsize=None)
def enumerate_words(degree: int, generators: int = 1) -> tuple[Word, ...]:
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return (EMPTY_WORD,)
    shorter = enumerate_words(degree - 1, generators)
    return tuple(
        Word(w.letters + (g,)) for w in shorter for g in range(1, generators + 1)
    )


class _Cursor:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str):
        self.skip_ws()
        if not self.text.startswith(expected, self.pos):
            raise ParseError(f"expected {expected!r}", self.pos)
        self.pos += len(expected)

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(self.text[start : self.pos])

    def done(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("trailing input", self.pos)


def _parse_generator_index(cur: _Cursor) -> int:
    cur.take("x")
    # A bare x means x1.
    cur_pos = cur.pos
    if cur_pos < len(cur.text) and cur.text[cur_pos].isdigit():
        return cur.take_int()
    return 1


def _parse_pbt(cur: _Cursor, labeled: bool) -> BinaryTree:
    ch = cur.peek()
    if ch == "|":
        if labeled:
            raise ParseError("labeled trees use x<index> leaves", cur.pos)
        cur.take("|")
        return LEAF
    if ch == "x":
        if not labeled:
            raise ParseError("unlabeled trees use | leaves", cur.pos)
        return BinaryTree(label=_parse_generator_index(cur))
    cur.take("(")
    left = _parse_pbt(cur, labeled)
    cur.take(",")
    right = _parse_pbt(cur, labeled)
    cur.take(")")
    return BinaryTree(left, right)


def _parse_planar(cur: _Cursor) -> PlanarTree:
    if cur.peek() == "|":
        cur.take("|")
        return PLANAR_LEAF
    cur.take("(")
    children = [_parse_planar(cur)]
    cur.take(",")
    children.append(_parse_planar(cur))
    while cur.peek() == ",":
        cur.take(",")
        children.append(_parse_planar(cur))
    cur.take(")")
    return PlanarTree(tuple(children))


def _parse_alt(cur: _Cursor) -> AltTree:
    ch = cur.peek()
    if ch == "x":
        return AltTree(gen=_parse_generator_index(cur))
    if ch in (ALT_STAR, ALT_DOT):
        op = ch
        cur.take(ch)
        cur.take("(")
        children = [_parse_alt(cur)]
        cur.take(",")
        children.append(_parse_alt(cur))
        while cur.peek() == ",":
            cur.take(",")
            children.append(_parse_alt(cur))
        cur.take(")")
        try:
            return AltTree(op, tuple(children))
        except ValueError as exc:
            raise ParseError(str(exc), cur.pos) from exc
    raise ParseError("expected a generator or *(...)/.(...)", cur.pos)


def _parse_word(cur: _Cursor) -> Word:
    letters = [_parse_generator_index(cur)]
    while cur.peek() == "x":
        letters.append(_parse_generator_index(cur))
    return Word(tuple(letters))


def parse_tree(text: str, family: str):
    """Parse basis-key notation for the given family id.

    Family ids: dend, tridend, 2as, zinbiel, as, mag.
    """
    cur = _Cursor(text)
    ch = cur.peek()
    if family == "dend":
        key = _parse_pbt(cur, labeled=False)
    elif family == "tridend":
        key = _parse_planar(cur)
    elif family == "mag":
        if ch == "1":
            cur.take("1")
            key = UNIT
        else:
            key = _parse_pbt(cur, labeled=True)
    elif family == "2as":
        if ch == "1":
            cur.take("1")
            key = UNIT
        else:
            key = _parse_alt(cur)
    elif family in ("zinbiel", "as"):
        if ch == "1":
            cur.take("1")
            key = EMPTY_WORD
        else:
            key = _parse_word(cur)
    else:
        raise ValueError(f"unknown family id {family!r}")
    cur.done()
    return key


def format_tree(key, family: str) -> str:
    """Canonical notation for a basis key; inverse of parse_tree."""
    if family == "dend":
        return _format_pbt(key, labeled=False)
    if family == "tridend":
        return _format_planar(key)
    if family == "mag":
        if key == UNIT:
            return "1"
        return _format_pbt(key, labeled=True)
    if family == "2as":
        if key == UNIT:
            return "1"
        return _format_alt(key)
    if family in ("zinbiel", "as"):
        if key.is_empty:
            return "1"
        return "".join(f"x{g}" for g in key.letters)
    raise ValueError(f"unknown family id {family!r}")


def _format_pbt(tree: BinaryTree, labeled: bool) -> str:
    if tree.is_leaf:
        return f"x{tree.label}" if labeled else "|"
    return f"({_format_pbt(tree.left, labeled)},{_format_pbt(tree.right, labeled)})"


def _format_planar(tree: PlanarTree) -> str:
    if tree.is_leaf:
        return "|"
    return "(" + ",".join(_format_planar(c) for c in tree.children) + ")"


def _format_alt(tree: AltTree) -> str:
    if tree.is_leaf:
        return f"x{tree.gen}"
    return tree.op + "(" + ",".join(_format_alt(c) for c in tree.children) + ")"
