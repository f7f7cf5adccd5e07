"""Exact linear algebra over the rationals.

Everything here is computed with fractions.Fraction, so no result is ever
rounded.  The module provides finitely supported linear combinations over an
arbitrary ordered key type (FreeModuleElement), dense rational matrices, and
fraction-free rank / kernel / span computations used by the rest of the
package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence


def as_fraction(value: int | Fraction) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject floats outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class FreeModuleElement:
    """A finitely supported map from basis keys to nonzero rationals.

    Keys must be hashable and mutually comparable; zero coefficients are
    dropped eagerly so that equality is equality of supports and values.
    Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            c = as_fraction(coeff)
            if not c:
                continue
            acc = data.get(key)
            if acc is None:
                data[key] = c
            else:
                acc = acc + c
                if acc:
                    data[key] = acc
                else:
                    del data[key]
        self._terms = data

    @classmethod
    def zero(cls) -> "FreeModuleElement":
        return cls()

    @classmethod
    def basis(cls, key) -> "FreeModuleElement":
        return cls(((key, Fraction(1)),))

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def items(self) -> list:
        """Terms as (key, coefficient) pairs, sorted by the key order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def raw_items(self):
        """Unsorted view, for hot loops that do not need determinism."""
        return self._terms.items()

    def support(self) -> list:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "FreeModuleElement") -> "FreeModuleElement":
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            acc = data.get(key)
            if acc is None:
                data[key] = c
            else:
                acc = acc + c
                if acc:
                    data[key] = acc
                else:
                    del data[key]
        out = FreeModuleElement.__new__(FreeModuleElement)
        out._terms = data
        return out

    def __neg__(self) -> "FreeModuleElement":
        out = FreeModuleElement.__new__(FreeModuleElement)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other: "FreeModuleElement") -> "FreeModuleElement":
        return self + (-other)

    def scale(self, scalar: int | Fraction) -> "FreeModuleElement":
        s = as_fraction(scalar)
        out = FreeModuleElement.__new__(FreeModuleElement)
        out._terms = {} if not s else {k: c * s for k, c in self._terms.items()}
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "FreeModuleElement()"
        body = ", ".join(f"{k!r}: {c}" for k, c in self.items())
        return f"FreeModuleElement({{{body}}})"


def lin_combine(c1, u: FreeModuleElement, c2, v: FreeModuleElement) -> FreeModuleElement:
    """c1*u + c2*v, exactly."""
    return u.scale(c1) + v.scale(c2)


class RationalMatrix:
    """A dense matrix of Fractions, stored row-major and immutable."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        self.entries = rows
        self.rows = len(rows)
        self.cols = width

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(r) for r in self.entries]!r})"


def _integer_rows(entries: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    # Clear denominators and divide out content, row by row.
    out = []
    for row in entries:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def rank(matrix: RationalMatrix | Sequence[Sequence]) -> int:
    """Rank over Q, via integer forward elimination.

    Rows are rescaled to coprime integers after every update, which keeps
    the arithmetic exact without the divisibility bookkeeping of
    fraction-free schemes.  Pivoting is deterministic: columns are scanned
    left to right and the first row with a nonzero entry is used.
    """
    entries = matrix.entries if isinstance(matrix, RationalMatrix) else tuple(
        tuple(as_fraction(x) for x in row) for row in matrix
    )
    if not entries:
        return 0
    work = _integer_rows(entries)
    nrows, ncols = len(work), len(entries[0])
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        p = work[r][c]
        for i in range(r + 1, nrows):
            fi = work[i][c]
            if not fi:
                continue
            row = [p * a - fi * b for a, b in zip(work[i], work[r])]
            g = 0
            for v in row:
                g = gcd(g, v)
            work[i] = [v // g for v in row] if g > 1 else row
        r += 1
        if r == nrows:
            break
    return r


def row_reduce(rows: Sequence[Sequence]) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (nonzero rows of the RREF, pivot column indices).  Same
    deterministic pivot order as rank().
    """
    work = [[as_fraction(x) for x in row] for row in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    rref = tuple(tuple(row) for row in work[: len(pivots)])
    return rref, tuple(pivots)


def reduce_against(vector: Sequence, rref: Sequence[Sequence[Fraction]], pivots: Sequence[int]) -> tuple[Fraction, ...]:
    """Reduce a vector modulo the row space described by an RREF."""
    v = [as_fraction(x) for x in vector]
    for row, p in zip(rref, pivots):
        f = v[p]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return tuple(v)


def kernel_basis(matrix: RationalMatrix | Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, echelonized deterministically.

    The returned vectors are the RREF of the standard free-column kernel
    vectors, so repeated calls give byte-identical output.
    """
    entries = matrix.entries if isinstance(matrix, RationalMatrix) else tuple(
        tuple(as_fraction(x) for x in row) for row in matrix
    )
    if not entries:
        return []
    ncols = len(entries[0])
    rref, pivots = row_reduce(entries)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    vectors = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, p in zip(rref, pivots):
            v[p] = -row[fc]
        vectors.append(v)
    if not vectors:
        return []
    reduced, _ = row_reduce(vectors)
    return [tuple(row) for row in reduced]


def span_rank(vectors: Sequence[Sequence]) -> int:
    vecs = [v for v in vectors]
    if not vecs:
        return 0
    return rank(vecs)


def span_contains(vectors: Sequence[Sequence], candidate: Sequence) -> bool:
    """Is candidate in the linear span of vectors?  Exact."""
    vecs = [tuple(as_fraction(x) for x in v) for v in vectors]
    cand = tuple(as_fraction(x) for x in candidate)
    if not any(cand):
        return True
    if not vecs:
        return False
    base = rank(vecs)
    return rank(vecs + [cand]) == base


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """Do two lists of vectors span the same subspace?"""
    ra = span_rank(a)
    rb = span_rank(b)
    if ra != rb:
        return False
    joint = [tuple(as_fraction(x) for x in v) for v in a]
    joint += [tuple(as_fraction(x) for x in v) for v in b]
    return span_rank(joint) == ra
