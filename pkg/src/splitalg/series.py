"""Exact truncated power series over the rationals.

Supports the generating-series bookkeeping for the free algebras: signed
dimension series (coefficient of x^n is (-1)^n times the degree-n basis
count), composition and compositional inversion, Taylor expansion of
rational functions, and the alternating-integer-coefficient screen.

A small expression parser turns text like "-x/(1+x)^2" into an exact
ratio of integer polynomials for the command line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import as_fraction

DEFAULT_ORDER = 10


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients for degrees 0..order; arithmetic never reads beyond."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        assert self.coefficients, "a series stores at least the constant term"
        object.__setattr__(
            self, "coefficients", tuple(map(as_fraction, self.coefficients))
        )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_coefficients(cls, coefficients, order: int) -> "PowerSeries":
        coeffs = [as_fraction(c) for c in coefficients][: order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls.from_coefficients((), order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """The series x."""
        return cls.from_coefficients((0, 1), order)

    def coefficient(self, n: int) -> Fraction:
        assert 0 <= n <= self.order
        return self.coefficients[n]

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries.from_coefficients(self.coefficients, order)

    def _matched(self, other: "PowerSeries"):
        order = min(self.order, other.order)
        return order, self.coefficients, other.coefficients

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order, a, b = self._matched(other)
        return PowerSeries(tuple(a[n] + b[n] for n in range(order + 1)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        order, a, b = self._matched(other)
        return PowerSeries(tuple(a[n] - b[n] for n in range(order + 1)))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coefficients))

    def scale(self, scalar) -> "PowerSeries":
        c = as_fraction(scalar)
        return PowerSeries(tuple(c * a for a in self.coefficients))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        order, a, b = self._matched(other)
        out = [Fraction(0)] * (order + 1)
        for n in range(order + 1):
            if not a[n]:
                continue
            for m in range(order + 1 - n):
                if b[m]:
                    out[n + m] += a[n] * b[m]
        return PowerSeries(tuple(out))

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coefficients):
            if not c:
                continue
            if n == 0:
                body = str(c)
            else:
                power = "x" if n == 1 else f"x^{n}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts) if parts else "0"


def compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f after g, truncated; g must have zero constant term."""
    if g.coefficients[0]:
        raise ValueError("composition needs a zero constant term")
    order = min(f.order, g.order)
    result = PowerSeries.zero(order)
    g = g.truncate(order)
    for c in reversed(f.coefficients[: order + 1]):
        result = result * g + PowerSeries.from_coefficients((c,), order)
    return result


def comp_inverse(f: PowerSeries) -> PowerSeries:
    """The series g with f(g(x)) = x = g(f(x)), degree by degree."""
    if f.coefficients[0]:
        raise ValueError("compositional inverse needs f(0) = 0")
    if f.order < 1 or not f.coefficients[1]:
        raise ValueError("compositional inverse needs f'(0) != 0")
    order = f.order
    lead = f.coefficients[1]
    coeffs = [Fraction(0), 1 / lead] + [Fraction(0)] * (order - 1)
    for n in range(2, order + 1):
        partial = compose(f, PowerSeries(tuple(coeffs)))
        coeffs[n] = -partial.coefficient(n) / lead
    g = PowerSeries(tuple(coeffs))
    assert compose(f, g).coefficients == PowerSeries.identity(order).coefficients
    return g


def expand_rational(numer, denom, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor expansion of the polynomial ratio numer/denom at 0."""
    num = [as_fraction(c) for c in numer]
    den = [as_fraction(c) for c in denom]
    if not den or not den[0]:
        raise ValueError("denominator must be nonzero at 0")
    out = [Fraction(0)] * (order + 1)
    for n in range(order + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for m in range(1, min(n, len(den) - 1) + 1):
            acc -= den[m] * out[n - m]
        out[n] = acc / den[0]
    return PowerSeries(tuple(out))


def alternating_integer_check(f: PowerSeries) -> bool:
    """Are all coefficients integers of sign (-1)^n (or zero)?

    This is the necessary condition a series must satisfy to be the
    signed dimension series of an operad with the inverse playing the
    dual role.
    """
    assert not f.coefficients[0], "screen applies to series with f(0) = 0"
    for n in range(1, f.order + 1):
        c = f.coefficients[n]
        if c.denominator != 1:
            return False
        if c and (c > 0) != (n % 2 == 0):
            return False
    return True


def dimension_sequence(f: PowerSeries, count: int) -> tuple[int, ...]:
    """|a_n| for n = 1..count; requires the alternating-integer screen."""
    assert count <= f.order
    assert alternating_integer_check(f.truncate(count))
    return tuple(abs(int(f.coefficients[n])) for n in range(1, count + 1))


def signed_dimension_series(dims, order: int) -> PowerSeries:
    """Series with coefficient (-1)^n dims[n-1] at x^n."""
    coeffs = [Fraction(0)] * (order + 1)
    for n, d in enumerate(dims, start=1):
        if n > order:
            break
        coeffs[n] = Fraction((-1) ** n * d)
    return PowerSeries(tuple(coeffs))


# ----------------------------------------------------- rational functions


def _poly_trim(coeffs) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while len(out) > 1 and not out[-1]:
        out.pop()
    return tuple(out)


def _poly_add(a, b):
    size = max(len(a), len(b))
    return _poly_trim(
        tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(size)
        )
    )


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_neg(a):
    return tuple(-c for c in a)


@dataclass(frozen=True)
class RationalFunction:
    """An exact ratio of polynomials, closed under field operations."""

    numer: tuple[Fraction, ...]
    denom: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "numer", _poly_trim(map(as_fraction, self.numer)))
        object.__setattr__(self, "denom", _poly_trim(map(as_fraction, self.denom)))
        if self.denom == (Fraction(0),):
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        return cls((as_fraction(value),), (Fraction(1),))

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls((Fraction(0), Fraction(1)), (Fraction(1),))

    def __add__(self, other):
        return RationalFunction(
            _poly_add(
                _poly_mul(self.numer, other.denom),
                _poly_mul(other.numer, self.denom),
            ),
            _poly_mul(self.denom, other.denom),
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalFunction(_poly_neg(self.numer), self.denom)

    def __mul__(self, other):
        return RationalFunction(
            _poly_mul(self.numer, other.numer), _poly_mul(self.denom, other.denom)
        )

    def __truediv__(self, other):
        if other.numer == (Fraction(0),):
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(
            _poly_mul(self.numer, other.denom), _poly_mul(self.denom, other.numer)
        )

    def __pow__(self, exponent: int):
        assert exponent >= 0
        out = RationalFunction.constant(1)
        for _ in range(exponent):
            out = out * self
        return out

    def expand(self, order: int = DEFAULT_ORDER) -> PowerSeries:
        return expand_rational(self.numer, self.denom, order)


class SeriesParseError(ValueError):
    """Expression parse failure with a 1-based character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


def parse_rational_function(text: str) -> RationalFunction:
    """Parse +, -, *, /, ^ over integers and x into an exact ratio.

    Grammar (usual precedence, ^ binds tightest and takes a nonnegative
    integer exponent):

        expr   := term (('+' | '-') term)*
        term   := factor (('*' | '/') factor)*
        factor := ('+' | '-')* atom ('^' integer)?
        atom   := integer | 'x' | '(' expr ')'
    """
    parser = _ExpressionParser(text)
    result = parser.parse_expression()
    parser.skip_spaces()
    if parser.pos < len(parser.text):
        raise SeriesParseError(
            f"unexpected character {parser.text[parser.pos]!r}", parser.pos + 1
        )
    return result


class _ExpressionParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_expression(self) -> RationalFunction:
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> RationalFunction:
        value = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.parse_factor()
            if op == "/":
                if rhs.numer == (Fraction(0),):
                    raise SeriesParseError("division by zero", self.pos)
                value = value / rhs
            else:
                value = value * rhs
        return value

    def parse_factor(self) -> RationalFunction:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.text[self.pos] == "-":
                sign = -sign
            self.pos += 1
        value = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            exponent = self.parse_integer("exponent")
            value = value**exponent
        return value if sign > 0 else -value

    def parse_atom(self) -> RationalFunction:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.parse_expression()
            if self.peek() != ")":
                raise SeriesParseError("expected ')'", self.pos + 1)
            self.pos += 1
            return value
        if ch == "x":
            self.pos += 1
            return RationalFunction.x()
        if ch.isdigit():
            return RationalFunction.constant(self.parse_integer("number"))
        raise SeriesParseError(
            f"expected a number, 'x' or '(', found {ch!r}" if ch
            else "unexpected end of expression",
            self.pos + 1,
        )

    def parse_integer(self, what: str) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SeriesParseError(f"expected an {what}", start + 1)
        return int(self.text[start : self.pos])


# The signed dimension series of the operads whose tables the package
# verifies, as rational functions of x.  The quadri sequence is only
# conjectured to match the free-algebra dimensions.
NAMED_SERIES = {
    "dend": "-x/(1+x)^2",
    "predend": "-1+x+1/(1+x)^2",
    "admissible": "-1+x^2+1/(1+x)",
    "quadri": "x*(-1+x)/(1+x)^3",
}

CONJECTURAL_SERIES = frozenset({"quadri"})


def named_series(name: str, order: int = DEFAULT_ORDER) -> PowerSeries:
    try:
        text = NAMED_SERIES[name]
    except KeyError:
        raise ValueError(
            f"unknown series {name!r}; choose from {', '.join(sorted(NAMED_SERIES))}"
        ) from None
    return parse_rational_function(text).expand(order)
