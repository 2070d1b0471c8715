"""Integer polynomials: parsing, arithmetic, evaluation, and gcd over Z[x].

Coefficient order is LEADING-FIRST throughout the package: ``(1, 0, 3)``
is ``x^2 + 3``.  This is the reverse of the constant-first convention many
libraries use, so it is worth stating once and loudly.  The zero polynomial
is the empty coefficient tuple.

All values are immutable after construction and every function here is
pure, so everything is safe to share across threads.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, NamedTuple

from .errors import InputError, ParseError

__all__ = [
    "IntPoly",
    "MonicIntPoly",
    "parse_poly",
    "reduce_mod",
    "gcd_over_Z",
]


@dataclass(frozen=True, eq=False)
class IntPoly:
    """Dense univariate polynomial over Z, coefficients leading-first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", coeffs[i:])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise InputError("the zero polynomial has no leading coefficient")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, n: int) -> int:
        """Exact value at an integer point, by Horner's rule."""
        acc = 0
        for c in self.coeffs:
            acc = acc * n + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        a, b = self.coeffs, _coeffs_of(other)
        return IntPoly(_tail_zip(a, b, lambda x, y: x + y))

    def __radd__(self, other: int) -> IntPoly:
        return self + other

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        a, b = self.coeffs, _coeffs_of(other)
        return IntPoly(_tail_zip(a, b, lambda x, y: x - y))

    def __rsub__(self, other: int) -> IntPoly:
        return (-self) + other

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        b = _coeffs_of(other)
        a = self.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPoly(tuple(out))

    def __rmul__(self, other: int) -> IntPoly:
        return self * other

    def __pow__(self, exponent: int) -> IntPoly:
        if exponent < 0:
            raise InputError("polynomial exponent must be nonnegative")
        result = IntPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        deg = self.degree
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = deg - i
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = "x" if e == 1 else f"x^{e}"
            else:
                body = f"{mag}*x" if e == 1 else f"{mag}*x^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


@dataclass(frozen=True, eq=False)
class MonicIntPoly(IntPoly):
    """An IntPoly whose leading coefficient is exactly 1 and degree is >= 1.

    Arithmetic inherited from IntPoly returns plain IntPoly values, since
    sums and products of monic polynomials need not be monic.
    """

    def __post_init__(self):
        super().__post_init__()
        if self.degree < 1:
            raise InputError(
                f"need degree >= 1, got degree {self.degree}"
                " (constants are not accepted)"
            )
        if self.coeffs[0] != 1:
            raise InputError(
                f"leading coefficient is {self.coeffs[0]}, expected 1 (monic)"
            )

    @classmethod
    def from_poly(cls, p: IntPoly) -> MonicIntPoly:
        return cls(p.coeffs)

    @classmethod
    def parse(cls, text: str) -> MonicIntPoly:
        return cls(parse_poly(text).coeffs)


def _coeffs_of(value: IntPoly | int) -> tuple[int, ...]:
    if isinstance(value, IntPoly):
        return value.coeffs
    if isinstance(value, int):
        return (value,)
    raise TypeError(f"expected IntPoly or int, got {type(value).__name__}")


def _tail_zip(a, b, op) -> tuple[int, ...]:
    # Coefficients align at the constant term, so zip the reversed tuples.
    out = [
        op(x, y)
        for x, y in itertools.zip_longest(reversed(a), reversed(b), fillvalue=0)
    ]
    return tuple(reversed(out))


def reduce_mod(p: IntPoly, m: int) -> tuple[int, ...]:
    """Coefficientwise canonical residues in [0, m); the length is preserved.

    The leading residue may be 0 for a general IntPoly (never for a
    MonicIntPoly with m >= 2), in which case the reduced polynomial has
    lower degree than ``p``.
    """
    if m < 2:
        raise InputError(f"modulus must be >= 2, got {m}")
    return tuple(c % m for c in p.coeffs)


# ---------------------------------------------------------------------------
# Parsing
#
# Grammar (whitespace insignificant):
#
#   expr   := term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := base ('^' natlit)?
#   base   := intlit | 'x' | '(' expr ')' | '-' factor
#
# Exponents must be nonnegative integer literals.
# ---------------------------------------------------------------------------


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    out: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch == "x":
            out.append(_Token("x", ch, i))
            i += 1
            continue
        if ch in "+-*^()":
            out.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(_Token("eof", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self._tokens = _tokenize(text)
        self._index = 0

    def peek(self) -> _Token:
        return self._tokens[self._index]

    def advance(self) -> _Token:
        tok = self._tokens[self._index]
        self._index += 1
        return tok

    def expr(self) -> IntPoly:
        poly = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> IntPoly:
        poly = self.factor()
        while self.peek().kind == "*":
            self.advance()
            poly = poly * self.factor()
        return poly

    def factor(self) -> IntPoly:
        base = self.base()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "int":
                raise ParseError(
                    "exponent must be a nonnegative integer literal", tok.pos
                )
            self.advance()
            base = base ** int(tok.text)
        return base

    def base(self) -> IntPoly:
        tok = self.advance()
        if tok.kind == "int":
            return IntPoly((int(tok.text),))
        if tok.kind == "x":
            return IntPoly((1, 0))
        if tok.kind == "(":
            poly = self.expr()
            closing = self.advance()
            if closing.kind != ")":
                raise ParseError("expected ')'", closing.pos)
            return poly
        if tok.kind == "-":
            return -self.factor()
        if tok.kind == "eof":
            raise ParseError("unexpected end of input", tok.pos)
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)


def parse_poly(text: str) -> IntPoly:
    """Parse an expression in ``x`` over Z and expand it exactly.

    Accepted syntax: integer literals, ``x``, ``+ - * ^``, parentheses,
    unary minus; ``^`` takes a nonnegative integer literal.  Raises
    ParseError with the offending position on bad input.
    """
    parser = _Parser(text)
    if parser.peek().kind == "eof":
        raise ParseError("empty input", 0)
    poly = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "eof":
        raise ParseError(f"unexpected {trailing.text!r}", trailing.pos)
    return poly


# ---------------------------------------------------------------------------
# gcd over Z[x]
# ---------------------------------------------------------------------------


def gcd_over_Z(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x] with positive leading coefficient.

    Computed by the Euclidean algorithm over Q followed by denominator
    clearing and content removal; the result is the constant 1 exactly when
    f and g are coprime over Q.
    """
    if f.is_zero() and g.is_zero():
        raise InputError("gcd of two zero polynomials is undefined")
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while b:
        a, b = b, _qpoly_rem(a, b)
    return _primitive_part(a)


def _qpoly_rem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    # Remainder of the division num = q*den + rem over Q; lists leading-first.
    num = list(num)
    dn = len(den)
    lead = den[0]
    while len(num) >= dn:
        q = num[0] / lead
        if q:
            for k in range(1, dn):
                num[k] -= q * den[k]
        num.pop(0)
        while num and num[0] == 0:
            num.pop(0)
    return num


def _primitive_part(coeffs_q: Iterable[Fraction]) -> IntPoly:
    coeffs_q = list(coeffs_q)
    scale = reduce(math.lcm, (c.denominator for c in coeffs_q), 1)
    ints = [int(c * scale) for c in coeffs_q]
    content = reduce(math.gcd, ints, 0)
    ints = [v // content for v in ints]
    if ints[0] < 0:
        ints = [-v for v in ints]
    return IntPoly(tuple(ints))
