"""Arithmetic in F_p[x]: gcds with Bezout certificates, matrix rank mod p,
and extraction of the common root of two polynomials reduced mod p.

Python integers are arbitrary precision, so the same code paths serve
word-sized primes and primes with dozens of digits.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .linalg import IntMatrix
from .ntheory import is_prime
from .poly import IntPoly, MonicIntPoly

__all__ = [
    "PrimeFieldPoly",
    "poly_gcd_mod_p",
    "poly_ext_gcd_mod_p",
    "rank_mod_p",
    "common_root_mod_p",
]


@dataclass(frozen=True)
class PrimeFieldPoly:
    """Polynomial over F_p, coefficients leading-first and reduced to [0, p).

    The zero polynomial is the empty tuple; otherwise the leading residue
    is nonzero.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2:
            raise InputError(f"modulus must be >= 2, got {self.p}")
        reduced = tuple(int(c) % self.p for c in self.coeffs)
        i = 0
        while i < len(reduced) and reduced[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", reduced[i:])

    @classmethod
    def from_int_poly(cls, poly: IntPoly, p: int) -> PrimeFieldPoly:
        return cls(p, poly.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> PrimeFieldPoly:
        if self.is_zero():
            return self
        inv = pow(self.coeffs[0], -1, self.p)
        return PrimeFieldPoly(self.p, tuple(c * inv % self.p for c in self.coeffs))

    def evaluate(self, n: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = (acc * n + c) % self.p
        return acc


def _check_same_modulus(f: PrimeFieldPoly, g: PrimeFieldPoly) -> int:
    if f.p != g.p:
        raise InputError(f"modulus mismatch: {f.p} vs {g.p}")
    return f.p


def _mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(tuple(v % p for v in out))


def _sub(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    la, lb = len(a), len(b)
    n = max(la, lb)
    out = []
    for i in range(n):
        x = a[i - (n - la)] if i >= n - la else 0
        y = b[i - (n - lb)] if i >= n - lb else 0
        out.append((x - y) % p)
    return _strip(tuple(out))


def _strip(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    i = 0
    while i < len(coeffs) and coeffs[i] == 0:
        i += 1
    return coeffs[i:]


def _divmod(num: tuple[int, ...], den: tuple[int, ...], p: int):
    # Quotient and remainder in F_p[x]; den nonzero.
    num_l = list(num)
    lead_inv = pow(den[0], -1, p)
    q_len = len(num_l) - len(den) + 1
    if q_len <= 0:
        return (), _strip(tuple(num_l))
    quotient = [0] * q_len
    for i in range(q_len):
        c = num_l[i] % p
        if c:
            scale = c * lead_inv % p
            quotient[i] = scale
            for k in range(len(den)):
                num_l[i + k] = (num_l[i + k] - scale * den[k]) % p
    return _strip(tuple(quotient)), _strip(tuple(num_l[q_len:]))


def poly_gcd_mod_p(f: PrimeFieldPoly, g: PrimeFieldPoly) -> PrimeFieldPoly:
    """Monic gcd in F_p[x] by the Euclidean algorithm."""
    p = _check_same_modulus(f, g)
    if f.is_zero() and g.is_zero():
        raise InputError("gcd of two zero polynomials is undefined")
    a, b = f.coeffs, g.coeffs
    while b:
        _, r = _divmod(a, b, p)
        a, b = b, r
    return PrimeFieldPoly(p, a).monic()


def poly_ext_gcd_mod_p(
    f: PrimeFieldPoly, g: PrimeFieldPoly
) -> tuple[PrimeFieldPoly, PrimeFieldPoly, PrimeFieldPoly]:
    """(gcd, u, v) with u*f + v*g = gcd in F_p[x] and gcd monic."""
    p = _check_same_modulus(f, g)
    if f.is_zero() and g.is_zero():
        raise InputError("gcd of two zero polynomials is undefined")
    r0, r1 = f.coeffs, g.coeffs
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    scale = lambda cs: tuple(c * inv % p for c in cs)
    return (
        PrimeFieldPoly(p, scale(r0)),
        PrimeFieldPoly(p, scale(s0)),
        PrimeFieldPoly(p, scale(t0)),
    )


def rank_mod_p(matrix: IntMatrix, p: int) -> int:
    """Rank of the matrix reduced mod p, by Gaussian elimination over F_p."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    a = [[v % p for v in row] for row in matrix.to_rows()]
    rows, cols = matrix.rows, matrix.cols
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], -1, p)
        base = a[rank]
        for i in range(rank + 1, rows):
            factor = a[i][col] * inv % p
            if factor:
                row = a[i]
                for j in range(col, cols):
                    row[j] = (row[j] - factor * base[j]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def common_root_mod_p(f: MonicIntPoly, g: MonicIntPoly, p: int) -> int | None:
    """The residue c with gcd(f, g) = x - c in F_p[x], or None.

    None means the gcd mod p does not have degree exactly 1; no root search
    is attempted for higher-degree gcds.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    d = poly_gcd_mod_p(
        PrimeFieldPoly.from_int_poly(f, p), PrimeFieldPoly.from_int_poly(g, p)
    )
    if d.degree != 1:
        return None
    return -d.coeffs[1] % p
