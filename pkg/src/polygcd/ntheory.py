"""Integer primality, factorization, divisor enumeration, gcd, and CRT.

Primality below MR_DETERMINISTIC_BOUND (about 3.3e24) is decided by
Miller-Rabin with a fixed base set for which the test is deterministic.
Above the bound the test is Baillie-PSW, a probable-prime test with no
known counterexample; callers that report primes can flag those as
"probable" by comparing against the bound.

Pollard rho uses a seeded generator, so factorizations are reproducible
across runs and thread schedules.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import CapExceeded, FactorizationFailed, InputError

__all__ = [
    "MR_DETERMINISTIC_BOUND",
    "TRIAL_DIVISION_BOUND",
    "DIVISOR_CAP",
    "Factorization",
    "is_prime",
    "factor",
    "is_squarefree",
    "divisors",
    "crt",
    "int_gcd",
    "ext_gcd",
]

# Miller-Rabin with these bases is deterministic below this bound.
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

TRIAL_DIVISION_BOUND = 10**6
DIVISOR_CAP = 2**20
POLLARD_MAX_ATTEMPTS = 20
DEFAULT_POLLARD_SEED = 0


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(1000)


def int_gcd(a: int, b: int) -> int:
    """Nonnegative gcd, with the convention gcd(0, 0) = 0."""
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g and g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# Primality
# ---------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    """Primality test for n >= 0; deterministic below MR_DETERMINISTIC_BOUND."""
    if n < 0:
        raise InputError("is_prime expects a nonnegative integer")
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:25]:  # primes below 100
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 101 * 101:
        return True
    if n < MR_DETERMINISTIC_BOUND:
        return all(_mr_passes(n, a) for a in _MR_BASES)
    return _baillie_psw(n)


def _mr_passes(n: int, a: int) -> bool:
    # One strong-probable-prime round; n odd, n > a.
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _baillie_psw(n: int) -> bool:
    # n odd, no factor below 1000.
    if not _mr_passes(n, 2):
        return False
    root = math.isqrt(n)
    if root * root == n:
        return False
    d = _lucas_discriminant(n)
    if d is None:
        return False
    return _strong_lucas_passes(n, d)


def _lucas_discriminant(n: int) -> int | None:
    # First D in 5, -7, 9, -11, ... with Jacobi(D, n) = -1; None means a
    # factor of n surfaced during the search (so n is composite).
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            return d
        if j == 0 and abs(d) != n:
            return None
        d = -(d + 2) if d > 0 else -(d - 2)


def _jacobi(a: int, n: int) -> int:
    # Jacobi symbol (a/n) for odd n > 0.
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_passes(n: int, d: int) -> bool:
    # Strong Lucas probable-prime test with Selfridge parameters P=1,
    # Q=(1-D)/4; n odd, Jacobi(D, n) = -1.
    p, q = 1, (1 - d) // 4
    delta = n + 1
    s = (delta & -delta).bit_length() - 1
    odd = delta >> s
    u, v, qk = 1, p, q % n
    for bit in bin(odd)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = _half(p * u + v, n), _half(d * u + p * v, n)
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _half(x: int, n: int) -> int:
    # x/2 mod n for odd n.
    x %= n
    if x & 1:
        x += n
    return (x >> 1) % n


# ---------------------------------------------------------------------------
# Factorization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization: sign * prod(p**e) == n, primes ascending."""

    n: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sign not in (1, -1) or self.n == 0:
            raise InputError("factorization needs a nonzero integer and sign +-1")
        product = self.sign
        previous = 1
        for p, e in self.factors:
            if p <= previous or e < 1:
                raise InputError("primes must be strictly increasing, exponents >= 1")
            previous = p
            product *= p**e
        if product != self.n:
            raise InputError("factor product does not reproduce the integer")

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def factor(n: int, *, seed: int | None = None) -> Factorization:
    """Complete factorization of a nonzero integer.

    Trial division up to TRIAL_DIVISION_BOUND, then Brent's variant of
    Pollard rho; every reported prime passes is_prime.
    """
    if n == 0:
        raise InputError("0 has no prime factorization")
    sign = 1 if n > 0 else -1
    m = abs(n)
    counts: dict[int, int] = {}
    m = _strip_small_factors(m, counts)
    if m > 1:
        rng = random.Random(DEFAULT_POLLARD_SEED if seed is None else seed)
        _split_recursively(m, counts, rng)
    return Factorization(n, sign, tuple(sorted(counts.items())))


def _strip_small_factors(m: int, counts: dict[int, int]) -> int:
    if m == 1 or is_prime(m):
        if m > 1:
            counts[m] = counts.get(m, 0) + 1
            return 1
        return m
    while m % 2 == 0:
        counts[2] = counts.get(2, 0) + 1
        m //= 2
    d = 3
    while d <= TRIAL_DIVISION_BOUND and d * d <= m:
        if m % d == 0:
            while m % d == 0:
                counts[d] = counts.get(d, 0) + 1
                m //= d
            if m == 1 or is_prime(m):
                break
        d += 2
    if m > 1 and (d * d > m or is_prime(m)):
        counts[m] = counts.get(m, 0) + 1
        return 1
    return m


def _split_recursively(m: int, counts: dict[int, int], rng: random.Random) -> None:
    # m composite with no factors below TRIAL_DIVISION_BOUND.
    piece = _pollard_brent(m, rng)
    for part in (piece, m // piece):
        if is_prime(part):
            counts[part] = counts.get(part, 0) + 1
        else:
            _split_recursively(part, counts, rng)


def _pollard_brent(n: int, rng: random.Random) -> int:
    # A nontrivial factor of odd composite n.
    for _ in range(POLLARD_MAX_ATTEMPTS):
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    raise FactorizationFailed(
        f"pollard rho gave up after {POLLARD_MAX_ATTEMPTS} attempts on {n}"
    )


# ---------------------------------------------------------------------------
# Derived quantities
# ---------------------------------------------------------------------------


def is_squarefree(fact: Factorization) -> bool:
    """True iff every prime exponent equals 1."""
    return all(e == 1 for _, e in fact.factors)


def divisors(fact: Factorization, *, cap: int = DIVISOR_CAP) -> list[int]:
    """All positive divisors of |n| in ascending order.

    Raises CapExceeded when the divisor count would exceed ``cap``.
    """
    count = 1
    for _, e in fact.factors:
        count *= e + 1
    if count > cap:
        raise CapExceeded(f"divisor count {count} exceeds cap {cap}")
    divs = [1]
    for p, e in fact.factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def crt(pairs: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Combine congruences with pairwise coprime moduli.

    ``pairs`` holds (residue, modulus) entries; returns (x, M) where M is
    the product of the moduli and x in [0, M) satisfies every congruence.
    """
    x, modulus = 0, 1
    for residue, m in pairs:
        if m < 1:
            raise InputError(f"modulus must be >= 1, got {m}")
        g = math.gcd(modulus, m)
        if g != 1:
            raise InputError(f"moduli are not pairwise coprime (shared factor {g})")
        if m == 1:
            continue
        inv = pow(modulus, -1, m)
        k = (residue - x) * inv % m
        x += modulus * k
        modulus *= m
    return x % modulus if modulus > 1 else 0, modulus
