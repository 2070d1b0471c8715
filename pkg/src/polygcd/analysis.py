"""The divisor-to-residue atlas of gcd(f(n), g(n)).

For monic integer f and g with square-free resultant r, every positive
divisor d of r occurs as gcd(f(n), g(n)), and within one period of length
|r| it occurs exactly prod(p - 1) times, the product running over the
primes p dividing |r|/d.  ``analyze`` turns that statement into data: for
each prime p | r the unique residue c_p with f(c_p) = g(c_p) = 0 mod p is
extracted, and the residues realizing each divisor are enumerated by
combining the per-prime constraints (n = c_p mod p for p | d, n != c_p
mod p otherwise) with the Chinese remainder theorem.

When the hypothesis fails the function still reports what it can: a zero
resultant comes back with the common factor in Z[x]; a non-square-free
resultant comes back with an empirical brute-force profile (when the
period is within cap) and the result of the coprime-witness search.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Union

from .errors import CapExceeded, CriterionInapplicable, InputError, InvariantBreach
from .linalg import resultant
from .modp import common_root_mod_p
from .ntheory import DIVISOR_CAP, Factorization, divisors, factor, is_squarefree, crt
from .oracle import BRUTE_FORCE_CAP, BruteForceProfile, brute_force_profile
from .poly import IntPoly, MonicIntPoly, gcd_over_Z

__all__ = [
    "RESIDUE_LISTING_CAP",
    "AtlasEntry",
    "GcdAtlas",
    "ZeroResultant",
    "NotSquarefree",
    "AnalysisOutcome",
    "analyze",
    "build_atlas",
    "minimal_period",
    "coprime_witness",
]

RESIDUE_LISTING_CAP = 10**4


@dataclass(frozen=True)
class AtlasEntry:
    """One divisor d of |r| with its multiplicity and realizing residues.

    ``multiplicity`` is the exact number of residues n in [0, |r|) with
    gcd(f(n), g(n)) = d.  ``residues`` lists them in ascending order; when
    the count exceeds the listing cap only the smallest ones are kept and
    ``truncated`` is set.
    """

    divisor: int
    multiplicity: int
    residues: tuple[int, ...]
    truncated: bool


@dataclass(frozen=True)
class GcdAtlas:
    """Complete divisor -> residues map for a square-free resultant."""

    f: MonicIntPoly
    g: MonicIntPoly
    resultant: int
    factorization: Factorization
    squarefree: bool
    roots: dict[int, int]
    entries: tuple[AtlasEntry, ...]

    def entry_for(self, divisor: int) -> AtlasEntry:
        for entry in self.entries:
            if entry.divisor == divisor:
                return entry
        raise KeyError(divisor)

    def multiplicity_histogram(self) -> dict[int, int]:
        return {e.divisor: e.multiplicity for e in self.entries}

    def to_json_dict(self) -> dict:
        return {
            "f": str(self.f),
            "g": str(self.g),
            "resultant": str(self.resultant),
            "squarefree": self.squarefree,
            "roots": {str(p): str(c) for p, c in self.roots.items()},
            "entries": [
                {
                    "divisor": str(e.divisor),
                    "multiplicity": str(e.multiplicity),
                    "residues": [str(n) for n in e.residues],
                    "residues_truncated": e.truncated,
                }
                for e in self.entries
            ],
        }


@dataclass(frozen=True)
class ZeroResultant:
    """r = 0: f and g share a non-constant factor; the gcd range is infinite."""

    common_factor: IntPoly
    sample_values: tuple[int, ...]


@dataclass(frozen=True)
class NotSquarefree:
    """r != 0 but not square-free: only empirical information is reported."""

    resultant: int
    factorization: Factorization
    profile: BruteForceProfile | None
    witness: int | None
    witness_applicable: bool


AnalysisOutcome = Union[GcdAtlas, ZeroResultant, NotSquarefree]


def analyze(
    f: MonicIntPoly,
    g: MonicIntPoly,
    *,
    brute_cap: int = BRUTE_FORCE_CAP,
    residue_cap: int = RESIDUE_LISTING_CAP,
    divisor_cap: int = DIVISOR_CAP,
    verify: bool = False,
    seed: int | None = None,
) -> AnalysisOutcome:
    """Classify the pair (f, g) and build the atlas when it exists.

    With ``verify=True`` the resultant is cross-checked against the
    subresultant PRS and, when |r| is within ``brute_cap``, the atlas is
    compared entry by entry against the brute-force profile.
    """
    r = resultant(f, g, verify=verify)
    if r == 0:
        common = gcd_over_Z(f, g)
        samples = tuple(
            math.gcd(f.evaluate(n), g.evaluate(n)) for n in range(8)
        )
        return ZeroResultant(common_factor=common, sample_values=samples)
    fact = factor(r, seed=seed)
    if not is_squarefree(fact):
        profile = (
            brute_force_profile(f, g, cap=brute_cap) if abs(r) <= brute_cap else None
        )
        try:
            witness = coprime_witness(f, g, fact)
            applicable = True
        except CriterionInapplicable:
            witness, applicable = None, False
        return NotSquarefree(
            resultant=r,
            factorization=fact,
            profile=profile,
            witness=witness,
            witness_applicable=applicable,
        )
    atlas = build_atlas(f, g, fact, residue_cap=residue_cap, divisor_cap=divisor_cap)
    if verify and abs(r) <= brute_cap:
        _cross_check_atlas(atlas, brute_force_profile(f, g, cap=brute_cap))
    return atlas


def build_atlas(
    f: MonicIntPoly,
    g: MonicIntPoly,
    fact: Factorization,
    *,
    residue_cap: int = RESIDUE_LISTING_CAP,
    divisor_cap: int = DIVISOR_CAP,
) -> GcdAtlas:
    """Atlas for a known square-free nonzero resultant factorization."""
    if not is_squarefree(fact):
        raise InputError("build_atlas needs a square-free resultant")
    modulus = abs(fact.n)
    primes = list(fact.primes())
    roots: dict[int, int] = {}
    for p in primes:
        c = common_root_mod_p(f, g, p)
        if c is None:
            raise InvariantBreach(
                f"gcd of f and g mod {p} does not have degree 1 although the"
                " resultant is square-free"
            )
        roots[p] = c
    entries = []
    total = 0
    for d in divisors(fact, cap=divisor_cap):
        entry = _atlas_entry(modulus, primes, roots, d, residue_cap)
        total += entry.multiplicity
        entries.append(entry)
    if total != modulus:
        raise InvariantBreach(
            f"atlas multiplicities sum to {total}, expected the period {modulus}"
        )
    if entries[-1].multiplicity != 1:
        raise InvariantBreach("the divisor |r| must be realized exactly once")
    return GcdAtlas(
        f=f,
        g=g,
        resultant=fact.n,
        factorization=fact,
        squarefree=True,
        roots=roots,
        entries=tuple(entries),
    )


def _atlas_entry(
    modulus: int,
    primes: list[int],
    roots: dict[int, int],
    d: int,
    residue_cap: int,
) -> AtlasEntry:
    fixed = [p for p in primes if d % p == 0]
    free = [p for p in primes if d % p != 0]
    multiplicity = math.prod(p - 1 for p in free)
    if multiplicity <= residue_cap:
        # Enumerate every per-prime choice and combine by CRT.
        basis = {p: (modulus // p) * pow(modulus // p, -1, p) for p in primes}
        options = [
            [roots[p]] if p in fixed else [x for x in range(p) if x != roots[p]]
            for p in primes
        ]
        residues = sorted(
            sum(c * basis[p] for c, p in zip(combo, primes)) % modulus
            for combo in itertools.product(*options)
        )
        return AtlasEntry(d, multiplicity, tuple(residues), False)
    # Too many to list: walk the progression n = base (mod d) from below and
    # keep the residue_cap smallest ones.  The exact count is still reported.
    base = crt([(roots[p], p) for p in fixed])[0] if fixed else 0
    found: list[int] = []
    n = base
    while len(found) < residue_cap and n < modulus:
        if all(n % p != roots[p] for p in free):
            found.append(n)
        n += d
    return AtlasEntry(d, multiplicity, tuple(found), True)


def _cross_check_atlas(atlas: GcdAtlas, profile: BruteForceProfile) -> None:
    if atlas.multiplicity_histogram() != profile.histogram:
        raise InvariantBreach("atlas multiplicities disagree with the brute-force oracle")
    by_value = profile.residues_by_value()
    for entry in atlas.entries:
        expected = by_value.get(entry.divisor, ())
        if entry.truncated:
            if entry.residues != expected[: len(entry.residues)]:
                raise InvariantBreach(
                    f"listed residues for divisor {entry.divisor} disagree with the oracle"
                )
        elif entry.residues != expected:
            raise InvariantBreach(
                f"residues for divisor {entry.divisor} disagree with the oracle"
            )


def minimal_period(
    f: MonicIntPoly, g: MonicIntPoly, *, cap: int = BRUTE_FORCE_CAP
) -> int:
    """Smallest positive t with gcd(f(n), g(n)) = gcd(f(n+t), g(n+t)) for all n.

    Only divisors of |r| need to be tried: |r| is always a period and the
    set of periods is closed under gcd.
    """
    r = resultant(f, g)
    if r == 0:
        raise InputError("resultant is zero: no finite period exists in general")
    modulus = abs(r)
    if modulus > cap:
        raise CapExceeded(f"period {modulus} exceeds the brute-force cap {cap}")
    values = [math.gcd(f.evaluate(n), g.evaluate(n)) for n in range(modulus)]
    return _minimal_period_of(values)


def _minimal_period_of(values: list[int]) -> int:
    modulus = len(values)
    for t in range(1, modulus + 1):
        if modulus % t:
            continue
        if all(values[n] == values[(n + t) % modulus] for n in range(modulus)):
            return t
    raise InvariantBreach("the full period itself must always verify")


def coprime_witness(f: MonicIntPoly, g: MonicIntPoly, fact: Factorization) -> int:
    """An integer n with gcd(f(n), g(n)) = 1, in [0, prod of primes of r).

    Requires that no prime p has p^p dividing r; under that hypothesis a
    residue n_p with p not dividing gcd(f(n_p), g(n_p)) exists for every
    p | r, and the CRT combination of those residues is coprime-realizing.
    Raises CriterionInapplicable when the hypothesis fails, which says
    nothing about whether such an n exists.
    """
    bad = [p for p, e in fact.factors if e >= p]
    if bad:
        p = bad[0]
        raise CriterionInapplicable(
            f"criterion inapplicable: {p}^{p} divides the resultant"
        )
    congruences = []
    max_common_roots = min(f.degree, g.degree)
    for p in fact.primes():
        scan = min(p, max_common_roots + 1)
        n_p = next(
            (
                n
                for n in range(scan)
                if math.gcd(f.evaluate(n), g.evaluate(n)) % p != 0
            ),
            None,
        )
        if n_p is None:
            raise InvariantBreach(
                f"no residue avoids the prime {p}; this contradicts p^p not dividing r"
            )
        congruences.append((n_p, p))
    witness = crt(congruences)[0]
    if math.gcd(f.evaluate(witness), g.evaluate(witness)) != 1:
        raise InvariantBreach("coprime witness failed its own verification")
    return witness
