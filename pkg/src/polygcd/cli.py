"""Command-line front end.

Subcommands: analyze, resultant, snf, brute-force, witness, period.
Human-readable tables go to stdout by default; ``--json`` switches to a
canonical JSON document (sorted keys, all integers as decimal strings, so
arbitrary precision survives).  Errors go to stderr.

Exit codes: 0 success, 1 input error, 2 cap exceeded, 3 internal
invariant breach (a bug, reported loudly).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .analysis import (
    RESIDUE_LISTING_CAP,
    GcdAtlas,
    NotSquarefree,
    ZeroResultant,
    _minimal_period_of,
    analyze,
    coprime_witness,
    minimal_period,
)
from .errors import (
    CapExceeded,
    CriterionInapplicable,
    FactorizationFailed,
    InputError,
    InvariantBreach,
    ParseError,
)
from .linalg import IntMatrix, resultant
from .ntheory import DIVISOR_CAP, MR_DETERMINISTIC_BOUND, Factorization, factor
from .oracle import BRUTE_FORCE_CAP, brute_force_profile
from .poly import MonicIntPoly, parse_poly
from .snf import smith_normal_form

__all__ = ["CliConfig", "main", "run"]

SEED_ENV_VAR = "POLYGCD_SEED"


@dataclass(frozen=True)
class CliConfig:
    """Everything a subcommand needs, resolved from flags and environment."""

    subcommand: str
    f_text: str | None = None
    g_text: str | None = None
    json_output: bool = False
    verify: bool = False
    brute_cap: int = BRUTE_FORCE_CAP
    residue_cap: int = RESIDUE_LISTING_CAP
    divisor_cap: int = DIVISOR_CAP
    seed: int | None = None
    matrix_path: str | None = None
    show_transforms: bool = False

    def __post_init__(self):
        for cap in (self.brute_cap, self.residue_cap, self.divisor_cap):
            if cap < 1:
                raise InputError(f"caps must be positive, got {cap}")


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which collides with the
    # cap-exceeded code; route usage errors to exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="polygcd",
        description=(
            "Resultants of monic integer polynomials and the complete map"
            " from divisors of a square-free resultant to the residues n"
            " realizing each divisor as gcd(f(n), g(n))."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_pair(p):
        p.add_argument("--f", required=True, metavar="EXPR", help="first monic polynomial, e.g. 'x^2+3'")
        p.add_argument("--g", required=True, metavar="EXPR", help="second monic polynomial")

    def add_common(p, *, caps=True):
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        if caps:
            p.add_argument("--cap-brute", type=int, default=BRUTE_FORCE_CAP, metavar="N")
            p.add_argument("--cap-residues", type=int, default=RESIDUE_LISTING_CAP, metavar="N")
            p.add_argument("--cap-divisors", type=int, default=DIVISOR_CAP, metavar="N")

    p = sub.add_parser("analyze", help="full divisor-to-residue report")
    add_pair(p)
    add_common(p)
    p.add_argument("--verify", action="store_true", help="cross-check against PRS and brute force")

    p = sub.add_parser("resultant", help="print the signed resultant")
    add_pair(p)
    p.add_argument("--verify", action="store_true", help="cross-check against the subresultant PRS")

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument("--matrix", metavar="FILE", help="whitespace-separated rows; stdin when omitted")
    p.add_argument("--transforms", action="store_true", help="also print U and V")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")

    p = sub.add_parser("brute-force", help="tabulate gcd(f(n), g(n)) over one period")
    add_pair(p)
    add_common(p)

    p = sub.add_parser("witness", help="find n with gcd(f(n), g(n)) = 1 via the p^p criterion")
    add_pair(p)

    p = sub.add_parser("period", help="smallest positive period of gcd(f(n), g(n))")
    add_pair(p)
    p.add_argument("--cap-brute", type=int, default=BRUTE_FORCE_CAP, metavar="N")

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    seed_text = os.environ.get(SEED_ENV_VAR)
    seed = int(seed_text) if seed_text else None
    return CliConfig(
        subcommand=args.subcommand,
        f_text=getattr(args, "f", None),
        g_text=getattr(args, "g", None),
        json_output=getattr(args, "json", False),
        verify=getattr(args, "verify", False),
        brute_cap=getattr(args, "cap_brute", BRUTE_FORCE_CAP),
        residue_cap=getattr(args, "cap_residues", RESIDUE_LISTING_CAP),
        divisor_cap=getattr(args, "cap_divisors", DIVISOR_CAP),
        seed=seed,
        matrix_path=getattr(args, "matrix", None),
        show_transforms=getattr(args, "transforms", False),
    )


def _monic(text: str) -> MonicIntPoly:
    poly = parse_poly(text)
    if poly.degree < 1:
        raise InputError(f"{text!r} expands to degree {poly.degree}; need degree >= 1")
    if poly.leading != 1:
        raise InputError(
            f"{text!r} is not monic: leading coefficient is {poly.leading}, expected 1"
        )
    return MonicIntPoly(poly.coeffs)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _format_factorization(fact: Factorization) -> str:
    body = " * ".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in fact.factors
    )
    return f"-{body}" if fact.sign < 0 else body


def _prime_note(p: int) -> str:
    return f"{p} (probable prime)" if p >= MR_DETERMINISTIC_BOUND else str(p)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_analyze(config: CliConfig) -> int:
    f = _monic(config.f_text)
    g = _monic(config.g_text)
    outcome = analyze(
        f,
        g,
        brute_cap=config.brute_cap,
        residue_cap=config.residue_cap,
        divisor_cap=config.divisor_cap,
        verify=config.verify,
        seed=config.seed,
    )
    if isinstance(outcome, GcdAtlas):
        _report_atlas(outcome, config)
    elif isinstance(outcome, ZeroResultant):
        _report_zero(f, g, outcome, config)
    else:
        _report_not_squarefree(f, g, outcome, config)
    return 0


def _report_atlas(atlas: GcdAtlas, config: CliConfig) -> None:
    if config.json_output:
        print(_dump_json(atlas.to_json_dict()))
        return
    modulus = abs(atlas.resultant)
    print(f"f = {atlas.f}")
    print(f"g = {atlas.g}")
    print(f"resultant = {atlas.resultant} = {_format_factorization(atlas.factorization)}")
    print("square-free: yes")
    for p, c in atlas.roots.items():
        print(f"common root mod {_prime_note(p)}: n = {c}")
    print()
    header = ("divisor", "multiplicity", f"residues mod {modulus}")
    body = [
        (str(e.divisor), str(e.multiplicity), _residue_preview(e))
        for e in atlas.entries
    ]
    w0 = max(len(header[0]), *(len(r[0]) for r in body))
    w1 = max(len(header[1]), *(len(r[1]) for r in body))
    print(f"{header[0]:>{w0}}  {header[1]:>{w1}}  {header[2]}")
    for r in body:
        print(f"{r[0]:>{w0}}  {r[1]:>{w1}}  {r[2]}")


def _residue_preview(entry, limit: int = 16) -> str:
    shown = ", ".join(str(n) for n in entry.residues[:limit])
    if entry.truncated or len(entry.residues) > limit:
        return f"{shown}, ... ({entry.multiplicity} total)"
    return shown


def _report_zero(f, g, outcome: ZeroResultant, config: CliConfig) -> None:
    if config.json_output:
        print(
            _dump_json(
                {
                    "f": str(f),
                    "g": str(g),
                    "resultant": "0",
                    "common_factor": str(outcome.common_factor),
                    "sample_values": [str(v) for v in outcome.sample_values],
                }
            )
        )
        return
    print(f"f = {f}")
    print(f"g = {g}")
    print("resultant = 0")
    print(f"common factor over Z[x]: {outcome.common_factor}")
    print("the gcd values are unbounded: infinite range, no nonzero period")
    sample = ", ".join(str(v) for v in outcome.sample_values)
    print(f"gcd(f(n), g(n)) for n = 0..{len(outcome.sample_values) - 1}: {sample}")


def _report_not_squarefree(f, g, outcome: NotSquarefree, config: CliConfig) -> None:
    if config.json_output:
        doc = {
            "f": str(f),
            "g": str(g),
            "resultant": str(outcome.resultant),
            "squarefree": False,
            "factorization": [
                [str(p), str(e)] for p, e in outcome.factorization.factors
            ],
            "range": [str(v) for v in outcome.profile.gcd_range]
            if outcome.profile
            else None,
            "histogram": {str(v): str(c) for v, c in outcome.profile.histogram.items()}
            if outcome.profile
            else None,
            "witness": str(outcome.witness) if outcome.witness is not None else None,
            "witness_applicable": outcome.witness_applicable,
        }
        print(_dump_json(doc))
        return
    print(f"f = {f}")
    print(f"g = {g}")
    print(f"resultant = {outcome.resultant} = {_format_factorization(outcome.factorization)}")
    print("square-free: no (the complete divisor map is only available for square-free resultants)")
    if outcome.profile is not None:
        values = ", ".join(str(v) for v in outcome.profile.gcd_range)
        print(f"empirical gcd range over one period of {outcome.profile.modulus}: {{{values}}}")
        histogram = ", ".join(
            f"{v}: {c}" for v, c in sorted(outcome.profile.histogram.items())
        )
        print(f"gcd value counts: {histogram}")
        print(f"minimal period: {_minimal_period_of(list(outcome.profile.values))}")
    else:
        print(f"|resultant| exceeds the brute-force cap {config.brute_cap}; no empirical profile")
    if outcome.witness_applicable:
        print(f"coprime witness: n = {outcome.witness}")
    else:
        bad = [p for p, e in outcome.factorization.factors if e >= p]
        print(
            f"coprime witness: criterion inapplicable ({bad[0]}^{bad[0]} divides the resultant)"
        )
    return


def _cmd_resultant(config: CliConfig) -> int:
    f = _monic(config.f_text)
    g = _monic(config.g_text)
    print(resultant(f, g, verify=config.verify))
    return 0


def _cmd_snf(config: CliConfig) -> int:
    if config.matrix_path:
        with open(config.matrix_path, encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    rows = [
        [int(tok) for tok in line.split()]
        for line in text.splitlines()
        if line.strip()
    ]
    if not rows:
        raise InputError("empty matrix input")
    matrix = IntMatrix.from_rows(rows)
    result = smith_normal_form(matrix)
    if config.json_output:
        doc = {"d": [str(x) for x in result.d]}
        if config.show_transforms:
            doc["U"] = [[str(v) for v in row] for row in result.U.to_rows()]
            doc["V"] = [[str(v) for v in row] for row in result.V.to_rows()]
        print(_dump_json(doc))
        return 0
    print("d =", " ".join(str(x) for x in result.d))
    if config.show_transforms:
        print("U =")
        print(result.U)
        print("V =")
        print(result.V)
    return 0


def _cmd_brute_force(config: CliConfig) -> int:
    f = _monic(config.f_text)
    g = _monic(config.g_text)
    profile = brute_force_profile(f, g, cap=config.brute_cap)
    if config.json_output:
        print(_dump_json(profile.to_json_dict()))
        return 0
    print(f"modulus = {profile.modulus}")
    print("range =", ", ".join(str(v) for v in profile.gcd_range))
    for value in profile.gcd_range:
        print(f"gcd {value}: {profile.histogram[value]} residues per period")
    return 0


def _cmd_witness(config: CliConfig) -> int:
    f = _monic(config.f_text)
    g = _monic(config.g_text)
    r = resultant(f, g)
    if r == 0:
        raise InputError("resultant is zero: the witness criterion needs r != 0")
    fact = factor(r, seed=config.seed)
    try:
        n = coprime_witness(f, g, fact)
    except CriterionInapplicable as exc:
        print(exc)
        return 0
    print(f"n = {n}")
    print(f"gcd(f({n}), g({n})) = 1")
    return 0


def _cmd_period(config: CliConfig) -> int:
    f = _monic(config.f_text)
    g = _monic(config.g_text)
    print(minimal_period(f, g, cap=config.brute_cap))
    return 0


_HANDLERS = {
    "analyze": _cmd_analyze,
    "resultant": _cmd_resultant,
    "snf": _cmd_snf,
    "brute-force": _cmd_brute_force,
    "witness": _cmd_witness,
    "period": _cmd_period,
}


def run(config: CliConfig) -> int:
    """Dispatch an already-resolved configuration; returns the exit status."""
    try:
        return _HANDLERS[config.subcommand](config)
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CapExceeded, FactorizationFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantBreach as exc:
        print(
            f"INTERNAL INVARIANT BREACH (this is a bug): {exc}",
            file=sys.stderr,
        )
        return 3


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
