"""Command-line front end.

Subcommands: factor, disc, galois, j, module, certify, corpus.  ``--json``
switches every subcommand to a deterministic structured document carrying
the artifact version.  Exit codes: 0 for a successful computation
(Inconclusive verdicts included), 1 for usage, parse and corpus-mismatch
errors, 2 for capability errors.  Diagnostics and warnings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from .certify import certificate_to_dict, certify
from .curves import in_cm_j_set, j_invariant
from .errors import CapabilityError, InvalidInputError
from .factor import factor_over_Q
from .galois import GROUP_CYCLE_TYPES, GaloisGroupId, cycle_type_prefilter, galois_group
from .gf2 import analyze, heart_module, standard_generators
from .polyparse import parse_polynomial
from .polys import discriminant

from . import __version__ as VERSION


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def _rational_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _emit(doc: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps({"version": VERSION, **doc}, indent=2))
    else:
        print(text)


def _cmd_factor(args) -> int:
    f = parse_polynomial(args.poly)
    factors = factor_over_Q(f)
    doc = {
        "command": "factor",
        "input": str(f),
        "unit": _rational_str(factors.unit),
        "factors": [{"poly": str(g), "multiplicity": m} for g, m in factors.factors],
    }
    _emit(doc, args.json, f"{f} = {factors}")
    return 0


def _cmd_disc(args) -> int:
    f = parse_polynomial(args.poly)
    d = discriminant(f)
    _emit({"command": "disc", "input": str(f), "discriminant": _rational_str(d)}, args.json, _rational_str(d))
    return 0


def _cmd_galois(args) -> int:
    f = parse_polynomial(args.poly)
    group = galois_group(f)
    warnings: list[str] = []
    if group is not GaloisGroupId.REDUCIBLE and args.prime_bound > 2:
        seen = cycle_type_prefilter(f, args.prime_bound)
        extra = seen - GROUP_CYCLE_TYPES[group]
        if extra:
            warnings.append(
                f"cycle-type prefilter saw {sorted(extra)} outside the {group} cycle types; this indicates a bug"
            )
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    _emit({"command": "galois", "input": str(f), "group": str(group)}, args.json, str(group))
    return 0


def _cmd_j(args) -> int:
    f = parse_polynomial(args.poly)
    j = j_invariant(f)
    doc = {"command": "j", "input": str(f), "j": _rational_str(j), "in_cm_set": in_cm_j_set(j)}
    _emit(doc, args.json, f"{_rational_str(j)} (in CM set: {in_cm_j_set(j)})")
    return 0


def _cmd_module(args) -> int:
    gens = standard_generators(args.group, args.n)
    report = analyze(heart_module(args.n, gens))
    doc = {
        "command": "module",
        "group": args.group,
        "n": args.n,
        "dim": args.n - 1,
        "simple": report.simple,
        "endomorphism_dim": report.endomorphism_dim,
        "absolutely_simple": report.absolutely_simple,
    }
    text = (
        f"group {args.group} on {args.n} points, heart dimension {args.n - 1}: "
        f"simple={report.simple} endomorphism_dim={report.endomorphism_dim} "
        f"absolutely_simple={report.absolutely_simple}"
    )
    _emit(doc, args.json, text)
    return 0


def _cmd_certify(args) -> int:
    f = parse_polynomial(args.f)
    h = parse_polynomial(args.h)
    cert = certify(f, h)
    if args.prime_bound > 2:
        for label, poly in (("f", f), ("h", h)):
            try:
                group = galois_group(poly)
            except (InvalidInputError, CapabilityError):
                continue
            if group is GaloisGroupId.REDUCIBLE:
                continue
            extra = cycle_type_prefilter(poly, args.prime_bound) - GROUP_CYCLE_TYPES[group]
            if extra:
                print(
                    f"warning: prefilter inconsistency for {label}: {sorted(extra)}; this indicates a bug",
                    file=sys.stderr,
                )
    _emit(certificate_to_dict(cert), args.json, str(cert))
    return 0


def _load_corpus(path: str | None) -> list[dict]:
    if path is None:
        data = resources.files("nonisog").joinpath("corpus.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            data = fh.read()
    cases = json.loads(data)
    if not isinstance(cases, list) or any(
        not isinstance(c, dict) or "name" not in c or "f" not in c or "expected" not in c for c in cases
    ):
        raise InvalidInputError("malformed corpus: expected a list of {name, f, h?, expected, citation}")
    return cases


def _cmd_corpus(args) -> int:
    cases = _load_corpus(args.file)
    if not cases:
        print("warning: the corpus is empty", file=sys.stderr)
    rows = []
    failures = 0
    for case in cases:
        f = parse_polynomial(case["f"])
        h = parse_polynomial(case["h"]) if case.get("h") else f
        cert = certify(f, h)
        ok = cert.verdict.tag == case["expected"]
        failures += 0 if ok else 1
        rows.append(
            {
                "name": case["name"],
                "expected": case["expected"],
                "actual": cert.verdict.tag,
                "ok": ok,
                "citation": case.get("citation", ""),
            }
        )
    text_lines = [
        f"{'PASS' if r['ok'] else 'FAIL'} {r['name']}: expected {r['expected']}, got {r['actual']} [{r['citation']}]"
        for r in rows
    ]
    text_lines.append(f"{len(rows) - failures}/{len(rows)} corpus cases passed")
    doc = {
        "command": "corpus",
        "total": len(rows),
        "passed": len(rows) - failures,
        "failed": failures,
        "cases": rows,
    }
    _emit(doc, args.json, "\n".join(text_lines))
    return 1 if failures else 0


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="nonisog", description=__doc__)
    parser.add_argument("--version", action="version", version=f"nonisog {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, fn):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="structured output")
        return p

    p = add("factor", "factor a polynomial over Q", _cmd_factor)
    p.add_argument("poly")
    p = add("disc", "discriminant of a polynomial", _cmd_disc)
    p.add_argument("poly")
    p = add("galois", "Galois group of a squarefree cubic or quintic", _cmd_galois)
    p.add_argument("poly")
    p.add_argument("--prime-bound", type=int, default=200, help="advisory cycle-type scan bound (cannot change the answer)")
    p = add("j", "j-invariant of y^2 = cubic", _cmd_j)
    p.add_argument("poly")
    p = add("module", "analyze the 2-torsion heart of a standard group", _cmd_module)
    p.add_argument("--group", required=True, help="C3, S3, C5, D5, F20, A5, S5, or C<q> for an odd prime q")
    p.add_argument("--n", type=int, required=True, help="number of points (3, 5, or the odd prime q)")
    p = add("certify", "non-isogeny certificate for a pair y^2 = f, y^2 = h", _cmd_certify)
    p.add_argument("f")
    p.add_argument("h")
    p.add_argument("--prime-bound", type=int, default=200, help="advisory cycle-type scan bound (cannot change verdicts)")
    p = add("corpus", "run the bundled regression corpus", _cmd_corpus)
    p.add_argument("--file", default=None, help="alternative corpus file (JSON)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidInputError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
