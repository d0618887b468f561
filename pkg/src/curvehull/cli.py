"""Command-line surface for every pipeline.

Verbs: schur, verify-schur, verify-diagonal, extreme, verify-extreme, lmi,
member, support, cross-validate.  Output is JSON by default (--format text
for a plain rendering); rationals are accepted as "p/q", integers, or
terminating decimals.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from itertools import combinations

from . import diagonal, hull, lmi, rays, schur
from .unipoly import Interval, UniPoly


class CLIError(Exception):
    """Domain-level failure: reported as a diagnostic with exit code 1."""


class UsageError(Exception):
    """Malformed arguments (bad rationals, bad option payloads): exit code 2."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+|\.\d+)?$")


def parse_rational(s: str) -> Fraction:
    """Parse "p/q", an integer, or a terminating decimal, exactly."""
    s = s.strip()
    if not _RATIONAL_RE.match(s):
        raise UsageError(f"cannot parse rational: {s!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise UsageError(f"zero denominator in rational: {s!r}") from None


_TERM_RE = re.compile(
    r"^(?P<sign>[+-])?(?P<coef>\d+(?:/\d+|\.\d+)?)?\*?(?P<var>t(?:\^(?P<exp>\d+))?)?$")


def parse_poly(s: str) -> UniPoly:
    """Parse sums of rational multiples of powers of t, e.g. "t^5+t^6" or
    "2*t^2 - 1/3"."""
    text = s.replace(" ", "")
    if not text:
        raise UsageError("empty polynomial")
    chunks = re.findall(r"[+-]?[^+-]+", text)
    if "".join(chunks) != text:
        raise UsageError(f"cannot parse polynomial: {s!r}")
    coeffs: dict = {}
    for chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise UsageError(f"cannot parse term {chunk!r} in polynomial {s!r}")
        coef = parse_rational(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        if m.group("var") is None:
            exp = 0
        else:
            exp = int(m.group("exp")) if m.group("exp") else 1
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
    deg = max(coeffs)
    return UniPoly([coeffs.get(k, 0) for k in range(deg + 1)])


def parse_basis(s: str):
    return tuple(parse_poly(part) for part in s.split(","))


def parse_interval(s: str) -> Interval:
    parts = s.split(",")
    if len(parts) != 2:
        raise UsageError(f"interval must be 'lo,hi', got {s!r}")
    return Interval(parse_rational(parts[0]), parse_rational(parts[1]))


def parse_seq(s: str):
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise UsageError(f"cannot parse integer sequence: {s!r}") from None


def parse_point(s: str):
    return tuple(parse_rational(x) for x in s.split(","))


def parse_zeros(s: str) -> rays.ZeroPattern:
    points, mults = [], []
    for part in s.split(","):
        bits = part.split(":")
        if len(bits) != 2:
            raise UsageError(f"zero pattern entries are 'point:mult', got {part!r}")
        points.append(parse_rational(bits[0]))
        try:
            mults.append(int(bits[1]))
        except ValueError:
            raise UsageError(f"bad multiplicity in {part!r}") from None
    return rays.ZeroPattern(tuple(points), tuple(mults))


# -- verb handlers ---------------------------------------------------------------


def _cmd_schur(args) -> dict:
    m = parse_seq(args.seq)
    out = {"seq": list(m)}
    try:
        if args.method in ("tableaux", "both"):
            out["tableaux"] = schur.schur_via_tableaux(m).to_string("x")
        if args.method in ("bialternant", "both"):
            out["bialternant"] = schur.schur_via_bialternant(m).to_string("x")
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    if args.method == "both":
        out["equal"] = out["tableaux"] == out["bialternant"]
    return out


def _cmd_verify_schur(args) -> dict:
    max_n, max_entry = args.max_n, args.max_entry
    failures = []
    cases = 0
    for length in range(1, max_n + 2):
        for combo in combinations(range(max_entry + 1), length):
            m = tuple(sorted(combo, reverse=True))
            cases += 1
            if schur.schur_via_tableaux(m) != schur.schur_via_bialternant(m):
                failures.append({"kind": "equality", "m": list(m)})
    for length in range(1, max_n + 2):
        seqs = [tuple(sorted(c, reverse=True))
                for c in combinations(range(max_entry + 1), length)]
        for a in seqs:
            for b in seqs:
                if a != b and all(x <= y for x, y in zip(a, b)):
                    cases += 1
                    if not schur.proper_dominance_check(a, b).ok:
                        failures.append({"kind": "dominance", "a": list(a), "b": list(b)})
            for r in range(1, length + 1):
                for idx in combinations(range(length), r):
                    cases += 1
                    if not schur.subsequence_divisibility_check(a, idx).ok:
                        failures.append({"kind": "subsequence", "a": list(a),
                                         "indices": list(idx)})
    return {"cases": cases, "failures": failures, "ok": not failures}


def _cmd_verify_diagonal(args) -> dict:
    basis = parse_basis(args.basis)
    blocks = parse_seq(args.blocks)
    try:
        result = diagonal.factor_taylor_determinant(basis, blocks)
    except (ValueError, diagonal.DivisibilityError) as exc:
        raise CLIError(str(exc)) from None
    return {
        "blocks": list(blocks),
        "det": result.det.to_string(),
        "cofactor": result.cofactor.to_string(),
        "ideal_generators": ["".join(f"t{i}^{e}" if e > 1 else (f"t{i}" if e else "")
                                     for i, e in enumerate(g)) or "1"
                             for g in result.ideal.generators],
        "in_ideal": result.membership.ok,
        "witness": {str(k): str(v) for k, v in result.membership.witness.items()},
        "reference_scale": str(result.reference_scale),
        "checked": result.checked,
    }


def _system_from_args(args) -> tuple:
    basis = parse_basis(args.basis)
    s = parse_interval(args.interval)
    try:
        system = rays.profile_and_normalize(basis, s.lo)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    local = Interval(0, s.hi - s.lo)
    return system, s, local


def _cmd_extreme(args) -> dict:
    system, s, local = _system_from_args(args)
    pattern = parse_zeros(args.zeros)
    local_pattern = rays.ZeroPattern(tuple(x - s.lo for x in pattern.points),
                                     pattern.mults)
    try:
        candidate = rays.extreme_candidate(system, local_pattern)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    out = {"interval": [str(s.lo), str(s.hi)],
           "zeros": [[str(x), b] for x, b in zip(pattern.points, pattern.mults)],
           "candidate": candidate.shift(-s.lo).to_string()}
    if candidate.is_zero:
        out["report"] = None
        out["note"] = "zero determinant: the zero conditions cut a space of dimension > 1"
        return out
    rep = rays.verify_extreme(system, candidate, local)
    out["report"] = {"nonneg": rep.nonneg, "zero_count": rep.zero_count,
                     "face_dim": rep.face_dim, "extreme": rep.extreme}
    return out


def _cmd_verify_extreme(args) -> dict:
    system, s, local = _system_from_args(args)
    f = parse_poly(args.poly).shift(s.lo)
    try:
        rep = rays.verify_extreme(system, f, local)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    return {"poly": args.poly, "nonneg": rep.nonneg, "zero_count": rep.zero_count,
            "face_dim": rep.face_dim, "extreme": rep.extreme}


def _cmd_lmi(args) -> dict:
    try:
        if args.kind == "hankel":
            pencil = lmi.hankel_lmi(args.n)
        else:
            if not args.interval:
                raise CLIError("--interval is required for the interval kind")
            pencil = lmi.interval_moment_lmi(args.n, parse_interval(args.interval))
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    payload = lmi.lmi_to_json(pencil)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        payload = dict(payload, written=args.json)
    if args.sdpa:
        objective = (parse_point(args.objective) if args.objective
                     else [Fraction(0)] * pencil.n)
        text = lmi.emit_sdpa(pencil, objective)
        with open(args.sdpa, "w") as fh:
            fh.write(text)
        payload = dict(payload, sdpa=args.sdpa)
    return payload


def _cmd_member(args) -> dict:
    point = parse_point(args.point)
    try:
        with open(args.lmi) as fh:
            pencil = lmi.lmi_from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise CLIError(f"cannot load pencil: {exc}") from None
    try:
        return {"member": lmi.lmi_membership(pencil, point)}
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _cmd_support(args) -> dict:
    s = parse_interval(args.interval)
    curve = hull.moment_curve(args.n, s)
    l = parse_point(args.l)
    width = parse_rational(args.width)
    try:
        enc = hull.support_min_exact(l, curve, width)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    return {"l": [str(c) for c in l], "enclosure": [str(enc.lo), str(enc.hi)],
            "width": str(enc.width)}


def _cmd_cross_validate(args) -> dict:
    s = parse_interval(args.interval)
    curve = hull.moment_curve(args.n, s)
    pencil = lmi.interval_moment_lmi(args.n, s)
    try:
        report = hull.cross_validate(curve, pencil, trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    return report.to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvehull",
        description="Exact toolkit for semidefinite representations of curve hulls")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("schur", help="Schur polynomial of a decreasing sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--method", choices=("tableaux", "bialternant", "both"),
                   default="both")
    p.set_defaults(handler=_cmd_schur)

    p = sub.add_parser("verify-schur", help="identity and divisibility suites")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-entry", type=int, default=6)
    p.set_defaults(handler=_cmd_verify_schur)

    p = sub.add_parser("verify-diagonal",
                       help="factor a Taylor-process determinant and test the cofactor")
    p.add_argument("--basis", required=True)
    p.add_argument("--blocks", required=True)
    p.set_defaults(handler=_cmd_verify_diagonal)

    p = sub.add_parser("extreme", help="build and verify an extreme-ray candidate")
    p.add_argument("--basis", required=True)
    p.add_argument("--interval", required=True)
    p.add_argument("--zeros", required=True)
    p.set_defaults(handler=_cmd_extreme)

    p = sub.add_parser("verify-extreme", help="extremality report for a member")
    p.add_argument("--basis", required=True)
    p.add_argument("--interval", required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(handler=_cmd_verify_extreme)

    p = sub.add_parser("lmi", help="build a pencil; optionally write JSON/SDPA files")
    p.add_argument("--kind", choices=("hankel", "interval"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--interval")
    p.add_argument("--objective")
    p.add_argument("--json")
    p.add_argument("--sdpa")
    p.set_defaults(handler=_cmd_lmi)

    p = sub.add_parser("member", help="exact membership of a point in a pencil")
    p.add_argument("--lmi", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(handler=_cmd_member)

    p = sub.add_parser("support", help="enclose the minimum of a functional on a moment curve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--interval", required=True)
    p.add_argument("--l", required=True)
    p.add_argument("--width", default="1/1000000")
    p.set_defaults(handler=_cmd_support)

    p = sub.add_parser("cross-validate", help="hull oracles against the interval pencil")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--interval", required=True)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_cross_validate)

    return parser


def _render_text(data, indent=0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        return "\n".join(f"{pad}{k}: " + (("\n" + _render_text(v, indent + 1))
                                          if isinstance(v, (dict, list)) else str(v))
                         for k, v in data.items())
    if isinstance(data, list):
        return "\n".join(f"{pad}- " + (("\n" + _render_text(v, indent + 1))
                                       if isinstance(v, (dict, list)) else str(v))
                         for v in data)
    return f"{pad}{data}"


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except UsageError as exc:
        if args.format == "json":
            print(json.dumps({"error": str(exc), "usage": True}))
        else:
            print(f"usage error: {exc}")
        return 2
    except CLIError as exc:
        if args.format == "json":
            print(json.dumps({"error": str(exc)}))
        else:
            print(f"error: {exc}")
        return 1
    if args.format == "json":
        print(json.dumps(result, sort_keys=False))
    else:
        print(_render_text(result))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
