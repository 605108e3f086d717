"""Command-line driver: ``mobius-posets <command> ...``.

Exit codes: 0 success or pass, 1 a certification/check failed, 2 bad input.
Element keys use the textual forms printed by the library, e.g. ``div:12``
(or just ``12``), ``set:{1,3}``, ``sub:q=2;rref=[[1,0,1]]``, ``z1``,
``prod:(7,1)``, ``Q:Qa:(2,3)``. Quote keys containing braces, brackets or
parentheses in the shell.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import checkers, reduced
from .core import PosetView, SupportedFunction, mobius, mobius_invert, zeta_transform
from .keys import FamilyMismatchError, KeyParseError, format_rational, parse_rational
from .zoo import ZOO_DESCRIPTIONS, PosetFileError, build, parse_family

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    poset: str
    ladder: tuple[int, ...]
    format: str
    seed: int
    q: int | None
    out: str | None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        try:
            ladder = checkers.check_ladder(int(t) for t in str(args.ladder).split(",") if t.strip())
        except ValueError as exc:
            raise UsageError(f"--ladder: {exc}") from None
        if args.format not in FORMATS:
            raise UsageError(f"--format must be one of {FORMATS}")
        return cls(args.poset, ladder, args.format, args.seed, args.q, args.out)

    def build_poset(self) -> PosetView:
        return build(parse_family(self.poset, self.q))


def read_function_file(P: PosetView, text: str) -> SupportedFunction:
    """Lines of ``<element> <rational>``; blank lines and ``#`` comments ignored."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise UsageError(f"line {lineno}: expected '<element> <value>', got {raw.strip()!r}")
        try:
            x = P.parse_key(parts[0])
            P.check(x)
            v = parse_rational(parts[1])
        except ValueError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        values[x] = values.get(x, Fraction(0)) + v
    return SupportedFunction(values)


def _load_function(P: PosetView, path: str) -> SupportedFunction:
    try:
        with open(path, encoding="utf-8") as fh:
            return read_function_file(P, fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


# ----------------------------------------------------------------------
# rendering


def _report_text(report: dict) -> str:
    lines = []
    for key in ("property", "poset", "family", "frontier_ladder"):
        if key in report:
            val = report[key]
            lines.append(f"{key}: {','.join(map(str, val)) if isinstance(val, list) else val}")
    for c in report.get("per_candidate", []):
        counts = ",".join(map(str, c["counts"]))
        lines.append(f"  {c['z']}  counts=[{counts}]  stabilized={str(c['stabilized']).lower()}")
    for c in report.get("checks", []):
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"  [{mark}] {c['name']}: {c['counts']}")
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines)


def _report_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    ladder = report.get("frontier_ladder", [])
    w.writerow(["property", "poset", "z"] + [f"n={m}" for m in ladder] + ["stabilized", "verdict"])
    for c in report.get("per_candidate", []):
        w.writerow([report["property"], report["poset"], c["z"]] + c["counts"] + [c["stabilized"], report["verdict"]])
    for c in report.get("checks", []):
        w.writerow([report["property"], report["poset"], c["name"]] + list(c["counts"]) + [c["passed"], report["verdict"]])
    return buf.getvalue().rstrip("\n")


def _emit(cfg: RunConfig, payload, text: str | None = None, rows: list[list] | None = None) -> None:
    if cfg.format == "json":
        out = json.dumps(payload, indent=2)
    elif cfg.format == "csv":
        if rows is None:
            out = _report_csv(payload)
        else:
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(rows)
            out = buf.getvalue().rstrip("\n")
    else:
        out = text if text is not None else _report_text(payload)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _compact(values: Sequence[Fraction]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


# ----------------------------------------------------------------------
# commands


def cmd_mobius(cfg: RunConfig, args) -> int:
    P = cfg.build_poset()
    x, y = P.parse_key(args.x), P.parse_key(args.y)
    m = mobius(P, x, y)
    payload = {"poset": P.name, "x": P.format_key(x), "y": P.format_key(y), "mobius": m}
    _emit(cfg, payload, str(m), [["x", "y", "mobius"], [payload["x"], payload["y"], m]])
    return 0


def _pointwise(cfg: RunConfig, P: PosetView, name: str, fn, elements: list[str], f: SupportedFunction) -> int:
    keys = [P.parse_key(t) for t in elements]
    vals = [(x, fn(P, f, x)) for x in keys]
    payload = {
        "poset": P.name,
        "operation": name,
        "values": [{"x": P.format_key(x), "value": format_rational(v)} for x, v in vals],
    }
    text = "\n".join(f"{P.format_key(x)} {v}" for x, v in vals)
    rows = [["x", "value"]] + [[P.format_key(x), str(v)] for x, v in vals]
    _emit(cfg, payload, text, rows)
    return 0


def cmd_transform(cfg: RunConfig, args) -> int:
    P = cfg.build_poset()
    return _pointwise(cfg, P, "zeta_transform", zeta_transform, args.elements, _load_function(P, args.f))


def cmd_invert(cfg: RunConfig, args) -> int:
    P = cfg.build_poset()
    return _pointwise(cfg, P, "mobius_invert", mobius_invert, args.elements, _load_function(P, args.g))


def cmd_witnesses(cfg: RunConfig, args) -> int:
    P = cfg.build_poset()
    S = [P.parse_key(t) for t in args.elements]
    _emit(cfg, checkers.witness_report(P, S, cfg.ladder))
    return 0


def cmd_check_g(cfg: RunConfig, args) -> int:
    P = cfg.build_poset()
    xs = [P.parse_key(t) for t in args.elements]
    _emit(cfg, checkers.check_g_report(P, xs, cfg.ladder))
    return 0


def cmd_experiment(cfg: RunConfig, args) -> int:
    P = cfg.build_poset()
    f = _load_function(P, args.f)
    if not f:
        raise UsageError(f"{args.f}: f is identically zero")
    report = checkers.experiment_report(P, f, cfg.ladder)
    counts = report["per_candidate"][0]["counts"]
    text = "\n".join(
        [
            f"property: M",
            f"poset: {P.name}",
            f"frontier_ladder: {','.join(map(str, cfg.ladder))}",
            f"counts: [{','.join(map(str, counts))}]",
            f"verdict: {report['verdict']}",
        ]
    )
    _emit(cfg, report, text)
    return 0


def cmd_certify(cfg: RunConfig, args) -> int:
    ladder = checkers.ladder_from_bound(args.n) if args.n is not None else cfg.ladder
    if args.theorem == "theorem4":
        report = checkers.certify_theorem4(ladder)
    elif args.theorem == "theorem5":
        report = checkers.certify_theorem5(ladder, seed=cfg.seed)
    else:
        report = reduced.certify_linear_order(args.n or 12)
        text = "\n".join(
            [
                f"mu: {_compact([parse_rational(i['value']) for i in report['mu']])}",
                f"zeta*mu: {_compact([parse_rational(i['value']) for i in report['zeta_mu']])}",
                f"verdict: {report['verdict']}",
            ]
        )
        _emit(cfg, report, text, [["n", "mu", "zeta_mu"]] + [
            [a["n"], a["value"], b["value"]] for a, b in zip(report["mu"], report["zeta_mu"])
        ])
        return 0 if report["verdict"] == "R-violated" else 1
    _emit(cfg, report)
    return 0 if report["verdict"] == "pass" else 1


def _family(args) -> reduced.CoefficientFamily:
    return reduced.CoefficientFamily(args.family, args.q if args.family == "qbinomial" else None)


def cmd_reduced(cfg: RunConfig, args) -> int:
    fam = _family(args)
    action = args.action
    if action == "mobius":
        N = args.n or 12
        mu = reduced.reduced_mobius(fam, N)
        values = mu.to_list(N)
        _emit(cfg, reduced.sequence_to_json(mu, N), _compact(values),
              [["n", "value"]] + [[i + 1, str(v)] for i, v in enumerate(values)])
        return 0
    if action == "conv":
        if args.n is None or args.f is None or args.g is None:
            raise UsageError("reduced conv needs --f, --g and --n")
        f, g = reduced.parse_sequence(args.f), reduced.parse_sequence(args.g)
        v = reduced.reduced_convolve(fam, f, g, args.n)
        _emit(cfg, {"family": str(fam), "n": args.n, "value": format_rational(v)}, str(v),
              [["n", "value"], [args.n, str(v)]])
        return 0
    if action == "verify":
        P = reduced.poset_for_family(fam)
        default_frontier = {"dirichlet": 60, "linear": 20, "binomial": 6, "qbinomial": 4}[fam.kind]
        frontier = args.n if args.n is not None else (args.nmax if fam.kind in ("dirichlet", "linear") and args.nmax else default_frontier)
        report = reduced.verify_structure_coefficients(fam, P, frontier, args.nmax)
        text = report["verdict"]
        if report["mismatches"]:
            text += "\n" + "\n".join(json.dumps(m) for m in report["mismatches"][:10])
        rows = [["x", "y", "d", "k", "expected", "found"]] + [
            [m["x"], m["y"], m["d"], m["k"], m["expected"], m["found"]] for m in report["mismatches"]
        ]
        _emit(cfg, report, text, rows)
        return 0 if report["verdict"] == "all-match" else 1
    if action == "prop7":
        f = reduced.parse_sequence(args.f or "2:1,4:-10")
        report = reduced.prop7_check(f, args.N or 500)
        text = f"n0: {report['n0']}\nratio: {report['ratio_float']:.6f} (target {parse_rational(report['leading'])})\npassed: {report['passed']}"
        _emit(cfg, report, text, [list(report), [json.dumps(v) for v in report.values()]])
        return 0 if report["passed"] else 1
    # prop8
    q = args.q if args.q is not None else 2
    f = reduced.parse_sequence(args.f or "3:1")
    report = reduced.prop8_check(f, q, args.N or 40)
    text = (
        f"polynomial: [{','.join(report['polynomial'])}]\n"
        f"zeros in range: {len(report['zeros'])} (degree {report['degree']})\n"
        f"passed: {report['passed']}"
    )
    _emit(cfg, report, text, [list(report), [json.dumps(v) for v in report.values()]])
    return 0 if report["passed"] else 1


def cmd_zoo(cfg: RunConfig, args) -> int:
    rows = sorted(ZOO_DESCRIPTIONS.items())
    payload = [{"family": k, "description": v} for k, v in rows]
    text = "\n".join(f"{k:18s} {v}" for k, v in rows)
    _emit(cfg, payload, text, [["family", "description"]] + [list(r) for r in rows])
    return 0


# ----------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--poset", default="divisibility", help="family name, product:A,B, or file:PATH")
    p.add_argument("--format", default="text", choices=FORMATS)
    p.add_argument("--ladder", default="25,50,100", help="comma-separated, strictly increasing rank bounds")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--q", type=int, default=None, help="field size for subspaces / qbinomial")
    p.add_argument("--out", default=None, metavar="FILE")
    return p


def make_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="mobius-posets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mobius", parents=[common], help="print mu(x, y)")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("transform", parents=[common], help="zeta transform of a function file at elements")
    p.add_argument("--f", required=True, metavar="FILE")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("invert", parents=[common], help="Mobius inversion of a function file at elements")
    p.add_argument("--g", required=True, metavar="FILE")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("witnesses", parents=[common], help="H_k witness counts for the set S")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("check-g", parents=[common], help="counts of y with mu(x, y) != 0")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_check_g)

    p = sub.add_parser("experiment", parents=[common], help="support of g = zeta * f along the ladder")
    p.add_argument("--f", required=True, metavar="FILE")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("certify", parents=[common], help="run a counterexample certification")
    p.add_argument("theorem", choices=("theorem4", "theorem5", "linear"))
    p.add_argument("--n", type=int, default=None, help="top rank bound; ladder (n/4, n/2, n)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("reduced", parents=[common], help="reduced incidence algebra tools")
    p.add_argument("action", choices=("conv", "mobius", "verify", "prop7", "prop8"))
    p.add_argument("--family", required=True, choices=reduced.FAMILIES)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--f", default=None, help="sequence as 'n:value,...'")
    p.add_argument("--g", default=None, help="sequence as 'n:value,...'")
    p.set_defaults(func=cmd_reduced)

    p = sub.add_parser("zoo", parents=[common], help="list poset families")
    p.add_argument("action", choices=("list",))
    p.set_defaults(func=cmd_zoo)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        if args.command == "reduced" and args.family == "qbinomial" and args.q is None:
            raise UsageError("--family qbinomial needs --q")
        return args.func(cfg, args)
    except (UsageError, KeyParseError, FamilyMismatchError, PosetFileError, ValueError, OSError) as exc:
        print(f"mobius-posets: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
