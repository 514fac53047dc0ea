"""Command-line interface.  Exit codes: 0 success/Proven, 1 Refuted, 2 Inconclusive, 64 usage."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .checkers import (
    ProbeConfig,
    Verdict,
    garding_decide,
    lorentzian_check,
    mrs_ray_probe,
    rayleigh_check,
    stability_probe,
    ulc_check,
)
from .fixtures import dump_fixture, list_fixtures, load_polynomial_text, matroid_from_json
from .identities import certificates_for
from .matroid import Matroid, connect, genfun
from .matx import RationalMatrix, charpoly_p, charpoly_q, classify, determinantal_genpoly
from .polycore import (
    Polynomial,
    PolynomialSyntaxError,
    along_ray,
    bottom_part,
    combinatorial_inversion,
    diagonal_project,
    format_polynomial,
    homogenize,
    invert_ttau,
    multi_derivative,
    normalize,
    parse_polynomial,
    polarize,
    restrict,
    to_fraction,
    top_part,
)
from .realroots import isolate_real_roots, mrs_check, real_rooted_check, root_sequence

EXIT_OK, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage().rstrip()}")


# ---------------------------------------------------------------------------
# input helpers


def read_polynomial(source: str, nvars: int | None = None) -> Polynomial:
    """A literal, ``fixture:NAME``, a text file, or a JSON file in the polynomial JSON form."""
    if source.startswith("fixture:"):
        return parse_polynomial(load_polynomial_text(source[len("fixture:"):]), nvars)
    path = Path(source)
    if len(source) < 4096 and path.is_file():
        text = path.read_text()
        if text.lstrip().startswith("{"):
            return Polynomial.from_json(json.loads(text))
        lines = [ln.strip() for ln in text.splitlines()]
        return parse_polynomial(" ".join(ln for ln in lines if ln and not ln.startswith("#")), nvars)
    return parse_polynomial(source, nvars)


def _json_arg(source: str) -> Any:
    path = Path(source)
    if len(source) < 4096 and path.is_file():
        return json.loads(path.read_text())
    return json.loads(source)


def read_matroid(args: argparse.Namespace, file_attr: str = "matroid", named_attr: str = "named") -> Matroid:
    named = getattr(args, named_attr, None)
    source = getattr(args, file_attr, None)
    if named:
        return matroid_from_json({"named": named})
    if source:
        return matroid_from_json(_json_arg(source))
    raise UsageError("a matroid is required: use --matroid <file|json> or --named <fixture>")


def read_matrix(source: str) -> RationalMatrix:
    data = _json_arg(source)
    if isinstance(data, list):
        return RationalMatrix(data)
    return RationalMatrix.from_json(data)


def _rationals(text: str | None) -> list[Fraction]:
    if not text:
        return []
    return [to_fraction(v.strip()) for v in text.split(",") if v.strip()]


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(v) for v in text.split(",") if v.strip()]


def _config(args: argparse.Namespace) -> ProbeConfig:
    return ProbeConfig(seed=args.seed, n_basepoints=args.probes, n_rays=args.probes)


# ---------------------------------------------------------------------------
# output helpers


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _poly_out(args: argparse.Namespace, f: Polynomial) -> None:
    _emit(args, f.to_json(), format_polynomial(f))


def _verdict_out(args: argparse.Namespace, v: Verdict, name: str) -> int:
    lines = [f"{name}: {v.status.value}"]
    if v.certificate:
        lines.append(f"  certificate: {v.certificate}")
    for block in (v.witness, v.report):
        for k, val in (block or {}).items():
            lines.append(f"  {k}: {_plain(val)}")
    _emit(args, {"check": name, **v.to_json()}, "\n".join(lines))
    return v.exit_code


def _plain(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_plain(v) for v in value) + ")"
    return str(value)


# ---------------------------------------------------------------------------
# commands


def cmd_poly(args: argparse.Namespace) -> int:
    f = read_polynomial(args.poly)
    action = args.action
    if action == "parse":
        out = f
    elif action == "eval":
        value = f(_rationals(args.at))
        _emit(args, {"value": str(value)}, str(value))
        return EXIT_OK
    elif action in ("add", "sub", "mul", "eq"):
        if not args.other:
            raise UsageError(f"poly {action} needs --other")
        g = read_polynomial(args.other)
        n = max(f.nvars, g.nvars)
        f, g = read_polynomial(args.poly, n), read_polynomial(args.other, n)
        if action == "eq":
            same = f == g
            _emit(args, {"equal": same}, "equal" if same else "different")
            return EXIT_OK if same else EXIT_REFUTED
        out = f + g if action == "add" else f - g if action == "sub" else f * g
    elif action == "derivative":
        alpha = _ints(args.alpha)
        out = multi_derivative(f, alpha + [0] * (f.nvars - len(alpha)))
    elif action == "homogenize":
        out = homogenize(f)
    elif action == "top":
        out = top_part(f)
    elif action == "bottom":
        out = bottom_part(f)
    elif action == "polarize":
        out = polarize(f, _ints(args.kappa))
    elif action == "project":
        out = diagonal_project(f, _ints(args.kappa))
    elif action == "ttau":
        out = invert_ttau(f, _ints(args.kappa) or list(f.multidegree))
    elif action == "tau":
        out = combinatorial_inversion(f)
    elif action == "normalize":
        out = normalize(f)
    elif action == "restrict":
        if args.var is None or args.value is None:
            raise UsageError("poly restrict needs --var and --value")
        out = restrict(f, args.var, args.value)
    elif action == "ray":
        out = along_ray(f, _rationals(args.a), _rationals(args.b) or [0] * f.nvars)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown action {action}")
    _poly_out(args, out)
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    f = read_polynomial(args.poly)
    if f.nvars != 1:
        raise UsageError("roots needs a univariate polynomial")
    if args.sequence:
        seq = root_sequence(f)
        text = "\n".join(
            f"r(f^({i})) = " + ("none" if e is None else _root_text(e)) for i, e in enumerate(seq.entries)
        )
        _emit(args, {"sequence": seq.to_json()}, text)
        return EXIT_OK
    roots = isolate_real_roots(f)
    text = "\n".join(f"{_root_text(r)}  (multiplicity {r.multiplicity})" for r in roots) or "no real roots"
    payload = {"roots": [{**r.to_json(), "multiplicity": r.multiplicity} for r in roots],
               "real_rooted": real_rooted_check(f)}
    _emit(args, payload, text)
    return EXIT_OK


def _root_text(r) -> str:
    if r.is_rational():
        return str(r.value)
    return f"root of {r.defining} in ({r.lo}, {r.hi}) ~ {float(r):.12g}"


def cmd_check(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "ulc":
        if args.seq:
            seq = _rationals(args.seq)
        elif args.poly:
            f = read_polynomial(args.poly)
            if f.nvars != 1:
                raise UsageError("check ulc needs a univariate polynomial or --seq")
            seq = f.univariate_coefficients()
        else:
            raise UsageError("check ulc needs --seq or --poly")
        ok = ulc_check(seq)
        v = Verdict.proven("ultra log-concave") if ok else Verdict.refuted("not ultra log-concave")
        return _verdict_out(args, v, "ulc")
    if not args.poly:
        raise UsageError(f"check {kind} needs --poly")
    f = read_polynomial(args.poly)
    cfg = _config(args)
    if kind == "mrs":
        if f.nvars != 1:
            raise UsageError("check mrs needs a univariate polynomial")
        res = mrs_check(f)
        lines = [f"mrs: {'holds' if res.holds else 'fails'} ({res.reason})"]
        if res.sequence is not None:
            for i, e in enumerate(res.sequence.entries):
                lines.append(f"  r(f^({i})) = " + ("none" if e is None else _root_text(e)))
        _emit(args, {"check": "mrs", **res.to_json()}, "\n".join(lines))
        return EXIT_OK if res.holds else EXIT_REFUTED
    if kind == "garding":
        return _verdict_out(args, garding_decide(f, cfg), "garding")
    if kind == "rayleigh":
        return _verdict_out(args, rayleigh_check(f, cfg, certificates_for(f)), "rayleigh")
    if kind == "lorentzian":
        return _verdict_out(args, lorentzian_check(f), "lorentzian")
    if kind == "rays":
        return _verdict_out(args, mrs_ray_probe(f, cfg), "rays")
    if kind == "stability":
        return _verdict_out(args, stability_probe(f, cfg), "stability")
    raise UsageError(f"unknown check {kind}")  # pragma: no cover


def _matroid_json(m: Matroid) -> dict:
    return {"n": m.nvars, "rank": m.rank, "bases": [list(b) for b in m.bases_sets()]}


def cmd_matroid(args: argparse.Namespace) -> int:
    m = read_matroid(args)
    if args.action == "genfun":
        f = genfun(m, args.which, args.method)
        _emit(args, {"which": args.which, "method": args.method, "terms": len(f.terms),
                     "polynomial": f.to_json()}, format_polynomial(f, "w"))
        return EXIT_OK
    if args.action == "info":
        text = f"elements {m.elements}\nrank {m.rank}\nbases {len(m.bases)}"
        _emit(args, {**_matroid_json(m), "elements": m.elements}, text)
        return EXIT_OK
    # op
    chosen = [x for x in ("dual", "delete", "contract", "restrict", "connect") if getattr(args, x)]
    if len(chosen) != 1:
        raise UsageError("matroid op needs exactly one of --dual, --delete, --contract, --restrict, --connect")
    if args.dual:
        out = m.dual()
    elif args.delete:
        out = m.delete(args.delete)
    elif args.contract:
        out = m.contract(args.contract)
    elif args.restrict:
        out = m.restrict_to(_ints(args.restrict))
    else:
        other = read_matroid(args, "other", "other_named")
        e1, e2 = args.e1, args.e2
        out = connect(m, other, args.connect, e1, e2)
    _emit(args, _matroid_json(out),
          "\n".join(" ".join(map(str, b)) if b else "(empty)" for b in out.bases_sets()))
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    a = read_matrix(args.matrix)
    if args.action == "classify":
        c = classify(a)
        _emit(args, {"class": c.value}, c.value)
        return EXIT_OK
    if args.action == "charpoly-q":
        _poly_out(args, charpoly_q(a))
    elif args.action == "charpoly-p":
        _poly_out(args, charpoly_p(a))
    else:
        _poly_out(args, determinantal_genpoly(a))
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    if args.action == "list":
        listing = list_fixtures()
        text = "\n".join(f"{kind}: {', '.join(names)}" for kind, names in listing.items())
        _emit(args, listing, text)
        return EXIT_OK
    if not args.name:
        raise UsageError("fixtures dump needs a fixture name")
    try:
        data = dump_fixture(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if "bases" in data:
        text = "\n".join(" ".join(map(str, b)) for b in data["bases"])
        if data.get("note"):
            text = f"# {data['note']}\n" + text
    else:
        text = data["polynomial"]
    _emit(args, data, text)
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    from .report import format_report, run_report

    results = run_report(_config(args))
    _emit(args, {"criteria": [r.to_json() for r in results],
                 "passed": sum(r.passed for r in results), "total": len(results)},
          format_report(results, verbose=args.verbose))
    if args.strict and not all(r.passed for r in results):
        return EXIT_REFUTED
    return EXIT_OK if all(r.passed for r in results) else EXIT_REFUTED


# ---------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="probe seed (default 0)")
    common.add_argument("--probes", type=int, default=argparse.SUPPRESS,
                        help="base points and rays per probe (default 4)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="garding", description="Exact Garding-polynomial toolkit.", parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("poly", parents=[common], help="parse, evaluate and transform polynomials")
    p.add_argument("action", choices=["parse", "eval", "add", "sub", "mul", "eq", "derivative", "homogenize",
                                      "top", "bottom", "polarize", "project", "ttau", "tau", "normalize",
                                      "restrict", "ray"])
    p.add_argument("--poly", required=True, help="literal, file, or fixture:NAME")
    p.add_argument("--other", help="second operand for add/sub/mul/eq")
    p.add_argument("--at", help="comma-separated point for eval")
    p.add_argument("--alpha", help="comma-separated derivative orders")
    p.add_argument("--kappa", help="comma-separated block sizes")
    p.add_argument("--var", type=int, help="variable index for restrict")
    p.add_argument("--value", help="value for restrict")
    p.add_argument("--a", help="ray direction, comma-separated")
    p.add_argument("--b", help="ray base point, comma-separated")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("roots", parents=[common], help="isolate real roots of a univariate polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--sequence", action="store_true", help="print the root sequence of f, f', ...")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("check", parents=[common], help="run a checker and exit with its verdict")
    p.add_argument("kind", choices=["garding", "rayleigh", "ulc", "lorentzian", "mrs", "rays", "stability"])
    p.add_argument("--poly")
    p.add_argument("--seq", help="comma-separated sequence for ulc")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("matroid", parents=[common], help="matroid generating functions and operations")
    p.add_argument("action", choices=["genfun", "op", "info"])
    p.add_argument("--matroid", help="matroid JSON file or literal")
    p.add_argument("--named", help="fixture name")
    p.add_argument("--which", choices=["isgf", "bsgf", "ssgf", "csgf"], default="ssgf")
    p.add_argument("--method", choices=["brute", "mobius", "recursive"], default="brute")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--delete", type=int)
    p.add_argument("--contract", type=int)
    p.add_argument("--restrict", help="comma-separated subset")
    p.add_argument("--connect", choices=["direct_sum", "series", "parallel", "two_sum"])
    p.add_argument("--other", help="second matroid for --connect")
    p.add_argument("--other-named", dest="other_named", help="second matroid fixture for --connect")
    p.add_argument("--e1", type=int)
    p.add_argument("--e2", type=int)
    p.set_defaults(func=cmd_matroid)

    p = sub.add_parser("matrix", parents=[common], help="Z/M-matrix classification and characteristic polynomials")
    p.add_argument("action", choices=["classify", "charpoly-q", "charpoly-p", "genpoly"])
    p.add_argument("--matrix", required=True, help="matrix JSON file or literal")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("fixtures", parents=[common], help="list or dump bundled fixtures")
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("paper-report", parents=[common], help="run every acceptance criterion")
    p.add_argument("--strict", action="store_true", help="exit 1 unless every criterion passes")
    p.add_argument("--verbose", action="store_true", help="list every individual comparison")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name, default in (("json", False), ("seed", 0), ("probes", 4)):
            if not hasattr(args, name):
                setattr(args, name, default)
        if args.probes < 1:
            raise UsageError("--probes must be at least 1")
        if not getattr(args, "command", None):
            raise UsageError(parser.format_usage().rstrip())
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (PolynomialSyntaxError, ValueError, KeyError, IndexError, ZeroDivisionError, json.JSONDecodeError) as exc:
        print(f"garding: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
