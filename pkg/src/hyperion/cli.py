"""Command-line front end.

Every subcommand writes JSON to stdout. Exit status: 0 on success, 1 when
the answer is a mathematical negative (not a root, a failed check), 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import List, Optional

from . import valueset as vs
from .axioms import check_axioms
from .catalog import ETA, TC, hom_check, hom_lookup, lookup
from .conjectures import run_all
from .errors import DegeneratePolynomial, HyperionError, NotARoot
from .figures import emit_regions
from .lifting import _lift, kapranov_lift, tropical_grid_roots
from .polynomial import evaluate, pushforward
from .roots import multiplicity, roots
from .serialize import cert_to_json, dumps, element_to_json, polynomial_to_json, root_report_to_json
from .textio import format_element, parse_point, parse_polynomial

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _out(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _hf(name):
    try:
        return lookup(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _need_tc(H):
    if H.name != "TC":
        raise UsageError(f"this command works over TC, got {H.name}")


# ---------------------------------------------------------------- handlers


def cmd_eval(args) -> int:
    H = _hf(args.hyperfield)
    p = parse_polynomial(args.polynomial, H)
    pt = parse_point(args.at, H, p.nvars)
    r = evaluate(p, pt)
    _out({
        "polynomial": polynomial_to_json(p),
        "point": [element_to_json(x, H) for x in pt],
        "value": vs.to_json(r.value),
        "is_root": r.is_root,
    })
    return EXIT_OK if r.is_root else EXIT_NEGATIVE


def cmd_roots(args) -> int:
    H = _hf(args.hyperfield)
    p = parse_polynomial(args.polynomial, H)
    if not p.is_univariate:
        if H.name != "T":
            raise UsageError("multivariate root listing is available over T only (grid scan)")
        found = tropical_grid_roots(p, step=args.step, bound=args.bound)
        _out({
            "polynomial": polynomial_to_json(p),
            "roots": [[element_to_json(x, H) for x in pt] for pt in found],
            "exhaustive": False,
            "grid": {"step": args.step, "bound": args.bound},
        })
        return EXIT_OK
    try:
        rep = roots(p)
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    out = root_report_to_json(rep, H)
    out["polynomial"] = polynomial_to_json(p)
    _out(out)
    return EXIT_OK


def cmd_mult(args) -> int:
    H = _hf(args.hyperfield)
    p = parse_polynomial(args.polynomial, H)
    if not H.finite:
        raise UsageError(f"multiplicities are computed over finite hyperfields, {H.name} is infinite")
    (a,) = parse_point(args.at, H, 1)
    _out({"polynomial": polynomial_to_json(p), "element": element_to_json(a, H), "multiplicity": multiplicity(p, a)})
    return EXIT_OK


def cmd_push(args) -> int:
    try:
        f = hom_lookup(args.hom)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    p = parse_polynomial(args.polynomial, f.domain)
    q = pushforward(f, p)
    _out({"hom": f.name, "polynomial": polynomial_to_json(p), "pushforward": polynomial_to_json(q)})
    return EXIT_OK


def cmd_lift(args) -> int:
    H = _hf(args.hyperfield)
    _need_tc(H)
    p = parse_polynomial(args.polynomial, H)
    if not p.is_univariate:
        raise UsageError("lift takes a univariate polynomial; use kapranov for several variables")
    (b,) = parse_point(args.root, "T", 1)
    try:
        res = _lift(p, b)
    except (NotARoot, DegeneratePolynomial) as exc:
        _out({"polynomial": polynomial_to_json(p), "root": element_to_json(b, "T"), "error": str(exc), "certified": False})
        return EXIT_NEGATIVE
    cert = res.certificate
    _out({
        "polynomial": polynomial_to_json(p),
        "tropicalization": polynomial_to_json(pushforward(ETA, p)),
        "root": element_to_json(b, "T"),
        "tropical_dominant": list(res.tropical_dominant),
        "pair": None if res.pair is None else list(res.pair),
        "lifted": element_to_json(res.element, TC),
        "lifted_text": format_element(res.element, TC),
        "certificate": cert_to_json(cert),
        "certified": cert.verdict,
    })
    _say(f"lifted {format_element(res.element, TC)} (angle {res.element.angle / math.pi:.12g} pi): "
         + ("root" if cert.verdict else "not a root"))
    return EXIT_OK if cert.verdict else EXIT_NEGATIVE


def cmd_kapranov(args) -> int:
    H = _hf(args.hyperfield)
    _need_tc(H)
    p = parse_polynomial(args.polynomial, H)
    a = parse_point(args.root, "T", p.nvars)
    try:
        ctx = kapranov_lift(p, a)
    except NotARoot as exc:
        _out({"polynomial": polynomial_to_json(p), "target": [element_to_json(x, "T") for x in a], "error": str(exc), "certified": False})
        return EXIT_NEGATIVE
    _out(ctx.to_json())
    pt = "(" + "; ".join(format_element(x, TC) for x in ctx.point) + ")"
    _say(f"lifted point {pt}: " + ("root" if ctx.certified else "not a root")
         + (", tropicalizes to the target" if ctx.eta_matches else ", tropicalization differs"))
    return EXIT_OK if ctx.ok else EXIT_NEGATIVE


def cmd_axioms(args) -> int:
    H = _hf(args.hyperfield)
    rep = check_axioms(H, sample_budget=args.samples, seed=args.seed)
    _out(rep)
    return EXIT_OK if rep["passed"] else EXIT_NEGATIVE


def cmd_homcheck(args) -> int:
    try:
        f = hom_lookup(args.hom)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    rep = hom_check(f, sample_budget=args.samples, seed=args.seed)
    _out(rep)
    return EXIT_OK if rep["passed"] else EXIT_NEGATIVE


def cmd_conjectures(args) -> int:
    rep = run_all(args.degree_max)
    _out(rep)
    return EXIT_OK if rep["violations"] == 0 else EXIT_NEGATIVE


DEFAULT_PAIRS = ("mag1@30;mag1@210", "mag2@30;mag1@150", "mag1@20;mag1@100")


def cmd_regions(args) -> int:
    pairs = []
    for text in args.pair or DEFAULT_PAIRS:
        pt = parse_point(text, TC)
        if len(pt) != 2:
            raise UsageError(f"a pair needs two elements separated by ';', got {text!r}")
        pairs.append(pt)
    svg = emit_regions(pairs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    rows = []
    for z, w in pairs:
        rows.append({
            "z": element_to_json(z, TC),
            "w": element_to_json(w, TC),
            "sum": vs.to_json(TC.hyperadd(z, w)),
        })
    if args.out:
        _out({"file": args.out, "rows": rows})
    return EXIT_OK


def _say(msg: str) -> None:
    sys.stderr.write(msg + "\n")


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")

    parser = argparse.ArgumentParser(prog="hyperion", description="Algebra over hyperfields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("eval", cmd_eval, "evaluate a polynomial at a point")
    sp.add_argument("hyperfield")
    sp.add_argument("polynomial")
    sp.add_argument("--at", required=True, help="point literal, e.g. 1 or (0,1)")

    sp = add("roots", cmd_roots, "list roots of a polynomial")
    sp.add_argument("hyperfield")
    sp.add_argument("polynomial")
    sp.add_argument("--step", type=float, default=0.5, help="grid step for multivariate T")
    sp.add_argument("--bound", type=float, default=10.0, help="grid half-width for multivariate T")

    sp = add("mult", cmd_mult, "multiplicity of an element as a root")
    sp.add_argument("hyperfield")
    sp.add_argument("polynomial")
    sp.add_argument("--at", required=True)

    sp = add("push", cmd_push, "push a polynomial forward along a homomorphism")
    sp.add_argument("hom")
    sp.add_argument("polynomial")

    sp = add("lift", cmd_lift, "lift a tropical root of a univariate TC polynomial")
    sp.add_argument("hyperfield")
    sp.add_argument("polynomial")
    sp.add_argument("--root", required=True)

    sp = add("kapranov", cmd_kapranov, "lift a tropical root of a multivariate TC polynomial")
    sp.add_argument("hyperfield")
    sp.add_argument("polynomial")
    sp.add_argument("--root", required=True, help="tropical point, e.g. (0,0)")

    sp = add("axioms", cmd_axioms, "check the hyperfield axioms")
    sp.add_argument("hyperfield")
    sp.add_argument("--samples", type=int, default=10_000)

    sp = add("homcheck", cmd_homcheck, "check a homomorphism")
    sp.add_argument("hom")
    sp.add_argument("--samples", type=int, default=10_000)

    sp = add("conjectures", cmd_conjectures, "multiplicity bound, inheritance and push-forward sweeps")
    sp.add_argument("--degree-max", type=int, default=3)

    sp = add("regions", cmd_regions, "SVG paths for sums of TC pairs")
    sp.add_argument("--pair", action="append", help="two TC literals separated by ';' (repeatable)")
    sp.add_argument("--out", help="write the SVG here instead of stdout")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, HyperionError, OSError) as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
