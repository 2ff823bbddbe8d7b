"""Exhaustive checks of the multiplicity bound, inheritance and the
push-forward multiplicity inequality over finite hyperfields."""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache

from .carriers import Polar
from .catalog import K, P, S, TC, identity, to_krasner
from .hyperfields import Hyperfield
from .polynomial import Polynomial, polynomials_up_to, pushforward
from .roots import _quotients, certify_root_tc, finite_roots, multiplicity


def _text(p):
    from .textio import format_polynomial

    return format_polynomial(p)


def _need_finite(H: Hyperfield):
    if not H.finite:
        raise TypeError(f"{H.name} has an infinite carrier; exhaustive checks need a finite one")


def check_multiplicity_bound(H: Hyperfield, degree_max: int = 3) -> dict:
    """Sum of root multiplicities against the degree, for every polynomial."""
    _need_finite(H)
    checked = equal = 0
    violations = []
    for p in polynomials_up_to(H, degree_max):
        checked += 1
        total = finite_roots(p).total_multiplicity
        if total > p.degree:
            violations.append({"polynomial": _text(p), "degree": p.degree, "total_multiplicity": total})
        elif total == p.degree:
            equal += 1
    return {
        "hyperfield": H.name,
        "property": "multiplicity_bound",
        "degree_max": degree_max,
        "checked": checked,
        "equality": equal,
        "equality_everywhere": equal == checked,
        "violations": violations,
    }


@lru_cache(maxsize=None)
def _chain(H: Hyperfield, coeffs: tuple, pending: tuple) -> bool:
    """Is there a sequence of quotients peeling off every root in ``pending``?"""
    if not pending:
        return True
    for a in sorted(set(pending), key=pending.index):
        rest = list(pending)
        rest.remove(a)
        rest = tuple(rest)
        for q in _quotients(H, coeffs, a):
            if _chain(H, q, rest):
                return True
    return False


def _sub_multisets(items):
    counts = Counter(items)
    keys = list(counts)

    def rec(i):
        if i == len(keys):
            yield ()
            return
        for tail in rec(i + 1):
            for k in range(counts[keys[i]] + 1):
                yield (keys[i],) * k + tail

    yield from rec(0)


def check_inheritance(H: Hyperfield, degree_max: int = 3) -> dict:
    """For every polynomial and every sub-multiset of its roots (with
    multiplicity, size at most the degree), search for a witness quotient."""
    _need_finite(H)
    checked = 0
    violations = []
    for p in polynomials_up_to(H, degree_max):
        roots = []
        for a, m in finite_roots(p).roots:
            roots.extend([a] * m)
        coeffs = tuple(p.coeffs())
        for sub in _sub_multisets(roots):
            if len(sub) > p.degree:
                continue
            checked += 1
            if not _chain(H, coeffs, sub):
                violations.append({"polynomial": _text(p), "roots": list(sub)})
    return {
        "hyperfield": H.name,
        "property": "inheritance",
        "degree_max": degree_max,
        "checked": checked,
        "violations": violations,
    }


def check_pushforward_mult(f, degree_max: int = 3) -> dict:
    """``mult_b(f_* p) >= sum of mult_a(p) over a in the fiber of b``.

    Also reports whether the domain satisfies the hypotheses that guarantee
    the inequality (multiplicity bound and inheritance).
    """
    if not (f.domain.finite and f.codomain.finite):
        return {
            "hyperfield": f.domain.name,
            "hom": f.name,
            "degree_max": degree_max,
            "excluded": True,
            "reason": f"{f.domain.name if not f.domain.finite else f.codomain.name} has an infinite carrier",
            "checked": 0,
            "violations": [],
        }
    H1, H2 = f.domain, f.codomain
    checked = equal = 0
    violations = []
    for p in polynomials_up_to(H1, degree_max):
        fp = pushforward(f, p)
        for b in H2.elements():
            checked += 1
            lhs = multiplicity(fp, b)
            rhs = sum(multiplicity(p, a) for a in H1.elements() if H2.eq(f(a), b))
            if lhs < rhs:
                violations.append({"polynomial": _text(p), "b": b, "pushforward_mult": lhs, "fiber_mult": rhs})
            elif lhs == rhs:
                equal += 1
    bound = check_multiplicity_bound(H1, degree_max)
    inherit = check_inheritance(H1, degree_max)
    return {
        "hyperfield": H1.name,
        "hom": f.name,
        "degree_max": degree_max,
        "checked": checked,
        "equality": equal,
        "equality_everywhere": equal == checked,
        "hypotheses": {
            "domain_multiplicity_bound": not bound["violations"],
            "domain_inheritance": not inherit["violations"],
        },
        "violations": violations,
    }


def tc_bound_witness() -> dict:
    """``X^2 + X + 1`` over TC has the three roots ``-1, i, -i``; every root
    has multiplicity at least one, so the multiplicity bound fails."""
    p = Polynomial.from_coeffs(TC, [TC.one] * 3)
    candidates = {"-1": Polar(0.0, math.pi), "i": Polar(0.0, math.pi / 2), "-i": Polar(0.0, 3 * math.pi / 2)}
    certified = {k: certify_root_tc(p, a).verdict for k, a in candidates.items()}
    n = sum(certified.values())
    return {
        "hyperfield": TC.name,
        "polynomial": _text(p),
        "degree": p.degree,
        "certified_roots": certified,
        "distinct_roots": n,
        "bound_applicable": n <= p.degree,
    }


def phase_exclusion(f=None) -> dict:
    """The phase hyperfield has roots on a whole open arc; it cannot be swept."""
    from .polynomial import evaluate
    from .carriers import Phase

    f = f or to_krasner(P)
    p = Polynomial.from_coeffs(P, [P.one] * 3)
    samples = [math.pi / 2 + k * math.pi / 8 for k in range(1, 8)]
    roots = [evaluate(p, (Phase(t),)).is_root for t in samples]
    return {
        "hom": f.name,
        "polynomial": _text(p),
        "excluded": True,
        "reason": "infinite carrier: every phase strictly between 90 and 270 degrees is a root",
        "sampled_roots_on_arc": sum(roots),
        "samples": len(samples),
    }


def run_all(degree_max: int = 3) -> dict:
    """Every sweep the CLI reports, plus the TC and phase witnesses."""
    out = {
        "multiplicity_bound": [check_multiplicity_bound(H, degree_max) for H in (K, S)],
        "inheritance": [check_inheritance(H, degree_max) for H in (K, S)],
        "pushforward_mult": [
            check_pushforward_mult(f, degree_max) for f in (to_krasner(S), identity(K), to_krasner(K))
        ],
        "tc_multiplicity_bound": tc_bound_witness(),
        "phase_to_krasner": phase_exclusion(),
    }
    bad = sum(len(r["violations"]) for key in ("multiplicity_bound", "inheritance", "pushforward_mult") for r in out[key])
    out["violations"] = bad
    return out
