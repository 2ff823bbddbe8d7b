"""Lifting tropical roots to the tropical complex hyperfield.

The univariate lift takes the two largest exponents ``t > t'`` among the
monomials that attain the tropical maximum at ``b`` and sets
``a = (-c_t' / c_t) ** (1 / (t - t'))``. The multivariate lift restricts the
polynomial to a monomial curve ``X_i = lam_i * X ** d_i`` through the
canonical lifts ``lam_i`` and lifts the root ``0`` of the restriction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import tolerance as tl
from . import valueset as vs
from .carriers import ZERO_POLAR, Phase, Polar
from .catalog import CTRIV, ETA, PH, QTRIV, SGN, T, TC
from .errors import CarrierMismatch, DegeneratePolynomial, DimensionMismatch, NotARoot
from .polynomial import Polynomial, evaluate, pushforward, restrict_to_line
from .roots import CertifyReport, RootReport, certify_root_tc, tropical_dominant, tropical_roots
from .tolerance import NEG_INF


# ---------------------------------------------------------------- univariate


@dataclass(frozen=True)
class UnivariateLift:
    element: Polar
    pair: Optional[Tuple[int, int]]
    tropical_dominant: Tuple[int, ...]
    certificate: CertifyReport


def _lift(p: Polynomial, b: float) -> UnivariateLift:
    if p.hyperfield.name != "TC":
        raise CarrierMismatch(f"lifting works over TC, got {p.hyperfield.name}")
    if not p.is_univariate:
        raise DimensionMismatch("expected a univariate polynomial")
    b = T.check(b)
    if len(p) < 2 and b != NEG_INF:
        raise DegeneratePolynomial("a single-term polynomial has no nonzero roots")
    q = pushforward(ETA, p)
    if not evaluate(q, (b,)).is_root:
        raise NotARoot(f"{b!r} is not a root of the tropicalization")
    if b == NEG_INF:
        # no constant term, so zero is a root
        return UnivariateLift(ZERO_POLAR, None, (), certify_root_tc(p, ZERO_POLAR))
    dom = tropical_dominant(q, b)
    t, t2 = dom[-1], dom[-2]
    ratio = TC.neg(TC.mul(p.coeff(t2), TC.inv(p.coeff(t))))
    a = TC.root(ratio, t - t2)
    return UnivariateLift(a, (t, t2), tuple(dom), certify_root_tc(p, a))


def lift_root_eta(p: Polynomial, b) -> Tuple[Polar, CertifyReport]:
    """Lift a root ``b`` of the tropicalization of ``p`` to a root of ``p``.

    Raises :class:`NotARoot` when ``b`` is not a tropical root.
    """
    res = _lift(p, b)
    return res.element, res.certificate


def tc_roots(p: Polynomial) -> RootReport:
    """One certified root per distinct tropical root, multiplicities unknown."""
    q = pushforward(ETA, p)
    found = []
    for b, _ in tropical_roots(q).roots:
        res = _lift(p, b)
        if res.certificate.verdict:
            found.append((res.element, None))
    return RootReport(tuple(found), p.degree, False)


# ---------------------------------------------------------------- multivariate


def choose_direction(support: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """``(1, M, M^2, ...)`` with the smallest ``M > max coordinate`` that
    separates every exponent vector by its dot product."""
    support = [tuple(e) for e in support]
    if not support:
        raise ValueError("empty support")
    n = len(support[0])
    m = 1 + max(max(e) for e in support)
    while True:
        d = tuple(m**k for k in range(n))
        dots = {sum(x * y for x, y in zip(d, e)) for e in support}
        if len(dots) == len(set(support)):
            return d
        m += 1


@dataclass(frozen=True)
class LiftContext:
    polynomial: Polynomial
    tropicalization: Polynomial
    target: Tuple[float, ...]
    vanishing: Tuple[int, ...]
    lifts: Tuple[Polar, ...]
    direction: Tuple[int, ...]
    pullback: Optional[Polynomial]
    offset: int
    pair: Optional[Tuple[int, int]]
    lifted: Optional[Polar]
    point: Tuple[Polar, ...]
    pullback_certificate: Optional[CertifyReport]
    value: vs.ValueSet
    certified: bool
    eta_matches: bool

    @property
    def ok(self) -> bool:
        return self.certified and self.eta_matches

    def to_json(self) -> dict:
        from .serialize import cert_to_json, element_to_json, polynomial_to_json

        return {
            "polynomial": polynomial_to_json(self.polynomial),
            "tropicalization": polynomial_to_json(self.tropicalization),
            "target": [element_to_json(a, T) for a in self.target],
            "vanishing_coordinates": list(self.vanishing),
            "lifts": [element_to_json(x, TC) for x in self.lifts],
            "direction": list(self.direction),
            "pullback": None if self.pullback is None else polynomial_to_json(self.pullback),
            "offset": self.offset,
            "pair": None if self.pair is None else list(self.pair),
            "lifted": None if self.lifted is None else element_to_json(self.lifted, TC),
            "point": [element_to_json(x, TC) for x in self.point],
            "pullback_certificate": None
            if self.pullback_certificate is None
            else cert_to_json(self.pullback_certificate),
            "value": vs.to_json(self.value),
            "certified": self.certified,
            "eta_matches": self.eta_matches,
        }


def _drop_vanishing(p: Polynomial, zero_vars: Sequence[int]):
    """Set the variables in ``zero_vars`` to zero and remove them."""
    keep = [i for i in range(p.nvars) if i not in zero_vars]
    terms = {}
    for e, c in p.items():
        if any(e[i] for i in zero_vars):
            continue
        terms[tuple(e[i] for i in keep)] = c
    return keep, terms


def kapranov_lift(p: Polynomial, a: Sequence) -> LiftContext:
    """Lift a tropical root ``a`` of the tropicalization of ``p`` to a root of ``p``.

    Coordinates equal to ``-inf`` are lifted to zero; the monomials that
    involve them vanish and the remaining coordinates are lifted along a
    monomial curve.
    """
    if p.hyperfield.name != "TC":
        raise CarrierMismatch(f"lifting works over TC, got {p.hyperfield.name}")
    q = pushforward(ETA, p)
    if not isinstance(a, (tuple, list)):
        a = (a,)
    a = tuple(T.check(x) for x in a)
    if len(a) != p.nvars:
        raise DimensionMismatch(f"point has {len(a)} coordinates, polynomial has {p.nvars} variables")
    if not evaluate(q, a).is_root:
        raise NotARoot(f"{a!r} is not a root of the tropicalization")

    zero_vars = tuple(i for i, x in enumerate(a) if x == NEG_INF)
    keep, terms = _drop_vanishing(p, zero_vars)
    lifts = tuple(ETA.canonical_lift(a[i]) for i in keep)
    point = [ZERO_POLAR] * p.nvars
    direction: Tuple[int, ...] = ()
    pullback = cert = pair = lifted = None
    offset = 0
    if terms and keep:
        reduced = Polynomial(TC, terms, len(keep))
        direction = choose_direction(reduced.support)
        pullback, offset = restrict_to_line(reduced, lifts, direction)
        res = _lift(pullback, 0.0)
        lifted, pair, cert = res.element, res.pair, res.certificate
        for slot, lam, d in zip(keep, lifts, direction):
            point[slot] = TC.mul(lam, TC.pow(lifted, d))
    else:
        # every surviving monomial involves a vanishing variable
        for slot, lam in zip(keep, lifts):
            point[slot] = lam
    point = tuple(point)
    result = evaluate(p, point)
    matches = all(tl.close(ETA(x), y) for x, y in zip(point, a))
    return LiftContext(
        p, q, a, zero_vars, lifts, direction, pullback, offset, pair, lifted, point, cert,
        result.value, result.is_root, matches,
    )


# ---------------------------------------------------------------- tropical grid scan


def tropical_grid_roots(
    q: Polynomial, step: float = 0.5, bound: float = 10.0, verify: bool = True
) -> List[Tuple[float, ...]]:
    """Finite tropical roots of ``q`` on a grid, plus balance points when ``n <= 2``.

    Candidates are screened with numpy and, when ``verify`` is set, confirmed
    by evaluation over the tropical hyperfield.
    """
    if q.hyperfield.name != "T":
        raise CarrierMismatch("tropical_grid_roots expects a polynomial over T")
    n = q.nvars
    exps = np.array(q.support, dtype=float)
    coeffs = np.array([c for _, c in q.items()], dtype=float)
    axis = np.arange(-bound, bound + step / 2, step)
    grids = np.meshgrid(*([axis] * n), indexing="ij")
    pts = [np.stack([g.ravel() for g in grids], axis=1)]
    extra = _balance_points(exps, coeffs) if n <= 2 else []
    if extra:
        pts.append(np.array(extra, dtype=float))
    pts = np.concatenate(pts)
    finite = coeffs > NEG_INF
    vals = coeffs[finite][None, :] + pts @ exps[finite].T
    top = vals.max(axis=1, keepdims=True)
    hits = (vals >= top - tl.TOL).sum(axis=1) >= 2
    found = []
    seen = set()
    for row in pts[hits]:
        key = tuple(np.round(row, 9) + 0.0)
        if key in seen:
            continue
        seen.add(key)
        cand = tuple(float(x) for x in row)
        if not verify or evaluate(q, cand).is_root:
            found.append(cand)
    found.sort()
    return found


def _balance_points(exps: np.ndarray, coeffs: np.ndarray) -> list:
    n = exps.shape[1]
    m = len(coeffs)
    out = []
    if n == 1:
        for i, j in combinations(range(m), 2):
            de = exps[i, 0] - exps[j, 0]
            if de:
                out.append(((coeffs[j] - coeffs[i]) / de,))
        return out
    # n == 2: intersections of two balance lines sharing a monomial
    for i, j, k in combinations(range(m), 3):
        A = np.array([exps[i] - exps[j], exps[i] - exps[k]])
        rhs = np.array([coeffs[j] - coeffs[i], coeffs[k] - coeffs[i]])
        if abs(np.linalg.det(A)) > 1e-12:
            out.append(tuple(np.linalg.solve(A, rhs)))
    return out


def tropicalize_then_lift(p: Polynomial) -> List[Polar]:
    """Certified roots of a univariate TC polynomial, one per tropical root."""
    return [r for r, _ in tc_roots(p).roots]


# ---------------------------------------------------------------- forward inclusion


def forward_inclusion_check(f, p: Polynomial, roots: Sequence) -> dict:
    """Check that ``f`` maps each supplied root of ``p`` to a root of ``f_*(p)``."""
    fp = pushforward(f, p)
    checked = contained = 0
    failures = []
    skipped = []
    for r in roots:
        pt = r if isinstance(r, (tuple, list)) else (r,)
        if not evaluate(p, pt).is_root:
            skipped.append(repr(pt))
            continue
        checked += 1
        image = tuple(f(x) for x in pt)
        if evaluate(fp, image).is_root:
            contained += 1
        else:
            failures.append({"root": repr(pt), "image": repr(image)})
    return {
        "hom": f.name,
        "checked": checked,
        "contained": contained,
        "not_roots": skipped,
        "failures": failures,
        "passed": not failures,
    }


def polynomials_in(H, nvars: int, degree_max: int):
    """Every nonzero polynomial over a finite ``H`` with total degree <= degree_max."""
    monos = [e for e in product(range(degree_max + 1), repeat=nvars) if sum(e) <= degree_max]
    els = H.elements()
    for coeffs in product(els, repeat=len(monos)):
        terms = {e: c for e, c in zip(monos, coeffs) if not H.is_zero(c)}
        if terms:
            yield Polynomial(H, terms, nvars)


def forward_inclusion_exhaustive(f, degree_max: int = 3, nvars: int = 1) -> dict:
    """Forward inclusion for every polynomial over a finite domain."""
    H = f.domain
    points = list(product(H.elements(), repeat=nvars))
    polys = checked = contained = 0
    failures = []
    for p in polynomials_in(H, nvars, degree_max):
        polys += 1
        rep = forward_inclusion_check(f, p, points)
        checked += rep["checked"]
        contained += rep["contained"]
        for fail in rep["failures"]:
            failures.append(dict(fail, polynomial=_text(p)))
    return {
        "hom": f.name,
        "degree_max": degree_max,
        "nvars": nvars,
        "polynomials": polys,
        "checked": checked,
        "contained": contained,
        "failures": failures,
        "passed": not failures,
    }


def _text(p):
    from .textio import format_polynomial

    return format_polynomial(p)


# ---------------------------------------------------------------- non-liftable roots


def rac_counterexamples() -> dict:
    """Roots of push-forwards that have no preimage root.

    Sign case: ``X^2 - X + 1`` over the rationals pushes forward to
    ``X^2 + -X + 1`` over the sign hyperfield, which has the root ``1``; the
    rational polynomial has negative discriminant and so no root at all.

    Phase case: ``X^2 + X + 1`` over the complex numbers has roots at phases
    120 and 240 degrees, but its push-forward to the phase hyperfield
    vanishes at every phase strictly between 90 and 270 degrees.
    """
    real = Polynomial.from_coeffs(QTRIV, [Fraction(1), Fraction(-1), Fraction(1)])
    sp = pushforward(SGN, real)
    at_one = evaluate(sp, (1,))
    a, b, c = (real.coeff(i) for i in (2, 1, 0))
    disc = b * b - 4 * a * c
    # rational root theorem: a monic polynomial with constant 1 can only vanish at +-1
    rational_root = any(evaluate(real, (Fraction(x),)).is_root for x in (1, -1))
    sign_case = {
        "polynomial": _text(real),
        "pushforward": _text(sp),
        "root": 1,
        "value": vs.to_json(at_one.value),
        "is_root": at_one.is_root,
        "value_is_everything": len(at_one.value) == 3,
        "discriminant": str(disc),
        "has_real_root": disc >= 0 or rational_root,
        "liftable": False if disc < 0 else None,
    }

    cp = Polynomial.from_coeffs(CTRIV, [CTRIV.one] * 3)
    pp = pushforward(PH, cp)
    complex_roots = [cmath.exp(2j * math.pi / 3), cmath.exp(-2j * math.pi / 3)]
    root_phases = sorted(math.degrees(Polar.from_complex(z).angle) for z in complex_roots)
    probes = {}
    for label, theta in (("3pi/4", 3 * math.pi / 4), ("pi/2", math.pi / 2)):
        r = evaluate(pp, (Phase(theta),))
        lifts = any(tl.angle_close(theta, math.radians(d)) for d in root_phases)
        probes[label] = {"angle": theta, "is_root": r.is_root, "value": vs.to_json(r.value), "liftable": lifts}
    phase_case = {
        "polynomial": "1 X1^2 + 1 X1 + 1",
        "pushforward": _text(pp),
        "complex_root_phases_deg": [round(d, 9) for d in root_phases],
        "probes": probes,
    }
    passed = (
        sign_case["is_root"]
        and sign_case["value_is_everything"]
        and disc < 0
        and probes["3pi/4"]["is_root"]
        and not probes["3pi/4"]["liftable"]
        and not probes["pi/2"]["is_root"]
    )
    return {"sign": sign_case, "phase": phase_case, "passed": bool(passed)}
