"""Roots and multiplicities of univariate polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple

from . import tolerance as tl
from .errors import CarrierMismatch, DimensionMismatch
from .hyperfields import Hyperfield
from .polynomial import EvalResult, Polynomial, evaluate, monomial_values
from .tolerance import NEG_INF
from .valueset import ValueSet


@dataclass(frozen=True)
class RootReport:
    roots: Tuple[Tuple[object, Optional[int]], ...]
    degree: int
    exhaustive: bool

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots if m is not None)

    @property
    def elements(self) -> list:
        return [r for r, _ in self.roots]


def _need_univariate(p: Polynomial, name: str = None):
    if not p.is_univariate:
        raise DimensionMismatch("expected a univariate polynomial")
    if name is not None and p.hyperfield.name != name:
        raise CarrierMismatch(f"expected a polynomial over {name}, got {p.hyperfield.name}")


# ---------------------------------------------------------------- tropical


def _upper_hull(points):
    hull = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless the chain turns strictly clockwise
            cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
            if cross >= -tl.TOL:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def tropical_roots(p: Polynomial) -> RootReport:
    """Roots of a tropical polynomial from its Newton polygon.

    A finite root is minus the slope of an upper-hull edge of the points
    ``(i, c_i)``; its multiplicity is the edge's horizontal length. ``-inf``
    is a root of multiplicity ``min i`` when the constant term is absent.
    """
    _need_univariate(p, "T")
    pts = sorted((e[0], c) for e, c in p.items())
    hull = _upper_hull(pts)
    roots = []
    lowest = pts[0][0]
    if lowest > 0:
        roots.append((NEG_INF, lowest))
    for (i1, c1), (i2, c2) in zip(hull, hull[1:]):
        roots.append(((c1 - c2) / (i2 - i1), i2 - i1))
    roots.sort(key=lambda r: r[0])
    return RootReport(tuple(roots), p.degree, True)


def tropical_dominant(p: Polynomial, b: float) -> List[int]:
    """Exponents whose term attains the maximum of ``c_i + i*b``."""
    vals = [(e[0], p.hyperfield.mul(c, p.hyperfield.pow(b, e[0]))) for e, c in p.items()]
    top = max(v for _, v in vals)
    return sorted(i for i, v in vals if tl.close(v, top))


# ---------------------------------------------------------------- finite carriers


def _quotients(H: Hyperfield, coeffs: tuple, a):
    """Every ``q`` (dense, low to high) with ``p in (X - a) * q``.

    Coefficient ``i`` of ``(X - a) q`` ranges over ``q_{i-1} + (-a) q_i``, so
    the conditions are ``c_i in q_{i-1} + (-a q_i)`` with ``q_{-1} = q_d = 0``.
    """
    d = len(coeffs) - 1
    if d < 1:
        return
    neg_a = H.neg(a)
    els = H.elements()
    q = [None] * d
    q[d - 1] = coeffs[d]

    def rec(i):
        # choose q[i-1] so that c_i is in q[i-1] + (-a) q[i]
        if i == 0:
            if H.eq(coeffs[0], H.mul(neg_a, q[0])):
                yield tuple(q)
            return
        t = H.mul(neg_a, q[i])
        for cand in els:
            if H.contains(H.hyperadd(cand, t), coeffs[i]):
                q[i - 1] = cand
                yield from rec(i - 1)

    yield from rec(d - 1)


@lru_cache(maxsize=None)
def _mult(H: Hyperfield, coeffs: tuple, a) -> int:
    if not H.contains(H.hypersum(_monomials(H, coeffs, a)), H.zero):
        return 0
    best = 0
    for q in _quotients(H, coeffs, a):
        best = max(best, _mult(H, q, a))
    return 1 + best


def _monomials(H, coeffs, a):
    return [H.mul(c, H.pow(a, i)) for i, c in enumerate(coeffs)]


def multiplicity(p: Polynomial, a) -> int:
    """Recursive multiplicity ``1 + max mult_a(q)`` over all factorizations
    ``p in (X - a) q``; zero when ``a`` is not a root."""
    _need_univariate(p)
    H = p.hyperfield
    if not H.finite:
        raise TypeError(f"multiplicity needs a finite carrier, {H.name} is infinite")
    return _mult(H, tuple(p.coeffs()), H.check(a))


def quotients(p: Polynomial, a) -> List[Polynomial]:
    H = p.hyperfield
    return [Polynomial.from_coeffs(H, q) for q in _quotients(H, tuple(p.coeffs()), H.check(a))]


def finite_roots(p: Polynomial) -> RootReport:
    _need_univariate(p)
    H = p.hyperfield
    if not H.finite:
        raise TypeError(f"finite_roots needs a finite carrier, {H.name} is infinite")
    roots = []
    for a in H.elements():
        m = multiplicity(p, a)
        if m:
            roots.append((a, m))
    return RootReport(tuple(roots), p.degree, True)


def roots(p: Polynomial) -> RootReport:
    """Dispatch to the root finder for the polynomial's hyperfield."""
    if p.hyperfield.finite:
        return finite_roots(p)
    if p.hyperfield.name == "T":
        return tropical_roots(p)
    if p.hyperfield.name == "TC":
        from .lifting import tc_roots

        return tc_roots(p)
    raise TypeError(f"no root finder for {p.hyperfield.name}")


# ---------------------------------------------------------------- tropical complex


@dataclass(frozen=True)
class CertifyReport:
    element: object
    dominant: Tuple[int, ...]
    fast_path: bool
    fast_verdict: Optional[bool]
    verdict: bool
    value: ValueSet = field(compare=False)

    @property
    def consistent(self) -> bool:
        return not self.fast_path or self.fast_verdict == self.verdict


def dominant_indices(p: Polynomial, a) -> Tuple[int, ...]:
    """Exponents of the monomials of largest magnitude at ``a``."""
    vals = [(e[0], v.logmag) for e, v in zip(p.support, monomial_values(p, (a,)))]
    top = max(m for _, m in vals)
    return tuple(sorted(i for i, m in vals if tl.close(m, top)))


def certify_root_tc(p: Polynomial, a) -> CertifyReport:
    """Decide whether ``a`` is a root of a univariate TC polynomial.

    The verdict always comes from full evaluation. When no constant term is
    among the dominant monomials, the criterion "``-c_0`` lies in the
    hypersum of the dominant monomials" is evaluated too, as a cross-check.
    """
    _need_univariate(p, "TC")
    H = p.hyperfield
    a = H.check(a)
    result: EvalResult = evaluate(p, (a,))
    dom = dominant_indices(p, a)
    fast = 0 not in dom
    fast_verdict = None
    if fast:
        mons = {e[0]: v for e, v in zip(p.support, monomial_values(p, (a,)))}
        top = H.hypersum([mons[j] for j in dom])
        fast_verdict = H.contains(top, H.neg(p.coeff(0)))
    return CertifyReport(a, dom, fast, fast_verdict, result.is_root, result.value)
