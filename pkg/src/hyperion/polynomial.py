"""Sparse multivariate polynomials over a hyperfield."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import CarrierMismatch, DegeneratePolynomial, DimensionMismatch, DotProductCollision
from .hyperfields import Hyperfield
from .valueset import ValueSet

Exponent = Tuple[int, ...]


class Polynomial:
    """``p = hypersum_I c_I X^I`` with nonzero coefficients and ``I >= 0``.

    ``terms`` maps exponent vectors to coefficients. Zero coefficients are
    dropped on construction; at least one term must remain.
    """

    __slots__ = ("hyperfield", "nvars", "_terms")

    def __init__(self, hyperfield: Hyperfield, terms: Mapping[Sequence[int], object], nvars: int = None):
        items = {}
        for exp, c in dict(terms).items():
            exp = (exp,) if isinstance(exp, int) else tuple(int(e) for e in exp)
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = hyperfield.check(c)
            if hyperfield.is_zero(c):
                continue
            if exp in items:
                raise ValueError(f"duplicate exponent {exp}")
            items[exp] = c
        if not items:
            raise DegeneratePolynomial("a polynomial needs at least one nonzero term")
        lengths = {len(e) for e in items}
        if len(lengths) != 1:
            raise DimensionMismatch(f"exponent vectors of mixed length {sorted(lengths)}")
        n = lengths.pop()
        if nvars is not None and nvars != n:
            raise DimensionMismatch(f"expected {nvars} variables, exponents have {n}")
        if n < 1:
            raise DimensionMismatch("at least one variable is required")
        object.__setattr__(self, "hyperfield", hyperfield)
        object.__setattr__(self, "nvars", n)
        object.__setattr__(self, "_terms", dict(sorted(items.items(), key=_term_order)))

    def __setattr__(self, key, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_coeffs(cls, hyperfield: Hyperfield, coeffs: Sequence) -> "Polynomial":
        """Univariate polynomial from the dense list ``c_0, c_1, ...``."""
        return cls(hyperfield, {(i,): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> Dict[Exponent, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def support(self) -> Tuple[Exponent, ...]:
        return tuple(self._terms)

    @property
    def degree(self) -> int:
        return max(sum(e) for e in self._terms)

    @property
    def is_univariate(self) -> bool:
        return self.nvars == 1

    def coeff(self, exp):
        exp = (exp,) if isinstance(exp, int) else tuple(exp)
        return self._terms.get(exp, self.hyperfield.zero)

    def coeffs(self) -> list:
        """Dense coefficient list ``c_0..c_d`` of a univariate polynomial."""
        if not self.is_univariate:
            raise DimensionMismatch("coeffs() needs a univariate polynomial")
        return [self.coeff(i) for i in range(self.degree + 1)]

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.hyperfield.name != other.hyperfield.name or self.support != other.support:
            return False
        return all(self.hyperfield.eq(c, other._terms[e]) for e, c in self._terms.items())

    __hash__ = None

    def __repr__(self):
        from .textio import format_polynomial

        return f"Polynomial({self.hyperfield.name}, {format_polynomial(self)!r})"


def _term_order(item):
    exp = item[0]
    return (-sum(exp), tuple(-e for e in exp))


@dataclass(frozen=True)
class EvalResult:
    value: ValueSet
    is_root: bool


def monomial_values(p: Polynomial, point: Sequence) -> list:
    H = p.hyperfield
    out = []
    for exp, c in p.items():
        v = c
        for a, e in zip(point, exp):
            if e:
                v = H.mul(v, H.pow(a, e))
        out.append(v)
    return out


def _as_point(p: Polynomial, point) -> tuple:
    if not isinstance(point, (tuple, list)):
        point = (point,)
    if len(point) != p.nvars:
        raise DimensionMismatch(f"point has {len(point)} coordinates, polynomial has {p.nvars} variables")
    return tuple(p.hyperfield.check(a) for a in point)


def evaluate(p: Polynomial, point) -> EvalResult:
    """The set ``p(a)`` and whether it contains zero."""
    pt = _as_point(p, point)
    H = p.hyperfield
    value = H.hypersum(monomial_values(p, pt))
    return EvalResult(value, H.contains(value, H.zero))


def pushforward(f, p: Polynomial) -> Polynomial:
    """Apply ``f`` to every coefficient; terms sent to zero disappear."""
    if p.hyperfield.name != f.domain.name:
        raise CarrierMismatch(f"{f.name} maps from {f.domain.name}, polynomial is over {p.hyperfield.name}")
    return Polynomial(f.codomain, {e: f(c) for e, c in p.items()}, p.nvars)


def restrict_to_line(p: Polynomial, lam: Sequence, direction: Sequence[int]):
    """Substitute ``X_i -> lam_i X^{d_i}``.

    Returns ``(q, offset)`` where ``q`` is univariate with exponents shifted so
    the smallest is zero; ``offset`` is that shift.
    """
    H = p.hyperfield
    lam = _as_point(p, lam)
    if len(direction) != p.nvars:
        raise DimensionMismatch("direction length differs from the number of variables")
    raw = {}
    for exp, c in p.items():
        k = sum(d * e for d, e in zip(direction, exp))
        if k in raw:
            raise DotProductCollision(f"exponents {raw[k][0]} and {exp} both give D.I = {k}")
        v = c
        for a, e in zip(lam, exp):
            if e:
                v = H.mul(v, H.pow(a, e))
        raw[k] = (exp, v)
    offset = min(raw)
    return Polynomial(H, {(k - offset,): v for k, (_, v) in raw.items()}, 1), offset


def polynomials_up_to(H: Hyperfield, degree_max: int) -> Iterable[Polynomial]:
    """Every univariate polynomial over a finite hyperfield of degree <= degree_max."""
    from .hyperfields import exhaustive_polynomial_coefficients

    for d in range(degree_max + 1):
        for coeffs in exhaustive_polynomial_coefficients(H, d):
            yield Polynomial.from_coeffs(H, coeffs)
