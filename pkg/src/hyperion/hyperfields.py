"""Hyperfields: single-valued multiplication, multivalued addition.

Each concrete class supplies the pointwise hyperaddition rule and a
region-pair rule for sums of whole :class:`ValueSet` objects. The region
rules are closed forms; ``tests/oracles.py`` checks them against a
pointwise-union oracle.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product
from typing import List, Sequence

from . import circle
from . import tolerance as tl
from . import valueset as vs
from .carriers import PHASE_ONE, PHASE_ZERO, ONE_POLAR, ZERO_POLAR, Phase, Polar, approx_equal
from .errors import CarrierMismatch, EmptyHypersum, FamilyMismatch, InverseOfZero
from .tolerance import NEG_INF, TWO_PI
from .valueset import Arc, Disk, DownRay, Point, ValueSet


class Hyperfield:
    """Common interface. Subclasses define the carrier and the rules."""

    name: str = ""
    family: str = ""
    finite: bool = False
    exact: bool = True
    zero = None
    one = None

    # -- carrier
    def is_element(self, x) -> bool:
        raise NotImplementedError

    def check(self, x):
        if not self.is_element(x):
            raise CarrierMismatch(f"{x!r} is not an element of {self.name}")
        return x

    def elements(self) -> list:
        raise TypeError(f"{self.name} has an infinite carrier")

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def eq(self, x, y) -> bool:
        return approx_equal(x, y)

    def is_zero(self, x) -> bool:
        return self.eq(x, self.zero)

    # -- multiplicative structure
    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def pow(self, x, k: int):
        if k < 0:
            return self.pow(self.inv(x), -k)
        out = self.one
        base = x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    # -- additive structure
    def singleton(self, x) -> ValueSet:
        return vs.make(self.family, [Point(self.check(x))])

    def hyperadd(self, a, b) -> ValueSet:
        raise NotImplementedError

    def _region_sum(self, r: vs.Region, s: vs.Region) -> List[vs.Region]:
        raise NotImplementedError

    def _check_set(self, S: ValueSet) -> None:
        if not isinstance(S, ValueSet) or S.family != self.family:
            fam = getattr(S, "family", type(S).__name__)
            raise FamilyMismatch(f"{self.name} works with {self.family} sets, got {fam}")

    def set_hyperadd(self, A: ValueSet, B: ValueSet) -> ValueSet:
        """Union of ``a + b`` over ``a in A`` and ``b in B``."""
        self._check_set(A)
        self._check_set(B)
        out = []
        for r in A.regions:
            for s in B.regions:
                if isinstance(r, Point) and isinstance(s, Point):
                    out.extend(self.hyperadd(r.value, s.value).regions)
                else:
                    out.extend(self._region_sum(r, s))
        return vs.make(self.family, out)

    def hypersum(self, xs: Sequence) -> ValueSet:
        """``x1 + (x2 + (... + xk))`` as a ValueSet."""
        xs = list(xs)
        if not xs:
            raise EmptyHypersum("hypersum of an empty list")
        acc = self.singleton(xs[-1])
        for x in reversed(xs[:-1]):
            acc = self.set_hyperadd(self.singleton(x), acc)
        return acc

    def contains(self, S: ValueSet, x) -> bool:
        self._check_set(S)
        self.check(x)
        return vs.contains(S, x)

    def scale(self, S: ValueSet, a) -> ValueSet:
        """The set ``a * S``."""
        self._check_set(S)
        if self.is_zero(a):
            return self.singleton(self.zero)
        return vs.make(self.family, [self._scale_region(r, a) for r in S.regions])

    def _scale_region(self, r, a):
        return Point(self.mul(a, r.value))

    def representatives(self, S: ValueSet) -> list:
        """Finitely many members of ``S`` covering every region."""
        out = []
        for r in S.regions:
            out.extend(self._region_reps(r))
        return out

    def _region_reps(self, r) -> list:
        return [r.value]

    def __repr__(self):
        return f"<hyperfield {self.name}>"


class _FiniteTable(Hyperfield):
    family = "finite"
    finite = True
    _elements: tuple = ()

    def is_element(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and x in self._elements

    def elements(self) -> list:
        return list(self._elements)

    def sample(self, rng):
        return rng.choice(self._elements)

    def mul(self, x, y):
        return self.check(x) * self.check(y)

    def inv(self, x):
        if self.check(x) == 0:
            raise InverseOfZero(f"{self.name}: inverse of zero")
        return x

    def _region_sum(self, r, s):
        return list(self.hyperadd(r.value, s.value).regions)

    def hypersum(self, xs: Sequence) -> ValueSet:
        # same right fold as the base class, on plain sets of symbols
        xs = [self.check(x) for x in xs]
        if not xs:
            raise EmptyHypersum("hypersum of an empty list")
        table = self._table()
        acc = frozenset((xs[-1],))
        for x in reversed(xs[:-1]):
            acc = frozenset().union(*(table[x, y] for y in acc))
        return vs.make("finite", [Point(v) for v in acc])

    def _table(self):
        t = self.__dict__.get("_sum_table")
        if t is None:
            t = {
                (a, b): frozenset(r.value for r in self.hyperadd(a, b).regions)
                for a in self._elements
                for b in self._elements
            }
            self.__dict__["_sum_table"] = t
        return t


class Krasner(_FiniteTable):
    name = "K"
    zero, one = 0, 1
    _elements = (0, 1)

    def neg(self, x):
        return self.check(x)

    def hyperadd(self, a, b):
        self.check(a)
        self.check(b)
        if a == 0 or b == 0:
            return self.singleton(a + b)
        return vs.make("finite", [Point(0), Point(1)])


class Sign(_FiniteTable):
    name = "S"
    zero, one = 0, 1
    _elements = (-1, 0, 1)

    def neg(self, x):
        return -self.check(x)

    def hyperadd(self, a, b):
        self.check(a)
        self.check(b)
        if a == 0:
            return self.singleton(b)
        if b == 0 or a == b:
            return self.singleton(a)
        return vs.make("finite", [Point(-1), Point(0), Point(1)])


class RationalField(Hyperfield):
    """The field Q seen as a hyperfield: ``x + y = {x + y}``."""

    name = "Qtriv"
    family = "finite"
    zero, one = Fraction(0), Fraction(1)

    def is_element(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def check(self, x):
        super().check(x)
        return Fraction(x)

    def sample(self, rng):
        if rng.random() < 0.1:
            return Fraction(0)
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    def neg(self, x):
        return -self.check(x)

    def mul(self, x, y):
        return self.check(x) * self.check(y)

    def inv(self, x):
        if self.check(x) == 0:
            raise InverseOfZero("Qtriv: inverse of zero")
        return 1 / Fraction(x)

    def hyperadd(self, a, b):
        return self.singleton(self.check(a) + self.check(b))

    def _region_sum(self, r, s):
        return [Point(Fraction(r.value) + Fraction(s.value))]


class Tropical(Hyperfield):
    """``R u {-inf}`` with ``x * y = x + y`` and max-based hyperaddition."""

    name = "T"
    family = "trop"
    exact = False
    zero, one = NEG_INF, 0.0

    def is_element(self, x) -> bool:
        return (
            isinstance(x, (int, float))
            and not isinstance(x, bool)
            and not math.isnan(x)
            and x != math.inf
        )

    def check(self, x):
        super().check(x)
        return float(x)

    def sample(self, rng):
        u = rng.random()
        if u < 0.05:
            return NEG_INF
        if u < 0.6:
            return float(rng.randint(-3, 3))
        return rng.uniform(-4.0, 4.0)

    def neg(self, x):
        return self.check(x)

    def mul(self, x, y):
        return self.check(x) + self.check(y)

    def inv(self, x):
        if self.check(x) == NEG_INF:
            raise InverseOfZero("T: inverse of -inf")
        return -x

    def pow(self, x, k):
        x = self.check(x)
        if k == 0:
            return 0.0
        if x == NEG_INF:
            if k < 0:
                raise InverseOfZero("T: negative power of -inf")
            return NEG_INF
        return k * x

    def hyperadd(self, a, b):
        a, b = self.check(a), self.check(b)
        if tl.close(a, b):
            return vs.make("trop", [DownRay(max(a, b))])
        return self.singleton(max(a, b))

    def _region_sum(self, r, s):
        ma, mb = vs.max_logmag(r), vs.max_logmag(s)
        if tl.less(mb, ma):
            return [r]
        if tl.less(ma, mb):
            return [s]
        return [DownRay(max(ma, mb))]

    def _scale_region(self, r, a):
        if isinstance(r, DownRay):
            return DownRay(r.top + a)
        return Point(self.mul(a, r.value))

    def _region_reps(self, r):
        if isinstance(r, DownRay):
            return [r.top, r.top - 0.5, r.top - 2.0, NEG_INF]
        return [r.value]


class _CircleBased(Hyperfield):
    exact = False

    def _angle_reps(self, lo, span, ol, oh):
        if span == 0.0:
            return [lo]
        out = [lo + span * f for f in (0.5, 0.25, 0.75, 1e-3, 1 - 1e-3)]
        if not ol:
            out.append(lo)
        if not oh:
            out.append(lo + span)
        return out


class PhaseHyperfield(_CircleBased):
    """``S^1 u {0}``; the sum of two non-antipodal phases is the open
    shortest arc between them."""

    name = "P"
    family = "phase"
    zero, one = PHASE_ZERO, PHASE_ONE

    def is_element(self, x) -> bool:
        return isinstance(x, Phase)

    def sample(self, rng):
        u = rng.random()
        if u < 0.05:
            return PHASE_ZERO
        if u < 0.6:
            return Phase(rng.randint(0, 11) * math.pi / 6)
        return Phase(rng.uniform(0, TWO_PI))

    def neg(self, x):
        if self.check(x).is_zero:
            return x
        return Phase(x.angle + math.pi)

    def mul(self, x, y):
        if self.check(x).is_zero or self.check(y).is_zero:
            return PHASE_ZERO
        return Phase(x.angle + y.angle)

    def inv(self, x):
        if self.check(x).is_zero:
            raise InverseOfZero("P: inverse of zero")
        return Phase(-x.angle)

    def pow(self, x, k):
        if self.check(x).is_zero:
            if k < 0:
                raise InverseOfZero("P: negative power of zero")
            return PHASE_ONE if k == 0 else PHASE_ZERO
        return Phase(k * x.angle)

    def hyperadd(self, a, b):
        a, b = self.check(a), self.check(b)
        if a.is_zero:
            return self.singleton(b)
        if b.is_zero:
            return self.singleton(a)
        d = tl.signed_diff(a.angle, b.angle)
        if abs(d) <= tl.TOL:
            return self.singleton(a)
        if abs(d) >= math.pi - tl.TOL:
            return vs.make("phase", [Point(PHASE_ZERO), Point(a), Point(b)])
        lo = a.angle if d > 0 else b.angle
        return vs.make("phase", [Arc(lo, abs(d), True, True, 0.0)])

    def _region_sum(self, r, s):
        if isinstance(r, Point) and r.value.is_zero:
            return [s]
        if isinstance(s, Point) and s.value.is_zero:
            return [r]
        xs = vs.circle_part(vs.ValueSet("phase", (r,)))
        ys = vs.circle_part(vs.ValueSet("phase", (s,)))
        out = []
        if circle.intersects(xs, circle.rotate(ys, math.pi)):
            out.append(Point(PHASE_ZERO))
        brk = circle.endpoints(xs) + circle.endpoints(ys)
        brk += [t + math.pi for t in brk]

        def member(t):
            in_x, in_y = circle.contains(xs, t), circle.contains(ys, t)
            if in_x and in_y:
                return True
            tp = t + math.pi
            if in_x and circle.contains(ys, tp):
                return True
            if in_y and circle.contains(xs, tp):
                return True
            return circle.strictly_between(xs, ys, t)

        arcs = circle.scan(brk, member)
        out.extend(vs._circle_regions(arcs, 0.0, polar=False))
        return out

    def _scale_region(self, r, a):
        if isinstance(r, Arc):
            return Arc(tl.canon_angle(r.lo + a.angle), r.span, r.open_lo, r.open_hi, 0.0)
        return Point(self.mul(a, r.value))

    def _region_reps(self, r):
        if isinstance(r, Point):
            return [r.value]
        return [Phase(t) for t in self._angle_reps(r.lo, r.span, r.open_lo, r.open_hi)]


class TropicalComplex(_CircleBased):
    """Complex numbers in polar form with magnitude-dominance hyperaddition."""

    name = "TC"
    family = "complex"
    zero, one = ZERO_POLAR, ONE_POLAR

    def is_element(self, x) -> bool:
        return isinstance(x, Polar)

    def sample(self, rng):
        u = rng.random()
        if u < 0.05:
            return ZERO_POLAR
        rho = float(rng.randint(-1, 1)) if rng.random() < 0.6 else rng.uniform(-2.0, 2.0)
        theta = rng.randint(0, 11) * math.pi / 6 if rng.random() < 0.6 else rng.uniform(0, TWO_PI)
        return Polar(rho, theta)

    def neg(self, x):
        if self.check(x).is_zero:
            return x
        return Polar(x.logmag, x.angle + math.pi)

    def mul(self, x, y):
        if self.check(x).is_zero or self.check(y).is_zero:
            return ZERO_POLAR
        return Polar(x.logmag + y.logmag, x.angle + y.angle)

    def inv(self, x):
        if self.check(x).is_zero:
            raise InverseOfZero("TC: inverse of zero")
        return Polar(-x.logmag, -x.angle)

    def pow(self, x, k):
        if self.check(x).is_zero:
            if k < 0:
                raise InverseOfZero("TC: negative power of zero")
            return ONE_POLAR if k == 0 else ZERO_POLAR
        return Polar(k * x.logmag, k * x.angle)

    def root(self, x, k: int):
        """Principal k-th root: log-magnitude and angle (in [0, 2pi)) divided by k."""
        if self.check(x).is_zero:
            return x
        return Polar(x.logmag / k, x.angle / k)

    def hyperadd(self, a, b):
        a, b = self.check(a), self.check(b)
        if tl.less(b.logmag, a.logmag):
            return self.singleton(a)
        if tl.less(a.logmag, b.logmag):
            return self.singleton(b)
        if a.is_zero:
            return self.singleton(a)
        d = tl.signed_diff(a.angle, b.angle)
        if abs(d) <= tl.TOL:
            return self.singleton(a)
        if abs(d) >= math.pi - tl.TOL:
            return vs.make("complex", [Disk(a.logmag)])
        lo = a.angle if d > 0 else b.angle
        return vs.make("complex", [Arc(lo, abs(d), False, False, a.logmag)])

    def _region_sum(self, r, s):
        ra, rb = vs.max_logmag(r), vs.max_logmag(s)
        if tl.less(rb, ra):
            return [r]
        if tl.less(ra, rb):
            return [s]
        if ra == NEG_INF:
            return [r]
        if isinstance(r, Disk) or isinstance(s, Disk):
            return [Disk(max(ra, rb))]
        xs = vs.circle_part(vs.ValueSet("complex", (r,)), vs.max_logmag(r))
        ys = vs.circle_part(vs.ValueSet("complex", (s,)), vs.max_logmag(s))
        if circle.intersects(xs, circle.rotate(ys, math.pi)):
            return [Disk(max(ra, rb))]

        def member(t):
            if circle.contains(xs, t) or circle.contains(ys, t):
                return True
            return circle.strictly_between(xs, ys, t)

        arcs = circle.scan(circle.endpoints(xs) + circle.endpoints(ys), member)
        return vs._circle_regions(arcs, ra, polar=True)

    def _scale_region(self, r, a):
        if isinstance(r, Disk):
            return Disk(r.logmag + a.logmag)
        if isinstance(r, Arc):
            return Arc(tl.canon_angle(r.lo + a.angle), r.span, r.open_lo, r.open_hi, r.logmag + a.logmag)
        return Point(self.mul(a, r.value))

    def _region_reps(self, r):
        if isinstance(r, Point):
            return [r.value]
        if isinstance(r, Arc):
            return [Polar(r.logmag, t) for t in self._angle_reps(r.lo, r.span, r.open_lo, r.open_hi)]
        rho = r.logmag
        out = [ZERO_POLAR]
        for k in range(8):
            out.append(Polar(rho, k * math.pi / 4 + 0.1))
        out.append(Polar(rho - 0.5, 1.0))
        out.append(Polar(rho - 3.0, 4.0))
        return out


class ComplexField(Hyperfield):
    """The field C as a hyperfield (``x + y = {x + y}``) on the polar carrier.

    This is the domain of the phase map ``ph``.
    """

    name = "Ctriv"
    family = "complex"
    exact = False
    zero, one = ZERO_POLAR, ONE_POLAR

    def is_element(self, x) -> bool:
        return isinstance(x, Polar)

    def sample(self, rng):
        return TropicalComplex.sample(self, rng)

    neg = TropicalComplex.neg
    mul = TropicalComplex.mul
    inv = TropicalComplex.inv
    pow = TropicalComplex.pow

    def _add(self, a: Polar, b: Polar) -> Polar:
        z = a.to_complex() + b.to_complex()
        # cancellation below the tolerance is treated as exact
        scale = max(abs(a.to_complex()), abs(b.to_complex()), 1.0)
        if abs(z) <= tl.TOL * scale:
            return ZERO_POLAR
        return Polar.from_complex(z)

    def hyperadd(self, a, b):
        return self.singleton(self._add(self.check(a), self.check(b)))

    def _region_sum(self, r, s):
        return [Point(self._add(r.value, s.value))]


def exhaustive_polynomial_coefficients(H: Hyperfield, degree: int):
    """All coefficient lists ``(c_0, ..., c_degree)`` with ``c_degree != 0``."""
    els = H.elements()
    nonzero = [e for e in els if not H.is_zero(e)]
    for lead in nonzero:
        for rest in product(els, repeat=degree):
            yield tuple(rest) + (lead,)
