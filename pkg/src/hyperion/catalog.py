"""Named hyperfields and the homomorphisms between them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional

from . import valueset as vs
from .carriers import PHASE_ZERO, Phase, Polar
from .hyperfields import (
    ComplexField,
    Hyperfield,
    Krasner,
    PhaseHyperfield,
    RationalField,
    Sign,
    Tropical,
    TropicalComplex,
)
from .tolerance import NEG_INF, TWO_PI
from .valueset import Arc, Disk, DownRay, Point, ValueSet

K = Krasner()
S = Sign()
T = Tropical()
P = PhaseHyperfield()
TC = TropicalComplex()
QTRIV = RationalField()
CTRIV = ComplexField()

_CATALOG = (K, S, T, P, TC, QTRIV)
_BY_NAME = {h.name: h for h in _CATALOG + (CTRIV,)}


def catalog() -> List[Hyperfield]:
    """The six example hyperfields: K, S, T, P, TC and the field Q."""
    return list(_CATALOG)


def lookup(name: str) -> Hyperfield:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown hyperfield {name!r}; known: {sorted(_BY_NAME)}") from None


@dataclass(frozen=True)
class Homomorphism:
    name: str
    domain: Hyperfield
    codomain: Hyperfield
    map: Callable
    canonical_lift: Callable
    image_region: Callable
    fiber_description: str = ""
    fiber_sampler: Optional[Callable] = field(default=None, compare=False)

    def __call__(self, x):
        return self.map(self.domain.check(x))

    def image(self, S: ValueSet) -> ValueSet:
        """``f(S)`` for a ValueSet of the domain, as a codomain ValueSet."""
        out = []
        for r in S.regions:
            out.extend(self.image_region(r))
        return vs.make(self.codomain.family, out)


# ---------------------------------------------------------------- concrete maps


def to_krasner(H: Hyperfield) -> Homomorphism:
    def f(x):
        return 0 if H.is_zero(x) else 1

    def lift(y):
        return H.zero if y == 0 else H.one

    def img(r):
        out = []
        if isinstance(r, Point):
            return [Point(f(r.value))]
        if isinstance(r, (DownRay, Disk)):
            out.append(Point(0))
        out.append(Point(1))
        return out

    def sampler(y, rng):
        if y == 0:
            return H.zero
        while True:
            x = H.elements()[rng.randrange(len(H.elements()))] if H.finite else H.sample(rng)
            if not H.is_zero(x):
                return x

    return Homomorphism(
        f"toK:{H.name}", H, K, f, lift, img, "1 pulls back to every nonzero element", sampler
    )


def identity(H: Hyperfield) -> Homomorphism:
    return Homomorphism(
        f"id:{H.name}", H, H, lambda x: x, lambda y: y, lambda r: [r], "singletons",
        lambda y, rng: y,
    )


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sgn_sampler(y, rng):
    if y == 0:
        return Fraction(0)
    return y * Fraction(rng.randint(1, 9), rng.randint(1, 5))


SGN = Homomorphism(
    "sgn",
    QTRIV,
    S,
    _sgn,
    lambda y: Fraction(y),
    lambda r: [Point(_sgn(Fraction(r.value)))],
    "positive / negative rationals",
    _sgn_sampler,
)


def _ph(z: Polar) -> Phase:
    return PHASE_ZERO if z.is_zero else Phase(z.angle)


def _ph_image(r):
    if isinstance(r, Point):
        return [Point(_ph(r.value))]
    if isinstance(r, Arc):
        return [Arc(r.lo, r.span, r.open_lo, r.open_hi, 0.0)]
    return [Point(PHASE_ZERO), Arc(0.0, TWO_PI, False, False, 0.0)]


PH = Homomorphism(
    "ph",
    CTRIV,
    P,
    _ph,
    lambda y: Polar(NEG_INF) if y.is_zero else Polar(0.0, y.angle),
    _ph_image,
    "open ray from the origin through the phase",
    lambda y, rng: Polar(NEG_INF) if y.is_zero else Polar(rng.uniform(-3, 3), y.angle),
)


def _eta_image(r):
    if isinstance(r, Point):
        return [Point(r.value.logmag)]
    if isinstance(r, Arc):
        return [Point(r.logmag)]
    return [DownRay(r.logmag)]


ETA = Homomorphism(
    "eta",
    TC,
    T,
    lambda z: z.logmag,
    lambda a: Polar(float(a), 0.0),
    _eta_image,
    "circle of radius e^a about the origin",
    lambda a, rng: Polar(a, rng.uniform(0, TWO_PI)),
)


def hom_catalog() -> List[Homomorphism]:
    return [to_krasner(h) for h in _CATALOG] + [SGN, PH, ETA]


def hom_lookup(name: str) -> Homomorphism:
    if name == "eta":
        return ETA
    if name == "sgn":
        return SGN
    if name == "ph":
        return PH
    if name.startswith("toK:"):
        return to_krasner(lookup(name[4:]))
    if name.startswith("id:"):
        return identity(lookup(name[3:]))
    raise KeyError(f"unknown homomorphism {name!r}")


# ---------------------------------------------------------------- hom_check


def _domain_samples(f: Homomorphism, budget: int, rng: random.Random):
    H = f.domain
    if H.finite:
        els = H.elements()
        return [(x, y) for x in els for y in els], True
    if f is SGN:
        grid = sorted({Fraction(p, q) for p in range(-6, 7) for q in range(1, 5)})
        return [(x, y) for x in grid for y in grid], True
    pairs = []
    for _ in range(budget):
        x = H.sample(rng)
        u = rng.random()
        if u < 0.15:
            y = H.neg(x)
        elif u < 0.3 and not H.is_zero(x):
            # same magnitude (or same tropical value), different phase
            y = _companion(H, x, rng)
        else:
            y = H.sample(rng)
        pairs.append((x, y))
    return pairs, False


def _companion(H, x, rng):
    if isinstance(x, Polar):
        return Polar(x.logmag, rng.uniform(0, TWO_PI))
    return x


def hom_check(f: Homomorphism, sample_budget: int = 10_000, seed: int = 0) -> dict:
    """Check ``f(0)=0``, ``f(1)=1``, multiplicativity and ``f(x+y) ⊆ f(x)+f(y)``."""
    rng = random.Random(seed)
    H1, H2 = f.domain, f.codomain
    pairs, exhaustive = _domain_samples(f, sample_budget, rng)
    checks = {
        "zero": {"passed": H2.eq(f(H1.zero), H2.zero), "checked": 1, "witness": None},
        "one": {"passed": H2.eq(f(H1.one), H2.one), "checked": 1, "witness": None},
    }
    mult_fail = add_fail = None
    for x, y in pairs:
        if mult_fail is None and not H2.eq(f(H1.mul(x, y)), H2.mul(f(x), f(y))):
            mult_fail = [repr(x), repr(y)]
        if add_fail is None:
            lhs = f.image(H1.hyperadd(x, y))
            rhs = H2.hyperadd(f(x), f(y))
            if not vs.is_subset(lhs, rhs):
                add_fail = [repr(x), repr(y)]
        if mult_fail and add_fail:
            break
    checks["multiplicative"] = {"passed": mult_fail is None, "checked": len(pairs), "witness": mult_fail}
    checks["additive"] = {"passed": add_fail is None, "checked": len(pairs), "witness": add_fail}
    # the chosen section must be a right inverse (every map here is surjective)
    lift_fail = None
    targets = H2.elements() if H2.finite else [H2.sample(rng) for _ in range(min(sample_budget, 1000))]
    for yv in targets:
        if not H2.eq(f(f.canonical_lift(yv)), yv):
            lift_fail = [repr(yv)]
            break
    checks["section"] = {"passed": lift_fail is None, "checked": len(targets), "witness": lift_fail}
    return {
        "hom": f.name,
        "domain": H1.name,
        "codomain": H2.name,
        "exhaustive": exhaustive,
        "passed": all(c["passed"] for c in checks.values()),
        "checks": checks,
    }

