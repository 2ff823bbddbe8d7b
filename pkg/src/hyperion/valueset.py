"""Canonical finite unions of primitive regions.

A :class:`ValueSet` is the value of a multivalued sum. Four families exist:

``finite``
    explicit points (Krasner, sign and exact rational carriers);
``trop``
    tropical points and down-rays ``{z <= a} u {-inf}``;
``complex``
    origin-centred points, closed disks and circle arcs, radii in log scale;
``phase``
    zero, unit points and unit arcs.

Construction always goes through :func:`make`, which canonicalizes: no region
is contained in another, touching arcs are merged and regions are ordered
points, then arcs, then rays/disks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from . import circle
from . import tolerance as tl
from .carriers import Phase, Polar, approx_equal, sort_key
from .errors import FamilyMismatch
from .tolerance import NEG_INF

FAMILIES = ("finite", "trop", "complex", "phase")


@dataclass(frozen=True)
class Point:
    value: object
    kind = "point"


@dataclass(frozen=True)
class DownRay:
    top: float
    kind = "downray"


@dataclass(frozen=True)
class Disk:
    logmag: float
    kind = "disk"


@dataclass(frozen=True)
class Arc:
    lo: float
    span: float
    open_lo: bool = False
    open_hi: bool = False
    logmag: float = 0.0
    kind = "arc"

    @property
    def hi(self) -> float:
        return self.lo + self.span

    def as_circle(self) -> circle.Arc:
        return (self.lo, self.span, self.open_lo, self.open_hi)


Region = Union[Point, DownRay, Disk, Arc]


class ValueSet:
    """Immutable canonical union of regions of one family."""

    __slots__ = ("family", "regions")

    def __init__(self, family: str, regions: Tuple[Region, ...]):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "regions", tuple(regions))

    def __setattr__(self, key, value):
        raise AttributeError("ValueSet is immutable")

    def __iter__(self):
        return iter(self.regions)

    def __len__(self):
        return len(self.regions)

    def __repr__(self):
        return f"ValueSet({self.family!r}, {list(self.regions)!r})"

    def __eq__(self, other):
        if not isinstance(other, ValueSet):
            return NotImplemented
        if self.family != other.family or len(self.regions) != len(other.regions):
            return False
        return all(_region_eq(a, b) for a, b in zip(self.regions, other.regions))

    __hash__ = None

    def __contains__(self, x) -> bool:
        return contains(self, x)

    @property
    def is_single_point(self) -> bool:
        return len(self.regions) == 1 and isinstance(self.regions[0], Point)


def _region_eq(a: Region, b: Region) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, Point):
        return approx_equal(a.value, b.value)
    if isinstance(a, DownRay):
        return tl.close(a.top, b.top)
    if isinstance(a, Disk):
        return tl.close(a.logmag, b.logmag)
    return (
        tl.close(a.logmag, b.logmag)
        and tl.angle_close(a.lo, b.lo)
        and tl.close(a.span, b.span)
        and a.open_lo == b.open_lo
        and a.open_hi == b.open_hi
    )


# ---------------------------------------------------------------- canonical forms


def make(family: str, regions: Iterable[Region]) -> ValueSet:
    regions = list(regions)
    if not regions:
        raise ValueError("a ValueSet is never empty")
    if family == "finite":
        return ValueSet(family, _canon_finite(regions))
    if family == "trop":
        return ValueSet(family, _canon_trop(regions))
    if family == "complex":
        return ValueSet(family, _canon_complex(regions))
    if family == "phase":
        return ValueSet(family, _canon_phase(regions))
    raise ValueError(f"unknown family {family!r}")


def union(sets: Iterable[ValueSet]) -> ValueSet:
    sets = list(sets)
    fam = sets[0].family
    for s in sets:
        if s.family != fam:
            raise FamilyMismatch(f"cannot unite {fam} with {s.family}")
    return make(fam, [r for s in sets for r in s.regions])


def _canon_finite(regions):
    vals = []
    for r in regions:
        if not isinstance(r, Point):
            raise TypeError(f"finite family holds points only, got {r!r}")
        if not any(approx_equal(r.value, v) for v in vals):
            vals.append(r.value)
    return tuple(Point(v) for v in sorted(vals, key=sort_key))


def _canon_trop(regions):
    top = None
    pts = []
    for r in regions:
        if isinstance(r, DownRay):
            top = r.top if top is None else max(top, r.top)
        elif isinstance(r, Point):
            pts.append(float(r.value))
        else:
            raise TypeError(f"bad tropical region {r!r}")
    if top is not None and top == NEG_INF:
        pts.append(NEG_INF)
        top = None
    kept = []
    for v in sorted(pts):
        if top is not None and not tl.less(top, v):
            continue
        if kept and tl.close(kept[-1], v):
            continue
        kept.append(v)
    out = [Point(v) for v in kept]
    if top is not None:
        out.append(DownRay(top))
    return tuple(out)


def _circle_regions(arcs: circle.CircleSet, logmag: float, polar: bool):
    out = []
    for lo, span, ol, oh in arcs:
        if span == 0.0:
            out.append(Point(Polar(logmag, lo) if polar else Phase(lo)))
        else:
            out.append(Arc(lo, span, ol, oh, logmag))
    return out


def _order(regions):
    def key(r):
        if isinstance(r, Point):
            return (0, sort_key(r.value))
        if isinstance(r, Arc):
            return (1, (r.logmag, r.lo, r.span))
        if isinstance(r, DownRay):
            return (2, (r.top,))
        return (2, (r.logmag,))

    return tuple(sorted(regions, key=key))


def _canon_complex(regions):
    disk = None
    circles = []  # (logmag, arc)
    has_zero = False
    for r in regions:
        if isinstance(r, Disk):
            disk = r.logmag if disk is None else max(disk, r.logmag)
        elif isinstance(r, Point):
            z = r.value
            if not isinstance(z, Polar):
                raise TypeError(f"complex family needs Polar points, got {z!r}")
            if z.is_zero:
                has_zero = True
            else:
                circles.append((z.logmag, circle.point(z.angle)))
        elif isinstance(r, Arc):
            circles.append((r.logmag, r.as_circle()))
        else:
            raise TypeError(f"bad complex region {r!r}")
    out = []
    if disk is not None and disk == NEG_INF:
        disk = None
        has_zero = True
    if disk is not None:
        out.append(Disk(disk))
    elif has_zero:
        out.append(Point(Polar(NEG_INF)))
    circles = [c for c in circles if disk is None or tl.less(disk, c[0])]
    circles.sort(key=lambda c: c[0])
    groups = []
    for rho, arc in circles:
        if groups and tl.close(groups[-1][0], rho):
            groups[-1][1].append(arc)
        else:
            groups.append((rho, [arc]))
    for rho, arcs in groups:
        out.extend(_circle_regions(circle.union(arcs), rho, polar=True))
    return _order(out)


def _canon_phase(regions):
    has_zero = False
    arcs = []
    for r in regions:
        if isinstance(r, Point):
            p = r.value
            if not isinstance(p, Phase):
                raise TypeError(f"phase family needs Phase points, got {p!r}")
            if p.is_zero:
                has_zero = True
            else:
                arcs.append(circle.point(p.angle))
        elif isinstance(r, Arc):
            arcs.append(r.as_circle())
        else:
            raise TypeError(f"bad phase region {r!r}")
    out = [Point(Phase(None))] if has_zero else []
    out.extend(_circle_regions(circle.union(arcs), 0.0, polar=False))
    return _order(out)


# ---------------------------------------------------------------- queries


def circle_part(S: ValueSet, logmag: float = 0.0) -> circle.CircleSet:
    """Arcs and points of ``S`` lying on the circle of the given log-radius."""
    arcs = []
    for r in S.regions:
        if isinstance(r, Arc) and tl.close(r.logmag, logmag):
            arcs.append(r.as_circle())
        elif isinstance(r, Point):
            v = r.value
            if isinstance(v, Polar) and not v.is_zero and tl.close(v.logmag, logmag):
                arcs.append(circle.point(v.angle))
            elif isinstance(v, Phase) and not v.is_zero:
                arcs.append(circle.point(v.angle))
    return tuple(arcs)


def _region_contains(family: str, r: Region, x) -> bool:
    if isinstance(r, Point):
        return approx_equal(r.value, x)
    if isinstance(r, DownRay):
        return x == NEG_INF or not tl.less(r.top, x)
    if isinstance(r, Disk):
        return x.is_zero or not tl.less(r.logmag, x.logmag)
    if family == "complex":
        if x.is_zero or not tl.close(r.logmag, x.logmag):
            return False
    elif x.is_zero:
        return False
    return circle.arc_contains(r.as_circle(), x.angle)


def check_member_type(family: str, x) -> None:
    ok = {
        "finite": isinstance(x, (int, Fraction)) and not isinstance(x, bool),
        "trop": isinstance(x, (int, float)) and not isinstance(x, bool),
        "complex": isinstance(x, Polar),
        "phase": isinstance(x, Phase),
    }[family]
    if not ok:
        raise FamilyMismatch(f"{x!r} is not an element of a {family} set")


def contains(S: ValueSet, x) -> bool:
    """Membership of an element in ``S`` under the tolerance policy."""
    check_member_type(S.family, x)
    if S.family == "trop":
        x = float(x)
    return any(_region_contains(S.family, r, x) for r in S.regions)


def max_logmag(r: Region) -> float:
    if isinstance(r, Point):
        v = r.value
        return v.logmag if isinstance(v, Polar) else float(v)
    if isinstance(r, DownRay):
        return r.top
    return r.logmag


def is_subset(A: ValueSet, B: ValueSet) -> bool:
    """Whether every element of ``A`` lies in ``B``."""
    if A.family != B.family:
        raise FamilyMismatch(f"{A.family} vs {B.family}")
    fam = A.family
    if fam == "finite":
        return all(contains(B, r.value) for r in A.regions)
    if fam == "trop":
        for r in A.regions:
            if isinstance(r, Point):
                if not contains(B, r.value):
                    return False
            elif not any(isinstance(s, DownRay) and not tl.less(s.top, r.top) for s in B.regions):
                return False
        return True
    if fam == "phase":
        zero = Phase(None)
        if contains(A, zero) and not contains(B, zero):
            return False
        return circle.is_subset(circle_part(A), circle_part(B))
    bdisk = max((s.logmag for s in B.regions if isinstance(s, Disk)), default=None)
    for r in A.regions:
        if isinstance(r, Disk):
            if bdisk is None or tl.less(bdisk, r.logmag):
                return False
            continue
        if isinstance(r, Point):
            if not contains(B, r.value):
                return False
            continue
        if bdisk is not None and not tl.less(bdisk, r.logmag):
            continue
        if not circle.is_subset((r.as_circle(),), circle_part(B, r.logmag)):
            return False
    return True


# ---------------------------------------------------------------- JSON


def _num(x: float):
    if x == NEG_INF:
        return "-inf"
    if x == math.inf:
        return "inf"
    return x


def _denum(x) -> float:
    if x == "-inf":
        return NEG_INF
    return float(x)


def _finite_value(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    return v


def region_to_json(family: str, r: Region) -> dict:
    d = {"kind": r.kind}
    if isinstance(r, Point):
        v = r.value
        if family == "finite":
            d["value"] = _finite_value(v)
        elif family == "trop":
            d["value"] = _num(float(v))
        elif family == "complex":
            d["log_magnitude"] = _num(v.logmag)
            d["angle"] = v.angle
        else:
            if v.is_zero:
                d["zero"] = True
            else:
                d["angle"] = v.angle
    elif isinstance(r, DownRay):
        d["top"] = _num(r.top)
    elif isinstance(r, Disk):
        d["log_radius"] = _num(r.logmag)
    else:
        if family == "complex":
            d["log_radius"] = _num(r.logmag)
        d["theta_lo"] = r.lo
        d["theta_hi"] = r.lo + r.span
    d["open_lo"] = bool(getattr(r, "open_lo", False))
    d["open_hi"] = bool(getattr(r, "open_hi", False))
    return d


def region_from_json(family: str, d: dict) -> Region:
    kind = d["kind"]
    if kind == "point":
        if family == "finite":
            v = d["value"]
            return Point(Fraction(v) if isinstance(v, str) else int(v))
        if family == "trop":
            return Point(_denum(d["value"]))
        if family == "complex":
            return Point(Polar(_denum(d["log_magnitude"]), float(d.get("angle", 0.0))))
        if d.get("zero"):
            return Point(Phase(None))
        return Point(Phase(float(d["angle"])))
    if kind == "downray":
        return DownRay(_denum(d["top"]))
    if kind == "disk":
        return Disk(_denum(d["log_radius"]))
    if kind == "arc":
        lo = float(d["theta_lo"])
        span = float(d["theta_hi"]) - lo
        rho = _denum(d["log_radius"]) if family == "complex" else 0.0
        return Arc(tl.canon_angle(lo), span, bool(d.get("open_lo")), bool(d.get("open_hi")), rho)
    raise ValueError(f"unknown region kind {kind!r}")


def to_json(S: ValueSet) -> dict:
    return {"family": S.family, "regions": [region_to_json(S.family, r) for r in S.regions]}


def from_json(d: dict) -> ValueSet:
    fam = d["family"]
    if fam not in FAMILIES:
        raise ValueError(f"unknown family {fam!r}")
    return make(fam, [region_from_json(fam, r) for r in d["regions"]])
