"""Subsets of the unit circle built from finitely many arcs.

An arc is a tuple ``(lo, span, open_lo, open_hi)`` running counter-clockwise
from ``lo`` for ``span`` radians. ``span == 0`` is a single point (both ends
closed) and ``span == 2*pi`` with closed ends is the whole circle. A circle
set is a tuple of arcs in canonical order.

Canonical sets are produced by :func:`scan`: given every angle where
membership can change and an exact membership predicate, it tests each
breakpoint and each open gap between consecutive breakpoints and rebuilds
maximal arcs from the answers.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Optional, Sequence, Tuple

from . import tolerance as tl
from .tolerance import TWO_PI, canon_angle

Arc = Tuple[float, float, bool, bool]
CircleSet = Tuple[Arc, ...]

FULL: Arc = (0.0, TWO_PI, False, False)


def point(theta: float) -> Arc:
    return (canon_angle(theta), 0.0, False, False)


def is_full(arc: Arc) -> bool:
    return arc[1] >= TWO_PI - tl.TOL and not arc[2] and not arc[3]


def _in_piece(a: float, b: float, open_a: bool, open_b: bool, u: float) -> bool:
    """Membership of ``u`` in the real interval from ``a`` to ``b``."""
    if b - a <= tl.TOL:
        return abs(u - a) <= tl.TOL
    if abs(u - a) <= tl.TOL:
        return not open_a
    if abs(u - b) <= tl.TOL:
        return not open_b
    return a < u < b


def arc_contains(arc: Arc, theta: float) -> bool:
    lo, span, open_lo, open_hi = arc
    u = (theta - lo) % TWO_PI
    if span >= TWO_PI - tl.TOL:
        if not open_lo and not open_hi:
            return True
        return tl.TOL < u < TWO_PI - tl.TOL
    if u >= TWO_PI - tl.TOL:
        u -= TWO_PI
    return _in_piece(0.0, span, open_lo, open_hi, u)


def contains(arcs: Iterable[Arc], theta: float) -> bool:
    return any(arc_contains(a, theta) for a in arcs)


def endpoints(arcs: Iterable[Arc]) -> list:
    out = []
    for lo, span, _, _ in arcs:
        out.append(lo)
        out.append(canon_angle(lo + span))
    return out


def rotate(arcs: Iterable[Arc], phi: float) -> CircleSet:
    return tuple((canon_angle(lo + phi), span, ol, oh) for lo, span, ol, oh in arcs)


def reflect(arcs: Iterable[Arc]) -> CircleSet:
    """Image under theta -> -theta."""
    return tuple((canon_angle(-(lo + span)), span, oh, ol) for lo, span, ol, oh in arcs)


def _pieces(arc: Arc, start: float):
    """The arc in coordinates relative to ``start``, as up to three real intervals."""
    lo, span, ol, oh = arc
    s = (lo - start) % TWO_PI
    for k in (-1, 0, 1):
        a = s + k * TWO_PI
        yield a, a + span, ol, oh


def window_sup(arcs: Iterable[Arc], start: float, length: float) -> Optional[float]:
    """Supremum (relative to ``start``) of the set inside the open window
    ``(start, start + length)``, or None when the intersection is empty."""
    best = None
    for arc in arcs:
        for a, b, ol, oh in _pieces(arc, start):
            lo_ = max(a, 0.0)
            hi_ = min(b, length)
            if hi_ - lo_ > tl.TOL:
                cand = hi_
            elif abs(hi_ - lo_) <= tl.TOL:
                p = hi_
                if not (tl.TOL < p < length - tl.TOL):
                    continue
                if not _in_piece(a, b, ol, oh, p):
                    continue
                cand = p
            else:
                continue
            if best is None or cand > best:
                best = cand
    return best


def hits_window(arcs: Iterable[Arc], start: float, length: float) -> bool:
    return window_sup(arcs, start, length) is not None


def intersects(xs: Sequence[Arc], ys: Sequence[Arc]) -> bool:
    """Whether two circle sets share a point (end openness respected)."""
    for x in xs:
        xlo, xspan, xol, xoh = x
        for y in ys:
            for a, b, yol, yoh in _pieces(y, xlo):
                lo_ = max(a, 0.0)
                hi_ = min(b, xspan)
                if hi_ - lo_ > tl.TOL:
                    return True
                if abs(hi_ - lo_) <= tl.TOL:
                    p = 0.5 * (lo_ + hi_)
                    if _in_piece(0.0, xspan, xol, xoh, p) and _in_piece(a, b, yol, yoh, p):
                        return True
    return False


def _cluster(angles: Iterable[float]) -> list:
    pts = sorted(canon_angle(a) for a in angles)
    gap = 4 * tl.TOL
    merged = []
    for p in pts:
        if merged and p - merged[-1] <= gap:
            continue
        merged.append(p)
    if len(merged) > 1 and merged[0] + TWO_PI - merged[-1] <= gap:
        merged.pop()
    return merged


def scan(breaks: Iterable[float], pred: Callable[[float], bool]) -> CircleSet:
    """Canonical circle set of all angles satisfying ``pred``.

    ``pred`` must be constant on every open gap between the given breakpoints.
    """
    bp = _cluster(breaks)
    if not bp:
        return (FULL,) if pred(0.0) else ()
    k = len(bp)
    seq = []  # (is_gap, index, member)
    for i, b in enumerate(bp):
        seq.append((False, i, pred(b)))
        nxt = bp[(i + 1) % k] + (TWO_PI if i == k - 1 else 0.0)
        seq.append((True, i, pred(canon_angle(0.5 * (b + nxt)))))
    if all(m for _, _, m in seq):
        return (FULL,)
    n = len(seq)
    first_false = next(j for j, (_, _, m) in enumerate(seq) if not m)
    order = [seq[(first_false + 1 + j) % n] for j in range(n)]
    out = []
    run = []
    for item in order:
        if item[2]:
            run.append(item)
            continue
        if run:
            out.append(_run_to_arc(run, bp))
            run = []
    if run:
        out.append(_run_to_arc(run, bp))
    return tuple(sorted(out))


def _run_to_arc(run, bp) -> Arc:
    k = len(bp)
    is_gap, i, _ = run[0]
    lo, open_lo = bp[i], is_gap
    is_gap_e, j, _ = run[-1]
    if is_gap_e:
        hi, open_hi = bp[(j + 1) % k], True
    else:
        hi, open_hi = bp[j], False
    if len(run) == 1 and not is_gap:
        return (lo, 0.0, False, False)
    span = (hi - lo) % TWO_PI
    if span <= tl.TOL:
        span = TWO_PI
    return (lo, span, open_lo, open_hi)


def union(*sets: Iterable[Arc]) -> CircleSet:
    arcs = [a for s in sets for a in s]
    if not arcs:
        return ()
    if len(arcs) == 1:
        lo, span, ol, oh = arcs[0]
        if span >= TWO_PI - tl.TOL:
            return (FULL,) if not (ol or oh) else ((canon_angle(lo), TWO_PI, True, True),)
        if span > tl.TOL:
            return ((canon_angle(lo), span, ol, oh),)
    return scan(endpoints(arcs), lambda t: contains(arcs, t))


def is_subset(xs: Sequence[Arc], ys: Sequence[Arc]) -> bool:
    if not xs:
        return True
    brk = endpoints(xs) + endpoints(ys)
    bp = _cluster(brk)
    tests = list(bp)
    for i, b in enumerate(bp):
        nxt = bp[(i + 1) % len(bp)] + (TWO_PI if i == len(bp) - 1 else 0.0)
        tests.append(canon_angle(0.5 * (b + nxt)))
    if not tests:
        tests = [0.0]
    return all(contains(ys, t) for t in tests if contains(xs, t))


def ahead_pair(xs: Sequence[Arc], ys: Sequence[Arc], theta: float) -> bool:
    """Is there alpha in xs and beta in ys with ``theta`` strictly inside the
    shortest arc from alpha (clockwise side) to beta, the two not antipodal?"""
    s = window_sup(xs, theta - math.pi, math.pi)
    if s is None:
        return False
    return hits_window(ys, theta, s)


def strictly_between(xs: Sequence[Arc], ys: Sequence[Arc], theta: float) -> bool:
    if ahead_pair(xs, ys, theta):
        return True
    return ahead_pair(reflect(xs), reflect(ys), canon_angle(-theta))
