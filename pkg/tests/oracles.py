"""Independent reference implementations used by the tests.

* A sampling oracle for sums of whole value sets. Regions are drawn with
  endpoints on a coarse lattice (angles on multiples of 30 degrees, radii
  and tropical values on multiples of 1/2). Each region is replaced by a
  finer lattice of its points, every pair of sample points is summed with
  the pointwise rule (written again here from scratch) and probes on an
  intermediate lattice are tested against the union. Because every
  breakpoint of a true sum lies on the coarse lattice, the sampled union
  agrees with the true union on the probe lattice.
* A brute-force tropical root scan.
* A naive quotient search for multiplicities.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product

import numpy as np

from hyperion import valueset as vs
from hyperion.carriers import PHASE_ZERO, Phase, Polar, ZERO_POLAR
from hyperion.valueset import Arc, Disk, DownRay, Point

# angle unit for samples: 1/16 of the 30 degree coarse step
N = 192
COARSE = 16
NEG_INF = -math.inf


def _rad(units) -> float:
    return 2 * math.pi * units / N


# ---------------------------------------------------------------- random regions


def random_region(family: str, rng: random.Random):
    if family == "trop":
        u = rng.random()
        if u < 0.1:
            return Point(NEG_INF)
        v = rng.randint(-8, 8) / 2
        return Point(v) if u < 0.55 else DownRay(v)
    if family == "phase":
        u = rng.random()
        if u < 0.08:
            return Point(PHASE_ZERO)
        k = rng.randrange(12) * COARSE
        if u < 0.4:
            return Point(Phase(_rad(k)))
        span = rng.randint(1, 12) * COARSE
        return Arc(_rad(k), _rad(span), rng.random() < 0.5, rng.random() < 0.5, 0.0)
    if family == "complex":
        u = rng.random()
        rho = rng.randint(-2, 2) / 2
        k = rng.randrange(12) * COARSE
        if u < 0.06:
            return Point(ZERO_POLAR)
        if u < 0.4:
            return Point(Polar(rho, _rad(k)))
        if u < 0.6:
            return Disk(rho)
        span = rng.randint(1, 11) * COARSE
        return Arc(_rad(k), _rad(span), rng.random() < 0.5, rng.random() < 0.5, rho)
    raise ValueError(family)


def random_set(family: str, rng: random.Random, max_regions: int = 1) -> vs.ValueSet:
    k = rng.randint(1, max_regions)
    return vs.make(family, [random_region(family, rng) for _ in range(k)])


# ---------------------------------------------------------------- sampling


def _units(x: float) -> int:
    return int(round(x * N / (2 * math.pi))) % N


def _arc_units(r) -> np.ndarray:
    lo, span = int(round(r.lo * N / (2 * math.pi))), int(round(r.span * N / (2 * math.pi)))
    ks = list(range(lo, lo + span + 1))
    if span >= N:
        ks = list(range(lo, lo + N))
        if r.open_lo or r.open_hi:
            ks = ks[1:]
    else:
        if r.open_lo:
            ks = ks[1:]
        if r.open_hi:
            ks = ks[:-1]
    return np.unique(np.array(ks, dtype=int) % N)


def trop_samples(S: vs.ValueSet) -> np.ndarray:
    vals = []
    for r in S.regions:
        if isinstance(r, Point):
            vals.append(np.array([float(r.value)]))
        else:
            vals.append(np.arange(r.top, -14.0 - 1e-12, -1 / 128))
            vals.append(np.array([NEG_INF]))
    return np.unique(np.concatenate(vals))


def _arc_cells(r) -> np.ndarray:
    """Exact cell coverage of an arc region."""
    lo, span = int(round(r.lo * N / (2 * math.pi))), int(round(r.span * N / (2 * math.pi)))
    if span >= N:
        cov = np.ones(2 * N, bool)
        if r.open_lo or r.open_hi:
            cov[(2 * lo) % (2 * N)] = False
        return cov
    start = 2 * lo + (1 if r.open_lo else 0)
    end = 2 * (lo + span) - (1 if r.open_hi else 0)
    return _cover(np.array([start % (2 * N)]), np.array([end - start + 1]))


def circle_samples(S: vs.ValueSet):
    """``(zero, {level: unit array}, {level: exact cell coverage})``.

    Phases use the single level 0.
    """
    zero = False
    levels = {}
    cells = {}

    def add(level, ks, cov):
        levels[level] = np.union1d(levels.get(level, np.array([], dtype=int)), ks)
        cells[level] = cells.get(level, np.zeros(2 * N, bool)) | cov

    for r in S.regions:
        if isinstance(r, Point):
            v = r.value
            if v.is_zero:
                zero = True
            else:
                k = _units(v.angle)
                add(v.logmag if isinstance(v, Polar) else 0.0, np.array([k]), _points_cover([k]))
        elif isinstance(r, Disk):
            zero = True
            for j in range(0, 33):
                add(r.logmag - j / 8, np.arange(N), np.ones(2 * N, bool))
        else:
            add(r.logmag if S.family == "complex" else 0.0, _arc_units(r), _arc_cells(r))
    return zero, levels, cells


# ---------------------------------------------------------------- pointwise rules


def _cover(starts: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    """Boolean coverage of the 2N cells (even: lattice points, odd: open gaps)."""
    cells = 2 * N
    diff = np.zeros(2 * cells + 1, dtype=np.int64)
    np.add.at(diff, starts, 1)
    np.add.at(diff, starts + lengths, -1)
    cov = np.cumsum(diff)[: 2 * cells]
    return (cov[:cells] + cov[cells:]) > 0


def _pair_cover(alpha: np.ndarray, beta: np.ndarray, closed: bool):
    """Cells covered by the sums of equal-radius samples, and whether some
    pair is antipodal."""
    a = alpha[:, None]
    b = beta[None, :]
    d = (b - a) % N
    a = np.broadcast_to(a, d.shape)
    b = np.broadcast_to(b, d.shape)
    half = N // 2
    antipodal = bool((d == half).any())
    same = d == 0
    fwd = (d > 0) & (d < half)
    bwd = d > half
    starts, lengths = [], []
    # coincident samples give the point itself
    starts.append(2 * a[same])
    lengths.append(np.ones(int(same.sum()), dtype=int))
    for mask, lo, span in ((fwd, a, d), (bwd, b, N - d)):
        lo, span = lo[mask], span[mask]
        if closed:
            starts.append(2 * lo)
            lengths.append(2 * span + 1)
        else:
            starts.append(2 * lo + 1)
            lengths.append(2 * span - 1)
    return np.concatenate(starts), np.concatenate(lengths), antipodal


def _points_cover(ks) -> np.ndarray:
    ks = np.asarray(ks, dtype=int)
    return _cover(2 * ks, np.ones(len(ks), dtype=int))


# ---------------------------------------------------------------- probes


def _gap_cell(rng) -> int:
    """A gap between sample points that does not touch a coarse lattice point.

    Next to an open coarse endpoint a witness can sit arbitrarily close to
    the endpoint, closer than any sample, so those gaps are not probed.
    """
    while True:
        k = rng.randrange(N)
        if k % COARSE not in (0, COARSE - 1):
            return k


def probes(family: str, rng: random.Random, count: int = 1000):
    """``count`` probes as ``(element, key)``; ``key`` is what the oracle reads."""
    out = []
    if family == "trop":
        out.append((NEG_INF, NEG_INF))
        vals = np.arange(-8.0, 8.0 + 1e-12, 1 / 64)
        for v in vals[: count - 1]:
            out.append((float(v), float(v)))
        return out
    if family == "phase":
        out.append((PHASE_ZERO, None))
        for k in range(0, N, 2):
            out.append((Phase(_rad(k)), (0.0, 2 * k)))
        while len(out) < count:
            k = _gap_cell(rng)
            out.append((Phase(_rad(k + rng.uniform(0.2, 0.8))), (0.0, 2 * k + 1)))
        return out
    if family == "complex":
        out.append((ZERO_POLAR, None))
        levels = [j / 4 for j in range(-8, 9)]
        grid = [(lv, k) for lv in levels for k in range(0, N, 4)]
        rng.shuffle(grid)
        for lv, k in grid[: count - 1]:
            out.append((Polar(lv, _rad(k)), (lv, 2 * k)))
        while len(out) < count:
            lv = rng.choice(levels)
            k = _gap_cell(rng)
            out.append((Polar(lv, _rad(k + rng.uniform(0.2, 0.8))), (lv, 2 * k + 1)))
        return out
    raise ValueError(family)


# ---------------------------------------------------------------- oracle


def oracle_trop(A: vs.ValueSet, B: vs.ValueSet, keys) -> np.ndarray:
    sa, sb = trop_samples(A), trop_samples(B)
    z = np.array(keys, dtype=float)
    # a != b contributes max(a, b); a == b contributes everything up to a
    in_a = np.isin(z, sa) & (sb.min() < z)
    in_b = np.isin(z, sb) & (sa.min() < z)
    common = np.intersect1d(sa, sb)
    ray = z <= common.max() if len(common) else np.zeros(len(z), bool)
    return in_a | in_b | ray


def oracle_circle(A: vs.ValueSet, B: vs.ValueSet, keys, family: str) -> np.ndarray:
    closed = family == "complex"
    za, la, ca = circle_samples(A)
    zb, lb, cb = circle_samples(B)
    cover = {}
    zero = za and zb
    disk = NEG_INF

    def add(level, c):
        cover[level] = cover.get(level, np.zeros(2 * N, bool)) | c

    if family == "complex":
        min_a = NEG_INF if za else min(la, default=math.inf)
        min_b = NEG_INF if zb else min(lb, default=math.inf)
        # a strictly larger magnitude absorbs the other summand
        for level, cov in ca.items():
            if min_b < level:
                add(level, cov)
        for level, cov in cb.items():
            if min_a < level:
                add(level, cov)
    else:
        if zb:
            for level, cov in ca.items():
                add(level, cov)
        if za:
            for level, cov in cb.items():
                add(level, cov)
    for level in set(la) & set(lb):
        starts, lengths, anti = _pair_cover(la[level], lb[level], closed)
        add(level, _cover(starts, lengths))
        if anti:
            if closed:
                disk = max(disk, level)
            else:
                zero = True
                # z + (-z) = {0, z, -z}
                a = la[level][:, None]
                b = lb[level][None, :]
                hit = ((b - a) % N) == N // 2
                add(level, _points_cover(np.concatenate([np.broadcast_to(a, hit.shape)[hit], np.broadcast_to(b, hit.shape)[hit]])))
    out = np.zeros(len(keys), bool)
    for i, key in enumerate(keys):
        if key is None:
            out[i] = zero or disk > NEG_INF
            continue
        level, cell = key
        if level <= disk:
            out[i] = True
        elif level in cover:
            out[i] = bool(cover[level][cell])
    return out


def oracle_mask(family: str, A, B, keys) -> np.ndarray:
    if family == "trop":
        return oracle_trop(A, B, keys)
    return oracle_circle(A, B, keys, family)


def region_disagreements(H, n_pairs: int, n_probes: int = 1000, seed: int = 0, max_regions: int = 1):
    """Compare ``H.set_hyperadd`` against the oracle; return (count, first witness)."""
    rng = random.Random(seed)
    family = H.family
    bad = 0
    witness = None
    # one probe set per run; the region pairs vary
    pr = probes(family, random.Random(seed + 1), n_probes)
    keys = [k for _, k in pr]
    for _ in range(n_pairs):
        A = random_set(family, rng, max_regions)
        B = random_set(family, rng, max_regions)
        closed_form = H.set_hyperadd(A, B)
        expected = oracle_mask(family, A, B, keys)
        for (x, _), want in zip(pr, expected):
            if vs.contains(closed_form, x) != bool(want):
                bad += 1
                if witness is None:
                    witness = (A, B, closed_form, x, bool(want))
    return bad, witness


# ---------------------------------------------------------------- finite tables


def krasner_sum(a, b):
    if a == 0:
        return {b}
    if b == 0:
        return {a}
    return {0, 1}


def sign_sum(a, b):
    if a == 0:
        return {b}
    if b == 0 or a == b:
        return {a}
    return {-1, 0, 1}


def finite_union(table, A, B):
    out = set()
    for a, b in product(A, B):
        out |= table(a, b)
    return out


# ---------------------------------------------------------------- tropical roots


def brute_tropical_roots(coeffs: dict, step: float = 0.25, bound: float = 20.0):
    """Grid points where the maximum of ``c_i + i*x`` is attained at least twice."""
    xs = np.arange(-bound, bound + step / 2, step)
    exps = np.array(sorted(coeffs), dtype=float)
    cs = np.array([coeffs[e] for e in sorted(coeffs)], dtype=float)
    vals = cs[None, :] + xs[:, None] * exps[None, :]
    top = vals.max(axis=1, keepdims=True)
    hits = (np.abs(vals - top) <= 1e-9).sum(axis=1) >= 2
    return [float(x) for x in xs[hits]]


# ---------------------------------------------------------------- multiplicity


def naive_multiplicity(H, coeffs, a):
    """Multiplicity by trying every dense coefficient list as a quotient."""
    coeffs = tuple(coeffs)
    total = H.hypersum([H.mul(c, H.pow(a, i)) for i, c in enumerate(coeffs)])
    if not H.contains(total, H.zero):
        return 0
    d = len(coeffs) - 1
    best = 0
    if d >= 1:
        els = H.elements()
        nonzero = [e for e in els if not H.is_zero(e)]
        for body in product(els, repeat=d - 1):
            for lead in nonzero:
                q = tuple(body) + (lead,)
                if _divides(H, coeffs, a, q):
                    best = max(best, naive_multiplicity(H, q, a))
    return 1 + best


def _divides(H, coeffs, a, q):
    """Is ``coeffs`` in ``(X - a) * q``, coefficient by coefficient?"""
    d = len(coeffs) - 1
    neg_a = H.neg(a)
    for i in range(d + 1):
        hi = q[i - 1] if i >= 1 else H.zero
        lo = H.mul(neg_a, q[i]) if i < len(q) else H.zero
        if not H.contains(H.hyperadd(hi, lo), coeffs[i]):
            return False
    return True


def exact_rational_roots(coeffs):
    """Rational roots of an integer polynomial (rational root theorem)."""
    coeffs = [Fraction(c) for c in coeffs]
    out = set()
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
        out.add(Fraction(0))
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if len(coeffs) < 2:
        return sorted(out)
    lead, const = coeffs[-1], coeffs[0]

    def divisors(n):
        n = abs(int(n))
        return [k for k in range(1, n + 1) if n % k == 0] or [1]

    for p in divisors(const.numerator):
        for q in divisors(lead.numerator):
            for s in (1, -1):
                x = Fraction(s * p, q)
                if sum(c * x**i for i, c in enumerate(coeffs)) == 0:
                    out.add(x)
    return sorted(out)
