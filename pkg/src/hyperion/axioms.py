"""Hyperfield axiom checks: exhaustive on finite carriers, sampled otherwise."""

from __future__ import annotations

import random
from itertools import permutations, product

from .hyperfields import Hyperfield

AXIOMS = (
    "zero_ne_one",
    "identity",
    "negation",
    "commutativity",
    "associativity",
    "reversibility",
    "distributivity",
    "absorption",
    "mul_monoid",
    "mul_inverse",
)


def _triples(H: Hyperfield, budget: int, rng: random.Random):
    if H.finite:
        els = H.elements()
        return list(product(els, repeat=3)), True
    out = []
    for _ in range(budget):
        x = H.sample(rng)
        u = rng.random()
        # force coincidences: equal and opposite elements drive the hard cases
        if u < 0.15:
            y = H.neg(x)
        elif u < 0.25:
            y = x
        else:
            y = H.sample(rng)
        v = rng.random()
        if v < 0.15:
            z = H.neg(rng.choice((x, y)))
        elif v < 0.25:
            z = rng.choice((x, y))
        else:
            z = H.sample(rng)
        out.append((x, y, z))
    return out, False


def check_axioms(H: Hyperfield, sample_budget: int = 10_000, seed: int = 0) -> dict:
    """Run every axiom over triples of elements and report the first failure."""
    rng = random.Random(seed)
    triples, exhaustive = _triples(H, sample_budget, rng)
    fails = {a: None for a in AXIOMS}
    counts = {a: 0 for a in AXIOMS}

    def fail(name, *witness):
        if fails[name] is None:
            fails[name] = [repr(w) for w in witness]

    counts["zero_ne_one"] = 1
    if H.eq(H.zero, H.one):
        fail("zero_ne_one", H.zero, H.one)

    zero = H.zero
    for x, y, z in triples:
        sx, sy, sz = H.singleton(x), H.singleton(y), H.singleton(z)

        counts["identity"] += 1
        if H.hyperadd(zero, x) != sx:
            fail("identity", x)

        counts["negation"] += 1
        if not H.contains(H.hyperadd(x, H.neg(x)), zero):
            fail("negation", x)
        if not H.eq(y, H.neg(x)) and H.contains(H.hyperadd(x, y), zero):
            fail("negation", x, y)

        counts["commutativity"] += 1
        if H.hyperadd(x, y) != H.hyperadd(y, x):
            fail("commutativity", x, y)

        counts["associativity"] += 1
        ref = None
        for a, b, c in permutations((x, y, z)):
            left = H.set_hyperadd(H.hyperadd(a, b), H.singleton(c))
            right = H.set_hyperadd(H.singleton(a), H.hyperadd(b, c))
            if ref is None:
                ref = left
            if left != right or left != ref:
                fail("associativity", a, b, c)
                break

        counts["reversibility"] += 1
        for w in H.representatives(H.hyperadd(y, z)):
            if not H.contains(H.hyperadd(w, H.neg(y)), z):
                fail("reversibility", w, y, z)
                break

        counts["distributivity"] += 1
        lhs = H.scale(H.hyperadd(y, z), x)
        rhs = H.hyperadd(H.mul(x, y), H.mul(x, z))
        if lhs != rhs:
            fail("distributivity", x, y, z)

        counts["absorption"] += 1
        if not H.eq(H.mul(zero, x), zero) or not H.eq(H.mul(x, zero), zero):
            fail("absorption", x)

        counts["mul_monoid"] += 1
        if not H.eq(H.mul(x, y), H.mul(y, x)) or not H.eq(H.mul(H.mul(x, y), z), H.mul(x, H.mul(y, z))):
            fail("mul_monoid", x, y, z)
        if not H.eq(H.mul(H.one, x), x):
            fail("mul_monoid", x)

        if not H.is_zero(x):
            counts["mul_inverse"] += 1
            if not H.eq(H.mul(x, H.inv(x)), H.one):
                fail("mul_inverse", x)
        del sy, sz

    results = {
        a: {"passed": fails[a] is None, "checked": counts[a], "witness": fails[a]} for a in AXIOMS
    }
    return {
        "hyperfield": H.name,
        "exhaustive": exhaustive,
        "samples": len(triples),
        "passed": all(r["passed"] for r in results.values()),
        "axioms": results,
    }
