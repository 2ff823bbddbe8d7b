"""JSON encodings shared by the CLI and reports."""

from __future__ import annotations

import json
from fractions import Fraction

from . import valueset as vs
from .carriers import Phase, Polar
from .catalog import lookup
from .polynomial import Polynomial
from .tolerance import NEG_INF


def _num(x: float):
    return "-inf" if x == NEG_INF else float(x)


def element_to_json(x, hyperfield):
    H = lookup(hyperfield) if isinstance(hyperfield, str) else hyperfield
    if isinstance(x, Polar):
        return {"log_magnitude": _num(x.logmag), "angle": float(x.angle)}
    if isinstance(x, Phase):
        return {"zero": True} if x.angle is None else {"angle": float(x.angle)}
    if isinstance(x, Fraction):
        return str(x)
    if H.name == "T":
        return _num(x)
    return int(x)


def element_from_json(d, hyperfield):
    H = lookup(hyperfield) if isinstance(hyperfield, str) else hyperfield
    name = H.name
    if name in ("TC", "Ctriv"):
        lm = d["log_magnitude"]
        return Polar(float(lm), float(d.get("angle", 0.0)))
    if name == "P":
        return Phase(None) if d.get("zero") else Phase(float(d["angle"]))
    if name == "Qtriv":
        return Fraction(d)
    if name == "T":
        return float(d)
    return H.check(int(d))


def polynomial_to_json(p: Polynomial) -> dict:
    from .textio import format_polynomial

    return {
        "hyperfield": p.hyperfield.name,
        "nvars": p.nvars,
        "text": format_polynomial(p),
        "terms": [
            {"exponent": list(e), "coefficient": element_to_json(c, p.hyperfield)} for e, c in p.items()
        ],
    }


def polynomial_from_json(d: dict) -> Polynomial:
    H = lookup(d["hyperfield"])
    terms = {tuple(t["exponent"]): element_from_json(t["coefficient"], H) for t in d["terms"]}
    return Polynomial(H, terms, d["nvars"])


def cert_to_json(c) -> dict:
    return {
        "element": element_to_json(c.element, "TC"),
        "dominant": list(c.dominant),
        "fast_path": c.fast_path,
        "fast_verdict": c.fast_verdict,
        "verdict": "root" if c.verdict else "not a root",
        "value": vs.to_json(c.value),
    }


def root_report_to_json(r, hyperfield) -> dict:
    return {
        "roots": [
            {"element": element_to_json(a, hyperfield), "multiplicity": m} for a, m in r.roots
        ],
        "total_multiplicity": r.total_multiplicity,
        "degree": r.degree,
        "exhaustive": r.exhaustive,
    }


def dumps(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed separators)."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False, ensure_ascii=False)
