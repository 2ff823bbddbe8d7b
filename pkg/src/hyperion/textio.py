"""Text grammar for elements, points and polynomials.

Polynomials are terms joined by ``+``. A term is an optional coefficient
literal followed by monomials ``X<i>`` or ``X<i>^<e>`` separated by spaces
or ``*``. A missing coefficient means one. Coefficient literals:

* ``K``, ``S``: integers (``0``, ``1``, ``-1``)
* ``Qtriv``: integers or ``p/q``
* ``T``: decimals or ``-inf``
* ``TC``: ``mag<m>@<deg>`` (magnitude, angle in degrees), ``re,im``, or a real
* ``P``: ``@<deg>``, ``0``, ``1`` or ``-1``
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Tuple

from .carriers import PHASE_ONE, PHASE_ZERO, ZERO_POLAR, Phase, Polar
from .catalog import lookup
from .errors import CarrierMismatch, DegeneratePolynomial, ParseError
from .hyperfields import Hyperfield
from .polynomial import Polynomial
from .tolerance import NEG_INF

_NUM = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COEFF = re.compile(r"(?:\d+(?:\.\d*)?[eE][+-]?\d+|[^\sX+*])+")
_MONO = re.compile(r"X(\d*)(?:\s*\^\s*(\d+))?")
_MAG = re.compile(rf"mag({_NUM})@({_NUM})$")
_PHASE = re.compile(rf"@({_NUM})$")
_PAIR = re.compile(rf"({_NUM}),({_NUM})$")


def _hf(hyperfield) -> Hyperfield:
    return lookup(hyperfield) if isinstance(hyperfield, str) else hyperfield


def parse_element(text: str, hyperfield, position: int = 0):
    """Parse one carrier literal."""
    H = _hf(hyperfield)
    s = text.strip()
    try:
        x = _parse_element(s, H)
    except (ValueError, ZeroDivisionError, CarrierMismatch) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad {H.name} literal {s!r}", position) from None
    if not H.is_element(x):
        raise ParseError(f"{s!r} is not an element of {H.name}", position)
    return H.check(x)


def _parse_element(s: str, H: Hyperfield):
    name = H.name
    if name in ("K", "S"):
        if not re.fullmatch(r"[+-]?\d+", s):
            raise ValueError
        return int(s)
    if name == "Qtriv":
        if not re.fullmatch(r"[+-]?\d+(?:/\d+)?", s):
            raise ValueError
        return Fraction(s)
    if name == "T":
        if s in ("-inf", "-∞"):
            return NEG_INF
        if not re.fullmatch(_NUM, s):
            raise ValueError
        return float(s)
    if name in ("TC", "Ctriv"):
        m = _MAG.match(s)
        if m:
            mag, deg = float(m.group(1)), float(m.group(2))
            if mag < 0:
                raise ValueError
            return ZERO_POLAR if mag == 0 else Polar(math.log(mag), math.radians(deg))
        m = _PAIR.match(s)
        if m:
            return Polar.from_complex(complex(float(m.group(1)), float(m.group(2))))
        if re.fullmatch(_NUM, s):
            return Polar.from_complex(complex(float(s), 0.0))
        raise ValueError
    if name == "P":
        if s == "0":
            return PHASE_ZERO
        if s in ("1", "+1"):
            return PHASE_ONE
        if s == "-1":
            return Phase(math.pi)
        m = _PHASE.match(s)
        if m:
            return Phase(math.radians(float(m.group(1))))
        raise ValueError
    raise ValueError


def format_element(x, hyperfield) -> str:
    H = _hf(hyperfield)
    name = H.name
    if name in ("K", "S"):
        return str(int(x))
    if name == "Qtriv":
        return str(Fraction(x))
    if name == "T":
        return _real(x)
    if name in ("TC", "Ctriv"):
        if x.is_zero:
            return "0"
        return f"mag{_g(math.exp(x.logmag))}@{_deg(x.angle)}"
    if name == "P":
        return "0" if x.angle is None else f"@{_deg(x.angle)}"
    raise CarrierMismatch(f"no literal syntax for {name}")


def _real(x: float) -> str:
    if x == NEG_INF:
        return "-inf"
    if float(x).is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def _g(v: float) -> str:
    return format(v, ".12g")


def _deg(theta: float) -> str:
    d = _g(math.degrees(theta))
    return "0" if d in ("360", "-0") else d


# ---------------------------------------------------------------- polynomials


def parse_polynomial(text: str, hyperfield, nvars: int = None) -> Polynomial:
    """Parse the polynomial grammar; errors carry the character position."""
    H = _hf(hyperfield)
    terms = {}
    pos = 0
    n = len(text)
    raw = []
    while True:
        coeff, exps, start, pos = _term(text, pos, H)
        raw.append((coeff, exps, start))
        pos = _skip(text, pos)
        if pos >= n:
            break
        if text[pos] != "+":
            raise ParseError(f"expected '+' or end of input, found {text[pos]!r}", pos)
        pos += 1
    width = max([max(e, default=0) for _, e, _ in raw] + [nvars or 1])
    if nvars is not None and width > nvars:
        raise ParseError(f"variable X{width} exceeds the declared {nvars} variables", 0)
    for coeff, exps, start in raw:
        vec = [0] * width
        for i, e in exps.items():
            vec[i - 1] = e
        vec = tuple(vec)
        if vec in terms:
            raise ParseError(f"duplicate term {_monomial_text(vec) or 'constant'}", start)
        terms[vec] = coeff
    nonzero = {e: c for e, c in terms.items() if not H.is_zero(c)}
    if not nonzero:
        raise DegeneratePolynomial("every coefficient is zero")
    return Polynomial(H, nonzero, width)


def _skip(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _term(text: str, pos: int, H: Hyperfield):
    pos = _skip(text, pos)
    start = pos
    if pos >= len(text) or text[pos] == "+":
        raise ParseError("empty term", pos)
    coeff = H.one
    if text[pos] != "X":
        m = _COEFF.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        coeff = parse_element(m.group(0), H, pos)
        pos = m.end()
    exps = {}
    while True:
        p2 = _skip(text, pos)
        if p2 < len(text) and text[p2] == "*":
            p2 = _skip(text, p2 + 1)
            if p2 >= len(text) or text[p2] != "X":
                raise ParseError("expected a variable after '*'", p2)
        if p2 >= len(text) or text[p2] != "X":
            return coeff, exps, start, p2
        m = _MONO.match(text, p2)
        idx = int(m.group(1)) if m.group(1) else 1
        if idx < 1:
            raise ParseError("variables are numbered from X1", p2)
        e = int(m.group(2)) if m.group(2) is not None else 1
        exps[idx] = exps.get(idx, 0) + e
        pos = m.end()


def _monomial_text(exp) -> str:
    parts = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            parts.append(f"X{i}")
        elif e > 1:
            parts.append(f"X{i}^{e}")
    return " ".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: terms by total degree then exponents, descending."""
    out = []
    for exp, c in p.items():
        mono = _monomial_text(exp)
        lit = format_element(c, p.hyperfield)
        out.append(f"{lit} {mono}" if mono else lit)
    return " + ".join(out)


# ---------------------------------------------------------------- points


def parse_point(text: str, hyperfield, nvars: int = None) -> Tuple:
    """A point literal: ``a`` or ``(a1, a2, ...)``.

    Coordinates are split on ``;`` when present, otherwise on ``,``. Use
    ``;`` for complex coordinates written as ``re,im``.
    """
    H = _hf(hyperfield)
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    sep = ";" if ";" in s else ","
    if H.name in ("TC", "Ctriv") and sep == "," and nvars == 1:
        parts = [s]
    else:
        parts = [t for t in s.split(sep)]
    if any(not t.strip() for t in parts):
        raise ParseError(f"empty coordinate in {text!r}", 0)
    pt = tuple(parse_element(t, H) for t in parts)
    if nvars is not None and len(pt) != nvars:
        raise ParseError(f"point has {len(pt)} coordinates, expected {nvars}", 0)
    return pt


def format_point(pt, hyperfield) -> str:
    H = _hf(hyperfield)
    sep = "; " if H.name in ("TC", "Ctriv") else ", "
    return "(" + sep.join(format_element(x, H) for x in pt) + ")"
