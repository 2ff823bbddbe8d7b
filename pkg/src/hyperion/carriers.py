"""Carrier element types that are not plain Python numbers.

Krasner and sign elements are ``int``; tropical numbers are ``float`` with
``-inf`` as the bottom; exact rationals are ``fractions.Fraction``. The two
circle-based carriers get small immutable records.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import tolerance as tl
from .tolerance import NEG_INF, canon_angle


@dataclass(frozen=True)
class Polar:
    """A complex number as (log|z|, arg z). ``logmag = -inf`` is zero."""

    logmag: float
    angle: float = 0.0

    def __post_init__(self):
        if math.isnan(self.logmag) or math.isnan(self.angle):
            raise ValueError("NaN in polar element")
        if self.logmag == NEG_INF:
            object.__setattr__(self, "angle", 0.0)
        elif self.logmag == math.inf:
            raise ValueError("infinite magnitude")
        else:
            object.__setattr__(self, "angle", canon_angle(self.angle))

    @property
    def is_zero(self) -> bool:
        return self.logmag == NEG_INF

    @classmethod
    def from_complex(cls, z: complex) -> "Polar":
        if z == 0:
            return ZERO_POLAR
        return cls(math.log(abs(z)), cmath.phase(z))

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j
        return cmath.rect(math.exp(self.logmag), self.angle)

    def __repr__(self):
        return f"Polar({self.logmag!r}, {self.angle!r})"


ZERO_POLAR = Polar(NEG_INF, 0.0)
ONE_POLAR = Polar(0.0, 0.0)


@dataclass(frozen=True)
class Phase:
    """Element of S^1 u {0}; ``angle is None`` encodes zero."""

    angle: Optional[float]

    def __post_init__(self):
        if self.angle is not None:
            object.__setattr__(self, "angle", canon_angle(self.angle))

    @property
    def is_zero(self) -> bool:
        return self.angle is None

    def __repr__(self):
        return "Phase(None)" if self.angle is None else f"Phase({self.angle!r})"


PHASE_ZERO = Phase(None)
PHASE_ONE = Phase(0.0)


def approx_equal(x, y) -> bool:
    """Element equality under the tolerance policy, exact for symbolic carriers."""
    if isinstance(x, Polar) and isinstance(y, Polar):
        if x.is_zero or y.is_zero:
            return x.is_zero and y.is_zero
        return tl.close(x.logmag, y.logmag) and tl.angle_close(x.angle, y.angle)
    if isinstance(x, Phase) and isinstance(y, Phase):
        if x.is_zero or y.is_zero:
            return x.is_zero and y.is_zero
        return tl.angle_close(x.angle, y.angle)
    if isinstance(x, float) or isinstance(y, float):
        if isinstance(x, (Polar, Phase)) or isinstance(y, (Polar, Phase)):
            return False
        return tl.close(float(x), float(y))
    return x == y


def sort_key(x):
    """Total order used for canonical listings."""
    if isinstance(x, Polar):
        return (x.logmag, x.angle)
    if isinstance(x, Phase):
        return (-1.0,) if x.is_zero else (0.0, x.angle)
    if isinstance(x, Fraction):
        return (x,)
    return (x,)
