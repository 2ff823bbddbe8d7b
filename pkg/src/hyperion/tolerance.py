"""Uniform tolerance policy for log-magnitudes and angles.

The default of 1e-9 can be overridden with the ``HYPERION_TOL`` environment
variable. Every comparison in the package goes through the helpers below so
that membership and dominance tests agree with each other.
"""

import math
import os

TWO_PI = 2.0 * math.pi
NEG_INF = -math.inf

TOL = float(os.environ.get("HYPERION_TOL", "1e-9"))


def set_tolerance(tol: float) -> None:
    global TOL
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    TOL = float(tol)


def close(a: float, b: float) -> bool:
    """Equality of (possibly infinite) reals under the tolerance policy."""
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= TOL


def less(a: float, b: float) -> bool:
    """Strict ``a < b`` that is robust to rounding noise."""
    if math.isinf(a) or math.isinf(b):
        return a < b
    return a < b - TOL


def canon_angle(theta: float) -> float:
    t = math.fmod(theta, TWO_PI)
    if t < 0:
        t += TWO_PI
    # snap values that are a rounding error away from a full turn
    if t >= TWO_PI - 1e-12:
        t = 0.0
    return t


def signed_diff(frm: float, to: float) -> float:
    """Counter-clockwise displacement from ``frm`` to ``to`` in (-pi, pi]."""
    d = math.fmod(to - frm, TWO_PI)
    if d > math.pi:
        d -= TWO_PI
    elif d <= -math.pi:
        d += TWO_PI
    return d


def angle_close(a: float, b: float) -> bool:
    return abs(signed_diff(a, b)) <= TOL
