"""Height functions of triangle centers and the functional equation that
singles out the generalized Euler line.

A center that commutes with dilations and satisfies the Archimedes
decomposition rule is fixed by a single function ``f``: for the isosceles
triangle with base ``[-1, 1] x {0}`` and base angle ``alpha``, the center
sits on the axis at height ``f(alpha)``.  Members of the Euler family are
``f(alpha) = t tan(alpha) / 3 + (1 - t)(-cot 2 alpha)``.

All checks here are numeric samples, not symbolic proofs.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np

from .core import as_points
from .errors import DegenerateKiteError, DegeneratePairError, PoleAngleError

HeightFunction = Callable[[float], float]

_POLE_EPS = 1e-12


def _tan(angle: float) -> float:
    if abs(math.cos(angle)) < _POLE_EPS:
        raise PoleAngleError(f"tan has a pole at {angle!r}")
    return math.tan(angle)


def euler_family_height(t: float, alpha: float) -> float:
    """Height of ``C_t`` above the base of the base-2 isosceles triangle.

    Geometrically meaningful for ``alpha`` in ``(0, pi/2)``; the formula is
    continued to every angle off the poles of ``tan`` and ``cot 2 alpha``
    so that the functional equation can be sampled at any triple.
    """
    cm = _tan(alpha) / 3.0
    if t == 1.0:
        return cm
    s = math.sin(2.0 * alpha)
    if abs(s) < _POLE_EPS:
        raise PoleAngleError(f"cot(2 alpha) has a pole at {alpha!r}")
    return t * cm + (1.0 - t) * (-math.cos(2.0 * alpha) / s)


def euler_height_function(t: float) -> HeightFunction:
    return lambda alpha: euler_family_height(t, alpha)


def kite_height(f: HeightFunction, alpha: float, beta: float) -> float:
    """Signed height of the center of the kite built on a shared base of
    length 2 from the isosceles triangles with base angles ``alpha`` (above)
    and ``beta`` (below)."""
    ta, tb = _tan(alpha), _tan(beta)
    denom = ta + tb
    if abs(denom) <= _POLE_EPS * max(1.0, abs(ta), abs(tb)):
        raise DegenerateKiteError("tan(alpha) + tan(beta) vanishes")
    return (f(alpha) * ta - f(beta) * tb) / denom


def tangent_substitution(alpha: float, beta: float) -> float:
    """``z = (1 - xy) / (x + y)`` with ``x = tan alpha``, ``y = tan beta``:
    the tangent of the third angle when the three sum to ``pi/2``."""
    x, y = _tan(alpha), _tan(beta)
    if abs(x + y) <= _POLE_EPS * max(1.0, abs(x), abs(y)):
        raise DegeneratePairError("tan(alpha) + tan(beta) vanishes")
    return (1.0 - x * y) / (x + y)


def functional_eq_residual(f: HeightFunction, alpha: float, beta: float) -> float:
    """Cyclic sum of the three kite heights at ``(alpha, beta, pi/2 - alpha - beta)``.

    Zero for every admissible triple exactly when ``f`` is the height
    function of a center on the generalized Euler line.  The third angle may
    be negative; only poles of ``tan`` are excluded.
    """
    gamma = math.pi / 2 - alpha - beta
    return kite_height(f, alpha, beta) + kite_height(f, beta, gamma) + kite_height(f, gamma, alpha)


def angles_from_tangents(x: float, y: float) -> tuple[float, float, float]:
    """Angles with tangents ``x``, ``y`` and the complementary third angle."""
    alpha, beta = math.atan(x), math.atan(y)
    return alpha, beta, math.pi / 2 - alpha - beta


def altitude_distance_residual(triangle, point) -> float:
    """``d_A/h_A + d_B/h_B + d_C/h_C`` for signed distances from ``point``
    to the three altitudes, each oriented from its vertex to the foot.

    Vanishes identically; used as a numeric spot check.
    """
    tri = as_points(triangle, dim=2, name="triangle")
    x = np.asarray(point, dtype=float)
    total = 0.0
    for i in range(3):
        v, p, q = tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]
        side = q - p
        foot = p + side * ((v - p) @ side) / (side @ side)
        axis = foot - v
        h = float(np.linalg.norm(axis))
        u = axis / h
        d = u[0] * (x - v)[1] - u[1] * (x - v)[0]
        total += d / h
    return float(total)


__all__ = [
    "HeightFunction",
    "altitude_distance_residual",
    "angles_from_tangents",
    "euler_family_height",
    "euler_height_function",
    "functional_eq_residual",
    "kite_height",
    "tangent_substitution",
]
