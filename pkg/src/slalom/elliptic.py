"""Extremal length of the slalom rectangle R^M via elliptic integrals.

The rectangle is the conformal image of the left half-plane with boundary
marked points -i(M+1), -iM, iM, i(M+1); the horizontal sides are the images
of [-i(M+1), -iM] and [iM, i(M+1)].  The boundary arc lengths come from the
elliptic integral

    F_M(z) = int_0^z dzeta / sqrt((zeta^2 + M^2)(zeta^2 + (M+1)^2))

with the square-root branch positive on the positive real axis.  Writing
zeta = i t keeps both boundary integrals real:

    vertical side  a = 2 * int_0^M     dt / sqrt((M^2 - t^2)((M+1)^2 - t^2))
    horizontal     b =     int_M^{M+1} dt / sqrt((t^2 - M^2)((M+1)^2 - t^2))

and lambda(R^M) = a/b.  The closed form evaluates both as complete elliptic
integrals through the AGM, with modulus k = M/(M+1); the quadrature route
integrates the arcs directly after trigonometric substitutions that remove
the inverse-square-root endpoint singularities.  The two routes are kept
independent and must agree to 1e-8.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from scipy.integrate import quad

_AGM_RTOL = 1e-15
_QUAD_TOL = 1e-13


class ModulusMethod(enum.Enum):
    CLOSED_FORM = "closed"
    QUADRATURE = "quad"


@dataclass(frozen=True)
class QuadModulus:
    m_param: float
    extremal_length: float
    conformal_module: float
    method: ModulusMethod


@dataclass(frozen=True)
class BoundCheckReport:
    m_range: tuple[float, ...]
    ratio_min: float
    ratio_max: float


@dataclass(frozen=True)
class SlalomBounds:
    m_param: float
    rect_upper: float
    log_term: float


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    if a <= 0 or b <= 0:
        raise ValueError("agm requires positive arguments")
    while abs(a - b) > _AGM_RTOL * max(a, b):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_k(k: float) -> float:
    """Complete elliptic integral K(k) = pi / (2 agm(1, sqrt(1-k^2))), 0 <= k < 1."""
    if not (0 <= k < 1):
        raise ValueError("modulus k must lie in [0, 1)")
    return math.pi / (2 * agm(1.0, math.sqrt((1 - k) * (1 + k))))


def _sides_closed(m: float) -> tuple[float, float]:
    k = m / (m + 1)
    kp = math.sqrt(2 * m + 1) / (m + 1)
    return 2 * complete_k(k) / (m + 1), complete_k(kp) / (m + 1)


def _sides_quadrature(m: float) -> tuple[float, float]:
    # t = m sin(theta) on the vertical arc, t^2 = m^2 cos^2 + (m+1)^2 sin^2 on
    # the horizontal one; both integrands are smooth on [0, pi/2].
    va, va_err = quad(
        lambda th: 1 / math.sqrt((m + 1) ** 2 - (m * math.sin(th)) ** 2),
        0, math.pi / 2, epsabs=_QUAD_TOL, epsrel=_QUAD_TOL,
    )
    hb, hb_err = quad(
        lambda th: 1 / math.sqrt((m * math.cos(th)) ** 2 + ((m + 1) * math.sin(th)) ** 2),
        0, math.pi / 2, epsabs=_QUAD_TOL, epsrel=_QUAD_TOL,
    )
    if va_err > 1e-9 * va or hb_err > 1e-9 * hb:
        raise ArithmeticError(f"quadrature did not converge at M={m}")
    return 2 * va, hb


def rect_extremal_length(m_param: float, method: ModulusMethod = ModulusMethod.CLOSED_FORM) -> QuadModulus:
    """Extremal length a/b of the rectangle R^M; M = 0 degenerates to 0."""
    if m_param < 0:
        raise ValueError("M must be nonnegative")
    if m_param == 0:
        return QuadModulus(0.0, 0.0, math.inf, method)
    if method is ModulusMethod.CLOSED_FORM:
        a, b = _sides_closed(m_param)
    else:
        a, b = _sides_quadrature(m_param)
    lam = a / b
    return QuadModulus(m_param, lam, 1 / lam, method)


def verify_log_bounds(m_values: Sequence[float], method: ModulusMethod = ModulusMethod.CLOSED_FORM) -> BoundCheckReport:
    """Extrema of lambda(R^M) / log(1+M) over the sample set, M >= 1/2."""
    if not m_values:
        raise ValueError("empty sample list")
    if any(m < 0.5 for m in m_values):
        raise ValueError("log-bound check requires M >= 1/2")
    ratios = [rect_extremal_length(m, method).extremal_length / math.log1p(m) for m in m_values]
    return BoundCheckReport(tuple(m_values), min(ratios), max(ratios))


def elementary_slalom_bounds(k: int, l: int) -> SlalomBounds:
    """Bracket data for an elementary slalom curve between components k and l."""
    if abs(k - l) <= 1:
        raise ValueError("elementary slalom bounds need |k - l| >= 2")
    m = (abs(k - l) - 1) / 2
    return SlalomBounds(m, rect_extremal_length(m).extremal_length, math.log1p(m))
