"""Radii of starlikeness and convexity of order alpha.

Each radius is the smallest positive root of a transcendental equation.
On the search interval the underlying quotient (r v'(r)/v(r) for
starlikeness, 1 + r v''(r)/v'(r) for convexity, v in {f, g, h}) decreases
strictly from 1 at r = 0+ to -inf at the interval's right end, so the
root is unique and plain bisection on (quotient - alpha) is exact.
Solving the quotient form rather than the cleared-denominator form avoids
spurious roots at zeros of W or W'.

Search intervals, bounded by first zeros from the zeros module:

    starlike f, g   (0, x1)     x1 = first zero of W
    starlike h      (0, x1^2)
    convex f        (0, x1')    x1' = first zero of W'
    convex g        (0, first zero of g')
    convex h        (0, first zero of h')
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import BracketError, NumericalError
from .struve import NormalizationKind, StruveParams, carrier
from .series import scaled_ratio
from .zeros import AuxiliaryFamily, first_zero

__all__ = [
    "RadiusKind",
    "RadiusQuery",
    "RadiusResult",
    "radius_starlike",
    "radius_convex",
]

_BRACKET_LO = 1e-8   # times the upper limit
_BRACKET_HI = 1.0 - 1e-10
_WIDTH = 1e-13       # relative bisection width


class RadiusKind(Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"


@dataclass(frozen=True)
class RadiusQuery:
    params: StruveParams
    kind: RadiusKind
    normalization: NormalizationKind
    alpha: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", RadiusKind(self.kind))
        object.__setattr__(self, "normalization", NormalizationKind(self.normalization))
        a = float(self.alpha)
        if not (math.isfinite(a) and 0.0 <= a < 1.0):
            raise ValueError(f"alpha must lie in [0, 1), got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class RadiusResult:
    """A computed radius with its final bracket and solver diagnostics.

    ``residual`` is the quotient-minus-alpha value at ``value``;
    ``upper_limit`` is the first-zero bound of the search interval.
    """

    value: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    upper_limit: float


def _quotient(params: StruveParams, kind: RadiusKind,
              norm: NormalizationKind) -> Callable[[float], float]:
    p = params.p
    if kind is RadiusKind.STARLIKE:
        s0 = carrier(params, "w0")
        s1 = carrier(params, "w1")
        if norm is NormalizationKind.F:
            return lambda r: scaled_ratio(s1.eval_scaled(r * r), s0.eval_scaled(r * r)) / (p + 1.0)
        if norm is NormalizationKind.G:
            return lambda r: scaled_ratio(s1.eval_scaled(r * r), s0.eval_scaled(r * r)) - p
        return lambda r: 1.0 - (p + 1.0) / 2.0 + 0.5 * scaled_ratio(
            s1.eval_scaled(r), s0.eval_scaled(r))
    if norm is NormalizationKind.F:
        s0 = carrier(params, "w0")
        s1 = carrier(params, "w1")
        s2 = carrier(params, "w2")
        coef = 1.0 / (p + 1.0) - 1.0

        def conv_f(r: float) -> float:
            u = r * r
            v0 = s0.eval_scaled(u)
            v1 = s1.eval_scaled(u)
            return 1.0 + coef * scaled_ratio(v1, v0) + scaled_ratio(s2.eval_scaled(u), v1)

        return conv_f
    if norm is NormalizationKind.G:
        g1 = carrier(params, "g1")
        g2 = carrier(params, "g2")
        return lambda r: 1.0 + scaled_ratio(g2.eval_scaled(r * r), g1.eval_scaled(r * r))
    h1 = carrier(params, "h1")
    h2 = carrier(params, "h2")
    return lambda r: 1.0 + scaled_ratio(h2.eval_scaled(r), h1.eval_scaled(r))


def _upper_limit(params: StruveParams, kind: RadiusKind,
                 norm: NormalizationKind) -> float:
    if kind is RadiusKind.STARLIKE:
        w1 = first_zero(params, AuxiliaryFamily.W)
        return w1 * w1 if norm is NormalizationKind.H else w1
    if norm is NormalizationKind.F:
        return first_zero(params, AuxiliaryFamily.W_PRIME)
    if norm is NormalizationKind.G:
        return 2.0 * math.sqrt(first_zero(params, AuxiliaryFamily.G_PRIME_SUBST))
    return 4.0 * first_zero(params, AuxiliaryFamily.H_PRIME_SUBST)


def _solve(fn: Callable[[float], float], alpha: float, upper: float) -> RadiusResult:
    lo = _BRACKET_LO * upper
    hi = _BRACKET_HI * upper
    f_lo = fn(lo) - alpha
    if not f_lo > 0.0:
        # alpha close enough to 1 that the root sits below the standard
        # left endpoint; the quotient equals 1 exactly at r = 0.
        lo, f_lo = 0.0, 1.0 - alpha
    f_hi = fn(hi) - alpha
    if math.isnan(f_hi) or not f_hi < 0.0:
        raise BracketError(
            f"no sign change on ({lo:.6g}, {hi:.6g}); quotient ends at {f_hi!r}"
        )
    iterations = 0
    while hi - lo > _WIDTH * (1.0 + hi):
        mid = 0.5 * (lo + hi)
        fm = fn(mid) - alpha
        iterations += 1
        if math.isnan(fm):
            raise NumericalError(f"quotient evaluated to NaN at r={mid!r}")
        if fm > 0.0:
            lo = mid
        elif fm < 0.0:
            hi = mid
        else:
            lo = hi = mid
            break
    value = 0.5 * (lo + hi)
    return RadiusResult(
        value=value,
        bracket=(lo, hi),
        residual=fn(value) - alpha,
        iterations=iterations,
        upper_limit=upper,
    )


def radius_starlike(query: RadiusQuery) -> RadiusResult:
    """Radius of starlikeness of order alpha for the chosen normalization."""
    if query.kind is not RadiusKind.STARLIKE:
        raise ValueError(f"query kind must be STARLIKE, got {query.kind}")
    fn = _quotient(query.params, query.kind, query.normalization)
    upper = _upper_limit(query.params, query.kind, query.normalization)
    return _solve(fn, query.alpha, upper)


def radius_convex(query: RadiusQuery) -> RadiusResult:
    """Radius of convexity of order alpha for the chosen normalization."""
    if query.kind is not RadiusKind.CONVEX:
        raise ValueError(f"query kind must be CONVEX, got {query.kind}")
    fn = _quotient(query.params, query.kind, query.normalization)
    upper = _upper_limit(query.params, query.kind, query.normalization)
    return _solve(fn, query.alpha, upper)
