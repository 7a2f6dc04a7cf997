"""Real-argument log-gamma helpers shared by every coefficient formula.

All gamma arguments in this package have the form q*n + P with P > 0, so
only strictly positive finite arguments are supported.
"""

from __future__ import annotations

import math

__all__ = ["log_gamma", "gamma_ratio"]


def log_gamma(x: float) -> float:
    """Return ln Gamma(x) for finite x > 0.

    Backed by the platform lgamma, whose relative error is a few ulp and
    therefore far inside the 1e-13 budget the series coefficients need.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"log_gamma requires finite x > 0, got {x!r}")
    return math.lgamma(x)


def gamma_ratio(a: float, b: float) -> float:
    """Return Gamma(a) / Gamma(b), computed as exp(log_gamma(a) - log_gamma(b))."""
    d = log_gamma(a) - log_gamma(b)
    try:
        return math.exp(d)
    except OverflowError as exc:
        raise OverflowError(
            f"gamma_ratio({a!r}, {b!r}) exceeds the representable range"
        ) from exc
