"""A generalized Struve-type function family and its normalized forms.

The base object is the entire function

    W(x) = sum_{n>=0} (-1)^n c^n / (n! Gamma(q n + P)) * (x/2)^(2n+p+1),
    P = p/delta + (b+2)/2,

defined for q integer >= 1 and delta, b, c > 0, p + 1 > 0. Three
rescalings of W are normalized so that v(0) = 0, v'(0) = 1:

    f(x) = (2^(p+1) Gamma(P) W(x))^(1/(p+1))
    g(x) = 2^(p+1) Gamma(P) x^(-p) W(x)
    h(x) = 2^(p+1) Gamma(P) x^(1-(p+1)/2) W(sqrt(x))

Everything reduces to weighted variants of the core series

    S(u) = sum_n beta_n u^n,
    beta_n = (-1)^n c^n Gamma(P) / (4^n n! Gamma(q n + P)),

for which  2^(p+1) Gamma(P) W(x) = x^(p+1) S(x^2),  g(x) = x S(x^2) and
h(x) = x S(x).  The carriers keep log-space coefficients, so no
admissible parameter choice can overflow an evaluation.

Only the positive real axis is supported: every radius computed
downstream is the smallest positive root of a real equation. For
non-integer p the power x^(p+1) means exp((p+1) ln x), x > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import BranchError, ConvergenceError, PoleError
from .gammafn import log_gamma
from .series import (
    MAX_TERMS,
    MIN_TERMS,
    LogSeries,
    ScaledValue,
    dd_add,
    dd_div_d,
    dd_mul_d,
    scaled_ratio,
)

__all__ = [
    "StruveParams",
    "NormalizationKind",
    "SeriesTerm",
    "coefficient",
    "eval_w",
    "eval_normalized",
    "log_derivative",
]

_LN2 = math.log(2.0)
_LN4 = math.log(4.0)
_NEG_INF = float("-inf")
_LN_POLE_GUARD = math.log(1e-300)


@dataclass(frozen=True)
class StruveParams:
    """Parameter tuple (q, p, b, c, delta) of the series W."""

    q: int
    p: float
    b: float
    c: float
    delta: float

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or isinstance(self.q, bool) or self.q < 1:
            raise ValueError(f"q must be an integer >= 1, got {self.q!r}")
        for name in ("p", "b", "c", "delta"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(float(v)):
                raise ValueError(f"{name} must be a finite real, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.delta <= 0.0:
            raise ValueError(f"delta must be > 0, got {self.delta}")
        if self.b <= 0.0:
            raise ValueError(f"b must be > 0, got {self.b}")
        if self.c <= 0.0:
            raise ValueError(f"c must be > 0, got {self.c}")
        if self.p + 1.0 <= 0.0:
            raise ValueError(f"p + 1 must be > 0, got p={self.p}")
        if self.gamma_shift <= 0.0:
            raise ValueError(
                f"p/delta + (b+2)/2 must be > 0, got {self.gamma_shift}"
            )

    @property
    def gamma_shift(self) -> float:
        """The gamma argument offset P = p/delta + (b+2)/2."""
        return self.p / self.delta + (self.b + 2.0) / 2.0


class NormalizationKind(Enum):
    """Which normalized form of W to evaluate."""

    F = "f"
    G = "g"
    H = "h"


@dataclass(frozen=True)
class SeriesTerm:
    """One coefficient a_n = (-1)^n c^n / (n! Gamma(qn+P)) in log form."""

    index: int
    log_magnitude: float
    sign: int


def coefficient(params: StruveParams, n: int) -> SeriesTerm:
    """Coefficient of (x/2)^(2n+p+1) in the defining series of W."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"term index must be a non-negative integer, got {n!r}")
    lg = (
        n * math.log(params.c)
        - log_gamma(n + 1.0)
        - log_gamma(params.q * n + params.gamma_shift)
    )
    return SeriesTerm(index=n, log_magnitude=lg, sign=-1 if n % 2 else 1)


def _lw(value: float) -> tuple[int, float]:
    """(sign, ln|value|) of a plain multiplier, with (0, -inf) for zero."""
    if value == 0.0:
        return 0, _NEG_INF
    if value > 0.0:
        return 1, math.log(value)
    return -1, math.log(-value)


def _shift4(sl: tuple[int, float], n: int) -> tuple[int, float]:
    s, lg = sl
    return s, lg + n * _LN4


# Weight tables for the series carriers.  Each entry maps (p, n) to the
# (sign, log) multiplier applied on top of beta_n:
#   w0            S(u):                     W-carrier, u = x^2
#   w1            sum beta_n (2n+p+1) u^n:  W'-carrier
#   w2            sum beta_n (2n+p+1)(2n+p) u^n: W''-carrier
#   g1 / g2       g'(x) = G1(x^2), g''(x) = G2(x^2)/x
#   h1 / h2       h'(x) = H1(x),   h''(x) = H2(x)/x
#   gp_subst      g'(2 sqrt(u))  as a series in u
#   hp_subst      h'(4 u)        as a series in u
#   alexg_subst   (x g'(x))' at x = 2 sqrt(u)
#   alexh         (x h'(x))' at x = u
_WEIGHTS = {
    "w0": lambda p, n: (1, 0.0),
    "w1": lambda p, n: _lw(2.0 * n + p + 1.0),
    "w2": lambda p, n: _lw((2.0 * n + p + 1.0) * (2.0 * n + p)),
    "g1": lambda p, n: _lw(2.0 * n + 1.0),
    "g2": lambda p, n: _lw((2.0 * n + 1.0) * 2.0 * n),
    "h1": lambda p, n: _lw(n + 1.0),
    "h2": lambda p, n: _lw((n + 1.0) * n),
    "gp_subst": lambda p, n: _shift4(_lw(2.0 * n + 1.0), n),
    "hp_subst": lambda p, n: _shift4(_lw(n + 1.0), n),
    "alexg_subst": lambda p, n: _shift4(_lw((2.0 * n + 1.0) ** 2), n),
    "alexh": lambda p, n: _lw((n + 1.0) ** 2),
}


@lru_cache(maxsize=None)
def carrier(params: StruveParams, key: str) -> LogSeries:
    """The log-space series sum_n beta_n * weight(n) * u^n for a weight key."""
    weight = _WEIGHTS[key]
    p = params.p
    q = params.q
    shift = params.gamma_shift
    ln_c4 = math.log(params.c) - _LN4
    lg_shift = log_gamma(shift)

    def coeff(n: int) -> tuple[int, float]:
        ws, wl = weight(p, n)
        if ws == 0:
            return 0, _NEG_INF
        sign = -ws if n % 2 else ws
        lg = (
            n * ln_c4
            + lg_shift
            - log_gamma(n + 1.0)
            - log_gamma(q * n + shift)
            + wl
        )
        return sign, lg

    return LogSeries(coeff, label=f"{key}[q={q},p={p},b={params.b},c={params.c},delta={params.delta}]")


# Consecutive-coefficient ratios of the carriers whose coefficients never
# vanish: a_{n+1} = a_n * (-c) * prod(nums) / (4 (n+1) prod_j (qn+P+j) prod(dens)).
# These feed the compensated evaluation, where each factor is an exact float
# and the double-double recurrence keeps ~32 digits per term.
_RATIO_EXTRA = {
    "w0": lambda p, n: ((), ()),
    "w1": lambda p, n: ((2.0 * n + p + 3.0,), (2.0 * n + p + 1.0,)),
    "gp_subst": lambda p, n: ((4.0, 2.0 * n + 3.0), (2.0 * n + 1.0,)),
    "hp_subst": lambda p, n: ((4.0, n + 2.0), (n + 1.0,)),
    "alexg_subst": lambda p, n: ((4.0, (2.0 * n + 3.0) ** 2), ((2.0 * n + 1.0) ** 2,)),
    "alexh": lambda p, n: (((n + 2.0) ** 2,), ((n + 1.0) ** 2,)),
}


def compensated_carrier_value(params: StruveParams, key: str,
                              u: float) -> tuple[float, float, float]:
    """Double-double sum of a carrier series at u > 0.

    Returns (hi, lo, peak) with value = hi + lo and peak the largest
    partial-sum magnitude. Only carriers with nowhere-vanishing
    coefficients are supported (the ones the zero finder scans).
    """
    extra = _RATIO_EXTRA[key]
    p, q, c = params.p, params.q, params.c
    shift = params.gamma_shift
    u = float(u)
    if not (math.isfinite(u) and u > 0.0):
        raise ValueError(f"series argument must be finite and > 0, got {u!r}")

    th, tl = (p + 1.0, 0.0) if key == "w1" else (1.0, 0.0)
    sh, sl = th, tl
    peak = abs(sh)
    n = 0
    while True:
        th, tl = dd_mul_d(th, tl, -c)
        nums, dens = extra(p, n)
        for f in nums:
            th, tl = dd_mul_d(th, tl, f)
        th, tl = dd_div_d(th, tl, 4.0 * (n + 1.0))
        for j in range(q):
            th, tl = dd_div_d(th, tl, q * n + shift + j)
        for f in dens:
            th, tl = dd_div_d(th, tl, f)
        th, tl = dd_mul_d(th, tl, u)
        if not math.isfinite(th):
            raise ConvergenceError(
                f"compensated evaluation of {key} overflowed at u={u!r}"
            )
        sh, sl = dd_add(sh, sl, th, tl)
        mag = abs(sh)
        if mag > peak:
            peak = mag
        n += 1
        if n >= MIN_TERMS and abs(th) < 1e-34 * peak:
            return sh, sl, peak
        if n >= MAX_TERMS:
            raise ConvergenceError(
                f"compensated evaluation of {key} needed more than "
                f"{MAX_TERMS} terms at u={u!r}"
            )


def _apply_log_prefactor(sv: ScaledValue, ln_pref: float) -> float:
    if sv.mantissa == 0.0:
        return 0.0
    try:
        return sv.mantissa * math.exp(sv.log_scale + ln_pref)
    except OverflowError:
        return math.copysign(math.inf, sv.mantissa)


def _check_abscissa(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"abscissa must be finite and > 0, got {x!r}")
    return x


def eval_w(params: StruveParams, x: float, deriv: int = 0) -> float:
    """Evaluate W, W' or W'' at x > 0 from the term-wise differentiated series."""
    if deriv not in (0, 1, 2):
        raise ValueError(f"deriv must be 0, 1 or 2, got {deriv!r}")
    x = _check_abscissa(x)
    key = ("w0", "w1", "w2")[deriv]
    sv = carrier(params, key).eval_scaled(x * x)
    ln_pref = (
        (params.p + 1.0 - deriv) * math.log(x)
        - (params.p + 1.0) * _LN2
        - log_gamma(params.gamma_shift)
    )
    return _apply_log_prefactor(sv, ln_pref)


def eval_normalized(params: StruveParams, kind: NormalizationKind, x: float) -> float:
    """Evaluate one of the normalized forms f, g, h at x > 0."""
    x = _check_abscissa(x)
    kind = NormalizationKind(kind)
    core = carrier(params, "w0")
    if kind is NormalizationKind.G:
        return _apply_log_prefactor(core.eval_scaled(x * x), math.log(x))
    if kind is NormalizationKind.H:
        return _apply_log_prefactor(core.eval_scaled(x), math.log(x))
    sv = core.eval_scaled(x * x)
    if sv.mantissa <= 0.0:
        raise BranchError(
            f"the (p+1)-th root needs 2^(p+1) Gamma(P) W(x) > 0, "
            f"violated at x={x} for {params}"
        )
    ln_core = sv.log_scale + math.log(sv.mantissa)
    try:
        return x * math.exp(ln_core / (params.p + 1.0))
    except OverflowError:
        return math.inf


def log_derivative(params: StruveParams, x: float) -> float:
    """x W'(x) / W(x) for x > 0 away from the zeros of W.

    Tends to p+1 as x -> 0+ and decreases to -inf at the first zero of W.
    """
    x = _check_abscissa(x)
    u = x * x
    s0 = carrier(params, "w0").eval_scaled(u)
    ln_pref = (
        (params.p + 1.0) * math.log(x)
        - (params.p + 1.0) * _LN2
        - log_gamma(params.gamma_shift)
    )
    if (
        s0.mantissa == 0.0
        or s0.log_scale + math.log(abs(s0.mantissa)) + ln_pref < _LN_POLE_GUARD
    ):
        raise PoleError(f"W({x}) is within the pole guard for {params}")
    s1 = carrier(params, "w1").eval_scaled(u)
    return scaled_ratio(s1, s0)
