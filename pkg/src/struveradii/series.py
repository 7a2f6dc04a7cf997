"""Log-space power series with overflow-safe scaled evaluation.

Coefficients such as c^n / (n! Gamma(q n + P)) span hundreds of orders of
magnitude, so a series stores (sign, ln|a_n|) pairs instead of plain
floats and every evaluation rescales terms by the running peak.
Summation stops once the current term falls below 1e-16 of the largest
partial sum seen, with at least MIN_TERMS terms always included; a hard
cap guards against a runaway loop (it cannot trigger for finite
arguments of the series used here, but is kept defensively).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError

MIN_TERMS = 8
MAX_TERMS = 10_000

_LOG_CUTOFF = math.log(1e-16)        # scalar rule: term vs peak partial sum
_LOG_CUTOFF_BLOCK = math.log(1e-18)  # block rule: term vs peak term
_NEG_INF = float("-inf")

# ---------------------------------------------------------------------------
# Double-double helpers (error-free transformations).
#
# Summing through exp(log) limits a term's relative accuracy to roughly
# |log| * eps, which the heavily cancelling evaluations near deep zeros
# amplify by the peak-to-value ratio. The zero refiner therefore re-sums
# the worst cases with ~32-digit double-double arithmetic built from the
# exact coefficient ratios; these are the primitives for that path.

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    return s, b - (s - a)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah = _SPLITTER * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLITTER * b
    bh = bh - (bh - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    s, e = _two_sum(xh, yh)
    e += xl + yl
    return _quick_two_sum(s, e)


def dd_mul_d(xh: float, xl: float, f: float) -> tuple[float, float]:
    p, e = _two_prod(xh, f)
    e += xl * f
    return _quick_two_sum(p, e)


def dd_div_d(xh: float, xl: float, f: float) -> tuple[float, float]:
    q1 = xh / f
    p, e = _two_prod(q1, f)
    q2 = (((xh - p) - e) + xl) / f
    return _quick_two_sum(q1, q2)


@dataclass(frozen=True)
class ScaledValue:
    """A number in the form mantissa * exp(log_scale).

    ``peak_log`` is ln of the largest partial-sum magnitude seen while
    summing; a residual near a zero of the series is only meaningful
    relative to exp(peak_log).
    """

    mantissa: float
    log_scale: float
    peak_log: float
    terms: int

    @property
    def sign(self) -> int:
        if self.mantissa > 0.0:
            return 1
        if self.mantissa < 0.0:
            return -1
        return 0

    @property
    def value(self) -> float:
        if self.mantissa == 0.0:
            return 0.0
        try:
            return self.mantissa * math.exp(self.log_scale)
        except OverflowError:
            return math.copysign(math.inf, self.mantissa)

    def over_peak(self) -> float:
        """Value divided by the peak partial-sum scale."""
        if self.mantissa == 0.0:
            return 0.0
        return self.mantissa * math.exp(self.log_scale - self.peak_log)


def scaled_ratio(num: ScaledValue, den: ScaledValue) -> float:
    """num / den as a float, saturating to +-inf instead of overflowing."""
    if den.mantissa == 0.0:
        if num.mantissa == 0.0:
            return math.nan
        return math.copysign(math.inf, num.mantissa)
    q = num.mantissa / den.mantissa
    if q == 0.0:
        return 0.0
    try:
        return q * math.exp(num.log_scale - den.log_scale)
    except OverflowError:
        return math.copysign(math.inf, q)


class LogSeries:
    """Power series sum_{n>=0} a_n u^n with lazily generated log coefficients.

    ``coeff_fn(n)`` must return ``(sign, ln|a_n|)`` with sign in {-1, 0, 1};
    zero coefficients use ``(0, -inf)``.
    """

    def __init__(self, coeff_fn: Callable[[int], tuple[int, float]], label: str = ""):
        self._fn = coeff_fn
        self._signs: list[int] = []
        self._logs: list[float] = []
        self.label = label

    def term(self, n: int) -> tuple[int, float]:
        while len(self._signs) <= n:
            s, lg = self._fn(len(self._signs))
            self._signs.append(s)
            self._logs.append(lg)
        return self._signs[n], self._logs[n]

    def eval_scaled(self, u: float) -> ScaledValue:
        """Sum the series at u >= 0 with peak rescaling."""
        u = float(u)
        if not (math.isfinite(u) and u >= 0.0):
            raise ValueError(f"series argument must be finite and >= 0, got {u!r}")
        if u == 0.0:
            s0, lg0 = self.term(0)
            return ScaledValue(float(s0), lg0, lg0, 1)

        lnu = math.log(u)
        mant = 0.0
        scale = _NEG_INF
        peak = _NEG_INF
        n = 0
        while True:
            sg, lg = self.term(n)
            done = False
            if sg != 0:
                term_log = lg + n * lnu
                if term_log > scale:
                    mant = mant * math.exp(scale - term_log) if mant != 0.0 else 0.0
                    scale = term_log
                    mant += sg
                else:
                    mant += sg * math.exp(term_log - scale)
                if mant != 0.0:
                    partial_log = scale + math.log(abs(mant))
                    if partial_log > peak:
                        peak = partial_log
                done = n + 1 >= MIN_TERMS and term_log < peak + _LOG_CUTOFF
            n += 1
            if done:
                break
            if n >= MAX_TERMS:
                raise ConvergenceError(
                    f"series {self.label or '<anonymous>'} needed more than "
                    f"{MAX_TERMS} terms at u={u!r}"
                )
        if peak == _NEG_INF:
            peak = scale
        return ScaledValue(mant, scale, peak, n)

    def eval_block(self, u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Vectorized evaluation at an array of positive arguments.

        Returns (mantissa, log_scale) per point. The truncation order is
        chosen from the largest argument with a stricter cutoff than the
        scalar path, so signs agree with eval_scaled away from roots.
        """
        u = np.asarray(u, dtype=float)
        if u.size == 0:
            return np.empty(0), np.empty(0)
        if np.any(u <= 0.0) or not np.all(np.isfinite(u)):
            raise ValueError("block arguments must be finite and > 0")
        lnu = np.log(u)
        nterms = self._block_terms(float(lnu.max()))
        signs = np.asarray(self._signs[:nterms], dtype=float)
        logs = np.asarray(self._logs[:nterms], dtype=float)
        order = np.arange(nterms, dtype=float)
        with np.errstate(invalid="ignore"):
            term_logs = logs[:, None] + order[:, None] * lnu[None, :]
        term_logs[np.isnan(term_logs)] = _NEG_INF  # 0 coefficient times log
        scale = term_logs.max(axis=0)
        mant = (signs[:, None] * np.exp(term_logs - scale[None, :])).sum(axis=0)
        return mant, scale

    def _block_terms(self, lnu_max: float) -> int:
        best = _NEG_INF
        n = 0
        while True:
            sg, lg = self.term(n)
            if sg != 0:
                term_log = lg + n * lnu_max
                if term_log > best:
                    best = term_log
                if n + 1 >= MIN_TERMS and term_log < best + _LOG_CUTOFF_BLOCK:
                    return n + 1
            n += 1
            if n >= MAX_TERMS:
                raise ConvergenceError(
                    f"series {self.label or '<anonymous>'} needed more than "
                    f"{MAX_TERMS} terms at ln(u)={lnu_max!r}"
                )
