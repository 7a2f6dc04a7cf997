"""Ordered positive zeros of W, W' and the derived auxiliary functions.

All functions handled here have only real zeros under the parameter
constraints, so a sign scan along the positive axis followed by bisection
finds every zero. The scan starts with step 0.1, doubles the step after
each zero beyond the fourth (zeros of these families spread out, never
bunch up), and, when a reference sequence is supplied, falls back to a
half-step rescan if the expected interlacing pattern is violated; a
violation can only mean a missed sign change, not mathematics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, NumericalError, ScanOverflowError
from .series import LogSeries
from .struve import StruveParams, carrier, compensated_carrier_value

__all__ = [
    "AuxiliaryFamily",
    "ZeroSequence",
    "InterlacingReport",
    "find_zeros",
    "check_interlacing",
    "first_zero",
    "family_series",
    "certified_sign",
]

MAX_COUNT = 64
MAX_ABSCISSA = 1.0e6
INITIAL_STEP = 0.1
_MAX_RESCANS = 8
_BLOCK = 1024


class AuxiliaryFamily(Enum):
    """Which auxiliary entire function to locate zeros of.

    W and W_PRIME report zeros in the natural abscissa x. The remaining
    families live in a substituted variable u: G_PRIME_SUBST is
    g'(2 sqrt(u)), H_PRIME_SUBST is h'(4u), ALEX_G_SUBST is (x g'(x))'
    at x = 2 sqrt(u), and ALEX_H is (x h'(x))' at x = u.
    """

    W = "w"
    W_PRIME = "w-prime"
    G_PRIME_SUBST = "g-prime-subst"
    H_PRIME_SUBST = "h-prime-subst"
    ALEX_G_SUBST = "alex-g-subst"
    ALEX_H = "alex-h"


_CARRIER_KEY = {
    AuxiliaryFamily.W: "w0",
    AuxiliaryFamily.W_PRIME: "w1",
    AuxiliaryFamily.G_PRIME_SUBST: "gp_subst",
    AuxiliaryFamily.H_PRIME_SUBST: "hp_subst",
    AuxiliaryFamily.ALEX_G_SUBST: "alexg_subst",
    AuxiliaryFamily.ALEX_H: "alexh",
}

# Families whose zeros are reported in x while the series argument is x^2.
_SQUARED = frozenset({AuxiliaryFamily.W, AuxiliaryFamily.W_PRIME})


@dataclass(frozen=True)
class ZeroSequence:
    """Strictly increasing positive zeros with bisection diagnostics.

    ``residuals`` holds the function value at each zero divided by the
    peak partial-sum magnitude of its series evaluation, i.e. how close
    to zero the evaluation can certify. ``brackets`` are the sign-change
    intervals the bisection finished with.
    """

    family: AuxiliaryFamily
    params: StruveParams
    zeros: tuple[float, ...]
    residuals: tuple[float, ...]
    brackets: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        zs = self.zeros
        if any(z <= 0.0 for z in zs) or any(a >= b for a, b in zip(zs, zs[1:])):
            raise NumericalError(
                f"zero sequence for {self.family} is not strictly increasing: {zs}"
            )


@dataclass(frozen=True)
class InterlacingReport:
    ok: bool
    first_violation: int | None  # 1-based index of the first failing pair


def family_series(params: StruveParams, family: AuxiliaryFamily) -> LogSeries:
    """The log-space series whose positive roots are the family's zeros.

    For W and W_PRIME the zeros quoted by find_zeros are the square roots
    of this series' roots in u.
    """
    return carrier(params, _CARRIER_KEY[AuxiliaryFamily(family)])


def _series_arg(family: AuxiliaryFamily, t: float) -> float:
    return t * t if family in _SQUARED else t


# Relative accuracy of the log-space evaluation against its peak partial
# sum: term logs are O(100), so a few hundred ulp. Used to decide when
# bisection must switch to the compensated path.
_EVAL_NOISE = 1e-13
_DD_NOISE = 1e-30
_DD_PEAK_LIMIT = 600.0  # ln of the largest peak the compensated path accepts


def certified_sign(params: StruveParams, family: AuxiliaryFamily, t: float) -> int:
    """Sign of the family's function at t from the compensated summation.

    Returns 0 when the value cannot be distinguished from zero even at
    double-double precision.
    """
    family = AuxiliaryFamily(family)
    hi, lo, peak = compensated_carrier_value(
        params, _CARRIER_KEY[family], _series_arg(family, float(t)))
    v = hi if hi != 0.0 else lo
    if abs(hi) + abs(lo) <= _DD_NOISE * peak:
        return 0
    return 1 if v > 0.0 else -1


def _dd_refine(params: StruveParams, family: AuxiliaryFamily, root: float,
               half_width: float, width: float) -> tuple[float, tuple[float, float], float] | None:
    """Re-bracket around ``root`` and bisect with compensated sums."""
    key = _CARRIER_KEY[family]

    def sign_at(t: float) -> int:
        hi, lo, peak = compensated_carrier_value(params, key, _series_arg(family, t))
        v = hi if hi != 0.0 else lo
        if abs(hi) + abs(lo) <= _DD_NOISE * peak:
            return 0
        return 1 if v > 0.0 else -1

    # A handful of expansions suffice: the double-precision root is within
    # the uncertainty band of the true one. The cap keeps the bracket far
    # narrower than any zero spacing, so it cannot capture a neighbour.
    for _ in range(6):
        lo = max(root - half_width, 0.25 * root)
        hi = root + half_width
        s_lo = sign_at(lo)
        s_hi = sign_at(hi)
        if s_lo != 0 and s_hi != 0 and s_lo != s_hi:
            break
        half_width *= 4.0
    else:
        return None
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        s = sign_at(mid)
        if s == 0:
            lo = hi = mid
            break
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    refined = 0.5 * (lo + hi)
    vh, vl, peak = compensated_carrier_value(params, key, _series_arg(family, refined))
    residual = (vh + vl) / peak
    return refined, (lo, hi), residual


def _bisect(series: LogSeries, family: AuxiliaryFamily, lo: float, hi: float,
            sign_lo: int, params: StruveParams) -> tuple[float, tuple[float, float], float]:
    while hi - lo > 1e-12 * (1.0 + hi):
        mid = 0.5 * (lo + hi)
        s = series.eval_scaled(_series_arg(family, mid)).sign
        if s == 0:
            lo = hi = mid
            break
        if s == sign_lo:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    sv = series.eval_scaled(_series_arg(family, root))
    width = 1e-12 * (1.0 + root)

    # Estimate how far evaluation noise can move the crossing. When the
    # uncertainty band is wider than the bisection width (deep zeros of
    # the oscillating q = 1 families), redo the tail of the bisection
    # with compensated summation.
    delta = max(1e-7 * (1.0 + root), 32.0 * width)
    s_plus = series.eval_scaled(_series_arg(family, root + delta))
    s_minus = series.eval_scaled(_series_arg(family, max(root - delta, 0.5 * root)))
    ref = sv.peak_log
    v_plus = s_plus.mantissa * math.exp(s_plus.log_scale - ref)
    v_minus = s_minus.mantissa * math.exp(s_minus.log_scale - ref)
    slope = abs(v_plus - v_minus) / (2.0 * delta)
    uncertainty = _EVAL_NOISE / slope if slope > 0.0 else math.inf

    if uncertainty > 0.5 * width and sv.peak_log <= _DD_PEAK_LIMIT:
        half = max(4.0 * uncertainty, 8.0 * width)
        try:
            refined = _dd_refine(params, family, root, half, width)
        except ConvergenceError:
            refined = None
        if refined is not None:
            return refined
    return root, (lo, hi), sv.over_peak()


def _scan(series: LogSeries, family: AuxiliaryFamily, count: int,
          step0: float, params: StruveParams,
          ) -> tuple[list[float], list[tuple[float, float]], list[float]]:
    zeros: list[float] = []
    brackets: list[tuple[float, float]] = []
    residuals: list[float] = []
    t_lo = 0.0
    sign_lo = series.term(0)[0]
    if sign_lo == 0:
        raise NumericalError("scan requires a nonzero leading coefficient")
    step = step0
    while len(zeros) < count:
        if t_lo > MAX_ABSCISSA:
            raise ScanOverflowError(
                f"found only {len(zeros)} of {count} zeros below "
                f"abscissa {MAX_ABSCISSA:g} for {series.label}"
            )
        ts = t_lo + step * np.arange(1, _BLOCK + 1)
        mant, _ = series.eval_block(_series_arg(family, ts))
        prev_t, prev_s = t_lo, sign_lo
        advanced = False
        for i in range(_BLOCK):
            s = 1 if mant[i] > 0.0 else (-1 if mant[i] < 0.0 else -prev_s)
            if s != prev_s:
                root, bracket, res = _bisect(
                    series, family, prev_t, float(ts[i]), prev_s, params)
                zeros.append(root)
                brackets.append(bracket)
                residuals.append(res)
                if len(zeros) >= count:
                    return zeros, brackets, residuals
                if len(zeros) >= 5:
                    # Zeros only spread out; never let the doubled step
                    # outgrow half of the last observed gap.
                    gap = zeros[-1] - zeros[-2]
                    step = max(step0, min(step * 2.0, 0.5 * gap))
                t_lo, sign_lo = bracket[1], -prev_s
                advanced = True
                break
            prev_t, prev_s = float(ts[i]), s
        if not advanced:
            t_lo, sign_lo = float(ts[-1]), prev_s
    return zeros, brackets, residuals


def _alternates(found: list[float], reference: tuple[float, ...]) -> bool:
    """True when the two sequences strictly alternate along the axis."""
    if not found or not reference:
        return True
    if found[0] < reference[0]:
        first, second = found, list(reference)
    else:
        first, second = list(reference), found
    n = min(len(first), len(second))
    for i in range(n):
        if not first[i] < second[i]:
            return False
        if i + 1 < len(first) and not second[i] < first[i + 1]:
            return False
    return True


@lru_cache(maxsize=4096)
def _find_zeros_cached(params: StruveParams, family: AuxiliaryFamily, count: int,
                       reference: tuple[float, ...] | None) -> ZeroSequence:
    series = family_series(params, family)
    for attempt in range(_MAX_RESCANS):
        step = INITIAL_STEP / (2.0 ** attempt)
        zeros, brackets, residuals = _scan(series, family, count, step, params)
        if reference is None or _alternates(zeros, reference):
            return ZeroSequence(
                family=family,
                params=params,
                zeros=tuple(zeros),
                residuals=tuple(residuals),
                brackets=tuple(brackets),
            )
    raise NumericalError(
        f"zeros of {family} for {params} kept violating the reference "
        f"interlacing pattern after {_MAX_RESCANS} half-step rescans"
    )


def find_zeros(params: StruveParams, family: AuxiliaryFamily, count: int,
               reference: "ZeroSequence | tuple[float, ...] | None" = None) -> ZeroSequence:
    """Locate the first ``count`` positive zeros of the family's function.

    Each zero is bracketed by a sign change and bisected to interval width
    1e-12 * (1 + zero). ``reference`` optionally supplies a sequence whose
    zeros must interlace the requested ones (e.g. pass the W zeros when
    scanning W'); an interlacing violation triggers half-step rescans.
    """
    family = AuxiliaryFamily(family)
    if not isinstance(count, int) or count < 1 or count > MAX_COUNT:
        raise ValueError(f"count must be an integer in [1, {MAX_COUNT}], got {count!r}")
    ref: tuple[float, ...] | None
    if reference is None:
        ref = None
    elif isinstance(reference, ZeroSequence):
        ref = reference.zeros
    else:
        ref = tuple(float(z) for z in reference)
    return _find_zeros_cached(params, family, count, ref)


@lru_cache(maxsize=4096)
def first_zero(params: StruveParams, family: AuxiliaryFamily) -> float:
    """The smallest positive zero; used as a search limit by the solvers."""
    return find_zeros(params, family, 1).zeros[0]


def check_interlacing(a: ZeroSequence, b: ZeroSequence) -> InterlacingReport:
    """Check a_1 < b_1 < a_2 < b_2 < ... strictly for equally long sequences.

    ``a`` should hold the derivative-side zeros (e.g. W') and ``b`` the
    base-function zeros (e.g. W) of the same parameter set.
    """
    if len(a.zeros) != len(b.zeros):
        raise ValueError(
            f"zero sequences differ in length: {len(a.zeros)} vs {len(b.zeros)}"
        )
    if a.params != b.params:
        raise ValueError("zero sequences belong to different parameter sets")
    n = len(a.zeros)
    for i in range(n):
        if not a.zeros[i] < b.zeros[i]:
            return InterlacingReport(False, i + 1)
        if i + 1 < n and not b.zeros[i] < a.zeros[i + 1]:
            return InterlacingReport(False, i + 2)
    return InterlacingReport(True, None)
