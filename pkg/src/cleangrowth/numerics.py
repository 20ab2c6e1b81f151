"""Scalar log-domain helpers.

Productivities grow geometrically for hundreds of periods and the AI
multipliers are exponential in t, so every ratio formula in the model is
evaluated in log space.  These are the few primitives everything else
builds on; math-module scalars keep the pipeline deterministic.
"""

from __future__ import annotations

import math

NEG_INF = float("-inf")


def log1pexp(x: float) -> float:
    """log(1 + e^x), stable for large |x|."""
    if x > 0.0:
        return x + math.log1p(math.exp(-x))
    return math.log1p(math.exp(x))


def logaddexp(a: float, b: float) -> float:
    """log(e^a + e^b), stable; tolerates -inf arguments."""
    if a == NEG_INF:
        return b
    if b == NEG_INF:
        return a
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + math.log1p(math.exp(lo - hi))


def log_one_plus_scaled_exp(coef: float, log_scale: float) -> float:
    """log(1 + coef * e^log_scale) for coef >= 0."""
    if coef == 0.0:
        return 0.0
    return log1pexp(math.log(coef) + log_scale)


def safe_exp(x: float) -> float:
    """e^x, returning inf/0.0 instead of raising on overflow/underflow."""
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")
