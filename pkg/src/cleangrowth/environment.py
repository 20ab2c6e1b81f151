"""Environmental quality, its CO2/temperature mapping, and disaster detection.

Quality S lives in [0, S_bar] and is measured in ppm of atmospheric CO2
headroom: S = CO2_disaster - CO2.  Dirty production degrades it, the
environment regenerates proportionally, and S = 0 (a 6 degree warming,
1120 ppm by default) is an environmental disaster.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import require_finite


@dataclass(frozen=True)
class EnvParams:
    """Environmental constants.

    s_bar         - pristine quality, ppm (co2_disaster - co2_pre)
    xi            - ppm of degradation per unit of dirty input per period
    delta         - regeneration rate per period
    co2_pre       - pre-industrial CO2 concentration, ppm
    co2_disaster  - concentration at which the disaster threshold is crossed
    s_0           - initial quality, ppm
    """

    s_bar: float
    xi: float
    delta: float
    co2_pre: float = 280.0
    co2_disaster: float = 1120.0
    s_0: float = 741.0

    def __post_init__(self) -> None:
        require_finite("environment parameter", self.s_bar, self.xi, self.delta,
                       self.co2_pre, self.co2_disaster, self.s_0)
        if not 0.0 < self.co2_pre < self.co2_disaster:
            raise ValueError("need 0 < co2_pre < co2_disaster")
        if abs(self.s_bar - (self.co2_disaster - self.co2_pre)) > 1e-9:
            raise ValueError("s_bar must equal co2_disaster - co2_pre")
        if not 0.0 <= self.s_0 <= self.s_bar:
            raise ValueError(f"s_0 must lie in [0, s_bar], got {self.s_0}")
        if self.xi < 0.0 or self.delta < 0.0:
            raise ValueError("xi and delta must be non-negative")

    @property
    def delta_cap(self) -> float:
        """Largest representable temperature increase, at S = 0."""
        return 3.0 * math.log2(self.co2_disaster / self.co2_pre)


def env_step(s: float, y_d: float, env: EnvParams) -> float:
    """One period of environmental dynamics, clamped to [0, s_bar].

    S' = -xi * Y_d + (1 + delta) * S; a negative right-hand side is an
    absorbing 0 while emissions persist, and regeneration cannot push
    quality above pristine.
    """
    if math.isnan(s) or math.isnan(y_d):
        raise ValueError("environment step inputs must not be NaN")
    raw = -env.xi * y_d + (1.0 + env.delta) * s
    return min(max(raw, 0.0), env.s_bar)


def co2_of(s: float, env: EnvParams) -> float:
    """Atmospheric concentration implied by quality S: CO2 = co2_disaster - S."""
    if not 0.0 <= s <= env.s_bar:
        raise ValueError(f"S must lie in [0, {env.s_bar}], got {s}")
    return env.co2_disaster - s

def temperature_increase(co2: float, env: EnvParams) -> float:
    """Warming over pre-industrial: 3 * log2(CO2 / co2_pre), capped at the disaster level."""
    if not co2 >= env.co2_pre:
        raise ValueError(f"CO2 must be >= {env.co2_pre}, got {co2}")
    return min(3.0 * math.log2(co2 / env.co2_pre), env.delta_cap)


def is_disaster(s: float) -> bool:
    """True once quality has hit the lower clamp (within 1e-12 absolute)."""
    return s <= 1e-12
