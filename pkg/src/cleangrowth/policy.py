"""Government intervention: the minimal wedge that makes clean research win.

A subsidy to clean research and/or a tax on dirty research acts as a
multiplicative wedge G on the profit ratio.  Setting G = max(1, 1/f(1))
makes the all-clean corner self-consistent at minimal cost; keeping that up
through the clean lock-in bound flips research to the clean sector
permanently, after which the wedge can be withdrawn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .calibration import clean_lockin_bound
from .economy import EconomyParams, SectorState
from .innovation import AIParams, PolicyWedge, log_profit_ratio


class PolicyMode(str, Enum):
    NONE = "none"
    TEMPORARY = "temporary"
    PERMANENT = "permanent"


@dataclass(frozen=True)
class InterventionSchedule:
    """When the wedge is applied.

    duration_periods counts the innovation periods t = 1..D covered by a
    temporary intervention (D = ceil of the clean lock-in bound); the
    initial record at t = 0 is also wedged so a policy run is all-clean
    from its first row.  Wedge values themselves are state-dependent and
    computed per period during simulation.
    """

    mode: PolicyMode
    duration_periods: int = 0

    def __post_init__(self) -> None:
        if self.duration_periods < 0:
            raise ValueError("duration must be >= 0")
        if self.mode is PolicyMode.TEMPORARY and self.duration_periods == 0:
            raise ValueError("temporary intervention needs a positive duration")

    def active(self, t: int) -> bool:
        if self.mode is PolicyMode.PERMANENT:
            return True
        if self.mode is PolicyMode.TEMPORARY:
            return t <= self.duration_periods
        return False


def required_wedge(prev: SectorState, i_c: float, i_d: float,
                   params: EconomyParams) -> PolicyWedge:
    """Smallest wedge under which the all-clean corner is an equilibrium.

    G = max(1, 1/f(1)), where f(1) is the laissez-faire profit ratio with
    every scientist in the clean sector.  Any smaller wedge leaves the
    dirty corner as the equilibrium whenever f(1) < 1.
    """
    if not (i_c >= 1.0 and i_d >= 1.0 and math.isfinite(i_c) and math.isfinite(i_d)):
        raise ValueError(f"AI levels must be finite and >= 1, got ({i_c}, {i_d})")
    ln_f1 = log_profit_ratio(1.0, prev, math.log(i_c), math.log(i_d),
                             PolicyWedge(), params)
    if ln_f1 >= 0.0:
        return PolicyWedge()
    return PolicyWedge.from_log(-ln_f1)


def build_schedule(k: float, params: EconomyParams, ai: AIParams,
                   mode: PolicyMode) -> InterventionSchedule:
    """Intervention schedule for one scenario.

    Temporary interventions last ceil(clean_lockin_bound) periods (at least
    one), after which the clean regime sustains itself.
    """
    if mode is PolicyMode.NONE:
        return InterventionSchedule(PolicyMode.NONE, 0)
    if mode is PolicyMode.PERMANENT:
        return InterventionSchedule(PolicyMode.PERMANENT, 0)
    if k <= 0.0:
        raise ValueError("temporary intervention needs k > 0 for its duration bound")
    duration = max(1, math.ceil(clean_lockin_bound(k, params)))
    return InterventionSchedule(PolicyMode.TEMPORARY, duration)
