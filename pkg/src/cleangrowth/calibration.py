"""Deriving model primitives from observables, and the lock-in bounds.

Initial productivities are backed out of observed clean/dirty production
levels; the AI growth rate k is backed out of a forecast of AI's GDP
contribution over ten years; emissions data pin down the environmental
constants.  The two analytic lock-in bounds give, for a growth rate k, the
period after which the prevailing research regime persists forever - the
clean-side bound doubles as the minimum duration of a temporary
intervention.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .economy import (EconomyParams, SectorState, consumption_log, make_params,
                      sector_log_outputs)
from .innovation import LAISSEZ_FAIRE, AIParams, ai_log_levels, innovate, solve_allocation
from .numerics import log1pexp, require_finite, safe_exp

K_BRACKET_MAX = 10.0
K_TOLERANCE = 1e-6


class CalibrationError(RuntimeError):
    """Raised when a calibration target cannot be bracketed."""


@dataclass(frozen=True)
class CalibrationInputs:
    """Observable inputs behind the derived primitives.

    y_c0, y_d0             - clean/dirty production, quadrillion Btu per year
    gdp_ai_10yr            - fractional AI contribution to GDP over 10 years
    co2_emissions_per_year - Gt CO2 per year attributable to dirty production
    ppm_per_gt             - atmospheric conversion, ppm per Gt CO2
    period_years           - years per model period
    """

    y_c0: float
    y_d0: float
    gdp_ai_10yr: float
    co2_emissions_per_year: float
    ppm_per_gt: float
    period_years: float = 2.0

    def __post_init__(self) -> None:
        require_finite("calibration input", self.y_c0, self.y_d0, self.gdp_ai_10yr,
                       self.co2_emissions_per_year, self.ppm_per_gt, self.period_years)
        if min(self.y_c0, self.y_d0, self.co2_emissions_per_year,
               self.ppm_per_gt, self.period_years) <= 0.0:
            raise ValueError("calibration inputs must be positive")
        if self.gdp_ai_10yr < 0.0:
            raise ValueError("gdp_ai_10yr must be non-negative")


def yearly_compounded_params(params: EconomyParams, period_years: float) -> EconomyParams:
    """Rescale the success probabilities so growth compounds per year.

    The headline configuration states the no-AI productivity trend as a
    yearly rate; with multi-year periods the literal per-period reading
    undershoots it.  This returns params whose per-period step factor
    (1 + gamma eta) equals the yearly factor compounded over the period:
    eta' = ((1 + gamma eta)^period_years - 1) / gamma.
    """
    if period_years <= 0.0:
        raise ValueError("period_years must be positive")
    factor = (1.0 + params.gamma * params.eta_c) ** period_years
    eta_c = (factor - 1.0) / params.gamma
    factor_d = (1.0 + params.gamma * params.eta_d) ** period_years
    eta_d = (factor_d - 1.0) / params.gamma
    return make_params(params.alpha, params.sigma, params.psi, params.gamma,
                       eta_c, eta_d)


def initial_productivities(y_c0: float, y_d0: float, params: EconomyParams) -> SectorState:
    """Invert the sector-output closed forms at observed production levels.

    r = (Y_c/Y_d)^(1/(alpha+phi-1)) gives A_d = r A_c, and
    A_c = (alpha^2/psi)^(-alpha/(1-alpha)) (1 + r^-phi)^((alpha+phi)/phi) Y_c.
    """
    if not (y_c0 > 0.0 and y_d0 > 0.0 and math.isfinite(y_c0) and math.isfinite(y_d0)):
        raise ValueError(f"production levels must be finite and positive, got ({y_c0}, {y_d0})")
    phi = params.phi
    ln_r = (math.log(y_c0) - math.log(y_d0)) / (params.alpha + phi - 1.0)
    ln_a_c = (-params.log_output_coef
              + ((params.alpha + phi) / phi) * log1pexp(-phi * ln_r)
              + math.log(y_c0))
    return SectorState(ln_a_c, ln_a_c + ln_r)


def dirty_lockin_bound(k: float, params: EconomyParams) -> float:
    """Period threshold after which all-dirty research is locked in.

    T >= (1/k) ln((e^(-4k/phi) - 1) / (gamma eta_d)) - 1.  May be negative,
    in which case the lock-in holds from the start.
    """
    if k <= 0.0:
        raise ValueError("lock-in bound requires k > 0")
    if params.phi >= 0.0:
        raise ValueError("lock-in bound requires phi < 0")
    return (math.log(math.expm1(-4.0 * k / params.phi) / (params.gamma * params.eta_d)) / k
            - 1.0)


def clean_lockin_bound(k: float, params: EconomyParams) -> float:
    """Period threshold after which all-clean research is locked in.

    T >= max( (1/2k) ln((gamma (e^2k + e^k + 1) + 2) / (gamma e^2k)),
              (1/3k) ln((e^(-k/phi) - 1) / (gamma eta_c)) - 1 ).
    A temporary intervention kept up through this period flips research to
    the clean sector permanently.
    """
    if k <= 0.0:
        raise ValueError("lock-in bound requires k > 0")
    if params.phi >= 0.0:
        raise ValueError("lock-in bound requires phi < 0")
    g = params.gamma
    first = math.log((g * (math.exp(2.0 * k) + math.exp(k) + 1.0) + 2.0)
                     / (g * math.exp(2.0 * k))) / (2.0 * k)
    second = math.log(math.expm1(-k / params.phi) / (g * params.eta_c)) / (3.0 * k) - 1.0
    return max(first, second)


def intervention_years(k: float, params: EconomyParams, period_years: float) -> int:
    """Clean lock-in bound converted to calendar years, rounded up."""
    return math.ceil(period_years * clean_lockin_bound(k, params))


def calibrate_emissions(inputs: CalibrationInputs, y_d0: float, s_0: float) -> tuple[float, float]:
    """Derive (xi, delta) from emissions data.

    xi spreads the observed per-period emissions over the dirty production
    they came from; delta is set so that regeneration at t = 0 offsets
    exactly half of gross emissions (the observed airborne fraction).
    """
    if inputs.co2_emissions_per_year < 0.0:
        raise ValueError("emissions must be non-negative")
    if y_d0 <= 0.0:
        raise ValueError("y_d0 must be positive")
    if inputs.co2_emissions_per_year == 0.0:
        return 0.0, 0.0
    if s_0 <= 0.0:
        raise ValueError("s_0 must be positive")
    xi = inputs.co2_emissions_per_year * inputs.period_years * inputs.ppm_per_gt / y_d0
    delta = xi * y_d0 / (2.0 * s_0)
    return xi, delta


def calibrate_k(target: float, params: EconomyParams, ai_multiplier: float,
                period_years: float, start: SectorState,
                horizon_years: float = 10.0) -> float:
    """AI growth rate that lifts consumption by `target` over ten years.

    Simulates the free equilibrium from `start` for horizon_years and
    bisects k in [0, 10] until consumption exceeds the k = 0 baseline by
    exactly `target` (relative), to 1e-6 absolute in k.
    """
    if target < 0.0:
        raise ValueError(f"target must be non-negative, got {target}")
    if target == 0.0:
        return 0.0
    periods = max(1, round(horizon_years / period_years))

    def ln_consumption_at_horizon(k: float) -> float:
        ai = AIParams(k=k, clean_multiplier=ai_multiplier)
        state = start
        for t in range(1, periods + 1):
            ln_i_c, ln_i_d = ai_log_levels(t, ai)
            i_c, i_d = safe_exp(ln_i_c), safe_exp(ln_i_d)
            alloc = solve_allocation(state, i_c, i_d, LAISSEZ_FAIRE, params)
            state = innovate(state, alloc, i_c, i_d, params)
        return consumption_log(state, params)

    baseline = ln_consumption_at_horizon(0.0)
    goal = math.log1p(target)

    def gap(k: float) -> float:
        return ln_consumption_at_horizon(k) - baseline - goal

    lo, hi = 0.0, K_BRACKET_MAX
    if gap(hi) < 0.0:
        raise CalibrationError(
            f"target {target} not bracketed by k in [0, {K_BRACKET_MAX}]")
    while hi - lo > K_TOLERANCE:
        mid = 0.5 * (lo + hi)
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def calibration_report(inputs: CalibrationInputs, params: EconomyParams,
                       s_0: float) -> str:
    """JSON report of every derived primitive together with its formula."""
    state = initial_productivities(inputs.y_c0, inputs.y_d0, params)
    y_c, y_d = (math.exp(v) for v in sector_log_outputs(state, params))
    xi, delta = calibrate_emissions(inputs, inputs.y_d0, s_0)
    ln_r = state.ln_a_d - state.ln_a_c
    report = {
        "inputs": {
            "y_c0": inputs.y_c0,
            "y_d0": inputs.y_d0,
            "co2_emissions_per_year_gt": inputs.co2_emissions_per_year,
            "ppm_per_gt": inputs.ppm_per_gt,
            "period_years": inputs.period_years,
        },
        "derived": {
            "r": {
                "value": math.exp(ln_r),
                "formula": "(y_c0 / y_d0) ** (1 / (alpha + phi - 1))",
            },
            "a_c0": {
                "value": state.a_c,
                "formula": "(alpha^2/psi)^(-alpha/(1-alpha)) * (1 + r^-phi)^((alpha+phi)/phi) * y_c0",
            },
            "a_d0": {"value": state.a_d, "formula": "r * a_c0"},
            "round_trip_outputs": {"y_c": y_c, "y_d": y_d},
            "xi": {
                "value": xi,
                "formula": "co2_emissions_per_year * period_years * ppm_per_gt / y_d0",
                "units": "ppm per dirty-input unit per period",
            },
            "delta": {
                "value": delta,
                "formula": "xi * y_d0 / (2 * s_0)",
                "units": "per period",
            },
        },
    }
    return json.dumps(report, indent=2, sort_keys=True)
