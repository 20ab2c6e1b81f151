"""Scenario orchestration and trajectory recording.

A scenario fixes the economy, the AI growth rate, the environmental
constants, and a policy mode, then unrolls the period loop:

    AI levels -> (wedge) -> scientist allocation against last period's
    productivities -> innovation step -> static equilibrium -> environment.

Row t = 0 is the calibrated initial state (no innovation has happened yet;
its allocation fields show the period-0 equilibrium choice).  Every record
is validated against the core identities before it is kept, and the whole
pipeline is deterministic - identical scenarios produce identical
trajectories bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .calibration import clean_lockin_bound, intervention_years
from .economy import (EconomyParams, SectorState, StaticEquilibrium,
                      static_equilibrium)
from .environment import EnvParams, co2_of, env_step, is_disaster, temperature_increase
from .innovation import (LAISSEZ_FAIRE, AIParams, AllocationResult, Regime,
                         ai_log_levels, innovate, solve_allocation)
from .numerics import logaddexp, safe_exp
from .policy import PolicyMode, build_schedule, required_wedge

EXTENSION_CAP_PERIODS = 200

PRICE_NORMALIZATION_TOL = 1e-10
LABOR_CLEARING_TOL = 1e-12
CES_IDENTITY_TOL = 1e-10
CONSUMPTION_SHARE_TOL = 1e-12


class ScenarioError(RuntimeError):
    """Raised when a period fails its equilibrium consistency checks."""


@dataclass(frozen=True)
class Scenario:
    """One run configuration."""

    label: str
    economy: EconomyParams
    ai: AIParams
    env: EnvParams
    initial: SectorState
    policy_mode: PolicyMode = PolicyMode.NONE
    horizon_periods: int = 50
    period_years: float = 2.0
    consumption_cap: float = 1e100
    extend_until_disaster: bool = False
    gdp_ai_10yr: float | None = None

    def __post_init__(self) -> None:
        if self.horizon_periods < 1:
            raise ValueError("horizon must be at least one period")
        if self.consumption_cap <= 0.0 or self.period_years <= 0.0:
            raise ValueError("caps and period length must be positive")


@dataclass(frozen=True)
class PeriodRecord:
    """Everything plotted or tabulated for one period."""

    t: int
    year: float
    i_c: float
    i_d: float
    s_c: float
    s_d: float
    regime: Regime
    g: float
    a_c: float
    a_d: float
    ln_a_c: float
    ln_a_d: float
    p_c: float
    p_d: float
    l_c: float
    l_d: float
    y_c: float
    y_d: float
    y: float
    clean_share: float
    c: float
    s: float
    co2: float
    delta: float
    disaster: bool


@dataclass(frozen=True)
class TrajectorySummary:
    disaster: bool
    disaster_year: float | None
    switch_year: float | None
    intervention_years: int | None
    max_wedge: float


@dataclass(frozen=True)
class Trajectory:
    label: str
    records: list[PeriodRecord] = field(default_factory=list)
    summary: TrajectorySummary | None = None


def _validate_equilibrium(eq: StaticEquilibrium, params: EconomyParams, t: int,
                          label: str) -> None:
    """Core identities every record must satisfy, in log domain."""
    sigma = params.sigma
    norm_gap = logaddexp((1.0 - sigma) * eq.ln_p_c,
                         (1.0 - sigma) * eq.ln_p_d) / (1.0 - sigma)
    if abs(norm_gap) > PRICE_NORMALIZATION_TOL:
        raise ScenarioError(f"{label}, period {t}: price normalization off by {norm_gap:.3e}")
    if abs(eq.l_c + eq.l_d - 1.0) > LABOR_CLEARING_TOL:
        raise ScenarioError(f"{label}, period {t}: labor does not clear")
    rho = (sigma - 1.0) / sigma
    ces_gap = logaddexp(rho * eq.ln_y_c, rho * eq.ln_y_d) / rho - eq.ln_y
    if abs(ces_gap) > CES_IDENTITY_TOL:
        raise ScenarioError(f"{label}, period {t}: CES identity off by {ces_gap:.3e}")
    share_gap = eq.ln_c - eq.ln_y - math.log(1.0 - params.alpha**2)
    if abs(share_gap) > CONSUMPTION_SHARE_TOL:
        raise ScenarioError(f"{label}, period {t}: consumption share off by {share_gap:.3e}")


def _make_record(t: int, sc: Scenario, alloc: AllocationResult, g: float,
                 state: SectorState, eq: StaticEquilibrium, s_env: float,
                 ln_i_c: float, ln_i_d: float) -> PeriodRecord:
    co2 = co2_of(s_env, sc.env)
    return PeriodRecord(
        t=t,
        year=t * sc.period_years,
        i_c=safe_exp(ln_i_c),
        i_d=safe_exp(ln_i_d),
        s_c=alloc.s_c,
        s_d=alloc.s_d,
        regime=alloc.regime,
        g=g,
        a_c=state.a_c,
        a_d=state.a_d,
        ln_a_c=state.ln_a_c,
        ln_a_d=state.ln_a_d,
        p_c=eq.p_c,
        p_d=eq.p_d,
        l_c=eq.l_c,
        l_d=eq.l_d,
        y_c=eq.y_c,
        y_d=eq.y_d,
        y=eq.y,
        clean_share=eq.clean_output_share,
        c=min(eq.c, sc.consumption_cap),
        s=s_env,
        co2=co2,
        delta=temperature_increase(co2, sc.env),
        disaster=is_disaster(s_env),
    )


def run_scenario(sc: Scenario) -> Trajectory:
    """Unroll one scenario into a validated trajectory."""
    params = sc.economy
    schedule = build_schedule(sc.ai.k, params, sc.ai, sc.policy_mode)
    records: list[PeriodRecord] = []
    state = sc.initial
    s_env = sc.env.s_0
    max_wedge = 1.0
    disaster_hit = False

    t = 0
    while True:
        ln_i_c, ln_i_d = ai_log_levels(t, sc.ai)
        i_c, i_d = safe_exp(ln_i_c), safe_exp(ln_i_d)
        prev = state
        wedge = required_wedge(prev, i_c, i_d, params) if schedule.active(t) else LAISSEZ_FAIRE
        max_wedge = max(max_wedge, wedge.g)
        alloc = solve_allocation(prev, i_c, i_d, wedge, params)
        if t > 0:
            state = innovate(prev, alloc, i_c, i_d, params)
        eq = static_equilibrium(state, params)
        _validate_equilibrium(eq, params, t, sc.label)
        records.append(_make_record(t, sc, alloc, wedge.g, state, eq, s_env,
                                    ln_i_c, ln_i_d))
        disaster_hit = disaster_hit or records[-1].disaster

        t += 1
        if t >= sc.horizon_periods:
            if not (sc.extend_until_disaster and not disaster_hit
                    and t < EXTENSION_CAP_PERIODS):
                break
        s_env = env_step(s_env, eq.y_d, sc.env)

    first_disaster = next((r.year for r in records if r.disaster), None)
    first_switch = next((r.year for r in records if r.s_c == 1.0), None)
    years = None
    if sc.policy_mode is PolicyMode.TEMPORARY:
        years = math.ceil(sc.period_years * clean_lockin_bound(sc.ai.k, params))
    summary = TrajectorySummary(
        disaster=first_disaster is not None,
        disaster_year=first_disaster,
        switch_year=first_switch,
        intervention_years=years,
        max_wedge=max_wedge,
    )
    return Trajectory(sc.label, records, summary)


def run_suite(scenarios: list[Scenario]) -> tuple[list[Trajectory], list[dict]]:
    """Run every scenario independently and build the summary table.

    Per-scenario failures are collected into the summary instead of
    aborting the rest of the suite.
    """
    if not scenarios:
        raise ValueError("scenario list is empty")
    trajectories: list[Trajectory] = []
    rows: list[dict] = []
    for sc in scenarios:
        row: dict = {
            "label": sc.label,
            "ai_impact_10yr": sc.gdp_ai_10yr,
            "k": sc.ai.k,
        }
        try:
            row["intervention_years"] = (
                intervention_years_for(sc) if sc.ai.k > 0.0 else None)
            traj = run_scenario(sc)
            trajectories.append(traj)
            row["avoid_disaster"] = "No" if traj.summary.disaster else "Yes"
            row["switch_year"] = traj.summary.switch_year
            row["error"] = ""
        except Exception as exc:  # noqa: BLE001 - suite keeps going per scenario
            row.setdefault("intervention_years", None)
            row["avoid_disaster"] = ""
            row["switch_year"] = None
            row["error"] = str(exc)
        rows.append(row)
    return trajectories, rows


def intervention_years_for(sc: Scenario) -> int:
    return intervention_years(sc.ai.k, sc.economy, sc.period_years)
