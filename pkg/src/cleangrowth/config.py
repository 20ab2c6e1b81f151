"""Run configuration: defaults, YAML loading, and the published scenario suite.

The headline configuration uses alpha = 1/3, sigma = 10, psi = alpha^2,
gamma = 1, eta = 0.02, two-year periods, and a 50-period horizon.  The
real-world inputs the model's sources never print are pinned here with
their provenance:

  y_c0, y_d0      World primary energy production, 2002-2006 mean, split
                  into nonfossil (nuclear + hydro + other renewables,
                  ~60 quadrillion Btu/yr) and fossil (coal + oil + gas,
                  ~387 quadrillion Btu/yr).  Source: EIA International
                  Energy Statistics.
  co2 emissions   Fossil-fuel CO2 emissions, 2002-2006 mean, ~25.7 Gt
                  CO2/yr (~7.0 GtC/yr).  Source: Global Carbon Project /
                  CDIAC fossil-fuel combustion series.
  ppm_per_gt      1 ppm CO2 = 2.13 GtC = 7.81 Gt CO2, the standard
                  atmospheric conversion.
  CO2 levels      Pre-industrial 280 ppm; disaster threshold 1120 ppm
                  (a 6 degree warming at 3 degrees per doubling); initial
                  concentration 379 ppm (mid-2000s observation), i.e. the
                  initial quality sits 99 ppm below pristine.

The four scenarios correspond to published forecasts of AI's GDP
contribution over the next decade - 0.9% (Acemoglu 2024), 7% (Goldman
Sachs 2023), 33.2% (McKinsey 2023), 64.4% (Korinek & Suh 2024) - with the
matching AI growth rates k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .calibration import CalibrationInputs, calibrate_emissions, initial_productivities
from .economy import EconomyParams, make_params
from .environment import EnvParams
from .innovation import AIParams
from .policy import PolicyMode
from .simulate import Scenario

DEFAULT_ECONOMY = dict(alpha=1.0 / 3.0, sigma=10.0, psi=1.0 / 9.0,
                       gamma=1.0, eta_c=0.02, eta_d=0.02)
DEFAULT_CLEAN_MULTIPLIER = 3.0
DEFAULT_PERIOD_YEARS = 2.0
DEFAULT_HORIZON = 50
DEFAULT_CONSUMPTION_CAP = 1e100

DEFAULT_CALIBRATION = dict(
    y_c0=60.0,                    # nonfossil primary energy, quad Btu/yr (EIA, 2002-2006 mean)
    y_d0=387.0,                   # fossil primary energy, quad Btu/yr (EIA, 2002-2006 mean)
    co2_emissions_per_year=25.7,  # Gt CO2/yr from fossil fuels (GCP/CDIAC, 2002-2006 mean)
    ppm_per_gt=1.0 / 7.81,        # 1 ppm CO2 = 7.81 Gt CO2
)

DEFAULT_ENVIRONMENT = dict(
    co2_pre=280.0,
    co2_disaster=1120.0,
    s0_offset_ppm=99.0,           # observed CO2 rise over pre-industrial by the mid-2000s
)

# (label, 10-year GDP contribution forecast, AI growth rate k per period,
#  extend past the horizon until the disaster is observed)
DEFAULT_SCENARIOS = [
    ("ai-gdp-0.9pct", 0.009, 0.0160, True),
    ("ai-gdp-7pct", 0.07, 0.102, False),
    ("ai-gdp-33.2pct", 0.332, 0.180, False),
    ("ai-gdp-64.4pct", 0.644, 0.201, False),
]


@dataclass(frozen=True)
class SuiteConfig:
    """Everything needed to build and run a scenario suite."""

    economy: EconomyParams
    inputs: CalibrationInputs
    env: EnvParams
    scenarios: list[Scenario] = field(default_factory=list)


def _build_env(env_spec: dict, inputs: CalibrationInputs) -> EnvParams:
    co2_pre = float(env_spec["co2_pre"])
    co2_disaster = float(env_spec["co2_disaster"])
    s_bar = co2_disaster - co2_pre
    s_0 = s_bar - float(env_spec["s0_offset_ppm"])
    xi, delta = calibrate_emissions(inputs, inputs.y_d0, s_0)
    return EnvParams(s_bar=s_bar, xi=xi, delta=delta, co2_pre=co2_pre,
                     co2_disaster=co2_disaster, s_0=s_0)


def build_suite(economy_spec: dict | None = None,
                calibration_spec: dict | None = None,
                environment_spec: dict | None = None,
                scenario_specs: list | None = None,
                run_spec: dict | None = None) -> SuiteConfig:
    """Merge partial specs over the defaults and construct the suite."""
    econ = {**DEFAULT_ECONOMY, **(economy_spec or {})}
    params = make_params(**econ)

    run = run_spec or {}
    period_years = float(run.get("period_years", DEFAULT_PERIOD_YEARS))
    horizon = int(run.get("horizon_periods", DEFAULT_HORIZON))
    cap = float(run.get("consumption_cap", DEFAULT_CONSUMPTION_CAP))
    policy = PolicyMode(run.get("policy", "none"))
    multiplier = float(run.get("clean_multiplier", DEFAULT_CLEAN_MULTIPLIER))

    calib = {**DEFAULT_CALIBRATION, **(calibration_spec or {})}
    inputs = CalibrationInputs(
        y_c0=float(calib["y_c0"]),
        y_d0=float(calib["y_d0"]),
        gdp_ai_10yr=0.0,
        co2_emissions_per_year=float(calib["co2_emissions_per_year"]),
        ppm_per_gt=float(calib["ppm_per_gt"]),
        period_years=period_years,
    )
    env = _build_env({**DEFAULT_ENVIRONMENT, **(environment_spec or {})}, inputs)
    initial = initial_productivities(inputs.y_c0, inputs.y_d0, params)

    specs = scenario_specs
    if specs is None:
        specs = [dict(label=lbl, gdp_ai_10yr=impact, k=k, extend_until_disaster=ext)
                 for lbl, impact, k, ext in DEFAULT_SCENARIOS]
    scenarios = []
    for spec in specs:
        scenarios.append(Scenario(
            label=str(spec["label"]),
            economy=params,
            ai=AIParams(k=float(spec["k"]),
                        clean_multiplier=float(spec.get("clean_multiplier", multiplier))),
            env=env,
            initial=initial,
            policy_mode=PolicyMode(spec.get("policy", policy.value)),
            horizon_periods=int(spec.get("horizon_periods", horizon)),
            period_years=period_years,
            consumption_cap=cap,
            extend_until_disaster=bool(spec.get("extend_until_disaster", False)),
            gdp_ai_10yr=(float(spec["gdp_ai_10yr"])
                         if spec.get("gdp_ai_10yr") is not None else None),
        ))
    return SuiteConfig(economy=params, inputs=inputs, env=env, scenarios=scenarios)


def default_suite() -> SuiteConfig:
    return build_suite()


def load_config(path: str | Path) -> SuiteConfig:
    """Load a YAML config; any omitted block falls back to the defaults.

    Schema (all blocks optional):
      economy:      {alpha, sigma, psi, gamma, eta_c, eta_d}
      run:          {period_years, horizon_periods, consumption_cap,
                     policy: none|temporary|permanent, clean_multiplier}
      calibration:  {y_c0, y_d0, co2_emissions_per_year, ppm_per_gt}
      environment:  {co2_pre, co2_disaster, s0_offset_ppm}
      scenarios:    [{label, k, gdp_ai_10yr, policy, horizon_periods,
                      extend_until_disaster, clean_multiplier}, ...]
    """
    raw = yaml.safe_load(Path(path).read_text()) or {}
    unknown = set(raw) - {"economy", "run", "calibration", "environment", "scenarios"}
    if unknown:
        raise ValueError(f"unknown config blocks: {sorted(unknown)}")
    return build_suite(
        economy_spec=raw.get("economy"),
        calibration_spec=raw.get("calibration"),
        environment_spec=raw.get("environment"),
        scenario_specs=raw.get("scenarios"),
        run_spec=raw.get("run"),
    )
