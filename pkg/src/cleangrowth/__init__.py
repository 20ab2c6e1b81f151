"""Two-sector clean/dirty growth simulator with AI-accelerated innovation.

Deterministic discrete-time model of an economy whose final good combines
clean and dirty inputs (gross substitutes), with profit-driven scientist
allocation, exponentially growing AI multipliers that favor clean research,
environmental quality driven by dirty production, and the analytic lock-in
bounds that size a temporary policy intervention.
"""

from .calibration import (CalibrationError, CalibrationInputs, calibrate_emissions,
                          calibrate_k, calibration_report, clean_lockin_bound,
                          dirty_lockin_bound, initial_productivities,
                          intervention_years, yearly_compounded_params)
from .config import SuiteConfig, build_suite, default_suite, load_config
from .economy import (EconomyParams, SectorState, StaticEquilibrium, ces_aggregate,
                      consumption, final_output, input_prices, labor_allocation,
                      machine_demand, make_params, sector_outputs,
                      static_equilibrium, wage)
from .environment import EnvParams, co2_of, env_step, is_disaster, temperature_increase
from .innovation import (AIParams, AllocationError, AllocationResult, PolicyWedge,
                         Regime, ai_level, expected_profit, innovate, profit_ratio,
                         solve_allocation)
from .policy import InterventionSchedule, PolicyMode, build_schedule, required_wedge
from .simulate import (PeriodRecord, Scenario, ScenarioError, Trajectory,
                       TrajectorySummary, run_scenario, run_suite)
from .verify import CheckReport, check_foc_machine, check_identities, check_lockin

__version__ = "0.1.0"

__all__ = [
    "AIParams", "AllocationError", "AllocationResult", "CalibrationError",
    "CalibrationInputs", "CheckReport", "EconomyParams", "EnvParams",
    "InterventionSchedule", "PeriodRecord", "PolicyMode", "PolicyWedge",
    "Regime", "Scenario", "ScenarioError", "SectorState", "StaticEquilibrium",
    "SuiteConfig", "Trajectory", "TrajectorySummary", "ai_level",
    "build_schedule", "build_suite", "calibrate_emissions", "calibrate_k",
    "calibration_report", "ces_aggregate", "check_foc_machine",
    "check_identities", "check_lockin", "clean_lockin_bound", "co2_of",
    "consumption", "default_suite", "dirty_lockin_bound", "env_step",
    "expected_profit", "final_output", "initial_productivities", "innovate",
    "input_prices", "intervention_years", "is_disaster", "labor_allocation",
    "load_config", "machine_demand", "make_params", "profit_ratio",
    "required_wedge", "run_scenario", "run_suite", "sector_outputs",
    "solve_allocation", "static_equilibrium", "temperature_increase", "wage",
    "yearly_compounded_params",
]
