"""Independent oracles for the closed forms and the lock-in mechanics.

Every check here evaluates the underlying optimization or identity
directly - grid search over the machine producer's actual profit, the
defining market-clearing identities, step-by-step simulation of the
research regime - rather than re-using the closed forms it is checking, so
agreement is evidence and not tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .calibration import clean_lockin_bound, dirty_lockin_bound
from .economy import EconomyParams, SectorState, machine_demand, static_equilibrium
from .innovation import (LAISSEZ_FAIRE, AIParams, Regime, ai_log_levels, innovate,
                         log_profit_ratio, solve_allocation)
from .numerics import log1pexp, logaddexp, safe_exp

GRID_POINTS_DEFAULT = 201
IDENTITY_TOL = 1e-8
WAGE_TOL = 1e-10


@dataclass
class CheckReport:
    """Outcome of one oracle run."""

    name: str
    passed: bool
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"[{status}] {self.name}"]
        lines.extend(f"    {msg}" for msg in self.failures)
        return "\n".join(lines)


def machine_profit(x: float, p_j: float, l_j: float, a_j: float,
                   params: EconomyParams) -> float:
    """Profit of a machine producer selling quantity x.

    Price comes from the input producer's iso-elastic inverse demand,
    p(x) = alpha p_j (x / (L A))^(alpha - 1); each unit costs psi to make.
    """
    if x == 0.0 or l_j == 0.0 or a_j == 0.0:
        return 0.0
    price = params.alpha * p_j * (x / (l_j * a_j)) ** (params.alpha - 1.0)
    return (price - params.psi) * x


def check_foc_machine(p_j: float, l_j: float, a_j: float, params: EconomyParams,
                      grid_size: int = GRID_POINTS_DEFAULT) -> CheckReport:
    """Does the closed-form machine demand maximize actual producer profit?

    Scans a multiplicative grid (factors 0.5 to 2.0) around the closed form
    and requires the closed form to beat every grid point.
    """
    if grid_size < 101:
        raise ValueError("grid must have at least 101 points")
    report = CheckReport("machine demand first-order condition", True)
    x_star = machine_demand(p_j, l_j, a_j, params)
    profit_star = machine_profit(x_star, p_j, l_j, a_j, params)
    if x_star == 0.0:
        return report  # degenerate sector: profit identically zero
    lo, hi = math.log(0.5), math.log(2.0)
    for i in range(grid_size):
        factor = math.exp(lo + (hi - lo) * i / (grid_size - 1))
        profit = machine_profit(x_star * factor, p_j, l_j, a_j, params)
        if profit > profit_star * (1.0 + 1e-12) + 1e-300:
            report.fail(f"grid point {factor:.6f} x* yields profit {profit!r} "
                        f"above the closed form's {profit_star!r}")
    return report


def check_identities(state: SectorState, params: EconomyParams,
                     tol: float = IDENTITY_TOL) -> CheckReport:
    """Market-clearing and aggregation identities at one state.

    (a) price ratio vs output ratio, (b) the CES aggregate against the
    final-output closed form, (c) consumption accounting against machine
    costs, (d) the labor ratio law, (e) wage equalization, plus the price
    normalization.  All gaps are measured in log domain so states with
    extreme productivity ratios stay checkable.
    """
    report = CheckReport("equilibrium identities", True)
    eq = static_equilibrium(state, params)
    sigma = params.sigma

    norm_gap = logaddexp((1.0 - sigma) * eq.ln_p_c,
                         (1.0 - sigma) * eq.ln_p_d) / (1.0 - sigma)
    if abs(norm_gap) > 1e-10:
        report.fail(f"price normalization gap {norm_gap:.3e}")

    gap = price_output_identity_gap(eq.ln_p_c, eq.ln_p_d, eq.ln_y_c, eq.ln_y_d, params)
    if abs(gap) > tol:
        report.fail(f"price ratio vs output ratio gap {gap:.3e}")

    rho = (sigma - 1.0) / sigma
    ces_gap = logaddexp(rho * eq.ln_y_c, rho * eq.ln_y_d) / rho - eq.ln_y
    if abs(ces_gap) > 1e-10:
        report.fail(f"CES aggregation gap {ces_gap:.3e}")

    # Consumption accounting C = Y - psi (x_c + x_d), checked as machine
    # spending per unit of output: psi (x_c + x_d) / Y = alpha^2.
    log_psi = math.log(params.psi)
    spend_share = (safe_exp(log_psi + eq.ln_x_c - eq.ln_y)
                   + safe_exp(log_psi + eq.ln_x_d - eq.ln_y))
    if abs(spend_share - params.alpha**2) > tol:
        report.fail(f"consumption accounting gap {spend_share - params.alpha**2:.3e}")

    ln_l_gap = (-log1pexp(-params.phi * (state.ln_a_d - state.ln_a_c))
                + log1pexp(-params.phi * (state.ln_a_c - state.ln_a_d)))
    labor_gap = ln_l_gap + params.phi * (state.ln_a_c - state.ln_a_d)
    if abs(labor_gap) > tol:
        report.fail(f"labor ratio law gap {labor_gap:.3e}")

    inv = 1.0 / (1.0 - params.alpha)
    wage_gap = (eq.ln_p_c * inv + state.ln_a_c) - (eq.ln_p_d * inv + state.ln_a_d)
    if abs(wage_gap) > WAGE_TOL:
        report.fail(f"wage equalization gap {wage_gap:.3e}")
    return report


def price_output_identity_gap(ln_p_c: float, ln_p_d: float, ln_y_c: float,
                              ln_y_d: float, params: EconomyParams) -> float:
    """log gap in p_c/p_d = (Y_c/Y_d)^(-1/sigma); zero in equilibrium."""
    return (ln_p_c - ln_p_d) + (ln_y_c - ln_y_d) / params.sigma


def _regime_ratio_terms(locked: Regime, t: int, k: float,
                        params: EconomyParams) -> tuple[float, float]:
    """The two factors of R_{t+1}/R_t for a locked regime, in logs.

    Dirty lock-in: first factor <= e^(3k) always, second <= e^(-3k) past
    the dirty bound.  Clean lock-in: first >= e^(2k) past its own
    threshold, second >= e^(-2k) past the clean bound.
    """
    g = params.gamma
    first = (math.log1p(g * math.exp(3.0 * k * (t + 1.0)))
             + math.log1p(g * math.exp(k * t))
             - math.log1p(g * math.exp(k * (t + 1.0)))
             - math.log1p(g * math.exp(3.0 * k * t)))
    if locked is Regime.DIRTY_ONLY:
        second = ((params.phi + 1.0) * math.log1p(g * params.eta_d * math.exp(k * (t + 1.0)))
                  - math.log1p(g * params.eta_d * math.exp(k * t)))
    else:
        second = (math.log1p(g * params.eta_c * math.exp(3.0 * k * t))
                  - (params.phi + 1.0) * math.log1p(g * params.eta_c * math.exp(3.0 * k * (t + 1.0))))
    return first, second


def check_lockin(regime: str, k: float, params: EconomyParams,
                 start_ratio: float, horizon: int = 200,
                 clean_multiplier: float = 3.0) -> CheckReport:
    """Simulate from the lock-in threshold and require the regime to hold.

    Starts at T = max(0, ceil(bound)) from a state whose clean/dirty
    productivity ratio is start_ratio, verifies the premise holds there,
    simulates `horizon` further periods, and checks three things: the
    per-step ratio inequalities of the underlying induction, the locked
    corner's own self-consistency condition every period, and the regime
    the solver actually selects.

    The last check needs care at large k on the dirty side: the all-clean
    corner can transiently become self-consistent as well (the corners are
    not mutually exclusive), and the solver prefers clean whenever it is
    viable.  The dirty start must therefore be deep enough that the clean
    corner never turns viable along the path; the dirty-corner condition
    itself persists from any premise state regardless.
    """
    if horizon > 500:
        raise ValueError("horizon capped at 500 periods")
    locked = Regime.DIRTY_ONLY if regime == "dirty" else Regime.CLEAN_ONLY
    bound = (dirty_lockin_bound(k, params) if locked is Regime.DIRTY_ONLY
             else clean_lockin_bound(k, params))
    t0 = max(0, math.ceil(bound))
    report = CheckReport(f"{locked.value} lock-in at k={k}", True)

    ai = AIParams(k=k, clean_multiplier=clean_multiplier)
    state = SectorState(math.log(start_ratio), 0.0)
    ln_i = ai_log_levels(t0, ai)
    first_alloc = solve_allocation(state, safe_exp(ln_i[0]), safe_exp(ln_i[1]),
                                   LAISSEZ_FAIRE, params)
    if first_alloc.regime is not locked:
        report.fail(f"premise violated: regime at t0={t0} is {first_alloc.regime.value}")
        return report

    # Per-step factor bounds from the induction argument (3x multiplier
    # case); every bound is in force from t0 on since t0 >= ceil(bound).
    if clean_multiplier == 3.0:
        step = 3.0 * k if locked is Regime.DIRTY_ONLY else 2.0 * k
        for t in range(t0, t0 + horizon):
            first, second = _regime_ratio_terms(locked, t, k, params)
            if locked is Regime.DIRTY_ONLY:
                if first > step + 1e-9:
                    report.fail(f"t={t}: first ratio factor {first:.6e} above {step:.6e}")
                if second > -step + 1e-9:
                    report.fail(f"t={t}: second ratio factor {second:.6e} above {-step:.6e}")
                if first + second > 1e-9:
                    report.fail(f"t={t}: ratio step {first + second:.3e} is increasing")
            else:
                if first < step - 1e-9:
                    report.fail(f"t={t}: first ratio factor {first:.6e} below {step:.6e}")
                if second < -step - 1e-9:
                    report.fail(f"t={t}: second ratio factor {second:.6e} below {-step:.6e}")
                if first + second < -1e-9:
                    report.fail(f"t={t}: ratio step {first + second:.3e} is decreasing")

    # Corner self-consistency and regime persistence along the locked path.
    corner_s = 0.0 if locked is Regime.DIRTY_ONLY else 1.0
    for t in range(t0 + 1, t0 + horizon + 1):
        ln_i_c, ln_i_d = ai_log_levels(t, ai)
        i_c, i_d = safe_exp(ln_i_c), safe_exp(ln_i_d)
        ln_corner = log_profit_ratio(corner_s, state, ln_i_c, ln_i_d,
                                     LAISSEZ_FAIRE, params)
        if locked is Regime.DIRTY_ONLY and ln_corner > 1e-9:
            report.fail(f"dirty-corner condition broken at t={t}: ln f(0)={ln_corner:.3e}")
            break
        if locked is Regime.CLEAN_ONLY and ln_corner < -1e-9:
            report.fail(f"clean-corner condition broken at t={t}: ln f(1)={ln_corner:.3e}")
            break
        alloc = solve_allocation(state, i_c, i_d, LAISSEZ_FAIRE, params)
        if alloc.regime is not locked:
            report.fail(f"regime flipped to {alloc.regime.value} at t={t}")
            break
        state = innovate(state, alloc, i_c, i_d, params)
    return report
