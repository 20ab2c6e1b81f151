"""Static equilibrium of the two-sector (clean/dirty) CES economy.

A unique final good aggregates a clean and a dirty input with elasticity of
substitution sigma > 1 (gross substitutes).  Each input is produced from
labor and sector-specific machines; machine producers price at a constant
markup psi/alpha over marginal cost.  Given the sector productivities
(A_c, A_d), the whole within-period equilibrium - input prices, labor
split, machine demand, wage, outputs, consumption - has closed forms,
implemented here.

All ratio formulas are computed in log domain: late in a run the
productivity gap between the sectors exceeds the double-precision power
range by thousands of orders of magnitude.  Every function is pure and
every value immutable, so concurrent use needs no synchronization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import log1pexp, logaddexp, require_finite, safe_exp


@dataclass(frozen=True)
class EconomyParams:
    """Structural constants of the economy.

    alpha   - machine share in input production, in (0, 1)
    sigma   - elasticity of substitution between clean and dirty inputs (> 1)
    psi     - final-good cost of producing one machine (> 0)
    gamma   - innovation step size (> 0)
    eta_c   - per-period research success probability, clean sector
    eta_d   - per-period research success probability, dirty sector
    phi     - derived: (1 - alpha) * (1 - sigma), negative whenever sigma > 1
    """

    alpha: float
    sigma: float
    psi: float
    gamma: float
    eta_c: float
    eta_d: float
    phi: float

    @property
    def machine_price(self) -> float:
        """Markup price every machine producer charges: psi / alpha."""
        return self.psi / self.alpha

    @property
    def machine_coef(self) -> float:
        """(alpha^2 / psi) ** (1 / (1 - alpha)), the machine-demand constant."""
        return (self.alpha**2 / self.psi) ** (1.0 / (1.0 - self.alpha))

    @property
    def log_output_coef(self) -> float:
        """log of (alpha^2 / psi) ** (alpha / (1 - alpha))."""
        a = self.alpha
        return (a / (1.0 - a)) * math.log(a**2 / self.psi)


def make_params(alpha: float, sigma: float, psi: float, gamma: float,
                eta_c: float, eta_d: float) -> EconomyParams:
    """Validate the structural constants and derive phi.

    sigma <= 1 is rejected: the model maintains gross substitutes
    throughout, and the closed forms below divide by (1 - sigma).
    """
    require_finite("economy parameter", alpha, sigma, psi, gamma, eta_c, eta_d)
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    if sigma <= 1.0:
        raise ValueError(f"sigma must exceed 1 (gross substitutes), got {sigma}")
    if psi <= 0.0:
        raise ValueError(f"psi must be positive, got {psi}")
    if gamma <= 0.0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    for name, eta in (("eta_c", eta_c), ("eta_d", eta_d)):
        if not 0.0 < eta <= 1.0:
            raise ValueError(f"{name} must be in (0, 1], got {eta}")
    phi = (1.0 - alpha) * (1.0 - sigma)
    return EconomyParams(alpha, sigma, psi, gamma, eta_c, eta_d, phi)


@dataclass(frozen=True)
class SectorState:
    """Sector productivities, carried in log form.

    The linear accessors overflow to inf once ln A exceeds ~709; the
    simulation itself only ever consumes the logs.
    """

    ln_a_c: float
    ln_a_d: float

    def __post_init__(self) -> None:
        require_finite("ln productivity", self.ln_a_c, self.ln_a_d)

    @classmethod
    def from_levels(cls, a_c: float, a_d: float) -> "SectorState":
        if not (a_c > 0.0 and a_d > 0.0 and math.isfinite(a_c) and math.isfinite(a_d)):
            raise ValueError(f"productivities must be finite and positive, got ({a_c}, {a_d})")
        return cls(math.log(a_c), math.log(a_d))

    @property
    def a_c(self) -> float:
        return safe_exp(self.ln_a_c)

    @property
    def a_d(self) -> float:
        return safe_exp(self.ln_a_d)


@dataclass(frozen=True)
class StaticEquilibrium:
    """One period's market-clearing snapshot, log values alongside levels.

    Levels may be inf when the underlying log value exceeds the double
    range; invariant checks must use the log fields.
    """

    ln_p_c: float
    ln_p_d: float
    l_c: float
    l_d: float
    ln_x_c: float
    ln_x_d: float
    ln_w: float
    ln_y_c: float
    ln_y_d: float
    ln_y: float
    ln_c: float

    @property
    def p_c(self) -> float:
        return safe_exp(self.ln_p_c)

    @property
    def p_d(self) -> float:
        return safe_exp(self.ln_p_d)

    @property
    def x_c(self) -> float:
        return safe_exp(self.ln_x_c)

    @property
    def x_d(self) -> float:
        return safe_exp(self.ln_x_d)

    @property
    def w(self) -> float:
        return safe_exp(self.ln_w)

    @property
    def y_c(self) -> float:
        return safe_exp(self.ln_y_c)

    @property
    def y_d(self) -> float:
        return safe_exp(self.ln_y_d)

    @property
    def y(self) -> float:
        return safe_exp(self.ln_y)

    @property
    def c(self) -> float:
        return safe_exp(self.ln_c)

    @property
    def clean_output_share(self) -> float:
        """Y_c / (Y_c + Y_d), evaluated stably from the logs."""
        return 1.0 / (1.0 + safe_exp(self.ln_y_d - self.ln_y_c))


def input_log_prices(state: SectorState, params: EconomyParams) -> tuple[float, float]:
    """(ln p_c, ln p_d) under the final-good price normalization.

    p_j = (A_j^-phi / (A_c^-phi + A_d^-phi)) ** (1/(1-sigma)); the ratio
    satisfies p_c/p_d = (A_c/A_d)^(alpha-1).
    """
    z_c = -params.phi * state.ln_a_c
    z_d = -params.phi * state.ln_a_d
    lse = logaddexp(z_c, z_d)
    inv = 1.0 / (1.0 - params.sigma)
    return (z_c - lse) * inv, (z_d - lse) * inv


def input_prices(state: SectorState, params: EconomyParams) -> tuple[float, float]:
    ln_p_c, ln_p_d = input_log_prices(state, params)
    return safe_exp(ln_p_c), safe_exp(ln_p_d)


def labor_allocation(state: SectorState, params: EconomyParams) -> tuple[float, float]:
    """Labor shares (L_c, L_d); they sum to exactly 1.

    L_c = A_c^-phi / (A_c^-phi + A_d^-phi).  Since -phi > 0 the more
    productive sector attracts the larger share.
    """
    gap = -params.phi * (state.ln_a_d - state.ln_a_c)
    l_c = 1.0 / (1.0 + safe_exp(gap))
    return l_c, 1.0 - l_c


def machine_demand(p_j: float, l_j: float, a_j: float, params: EconomyParams) -> float:
    """Aggregate machine quantity a sector buys: (alpha^2/psi)^(1/(1-alpha)) p^(1/(1-alpha)) L A."""
    require_finite("machine demand input", p_j, l_j, a_j)
    if min(p_j, l_j, a_j) < 0.0:
        raise ValueError("machine demand inputs must be non-negative")
    return params.machine_coef * p_j ** (1.0 / (1.0 - params.alpha)) * l_j * a_j


def wage(p_j: float, a_j: float, params: EconomyParams) -> float:
    """Wage implied by one sector's labor demand.

    w = (alpha^2/psi)^(1/(1-alpha)) (1-alpha) p_j^(1/(1-alpha)) A_j; the
    clean and dirty sides give the identical value in equilibrium.
    """
    require_finite("wage input", p_j, a_j)
    if p_j <= 0.0 or a_j <= 0.0:
        raise ValueError("wage inputs must be positive")
    return params.machine_coef * (1.0 - params.alpha) * p_j ** (1.0 / (1.0 - params.alpha)) * a_j


def sector_log_outputs(state: SectorState, params: EconomyParams) -> tuple[float, float]:
    """(ln Y_c, ln Y_d) from the productivity pair alone.

    Y_c = (alpha^2/psi)^(alpha/(1-alpha)) (A_c^phi + A_d^phi)^(-(alpha+phi)/phi)
          * A_c * A_d^(alpha+phi), and symmetrically for Y_d.
    """
    phi = params.phi
    a_plus_phi = params.alpha + phi
    lse = logaddexp(phi * state.ln_a_c, phi * state.ln_a_d)
    base = params.log_output_coef - (a_plus_phi / phi) * lse
    ln_y_c = base + state.ln_a_c + a_plus_phi * state.ln_a_d
    ln_y_d = base + a_plus_phi * state.ln_a_c + state.ln_a_d
    return ln_y_c, ln_y_d


def sector_outputs(state: SectorState, params: EconomyParams) -> tuple[float, float]:
    ln_y_c, ln_y_d = sector_log_outputs(state, params)
    return safe_exp(ln_y_c), safe_exp(ln_y_d)


def final_log_output(state: SectorState, params: EconomyParams) -> float:
    """ln Y_t = log coef - (1/phi) ln(A_c^phi + A_d^phi) + ln A_c + ln A_d."""
    phi = params.phi
    lse = logaddexp(phi * state.ln_a_c, phi * state.ln_a_d)
    return params.log_output_coef - lse / phi + state.ln_a_c + state.ln_a_d


def final_output(state: SectorState, params: EconomyParams) -> float:
    return safe_exp(final_log_output(state, params))


def ces_aggregate(y_c: float, y_d: float, sigma: float) -> float:
    """Final-good CES aggregate (Y_c^((s-1)/s) + Y_d^((s-1)/s))^(s/(s-1))."""
    require_finite("ces input", y_c, y_d)
    if y_c < 0.0 or y_d < 0.0:
        raise ValueError("ces inputs must be non-negative")
    if sigma <= 1.0:
        raise ValueError("sigma must exceed 1")
    if y_c == 0.0:
        return y_d
    if y_d == 0.0:
        return y_c
    rho = (sigma - 1.0) / sigma
    return safe_exp(logaddexp(rho * math.log(y_c), rho * math.log(y_d)) / rho)


def consumption_log(state: SectorState, params: EconomyParams) -> float:
    """ln C_t; consumption is the constant fraction (1 - alpha^2) of output."""
    return math.log(1.0 - params.alpha**2) + final_log_output(state, params)


def consumption(state: SectorState, params: EconomyParams) -> float:
    return safe_exp(consumption_log(state, params))


def static_equilibrium(state: SectorState, params: EconomyParams) -> StaticEquilibrium:
    """Assemble the full within-period equilibrium for one productivity pair."""
    ln_p_c, ln_p_d = input_log_prices(state, params)
    l_c, l_d = labor_allocation(state, params)
    # log labor shares directly from the softmax gap: a share can underflow
    # to 0.0 in linear form once the productivity gap is extreme.
    gap = -params.phi * (state.ln_a_d - state.ln_a_c)
    ln_l_c = -log1pexp(gap)
    ln_l_d = -log1pexp(-gap)
    inv_one_minus_alpha = 1.0 / (1.0 - params.alpha)
    log_machine_coef = math.log(params.alpha**2 / params.psi) * inv_one_minus_alpha
    ln_x_c = log_machine_coef + ln_p_c * inv_one_minus_alpha + ln_l_c + state.ln_a_c
    ln_x_d = log_machine_coef + ln_p_d * inv_one_minus_alpha + ln_l_d + state.ln_a_d
    ln_w = (log_machine_coef + math.log(1.0 - params.alpha)
            + ln_p_c * inv_one_minus_alpha + state.ln_a_c)
    ln_y_c, ln_y_d = sector_log_outputs(state, params)
    ln_y = final_log_output(state, params)
    ln_c = math.log(1.0 - params.alpha**2) + ln_y
    return StaticEquilibrium(ln_p_c, ln_p_d, l_c, l_d, ln_x_c, ln_x_d,
                             ln_w, ln_y_c, ln_y_d, ln_y, ln_c)
