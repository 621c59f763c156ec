"""Social cost of carbon via a marginal emission pulse and Ramsey discounting.

The pulse experiment (baseline and pulsed trajectories, their damage
difference, and the baseline growth path) does not depend on the welfare
parameters, so one experiment is shared read-only across any number of
(rho, eta) evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .calibrate import WelfareParams
from .iam import DamageSpec, ModelConfig, run
from .prefdata import ScenarioPath

TC_PER_GTC = 1.0e9

# Named discount-rate positions from the published debate, (rho %, eta).
NAMED_EXPERTS = {
    "Stern2006": (0.1, 1.0),
    "OMB2023": (0.3, 1.3),
    "Nordhaus1992": (3.0, 1.0),
    "Nordhaus2014": (1.5, 1.5),
    "Weitzman2007": (2.0, 2.0),
}


@dataclass(frozen=True)
class PulseSpec:
    """A marginal emission addition in a single year."""
    year: int = 2015
    size: float = 0.001   # GtC (1 MtC); small enough for linearity

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError("pulse size must be positive")


@dataclass(frozen=True)
class SccResult:
    scc: float                      # $2015 per tC
    years: np.ndarray
    marginal_damages: np.ndarray    # $2015/yr per tC
    discount_factors: np.ndarray
    params: WelfareParams
    scenario_id: str
    damage_label: str


# Growth series the Ramsey factor may discount with: per-capita net output
# (default), per-capita gross output, or total net output.
GROWTH_BASES = ("pc_net", "pc_gross", "total_net")


def _growth_series(trajectory, scenario_window, basis: str) -> np.ndarray:
    if basis == "pc_net":
        series = trajectory.net_output / scenario_window.population
    elif basis == "pc_gross":
        series = trajectory.gross_output / scenario_window.population
    elif basis == "total_net":
        series = trajectory.net_output
    else:
        raise ValueError(f"unknown growth basis {basis!r}; "
                         f"expected one of {GROWTH_BASES}")
    growth = np.zeros(len(series))
    growth[1:] = series[1:] / series[:-1] - 1.0
    return growth


@dataclass(frozen=True)
class PulseExperiment:
    """Cached marginal-damage path for one (scenario, config, damage, pulse)."""
    scenario_id: str
    damage_label: str
    years: np.ndarray
    marginal_damages: np.ndarray    # $2015/yr per tC
    growth: np.ndarray              # baseline growth into each year

    @classmethod
    def build(cls, scenario: ScenarioPath, config: ModelConfig = ModelConfig(),
              spec: DamageSpec = DamageSpec(), pulse: PulseSpec = PulseSpec(),
              growth_basis: str = "pc_net") -> "PulseExperiment":
        base = run(scenario, config, spec)
        pulsed = run(scenario, config, spec,
                     extra_emissions={pulse.year: pulse.size})
        md = (pulsed.damage_fraction - base.damage_fraction) * base.gross_output \
            / (pulse.size * TC_PER_GTC)
        window = scenario.window(config.start_year, config.horizon)
        growth = _growth_series(base, window, growth_basis)
        return cls(scenario_id=scenario.scenario_id, damage_label=spec.label,
                   years=base.years, marginal_damages=md, growth=growth)


def ramsey_discount_factors(growth, params: WelfareParams) -> np.ndarray:
    """Per-year discount factors from the Ramsey rule.

    growth[i] is per-capita net growth into year i of the unperturbed run
    (growth[0] unused). w[0] = 1 and
    w[i] = w[i-1] / ((1 + rho/100) * (1 + growth[i])**eta).
    """
    growth = np.asarray(growth, dtype=float)
    if np.any(growth <= -1.0):
        raise ValueError("growth rate at or below -100%")
    per_year = (1.0 + params.rho / 100.0) * (1.0 + growth) ** params.eta
    factors = np.empty(len(growth))
    factors[0] = 1.0
    acc = 1.0
    for i in range(1, len(growth)):
        acc /= per_year[i]
        factors[i] = acc
    return factors


def scc_from_experiment(experiment: PulseExperiment,
                        params: WelfareParams) -> SccResult:
    """Discount the cached marginal damages at the given preferences."""
    w = ramsey_discount_factors(experiment.growth, params)
    scc = float(np.dot(w, experiment.marginal_damages))
    return SccResult(scc=scc, years=experiment.years,
                     marginal_damages=experiment.marginal_damages,
                     discount_factors=w, params=params,
                     scenario_id=experiment.scenario_id,
                     damage_label=experiment.damage_label)


def compute_scc(scenario: ScenarioPath, config: ModelConfig = ModelConfig(),
                spec: DamageSpec = DamageSpec(),
                params: WelfareParams = WelfareParams(1.0, 1.0),
                pulse: PulseSpec = PulseSpec(),
                experiment: PulseExperiment | None = None) -> SccResult:
    """Marginal 2015 emission pulse, valued against the unperturbed run.

    Marginal damage in year t is the damage-fraction difference times the
    baseline gross output, per tonne of the pulse; the SCC is the
    discounted sum over the model horizon, in $2015 per tC.
    """
    if experiment is None:
        experiment = PulseExperiment.build(scenario, config, spec, pulse)
    return scc_from_experiment(experiment, params)


def compute_scc_by_country(params_by_country: dict, scenario: ScenarioPath,
                           config: ModelConfig = ModelConfig(),
                           spec: DamageSpec = DamageSpec(),
                           pulse: PulseSpec = PulseSpec(),
                           experiment: PulseExperiment | None = None) -> dict:
    """SCC per country, sharing a single pulse experiment."""
    if experiment is None:
        experiment = PulseExperiment.build(scenario, config, spec, pulse)
    return {iso: scc_from_experiment(experiment, p).scc
            for iso, p in params_by_country.items()}
