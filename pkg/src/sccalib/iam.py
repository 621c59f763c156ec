"""Single-region climate-economy model.

Gross output, population, and CO2 emissions follow an exogenous scenario
path. Emissions feed a five-box atmospheric carbon stock, concentrations
force a one-box energy-balance temperature, and warming removes an
income-dependent quadratic fraction of gross output. A model run owns all
of its state, so any number of runs may execute in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .prefdata import ScenarioPath


@dataclass(frozen=True)
class ModelConfig:
    start_year: int = 2015
    horizon: int = 2300
    timestep: int = 1                    # years; annual integration only
    climate_sensitivity: float = 3.0     # degC per CO2 doubling
    e_folding_time: float = 40.0         # years
    preindustrial_co2: float = 275.0     # ppm
    co2_per_ppm: float = 2.13            # GtC per ppm
    rf_2x: float = 3.7                   # W/m2 at doubled CO2
    initial_co2_ppm: float = 397.0       # stock entering the start year
    initial_temp: float = 0.95           # degC above pre-industrial, start year
    # Box shares of an emission pulse and their e-folding lifetimes (years).
    carbon_shares: tuple = (0.13, 0.20, 0.32, 0.25, 0.10)
    carbon_lifetimes: tuple = (math.inf, 363.0, 74.0, 17.0, 2.0)
    # Long-run growth rate of the emissions that built up the initial stock;
    # sets how the pre-start carbon excess is split across boxes.
    legacy_emission_growth: float = 0.0185

    def __post_init__(self):
        if self.horizon <= self.start_year:
            raise ValueError("horizon must exceed start_year")
        if self.timestep != 1:
            raise ValueError("only annual timesteps are supported")
        for name in ("climate_sensitivity", "e_folding_time", "preindustrial_co2",
                     "co2_per_ppm", "rf_2x"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if len(self.carbon_shares) != len(self.carbon_lifetimes):
            raise ValueError("carbon shares and lifetimes must align")
        if abs(sum(self.carbon_shares) - 1.0) > 1e-12:
            raise ValueError("carbon shares must sum to 1")


@dataclass
class CarbonState:
    """Atmospheric carbon stocks above pre-industrial, split over boxes."""
    boxes: np.ndarray    # GtC
    shares: np.ndarray   # pulse allocation, sums to 1
    decay: np.ndarray    # annual retention factor per box, in (0, 1]

    def __post_init__(self):
        self.boxes = np.asarray(self.boxes, dtype=float)
        self.shares = np.asarray(self.shares, dtype=float)
        self.decay = np.asarray(self.decay, dtype=float)
        if abs(self.shares.sum() - 1.0) > 1e-12:
            raise ValueError("box shares must sum to 1")
        if np.any(self.decay <= 0.0) or np.any(self.decay > 1.0):
            raise ValueError("retention factors must lie in (0, 1]")
        if np.count_nonzero(self.decay == 1.0) != 1:
            raise ValueError("exactly one box must be permanent")

    def concentration(self, config: ModelConfig) -> float:
        """ppm implied by the current stocks."""
        return config.preindustrial_co2 + self.boxes.sum() / config.co2_per_ppm


def retention_factors(config: ModelConfig) -> np.ndarray:
    """Annual retention per box, exp(-1/lifetime); 1 for the permanent box."""
    return np.array([1.0 if math.isinf(tau) else math.exp(-1.0 / tau)
                     for tau in config.carbon_lifetimes])


def initial_carbon_state(config: ModelConfig) -> CarbonState:
    """Carbon state holding the configured start-year excess.

    The excess implied by initial_co2_ppm is distributed across boxes in the
    proportions left behind by an exponentially growing emission history
    (share_i / (1 - retention_i * exp(-g)) for history growth rate g), which
    loads the long-lived boxes more heavily than a fresh pulse would.
    """
    decay = retention_factors(config)
    shares = np.asarray(config.carbon_shares, dtype=float)
    excess = (config.initial_co2_ppm - config.preindustrial_co2) * config.co2_per_ppm
    if excess < 0:
        raise ValueError("initial concentration below pre-industrial")
    g = math.exp(-config.legacy_emission_growth)
    profile = shares / (1.0 - decay * g)
    boxes = excess * profile / profile.sum()
    return CarbonState(boxes=boxes, shares=shares, decay=decay)


def step_carbon(state: CarbonState, emissions: float) -> CarbonState:
    """Advance the box stocks one year: decay, then allocate new emissions."""
    return CarbonState(boxes=state.boxes * state.decay + state.shares * emissions,
                       shares=state.shares, decay=state.decay)


def radiative_forcing(concentration: float, config: ModelConfig) -> float:
    """W/m2 from the CO2 concentration, logarithmic in the ratio."""
    return config.rf_2x * math.log(concentration / config.preindustrial_co2) / math.log(2.0)


def step_climate(temp: float, concentration: float, config: ModelConfig) -> float:
    """Relax temperature toward its equilibrium at the current forcing."""
    if concentration < 0.5 * config.preindustrial_co2:
        raise ValueError(f"concentration {concentration} ppm implausibly low")
    rf = radiative_forcing(concentration, config)
    equilibrium = config.climate_sensitivity * rf / config.rf_2x
    return temp + (equilibrium - temp) / config.e_folding_time


@dataclass(frozen=True)
class DamageSpec:
    """Income-elastic quadratic damage as a fraction of gross output.

    d = coefficient * T^2 * (income / reference_income)**income_elasticity,
    capped to [0, 0.99]. reference_income defaults to the running scenario's
    start-year global per-capita GDP.
    """
    coefficient: float = 0.003467        # fraction of output per degC^2
    income_elasticity: float = -0.36
    reference_income: float | None = None  # $2015 per person
    label: str = "barrage"

    def resolve_reference(self, scenario: ScenarioPath, config: ModelConfig) -> float:
        if self.reference_income is not None:
            return self.reference_income
        i = int(np.searchsorted(scenario.years, config.start_year))
        return float(scenario.gdp[i] / scenario.population[i])


# Alternative impact calibrations, expressed as multiples of the base
# coefficient (meta-analysis fits of the same quadratic form).
DAMAGE_COEFFICIENT_SCALES = {"tol": 0.64, "barrage": 1.0, "howard": 2.46}


def damage_spec(name: str = "barrage", income_elasticity: float = -0.36,
                reference_income: float | None = None) -> DamageSpec:
    """DamageSpec for a named impact-function variant."""
    if name not in DAMAGE_COEFFICIENT_SCALES:
        raise ValueError(f"unknown damage variant {name!r}; "
                         f"expected one of {sorted(DAMAGE_COEFFICIENT_SCALES)}")
    return DamageSpec(coefficient=0.003467 * DAMAGE_COEFFICIENT_SCALES[name],
                      income_elasticity=income_elasticity,
                      reference_income=reference_income, label=name)


def damage_fraction(temp: float, per_capita_income: float, spec: DamageSpec,
                    reference_income: float | None = None) -> float:
    """Fraction of gross output lost at the given warming and income level."""
    if per_capita_income <= 0:
        raise ValueError("income must be positive")
    ref = reference_income if reference_income is not None else spec.reference_income
    if ref is None:
        raise ValueError("reference income not set")
    d = spec.coefficient * temp * temp * (per_capita_income / ref) ** spec.income_elasticity
    return min(max(d, 0.0), 0.99)


@dataclass
class Trajectory:
    """Annual model outputs for one run."""
    years: np.ndarray
    emissions: np.ndarray         # GtC/yr
    concentration: np.ndarray     # ppm
    forcing: np.ndarray           # W/m2
    temperature: np.ndarray       # degC above pre-industrial
    gross_output: np.ndarray      # $2015/yr
    damage_fraction: np.ndarray   # dimensionless
    net_output: np.ndarray        # $2015/yr
    pc_growth: np.ndarray         # per-capita net growth into each year

    def write_csv(self, path, config_hash: str | None = None):
        with open(path, "w", newline="") as f:
            if config_hash:
                f.write(f"# config={config_hash}\n")
            f.write("year,emissions_gtc,concentration_ppm,forcing_wm2,"
                    "temperature_c,gross_output_usd,damage_fraction,"
                    "net_output_usd,pc_growth\n")
            for i, year in enumerate(self.years):
                f.write(f"{int(year)},{self.emissions[i]:.6f},"
                        f"{self.concentration[i]:.4f},{self.forcing[i]:.6f},"
                        f"{self.temperature[i]:.6f},{self.gross_output[i]:.6e},"
                        f"{self.damage_fraction[i]:.8f},{self.net_output[i]:.6e},"
                        f"{self.pc_growth[i]:.8f}\n")


def run(scenario: ScenarioPath, config: ModelConfig = ModelConfig(),
        spec: DamageSpec = DamageSpec(), extra_emissions: dict | None = None) -> Trajectory:
    """Integrate the model over [start_year, horizon].

    `extra_emissions` maps year -> additional GtC, the hook for marginal
    pulse experiments. Deterministic: identical inputs give bit-identical
    trajectories.
    """
    window = scenario.window(config.start_year, config.horizon)
    years = window.years
    n = len(years)
    reference_income = spec.resolve_reference(scenario, config)
    extra = extra_emissions or {}

    emissions = np.array(window.emissions, dtype=float)
    for year, pulse in extra.items():
        idx = int(year) - int(years[0])
        if 0 <= idx < n:
            emissions[idx] += pulse

    concentration = np.empty(n)
    forcing = np.empty(n)
    temperature = np.empty(n)
    dmg = np.empty(n)

    state = initial_carbon_state(config)
    temp = config.initial_temp
    for i in range(n):
        state = step_carbon(state, emissions[i])
        conc = state.concentration(config)
        temp = step_climate(temp, conc, config)
        concentration[i] = conc
        forcing[i] = radiative_forcing(conc, config)
        temperature[i] = temp
        pc_income = window.gdp[i] / window.population[i]
        dmg[i] = damage_fraction(temp, pc_income, spec, reference_income)

    gross = np.array(window.gdp, dtype=float)
    net = gross * (1.0 - dmg)
    pc_net = net / window.population
    pc_growth = np.zeros(n)
    pc_growth[1:] = pc_net[1:] / pc_net[:-1] - 1.0

    return Trajectory(years=years, emissions=emissions, concentration=concentration,
                      forcing=forcing, temperature=temperature, gross_output=gross,
                      damage_fraction=dmg, net_output=net, pc_growth=pc_growth)
