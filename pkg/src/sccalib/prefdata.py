"""Dataset ingestion and validation.

Loads the bundled snapshots (survey preference indices, cultural dimensions,
the discount-rate literature survey, country populations, and global
scenario trajectories) into validated record types. All loaders are pure:
they read a file, validate it, and return plain data; there is no shared
mutable state.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

REGION_NORTH_AMERICA = "NorthAmerica"
REGION_EUROPE = "Europe"
REGION_REST_OF_WORLD = "RestOfWorld"
REGIONS = (REGION_NORTH_AMERICA, REGION_EUROPE, REGION_REST_OF_WORLD)

# Council-of-Europe members among the surveyed countries; everything outside
# this set and North America falls to RestOfWorld. Override per call if a
# different split is wanted.
EUROPE_COUNTRIES = frozenset({
    "ALB", "AND", "ARM", "AUT", "AZE", "BEL", "BGR", "BIH", "CHE", "CYP",
    "CZE", "DEU", "DNK", "ESP", "EST", "FIN", "FRA", "GBR", "GEO", "GRC",
    "HRV", "HUN", "IRL", "ISL", "ITA", "LIE", "LTU", "LUX", "LVA", "MCO",
    "MDA", "MKD", "MLT", "MNE", "NLD", "NOR", "POL", "PRT", "ROU", "SMR",
    "SRB", "SVK", "SVN", "SWE", "TUR", "UKR",
})
NORTH_AMERICA_COUNTRIES = frozenset({"CAN", "USA"})

SSP_IDS = ("SSP1", "SSP2", "SSP3", "SSP4", "SSP5")


class LoadError(ValueError):
    """A data file is missing, malformed, or fails validation."""


def data_path(name: str) -> Path:
    """Path of a bundled data file."""
    return Path(resources.files("sccalib.data") / name)


def assign_region(iso3: str, europe=EUROPE_COUNTRIES,
                  north_america=NORTH_AMERICA_COUNTRIES) -> str:
    if iso3 in north_america:
        return REGION_NORTH_AMERICA
    if iso3 in europe:
        return REGION_EUROPE
    return REGION_REST_OF_WORLD


@dataclass(frozen=True)
class PreferenceRecord:
    """One country's survey indices plus its population weight."""
    country_code: str          # ISO-3166 alpha-3
    country_name: str
    patience: float            # dimensionless index, roughly -1..+1
    risk_taking: float         # dimensionless index
    population: float          # persons, 2015
    region: str

    def __post_init__(self):
        if not (math.isfinite(self.patience) and math.isfinite(self.risk_taking)):
            raise LoadError(f"{self.country_code}: non-finite preference index")
        if self.population <= 0:
            raise LoadError(f"{self.country_code}: population must be positive")
        if self.region not in REGIONS:
            raise LoadError(f"{self.country_code}: unknown region {self.region!r}")


@dataclass(frozen=True)
class CulturalRecord:
    """One country's cultural-dimension scores (long-term orientation and
    uncertainty avoidance) plus its population weight."""
    country_code: str
    lto: float                 # 0-100
    ua: float                  # 0-~115
    population: float          # persons, 2015

    def __post_init__(self):
        if not 0.0 <= self.lto <= 100.0:
            raise LoadError(f"{self.country_code}: lto {self.lto} outside 0..100")
        if not 0.0 <= self.ua <= 120.0:
            raise LoadError(f"{self.country_code}: ua {self.ua} outside 0..120")
        if self.population <= 0:
            raise LoadError(f"{self.country_code}: population must be positive")


@dataclass(frozen=True)
class LiteratureEstimate:
    """One study x country row of the discount-rate literature survey.

    Point estimates carry lo == hi; the consumption discount rate r is
    informational only.
    """
    study_id: str
    country_code: str
    r_lo: float
    r_hi: float
    rho_lo: float              # % per year
    rho_hi: float
    eta_lo: float              # dimensionless
    eta_hi: float

    def __post_init__(self):
        for lo, hi, name in ((self.r_lo, self.r_hi, "r"),
                             (self.rho_lo, self.rho_hi, "rho"),
                             (self.eta_lo, self.eta_hi, "eta")):
            if lo > hi:
                raise LoadError(
                    f"{self.study_id}/{self.country_code}: {name}_lo {lo} > {name}_hi {hi}")
            if lo < 0:
                raise LoadError(
                    f"{self.study_id}/{self.country_code}: negative {name}")


@dataclass
class ScenarioPath:
    """Annual global trajectories for one scenario.

    All series share the year grid; population in persons, GDP in $2015 per
    year at market exchange rates, emissions in GtC per year (industrial CO2).
    """
    scenario_id: str
    years: np.ndarray
    population: np.ndarray
    gdp: np.ndarray
    emissions: np.ndarray

    def __post_init__(self):
        n = len(self.years)
        if not (len(self.population) == len(self.gdp) == len(self.emissions) == n):
            raise LoadError(f"{self.scenario_id}: series lengths differ")
        if n and np.any(np.diff(self.years) != 1):
            raise LoadError(f"{self.scenario_id}: years not contiguous")
        for name, series in (("population", self.population),
                             ("gdp", self.gdp), ("emissions", self.emissions)):
            if np.any(~np.isfinite(series)) or np.any(series <= 0.0):
                raise LoadError(f"{self.scenario_id}: non-positive {name} value")

    def window(self, start_year: int, end_year: int) -> "ScenarioPath":
        """Slice to [start_year, end_year] inclusive."""
        if start_year < self.years[0] or end_year > self.years[-1]:
            raise LoadError(
                f"{self.scenario_id}: spans {self.years[0]}..{self.years[-1]}, "
                f"requested {start_year}..{end_year}")
        i = np.searchsorted(self.years, start_year)
        j = np.searchsorted(self.years, end_year) + 1
        return ScenarioPath(self.scenario_id, self.years[i:j],
                            self.population[i:j], self.gdp[i:j],
                            self.emissions[i:j])


def read_rows(path, expected_header):
    path = Path(path)
    if not path.exists():
        raise LoadError(f"{path}: file not found")
    with open(path, newline="") as f:
        reader = csv.reader(row for row in f if not row.startswith("#"))
        try:
            header = next(reader)
        except StopIteration:
            raise LoadError(f"{path.name}: empty file, no records") from None
        if header != list(expected_header):
            raise LoadError(
                f"{path.name}: header {header} does not match "
                f"expected {list(expected_header)}")
        rows = list(reader)
    if not rows:
        raise LoadError(f"{path.name}: no records")
    return rows


def _parse_float(raw, path_name, row_num, column):
    try:
        value = float(raw)
    except ValueError:
        raise LoadError(
            f"{path_name} row {row_num}: non-numeric {column} {raw!r}") from None
    if not math.isfinite(value):
        raise LoadError(f"{path_name} row {row_num}: non-finite {column}")
    return value


def load_population(path=None) -> dict:
    """iso3 -> (pop2015, pop2020) in persons."""
    path = Path(path) if path else data_path("population.csv")
    out = {}
    for i, row in enumerate(read_rows(path, ("iso3", "pop2015", "pop2020")), start=2):
        iso, p15, p20 = row
        p15 = _parse_float(p15, path.name, i, "pop2015")
        p20 = _parse_float(p20, path.name, i, "pop2020")
        if p15 <= 0 or p20 <= 0:
            raise LoadError(f"{path.name} row {i}: non-positive population")
        if iso in out:
            raise LoadError(f"{path.name} row {i}: duplicate country code {iso}")
        out[iso] = (p15, p20)
    return out


def load_income(path=None) -> dict:
    """iso3 -> GDP per person, $2015 at market exchange rates."""
    path = Path(path) if path else data_path("income.csv")
    out = {}
    for i, row in enumerate(read_rows(path, ("iso3", "gdp_pc_usd2015")), start=2):
        iso, gdppc = row
        value = _parse_float(gdppc, path.name, i, "gdp_pc_usd2015")
        if value <= 0:
            raise LoadError(f"{path.name} row {i}: non-positive gdp_pc_usd2015")
        out[iso] = value
    return out


def load_falk(path=None, population_path=None, europe=EUROPE_COUNTRIES):
    """Load the preference-index file into PreferenceRecords.

    Population weights come from the population file (2015 column); region
    assignment follows the documented country->region map.
    """
    path = Path(path) if path else data_path("falk.csv")
    populations = load_population(population_path)
    records = []
    seen = set()
    for i, row in enumerate(read_rows(path, ("iso3", "name", "patience", "risktaking")),
                            start=2):
        iso, name, patience, risktaking = row
        if iso in seen:
            raise LoadError(f"{path.name} row {i}: duplicate country code {iso}")
        seen.add(iso)
        if iso not in populations:
            raise LoadError(f"{path.name} row {i}: no population for {iso}")
        records.append(PreferenceRecord(
            country_code=iso,
            country_name=name,
            patience=_parse_float(patience, path.name, i, "patience"),
            risk_taking=_parse_float(risktaking, path.name, i, "risktaking"),
            population=populations[iso][0],
            region=assign_region(iso, europe=europe),
        ))
    return records


def load_hofstede(path=None, population_path=None):
    """Load the cultural-dimension file into CulturalRecords."""
    path = Path(path) if path else data_path("hofstede.csv")
    populations = load_population(population_path)
    records = []
    seen = set()
    for i, row in enumerate(read_rows(path, ("iso3", "lto", "ua")), start=2):
        iso, lto, ua = row
        if iso in seen:
            raise LoadError(f"{path.name} row {i}: duplicate country code {iso}")
        seen.add(iso)
        if iso not in populations:
            raise LoadError(f"{path.name} row {i}: no population for {iso}")
        records.append(CulturalRecord(
            country_code=iso,
            lto=_parse_float(lto, path.name, i, "lto"),
            ua=_parse_float(ua, path.name, i, "ua"),
            population=populations[iso][0],
        ))
    return records


def load_literature(path=None):
    """Load the discount-rate literature survey."""
    path = Path(path) if path else data_path("literature.csv")
    header = ("study", "iso3", "r_lo", "r_hi", "rho_lo", "rho_hi", "eta_lo", "eta_hi")
    records = []
    for i, row in enumerate(read_rows(path, header), start=2):
        study, iso = row[0], row[1]
        values = [_parse_float(v, path.name, i, header[j + 2])
                  for j, v in enumerate(row[2:])]
        records.append(LiteratureEstimate(study, iso, *values))
    return records


def save_falk(records, path):
    with open(path, "w", newline="") as f:
        f.write("iso3,name,patience,risktaking\n")
        for r in records:
            f.write(f"{r.country_code},{r.country_name},{r.patience!r},{r.risk_taking!r}\n")


def save_hofstede(records, path):
    with open(path, "w", newline="") as f:
        f.write("iso3,lto,ua\n")
        for r in records:
            f.write(f"{r.country_code},{r.lto!r},{r.ua!r}\n")


def save_literature(records, path):
    with open(path, "w", newline="") as f:
        f.write("study,iso3,r_lo,r_hi,rho_lo,rho_hi,eta_lo,eta_hi\n")
        for r in records:
            f.write(f"{r.study_id},{r.country_code},{r.r_lo!r},{r.r_hi!r},"
                    f"{r.rho_lo!r},{r.rho_hi!r},{r.eta_lo!r},{r.eta_hi!r}\n")


def _interp_log(years_src, values_src, years_out):
    """Linear interpolation in log space; exact at the source points."""
    return np.exp(np.interp(years_out, years_src, np.log(values_src)))


def extend_scenario(path: ScenarioPath, horizon: int, growth_zero_year: int = 2200,
                    emissions_decay: float | None = None) -> ScenarioPath:
    """Extrapolate an annual scenario beyond its last year.

    Population is held constant; per-capita GDP growth declines linearly from
    its final-decade rate to zero at `growth_zero_year`; emissions decay
    exponentially at the magnitude of the final-decade trend (or at
    `emissions_decay` per year if given).
    """
    end = int(path.years[-1])
    if horizon <= end:
        return path.window(int(path.years[0]), horizon)
    extra = np.arange(end + 1, horizon + 1)

    pop_end = path.population[-1]
    pc = path.gdp / path.population
    lookback = min(10, len(path.years) - 1)
    g_end = math.log(pc[-1] / pc[-1 - lookback]) / lookback
    if emissions_decay is None:
        emissions_decay = abs(
            math.log(path.emissions[-1] / path.emissions[-1 - lookback]) / lookback)

    pc_ext = np.empty(len(extra))
    level = pc[-1]
    for i, year in enumerate(extra):
        frac = max(0.0, (growth_zero_year - year) / (growth_zero_year - end)) \
            if growth_zero_year > end else 0.0
        level *= math.exp(g_end * frac)
        pc_ext[i] = level
    em_ext = path.emissions[-1] * np.exp(-emissions_decay * (extra - end))

    return ScenarioPath(
        path.scenario_id,
        np.concatenate([path.years, extra]),
        np.concatenate([path.population, np.full(len(extra), pop_end)]),
        np.concatenate([path.gdp, pc_ext * pop_end]),
        np.concatenate([path.emissions, em_ext]),
    )


def load_scenarios(path=None, horizon: int = 2300, growth_zero_year: int = 2200,
                   emissions_decay: float | None = None) -> dict:
    """Load scenario source points, annualize, and extrapolate to `horizon`.

    Source points (quinquennial or decadal) are interpolated log-linearly to
    an annual grid, so the annual series passes exactly through every source
    point. Returns scenario_id -> ScenarioPath.
    """
    path = Path(path) if path else data_path("ssp.csv")
    header = ("scenario", "year", "pop_millions", "gdp_billion_usd2015", "emissions_gtc")
    by_scenario = {}
    for i, row in enumerate(read_rows(path, header), start=2):
        ssp, year = row[0], row[1]
        year = int(_parse_float(year, path.name, i, "year"))
        pop = _parse_float(row[2], path.name, i, "pop_millions")
        gdp = _parse_float(row[3], path.name, i, "gdp_billion_usd2015")
        em = _parse_float(row[4], path.name, i, "emissions_gtc")
        if min(pop, gdp, em) <= 0:
            raise LoadError(f"{path.name} row {i}: non-positive value for {ssp} {year}")
        by_scenario.setdefault(ssp, []).append((year, pop, gdp, em))

    missing = [s for s in SSP_IDS if s not in by_scenario]
    if missing:
        raise LoadError(f"{path.name}: missing scenario(s) {missing}")

    out = {}
    for ssp, points in by_scenario.items():
        points.sort()
        years_src = np.array([p[0] for p in points], dtype=float)
        if len(np.unique(years_src)) != len(years_src):
            raise LoadError(f"{path.name}: duplicate year for {ssp}")
        years = np.arange(int(years_src[0]), int(years_src[-1]) + 1)
        pop = _interp_log(years_src, np.array([p[1] for p in points]) * 1e6, years)
        gdp = _interp_log(years_src, np.array([p[2] for p in points]) * 1e9, years)
        em = _interp_log(years_src, np.array([p[3] for p in points]), years)
        annual = ScenarioPath(ssp, years, pop, gdp, em)
        out[ssp] = extend_scenario(annual, horizon, growth_zero_year, emissions_decay)
    return out
