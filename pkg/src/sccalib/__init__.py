"""Preference-calibrated social cost of carbon.

Country-level time and risk preferences calibrated from survey and
literature data, a compact single-region climate-economy model, and the
analysis layer that aggregates, clusters, and sweeps the resulting social
cost of carbon.
"""

from .prefdata import (
    CulturalRecord,
    LiteratureEstimate,
    LoadError,
    PreferenceRecord,
    ScenarioPath,
    load_falk,
    load_hofstede,
    load_income,
    load_literature,
    load_population,
    load_scenarios,
)
from .calibrate import (
    CalibrationLine,
    CalibrationVariant,
    WelfareParams,
    apply_line,
    average_params,
    calibrate_falk,
    calibrate_hofstede,
    calibrate_literature,
    fit_two_point_line,
    percentile,
    PUBLISHED_VARIANTS,
    USA_EVANS2004_EXCLUSION,
)
from .iam import (
    CarbonState,
    DamageSpec,
    ModelConfig,
    Trajectory,
    damage_fraction,
    damage_spec,
    run,
    step_carbon,
    step_climate,
)
from .scc import (
    NAMED_EXPERTS,
    PulseExperiment,
    PulseSpec,
    SccResult,
    compute_scc,
    compute_scc_by_country,
    ramsey_discount_factors,
)
from .analysis import (
    AggregateReport,
    ClusterResult,
    aggregate,
    cluster_summary,
    cumulative_frequency,
    kmeans,
    sweep,
)

__version__ = "0.1.0"
