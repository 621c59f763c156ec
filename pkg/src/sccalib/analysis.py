"""Aggregates, cumulative-frequency curves, preference clusters, and
sensitivity sweeps over the per-country SCC results."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .calibrate import WelfareParams, average_params
from .iam import ModelConfig, damage_spec
from .scc import PulseExperiment, PulseSpec, scc_from_experiment


@dataclass(frozen=True)
class AggregateReport:
    """The four aggregation rows for one calibration variant, $2015/tC."""
    variant: str
    average_scc: float                 # one country, one vote
    weighted_average_scc: float        # one person, one vote
    scc_at_average_params: float
    scc_at_weighted_params: float


def aggregate(scc_by_country: dict, params_by_country: dict, populations: dict,
              scc_fn, variant: str = "") -> AggregateReport:
    """Average the per-country SCCs and evaluate the SCC at average preferences.

    scc_fn evaluates the SCC at an arbitrary WelfareParams on the same model
    setup that produced scc_by_country.
    """
    if not scc_by_country:
        raise ValueError("empty SCC map")
    if set(scc_by_country) != set(params_by_country):
        raise ValueError("SCC and parameter maps must share a key set")
    isos = sorted(scc_by_country)
    sccs = np.array([scc_by_country[i] for i in isos])
    pops = np.array([populations[i] for i in isos])
    return AggregateReport(
        variant=variant,
        average_scc=float(sccs.mean()),
        weighted_average_scc=float(np.average(sccs, weights=pops)),
        scc_at_average_params=scc_fn(average_params(params_by_country)),
        scc_at_weighted_params=scc_fn(average_params(params_by_country, populations)),
    )


def cumulative_frequency(scc_by_country: dict, weights: dict | None = None):
    """Step-function CDF of the per-country SCCs.

    Returns (iso3, scc, cumulative fraction) sorted by SCC; with weights the
    cumulative column is the population fraction.
    """
    if not scc_by_country:
        raise ValueError("empty SCC map")
    items = sorted(scc_by_country.items(), key=lambda kv: (kv[1], kv[0]))
    if weights is None:
        w = np.ones(len(items))
    else:
        w = np.array([weights[iso] for iso, _ in items], dtype=float)
    cum = np.cumsum(w) / w.sum()
    return [(iso, scc, float(c)) for (iso, scc), c in zip(items, cum)]


@dataclass(frozen=True)
class ClusterResult:
    k: int
    assignments: dict       # iso3 -> cluster id, 0-based
    centroids: np.ndarray   # (k, 2) in (rho, eta)
    inertia: float          # total within-cluster squared distance


def _lloyd(points: np.ndarray, k: int, rng) -> tuple[np.ndarray, np.ndarray, float]:
    n = len(points)
    # k-means++ seeding
    centroids = np.empty((k, 2))
    centroids[0] = points[rng.integers(n)]
    d2 = ((points - centroids[0]) ** 2).sum(axis=1)
    for j in range(1, k):
        total = d2.sum()
        if total <= 0:
            centroids[j] = points[rng.integers(n)]
        else:
            centroids[j] = points[rng.choice(n, p=d2 / total)]
        d2 = np.minimum(d2, ((points - centroids[j]) ** 2).sum(axis=1))

    labels = np.full(n, -1)
    for _ in range(300):
        dists = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
        new_labels = dists.argmin(axis=1)   # ties resolve to the lowest index
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
        for j in range(k):
            members = points[labels == j]
            if len(members):
                centroids[j] = members.mean(axis=0)
            else:
                # re-seed an empty cluster at the point farthest from its centroid
                centroids[j] = points[dists.min(axis=1).argmax()]
    inertia = float(((points - centroids[labels]) ** 2).sum())
    return labels, centroids, inertia


def kmeans(points: dict, k: int = 4, restarts: int = 64, seed: int = 0) -> ClusterResult:
    """Lloyd's algorithm on (rho, eta) pairs, best of seeded restarts.

    Deterministic for a fixed seed; assignment ties break toward the lowest
    cluster index. Raises for k = 0 or k greater than the number of points.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if k > len(points):
        raise ValueError(f"k={k} exceeds the {len(points)} points")
    isos = sorted(points)
    array = np.array([[points[i].rho, points[i].eta] if isinstance(points[i], WelfareParams)
                      else list(points[i]) for i in isos], dtype=float)
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(restarts):
        labels, centroids, inertia = _lloyd(array, k, rng)
        if best is None or inertia < best[2] - 1e-12:
            best = (labels, centroids.copy(), inertia)
    labels, centroids, inertia = best
    assignments = {iso: int(lbl) for iso, lbl in zip(isos, labels)}
    return ClusterResult(k=k, assignments=assignments, centroids=centroids,
                         inertia=inertia)


def cluster_summary(result: ClusterResult, scc_by_country: dict,
                    populations: dict, incomes: dict) -> list:
    """Per-cluster means: SCC, rho, eta, total population, mean income.

    Income is the population-weighted per-capita GDP of the members, at
    market exchange rates.
    """
    rows = []
    for j in range(result.k):
        members = sorted(iso for iso, lbl in result.assignments.items() if lbl == j)
        pops = np.array([populations[i] for i in members])
        sccs = np.array([scc_by_country[i] for i in members])
        incs = np.array([incomes[i] for i in members])
        rows.append({
            "cluster": j,
            "members": members,
            "mean_scc": float(sccs.mean()),
            "mean_rho": float(result.centroids[j][0]),
            "mean_eta": float(result.centroids[j][1]),
            "population": float(pops.sum()),
            "mean_income": float(np.average(incs, weights=pops)),
        })
    return rows


SWEEP_DIMENSIONS = ("scenario", "damage_spec", "income_elasticity")


def sweep(dimension: str, variants, params_by_country: dict, scenarios: dict,
          config: ModelConfig = ModelConfig(), damage: str = "barrage",
          income_elasticity: float = -0.36, scenario_id: str = "SSP2",
          pulse: PulseSpec = PulseSpec()) -> dict:
    """Average SCC across countries for each variant of one model dimension.

    Averaging matches the top aggregation row (one country, one vote).
    Returns variant -> average SCC.
    """
    if dimension not in SWEEP_DIMENSIONS:
        raise ValueError(f"unknown sweep dimension {dimension!r}")
    out = {}
    for variant in variants:
        if dimension == "scenario":
            if variant not in scenarios:
                raise ValueError(f"unknown scenario {variant!r}")
            scenario = scenarios[variant]
            spec = damage_spec(damage, income_elasticity)
        elif dimension == "damage_spec":
            scenario = scenarios[scenario_id]
            spec = damage_spec(variant, income_elasticity)
        else:
            scenario = scenarios[scenario_id]
            spec = damage_spec(damage, float(variant))
        experiment = PulseExperiment.build(scenario, config, spec, pulse)
        sccs = [scc_from_experiment(experiment, p).scc
                for p in params_by_country.values()]
        out[variant] = float(np.mean(sccs))
    return out
