"""Command-line entry point.

Subcommands reproduce the full set of result tables and figure data:

    sccalib calibrate   per-country welfare parameters per variant
    sccalib scc         per-country SCC, aggregate table, named-rate runs
    sccalib sweep       scenario / damage / income-elasticity sensitivity
    sccalib cluster     k-means preference clusters with per-cluster stats
    sccalib figures     cumulative-frequency and scatter data plus SVG plots

A declarative config file (INI key = value sections) can set any option;
command-line flags override it. Every emitted table carries a comment line
naming the hash of the resolved configuration, and repeated runs with a
fixed config produce byte-identical files.

Exit codes: 0 success, 1 usage error, 2 data validation error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import configparser
import hashlib
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from . import analysis, calibrate, iam, prefdata, scc

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3

NAMED_EXPERTS = scc.NAMED_EXPERTS

ALL_VARIANTS = list(calibrate.VARIANT_KINDS)


class UsageError(ValueError):
    """Bad flags or config values."""


@dataclass
class RunConfig:
    """Resolved run options; defaults reproduce the central case."""
    falk_path: str = ""
    hofstede_path: str = ""
    literature_path: str = ""
    population_path: str = ""
    income_path: str = ""
    ssp_path: str = ""
    variants: tuple = tuple(ALL_VARIANTS)
    scenarios: tuple = ("SSP2",)
    damage: str = "barrage"
    elasticity: float = -0.36
    pulse_year: int = 2015
    pulse_size: float = 0.001
    horizon: int = 2300
    seed: int = 0
    clusters: int = 4
    restarts: int = 64
    out: str = "out"
    per_tco2: bool = False
    named_experts: bool = False
    experts_csv: str = ""
    # the published USA literature average needs one study dropped; the
    # default keeps every row and the override is opt-in
    usa_exclusion: bool = False
    growth_basis: str = "pc_net"

    def config_hash(self) -> str:
        lines = []
        for f in fields(self):
            if f.name == "out":   # where files land, not what is computed
                continue
            value = getattr(self, f.name)
            if isinstance(value, tuple):
                value = ",".join(str(v) for v in value)
            lines.append(f"{f.name}={value}")
        digest = hashlib.sha256("\n".join(sorted(lines)).encode()).hexdigest()
        return digest[:12]

    def scale(self) -> float:
        """Unit conversion for reported SCCs ($/tC -> $/tCO2 when asked)."""
        return 12.0 / 44.0 if self.per_tco2 else 1.0

    def unit_column(self) -> str:
        return "scc_usd2015_per_tco2" if self.per_tco2 else "scc_usd2015_per_tc"


def _parse_bool(raw: str) -> bool:
    if raw.lower() in ("1", "true", "yes", "on"):
        return True
    if raw.lower() in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"expected a boolean, got {raw!r}")


def read_config_file(path: str) -> dict:
    """Flatten an INI config into RunConfig field overrides."""
    parser = configparser.ConfigParser()
    if not Path(path).exists():
        raise UsageError(f"config file not found: {path}")
    parser.read(path)
    known = {f.name: f for f in fields(RunConfig)}
    out = {}
    for section in parser.sections():
        for key, raw in parser.items(section):
            if key not in known:
                raise UsageError(f"unknown config key {key!r} in [{section}]")
            current = getattr(RunConfig(), key)
            if isinstance(current, bool):
                out[key] = _parse_bool(raw)
            elif isinstance(current, int):
                out[key] = int(raw)
            elif isinstance(current, float):
                out[key] = float(raw)
            elif isinstance(current, tuple):
                out[key] = tuple(v.strip() for v in raw.split(",") if v.strip())
            else:
                out[key] = raw
    return out


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS defaults keep subparsers from clobbering values already
    # parsed before the subcommand; absent flags simply never appear.
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="INI config file; flags override it")
    common.add_argument("--variant", action="append", dest="variants",
                        choices=ALL_VARIANTS, help="calibration variant (repeatable)")
    common.add_argument("--scenario", action="append", dest="scenarios",
                        choices=list(prefdata.SSP_IDS), help="scenario (repeatable)")
    common.add_argument("--damage", choices=sorted(iam.DAMAGE_COEFFICIENT_SCALES),
                        help="impact-function variant")
    common.add_argument("--elasticity", type=float,
                        help="income elasticity of vulnerability")
    common.add_argument("--horizon", type=int, help="last model year")
    common.add_argument("--seed", type=int, help="clustering seed")
    common.add_argument("--out", help="output directory")
    common.add_argument("--per-tco2", action="store_true",
                        help="report SCC per tonne of CO2 instead of carbon")
    common.add_argument("--named-experts", action="store_true",
                        help="also run the named discount-rate positions")
    common.add_argument("--experts-csv",
                        help="CSV of expert rho/eta pairs (label,rho_pct,eta)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="sccalib", parents=[common],
        description="Preference-calibrated social cost of carbon toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("calibrate", parents=[common],
                   help="emit per-country welfare parameters")
    sub.add_parser("scc", parents=[common],
                   help="emit per-country SCC and aggregates")
    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="emit sensitivity tables")
    p_sweep.add_argument("--dimension",
                         choices=["scenario", "damage", "elasticity", "all"],
                         default="all")
    p_cluster = sub.add_parser("cluster", parents=[common],
                               help="emit preference clusters")
    p_cluster.add_argument("--k", type=int, default=None, help="cluster count")
    sub.add_parser("figures", parents=[common],
                   help="emit figure CSVs and SVG plots")
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        cfg = replace(cfg, **read_config_file(args.config))
    overrides = {}
    if getattr(args, "variants", None):
        overrides["variants"] = tuple(dict.fromkeys(args.variants))
    if getattr(args, "scenarios", None):
        overrides["scenarios"] = tuple(dict.fromkeys(args.scenarios))
    for flag, name in (("damage", "damage"), ("elasticity", "elasticity"),
                       ("horizon", "horizon"), ("seed", "seed"), ("out", "out"),
                       ("experts_csv", "experts_csv"), ("per_tco2", "per_tco2"),
                       ("named_experts", "named_experts")):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[name] = value
    if getattr(args, "k", None) is not None:
        overrides["clusters"] = args.k
    cfg = replace(cfg, **overrides)
    if cfg.horizon <= 2015:
        raise UsageError("horizon must be after 2015")
    if cfg.clusters <= 0:
        raise UsageError("cluster count must be positive")
    return cfg


@dataclass
class Workspace:
    """Loaded datasets and model inputs shared by the commands."""
    config: RunConfig
    falk: list
    hofstede: list
    literature: list
    populations: dict        # iso3 -> pop2015, survey countries
    hof_populations: dict
    incomes: dict
    scenarios: dict
    params_by_variant: dict  # variant -> iso3 -> WelfareParams

    @classmethod
    def load(cls, cfg: RunConfig) -> "Workspace":
        falk = prefdata.load_falk(cfg.falk_path or None,
                                  cfg.population_path or None)
        hofstede = prefdata.load_hofstede(cfg.hofstede_path or None,
                                          cfg.population_path or None)
        literature = prefdata.load_literature(cfg.literature_path or None)
        incomes = prefdata.load_income(cfg.income_path or None)
        scenarios = prefdata.load_scenarios(cfg.ssp_path or None,
                                            horizon=cfg.horizon)
        exclusions = calibrate.USA_EVANS2004_EXCLUSION if cfg.usa_exclusion else ()
        params = {}
        for variant in cfg.variants:
            if variant == calibrate.FALK_UNWEIGHTED:
                params[variant] = calibrate.calibrate_falk(falk, "unweighted")
            elif variant == calibrate.FALK_POP_WEIGHTED:
                params[variant] = calibrate.calibrate_falk(falk, "pop_weighted")
            elif variant == calibrate.FALK_EUR_NAM:
                params[variant] = calibrate.calibrate_falk(falk, "eur_nam")
            elif variant == calibrate.LITERATURE_OBSERVED:
                params[variant] = calibrate.calibrate_literature(
                    literature, falk, "observed", exclusions)
            elif variant == calibrate.LITERATURE_IMPUTED:
                params[variant] = calibrate.calibrate_literature(
                    literature, falk, "imputed")
            elif variant == calibrate.HOFSTEDE:
                params[variant] = calibrate.calibrate_hofstede(hofstede)
            else:
                raise UsageError(f"unknown variant {variant!r}")
        return cls(
            config=cfg,
            falk=falk,
            hofstede=hofstede,
            literature=literature,
            populations={r.country_code: r.population for r in falk},
            hof_populations={r.country_code: r.population for r in hofstede},
            incomes=incomes,
            scenarios=scenarios,
            params_by_variant=params,
        )

    def model_config(self) -> iam.ModelConfig:
        return iam.ModelConfig(horizon=self.config.horizon)

    def damage(self) -> iam.DamageSpec:
        return iam.damage_spec(self.config.damage, self.config.elasticity)

    def pulse(self) -> scc.PulseSpec:
        return scc.PulseSpec(self.config.pulse_year, self.config.pulse_size)

    def experiment(self, scenario_id: str,
                   spec: iam.DamageSpec | None = None) -> scc.PulseExperiment:
        return scc.PulseExperiment.build(self.scenarios[scenario_id],
                                         self.model_config(),
                                         spec or self.damage(), self.pulse(),
                                         growth_basis=self.config.growth_basis)

    def weights_for(self, variant: str) -> dict:
        return self.hof_populations if variant == calibrate.HOFSTEDE \
            else self.populations


def _open_table(out_dir: Path, name: str, cfg: RunConfig):
    out_dir.mkdir(parents=True, exist_ok=True)
    f = open(out_dir / name, "w", newline="")
    f.write(f"# config={cfg.config_hash()}\n")
    return f


def cmd_calibrate(ws: Workspace, out_dir: Path) -> list:
    """Write calibrations.csv (long format), assumptions.csv (survey and
    literature variants, wide), and hofstede.csv (cultural-dimension
    variant)."""
    cfg = ws.config
    written = []

    out_dir.mkdir(parents=True, exist_ok=True)
    calibrate.export_params_csv(ws.params_by_variant,
                                out_dir / "calibrations.csv",
                                config_hash=cfg.config_hash())
    written.append(out_dir / "calibrations.csv")

    falk_variants = [v for v in cfg.variants if v != calibrate.HOFSTEDE]
    if falk_variants:
        with _open_table(out_dir, "assumptions.csv", cfg) as f:
            header = ["iso3"]
            for v in falk_variants:
                header += [f"rho_{v}", f"eta_{v}"]
            f.write(",".join(header) + "\n")
            isos = sorted(ws.params_by_variant[falk_variants[0]])
            for iso in isos:
                cells = [iso]
                for v in falk_variants:
                    p = ws.params_by_variant[v][iso]
                    cells += [f"{p.rho:.4f}", f"{p.eta:.4f}"]
                f.write(",".join(cells) + "\n")
        written.append(out_dir / "assumptions.csv")

    if calibrate.HOFSTEDE in cfg.variants:
        params = ws.params_by_variant[calibrate.HOFSTEDE]
        by_code = {r.country_code: r for r in ws.hofstede}
        with _open_table(out_dir, "hofstede.csv", cfg) as f:
            f.write("iso3,lto,ua,prtp,rra\n")
            for iso in sorted(params):
                r, p = by_code[iso], params[iso]
                f.write(f"{iso},{r.lto:.2f},{r.ua:.2f},{p.rho:.4f},{p.eta:.4f}\n")
        written.append(out_dir / "hofstede.csv")
    return written


def _scc_tables(ws: Workspace, scenario_id: str):
    """Per-country SCCs and aggregate rows for every configured variant."""
    spec = ws.damage()
    experiment = ws.experiment(scenario_id, spec)

    def scc_at(params):
        return scc.scc_from_experiment(experiment, params).scc

    per_country = {}
    reports = {}
    for variant, params in ws.params_by_variant.items():
        sccs = {iso: scc_at(p) for iso, p in params.items()}
        per_country[variant] = sccs
        reports[variant] = analysis.aggregate(
            sccs, params, ws.weights_for(variant), scc_at, variant)
    return per_country, reports, experiment


def cmd_scc(ws: Workspace, out_dir: Path) -> list:
    """Write results_by_country.csv and aggresults.csv; optionally the named
    discount-rate runs and a user-supplied expert sample."""
    cfg = ws.config
    written = []
    scale = cfg.scale()
    for scenario_id in cfg.scenarios:
        per_country, reports, experiment = _scc_tables(ws, scenario_id)
        suffix = "" if len(cfg.scenarios) == 1 else f"_{scenario_id.lower()}"

        name = f"results_by_country{suffix}.csv"
        with _open_table(out_dir, name, cfg) as f:
            f.write("iso3,variant,scenario,damage_spec,rho,eta,"
                    f"{cfg.unit_column()}\n")
            for variant in cfg.variants:
                params = ws.params_by_variant[variant]
                for iso in sorted(params):
                    p = params[iso]
                    f.write(f"{iso},{variant},{scenario_id},{cfg.damage},"
                            f"{p.rho:.4f},{p.eta:.4f},"
                            f"{per_country[variant][iso] * scale:.4f}\n")
        written.append(out_dir / name)

        name = f"aggresults{suffix}.csv"
        with _open_table(out_dir, name, cfg) as f:
            f.write("row," + ",".join(cfg.variants) + "\n")
            rows = [
                ("average_scc", lambda r: r.average_scc),
                ("weighted_average_scc", lambda r: r.weighted_average_scc),
                ("scc_at_average_params", lambda r: r.scc_at_average_params),
                ("scc_at_weighted_params", lambda r: r.scc_at_weighted_params),
            ]
            for label, pick in rows:
                cells = [f"{pick(reports[v]) * scale:.4f}" for v in cfg.variants]
                f.write(label + "," + ",".join(cells) + "\n")
        written.append(out_dir / name)

        if cfg.named_experts:
            name = f"experts{suffix}.csv"
            with _open_table(out_dir, name, cfg) as f:
                f.write(f"label,rho,eta,{cfg.unit_column()}\n")
                for label, (rho, eta) in NAMED_EXPERTS.items():
                    value = scc.scc_from_experiment(
                        experiment, calibrate.WelfareParams(rho, eta)).scc
                    f.write(f"{label},{rho},{eta},{value * scale:.4f}\n")
            written.append(out_dir / name)

        if cfg.experts_csv:
            sample = _load_expert_sample(cfg.experts_csv)
            name = f"expert_sample_scc{suffix}.csv"
            with _open_table(out_dir, name, cfg) as f:
                f.write(f"label,rho,eta,{cfg.unit_column()},cumulative_fraction\n")
                values = [(label, rho, eta,
                           scc.scc_from_experiment(
                               experiment, calibrate.WelfareParams(rho, eta)).scc)
                          for label, rho, eta in sample]
                values.sort(key=lambda item: (item[3], item[0]))
                for i, (label, rho, eta, value) in enumerate(values, start=1):
                    f.write(f"{label},{rho},{eta},{value * scale:.4f},"
                            f"{i / len(values):.6f}\n")
            written.append(out_dir / name)
    return written


def _load_expert_sample(path: str) -> list:
    rows = prefdata.read_rows(Path(path), ("label", "rho_pct", "eta"))
    out = []
    for i, row in enumerate(rows, start=2):
        label, rho, eta = row
        out.append((label, float(rho), float(eta)))
    return out


def cmd_sweep(ws: Workspace, out_dir: Path, dimension: str = "all") -> list:
    """Write scenarios.csv / impact.csv / elasticities.csv; rows are sweep
    variants, columns are calibration variants (top-row averaging)."""
    cfg = ws.config
    jobs = {
        "scenario": ("scenarios.csv", list(prefdata.SSP_IDS)),
        "damage": ("impact.csv", ["tol", "barrage", "howard"]),
        "elasticity": ("elasticities.csv", [0.18, 0.0, -0.18, -0.36, -0.72]),
    }
    selected = list(jobs) if dimension == "all" else [dimension]
    scale = cfg.scale()
    written = []
    scenario_id = cfg.scenarios[0]
    dim_map = {"scenario": "scenario", "damage": "damage_spec",
               "elasticity": "income_elasticity"}
    for dim in selected:
        name, variants = jobs[dim]
        columns = {}
        for cal_variant, params in ws.params_by_variant.items():
            columns[cal_variant] = analysis.sweep(
                dim_map[dim], variants, params, ws.scenarios,
                ws.model_config(), damage=cfg.damage,
                income_elasticity=cfg.elasticity, scenario_id=scenario_id,
                pulse=ws.pulse())
        with _open_table(out_dir, name, cfg) as f:
            f.write(dim + "," + ",".join(cfg.variants) + "\n")
            for v in variants:
                cells = [f"{columns[c][v] * scale:.4f}" for c in cfg.variants]
                f.write(f"{v}," + ",".join(cells) + "\n")
        written.append(out_dir / name)
    return written


def cmd_cluster(ws: Workspace, out_dir: Path) -> list:
    """Write cluster.csv (one row per centroid) and the assignments."""
    cfg = ws.config
    variant = calibrate.FALK_UNWEIGHTED \
        if calibrate.FALK_UNWEIGHTED in cfg.variants else cfg.variants[0]
    params = ws.params_by_variant[variant]
    scenario_id = cfg.scenarios[0]
    experiment = ws.experiment(scenario_id)
    sccs = {iso: scc.scc_from_experiment(experiment, p).scc
            for iso, p in params.items()}
    result = analysis.kmeans(params, k=cfg.clusters, restarts=cfg.restarts,
                             seed=cfg.seed)
    weights = ws.weights_for(variant)
    incomes = {iso: ws.incomes[iso] for iso in params}
    summary = analysis.cluster_summary(result, sccs, weights, incomes)
    scale = cfg.scale()
    written = []
    with _open_table(out_dir, "cluster.csv", cfg) as f:
        f.write("cluster,members,mean_scc,mean_rho,mean_eta,"
                "population_millions,mean_income_usd2015\n")
        for row in summary:
            f.write(f"{row['cluster']},{len(row['members'])},"
                    f"{row['mean_scc'] * scale:.4f},{row['mean_rho']:.4f},"
                    f"{row['mean_eta']:.4f},{row['population'] / 1e6:.1f},"
                    f"{row['mean_income']:.0f}\n")
    written.append(out_dir / "cluster.csv")
    with _open_table(out_dir, "cluster_assignments.csv", cfg) as f:
        f.write("iso3,cluster\n")
        for iso in sorted(result.assignments):
            f.write(f"{iso},{result.assignments[iso]}\n")
    written.append(out_dir / "cluster_assignments.csv")
    return written


def _setup_matplotlib():
    import matplotlib
    matplotlib.use("Agg")
    matplotlib.rcParams["svg.hashsalt"] = "sccalib"
    import matplotlib.pyplot as plt
    return plt


def _save_svg(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None})


def cmd_figures(ws: Workspace, out_dir: Path) -> list:
    """Write the cumulative-frequency and scatter data with SVG plots."""
    cfg = ws.config
    plt = _setup_matplotlib()
    scale = cfg.scale()
    scenario_id = cfg.scenarios[0]
    experiment = ws.experiment(scenario_id)

    def scc_map(params):
        return {iso: scc.scc_from_experiment(experiment, p).scc * scale
                for iso, p in params.items()}

    written = []
    unweighted = calibrate.calibrate_falk(ws.falk, "unweighted")
    weighted = calibrate.calibrate_falk(ws.falk, "pop_weighted")
    scc_u = scc_map(unweighted)
    scc_w = scc_map(weighted)

    curves = [
        ("falk_unweighted", analysis.cumulative_frequency(scc_u)),
        ("falk_pop_weighted",
         analysis.cumulative_frequency(scc_w, ws.populations)),
    ]
    if cfg.experts_csv:
        sample = _load_expert_sample(cfg.experts_csv)
        values = {label: scc.scc_from_experiment(
            experiment, calibrate.WelfareParams(rho, eta)).scc * scale
            for label, rho, eta in sample}
        curves.append(("experts", analysis.cumulative_frequency(values)))

    with _open_table(out_dir, "cdf.csv", cfg) as f:
        f.write(f"curve,label,{cfg.unit_column()},cumulative_fraction\n")
        for name, curve in curves:
            for label, value, cum in curve:
                f.write(f"{name},{label},{value:.4f},{cum:.6f}\n")
    written.append(out_dir / "cdf.csv")

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name, curve in curves:
        xs = [value for _, value, _ in curve]
        ys = [cum for _, _, cum in curve]
        ax.step(xs, ys, where="post", label=name)
    ax.set_xscale("log")
    ax.set_xlabel(f"social cost of carbon ({cfg.unit_column()})")
    ax.set_ylabel("cumulative frequency")
    ax.legend()
    fig.tight_layout()
    _save_svg(fig, out_dir / "cdf.svg")
    plt.close(fig)
    written.append(out_dir / "cdf.svg")

    for name, attr in (("time", "rho"), ("risk", "eta")):
        with _open_table(out_dir, f"{name}.csv", cfg) as f:
            f.write(f"iso3,{attr},{cfg.unit_column()}\n")
            for iso in sorted(unweighted):
                f.write(f"{iso},{getattr(unweighted[iso], attr):.4f},"
                        f"{scc_u[iso]:.4f}\n")
        fig, ax = plt.subplots(figsize=(6, 4.5))
        ax.scatter([getattr(unweighted[i], attr) for i in sorted(unweighted)],
                   [scc_u[i] for i in sorted(unweighted)], s=14)
        ax.set_yscale("log")
        label = "pure time preference (%/yr)" if attr == "rho" \
            else "relative risk aversion"
        ax.set_xlabel(label)
        ax.set_ylabel(f"SCC ({cfg.unit_column()})")
        fig.tight_layout()
        _save_svg(fig, out_dir / f"{name}.svg")
        plt.close(fig)
        written += [out_dir / f"{name}.csv", out_dir / f"{name}.svg"]

    hof_params = calibrate.calibrate_hofstede(ws.hofstede)
    scc_h = scc_map(hof_params)
    shared = sorted(set(scc_h) & set(scc_u))
    with _open_table(out_dir, "hofstede_vs_falk.csv", cfg) as f:
        f.write(f"iso3,scc_hofstede,scc_falk\n")
        for iso in shared:
            f.write(f"{iso},{scc_h[iso]:.4f},{scc_u[iso]:.4f}\n")
    fig, ax = plt.subplots(figsize=(5.5, 5))
    ax.scatter([scc_h[i] for i in shared], [scc_u[i] for i in shared], s=14)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("SCC, cultural-dimension calibration")
    ax.set_ylabel("SCC, preference-survey calibration")
    fig.tight_layout()
    _save_svg(fig, out_dir / "hofstede_vs_falk.svg")
    plt.close(fig)
    written += [out_dir / "hofstede_vs_falk.csv", out_dir / "hofstede_vs_falk.svg"]
    return written


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = resolve_config(args)
        ws = Workspace.load(cfg)
        out_dir = Path(cfg.out)
        if args.command == "calibrate":
            written = cmd_calibrate(ws, out_dir)
        elif args.command == "scc":
            written = cmd_scc(ws, out_dir)
        elif args.command == "sweep":
            written = cmd_sweep(ws, out_dir, args.dimension)
        elif args.command == "cluster":
            written = cmd_cluster(ws, out_dir)
        elif args.command == "figures":
            written = cmd_figures(ws, out_dir)
        else:  # pragma: no cover - argparse enforces the choices
            raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except prefdata.LoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    for path in written:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
