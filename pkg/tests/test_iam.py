import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import sccalib as s
from sccalib import iam


CONFIG = s.ModelConfig()


def fresh_state():
    decay = iam.retention_factors(CONFIG)
    return s.CarbonState(boxes=np.zeros(5), shares=CONFIG.carbon_shares,
                         decay=decay)


def closed_form_airborne(tau, config=CONFIG):
    """Independent oracle: geometric decay of each box of a unit pulse."""
    return sum(share * (1.0 if math.isinf(life) else math.exp(-tau / life))
               for share, life in zip(config.carbon_shares, config.carbon_lifetimes))


# --- carbon cycle -----------------------------------------------------------

def test_zero_boxes_zero_emissions_fixed_point():
    state = fresh_state()
    stepped = s.step_carbon(state, 0.0)
    assert np.all(stepped.boxes == 0.0)
    assert stepped.concentration(CONFIG) == pytest.approx(275.0)


def test_unit_pulse_fully_airborne_at_entry():
    state = s.step_carbon(fresh_state(), 1.0)
    assert state.boxes.sum() == pytest.approx(1.0, abs=1e-12)


def test_pulse_decay_matches_closed_form_to_1e9():
    state = s.step_carbon(fresh_state(), 1.0)
    for tau in range(1, 1001):
        state = s.step_carbon(state, 0.0)
        want = closed_form_airborne(tau)
        assert state.boxes.sum() == pytest.approx(want, rel=1e-9), tau
    # frozen closed-form value at 1000 years: the permanent box plus the
    # slow box's remainder
    assert closed_form_airborne(1000) == pytest.approx(0.1427245, abs=1e-6)


def test_pulse_approaches_permanent_share_only_at_very_long_horizons():
    # the slow (363-year) box still holds >1e-3 of the pulse after 1000
    # years; by 5000 years only the permanent share remains
    assert abs(closed_form_airborne(1000) - 0.13) > 1e-3
    assert closed_form_airborne(5000) == pytest.approx(0.13, abs=1e-3)


def test_carbon_mass_accounting_convolution():
    # airborne stock equals the convolution of emissions with the
    # impulse-response of the boxes
    rng = np.random.default_rng(3)
    emissions = rng.uniform(0.0, 20.0, size=120)
    state = fresh_state()
    stocks = []
    for e in emissions:
        state = s.step_carbon(state, e)
        stocks.append(state.boxes.sum())
    for t in (0, 10, 60, 119):
        want = sum(emissions[k] * closed_form_airborne(t - k)
                   for k in range(t + 1))
        assert stocks[t] == pytest.approx(want, rel=1e-9)


def test_step_emissions_distribute_by_share():
    state = s.step_carbon(fresh_state(), 10.0)
    assert np.allclose(state.boxes, 10.0 * np.asarray(CONFIG.carbon_shares))


def test_initial_state_matches_configured_concentration():
    state = iam.initial_carbon_state(CONFIG)
    assert state.concentration(CONFIG) == pytest.approx(CONFIG.initial_co2_ppm)
    assert np.all(state.boxes >= 0.0)


def test_carbon_state_validation():
    with pytest.raises(ValueError):
        s.CarbonState(boxes=np.zeros(2), shares=[0.6, 0.6], decay=[1.0, 0.5])
    with pytest.raises(ValueError):
        s.CarbonState(boxes=np.zeros(2), shares=[0.5, 0.5], decay=[0.9, 0.5])
    with pytest.raises(ValueError):
        s.CarbonState(boxes=np.zeros(2), shares=[0.5, 0.5], decay=[1.0, 1.5])


# --- climate ---------------------------------------------------------------

def test_no_forcing_fixed_point():
    assert s.step_climate(0.0, 275.0, CONFIG) == 0.0


def test_single_step_at_one_doubling():
    # direct evaluation of the update rule: T <- 0 + (3.0 - 0) / 40
    assert s.step_climate(0.0, 550.0, CONFIG) == pytest.approx(0.075, abs=1e-12)


def test_equilibrium_at_one_doubling():
    temp = 0.0
    for _ in range(400):
        temp = s.step_climate(temp, 550.0, CONFIG)
    assert temp == pytest.approx(3.0, rel=0.01)


def test_no_overshoot_and_monotone_rise():
    temp, previous = 0.0, -1.0
    for _ in range(500):
        previous, temp = temp, s.step_climate(temp, 550.0, CONFIG)
        assert temp <= 3.0 + 1e-12
        assert temp >= previous
    low = s.step_climate(0.0, 137.6, CONFIG)
    assert low < 0.0  # sub-preindustrial forcing cools
    with pytest.raises(ValueError):
        s.step_climate(0.0, 100.0, CONFIG)


# --- damages ----------------------------------------------------------------

def test_no_warming_no_damage():
    spec = s.DamageSpec(reference_income=10_000.0)
    assert s.damage_fraction(0.0, 10_000.0, spec) == 0.0


def test_damage_direct_evaluation():
    spec = s.DamageSpec(coefficient=0.003467, income_elasticity=0.0,
                        reference_income=10_000.0)
    assert s.damage_fraction(3.0, 10_000.0, spec) == pytest.approx(
        0.003467 * 9.0, abs=1e-12)


def test_unit_income_ratio_neutralizes_elasticity():
    for eps in (-0.72, -0.36, 0.0, 0.18):
        spec = s.DamageSpec(income_elasticity=eps, reference_income=12_345.0)
        assert s.damage_fraction(2.5, 12_345.0, spec) == pytest.approx(
            s.damage_fraction(2.5, 12_345.0,
                              s.DamageSpec(income_elasticity=0.0,
                                           reference_income=12_345.0)))


def test_damage_capped():
    spec = s.DamageSpec(coefficient=1.0, reference_income=10_000.0)
    assert s.damage_fraction(30.0, 10_000.0, spec) == 0.99


@given(st.floats(0.0, 12.0), st.floats(0.0, 12.0),
       st.floats(500.0, 2e5), st.floats(500.0, 2e5))
@settings(max_examples=200, deadline=None)
def test_damage_monotone_in_temperature_and_income(t1, t2, y1, y2):
    spec = s.DamageSpec(reference_income=10_000.0)  # negative elasticity
    lo_t, hi_t = sorted((t1, t2))
    assert s.damage_fraction(lo_t, y1, spec) <= s.damage_fraction(hi_t, y1, spec)
    lo_y, hi_y = sorted((y1, y2))
    assert s.damage_fraction(t1, hi_y, spec) <= s.damage_fraction(t1, lo_y, spec)


def test_damage_variant_coefficients():
    assert iam.damage_spec("barrage").coefficient == pytest.approx(0.003467)
    assert iam.damage_spec("tol").coefficient == pytest.approx(0.003467 * 0.64)
    assert iam.damage_spec("howard").coefficient == pytest.approx(0.003467 * 2.46)
    with pytest.raises(ValueError):
        iam.damage_spec("nordhaus1992")


# --- full run ----------------------------------------------------------------

def test_run_deterministic(ssp2):
    a = s.run(ssp2, CONFIG, s.DamageSpec())
    b = s.run(ssp2, CONFIG, s.DamageSpec())
    for name in ("concentration", "temperature", "damage_fraction",
                 "net_output", "pc_growth"):
        assert np.array_equal(getattr(a, name), getattr(b, name)), name


def test_zero_coefficient_means_no_damage(ssp2):
    traj = s.run(ssp2, CONFIG, s.DamageSpec(coefficient=0.0))
    assert np.array_equal(traj.net_output, traj.gross_output)
    assert np.all(traj.damage_fraction == 0.0)


def test_2100_temperature_in_sanity_band(ssp2):
    traj = s.run(ssp2, CONFIG, s.DamageSpec())
    t2100 = traj.temperature[2100 - 2015]
    assert 2.5 <= t2100 <= 4.5


def test_run_matches_independent_integration(ssp2):
    """Re-integrate the same update rules in plain Python and compare."""
    traj = s.run(ssp2, CONFIG, s.DamageSpec())
    window = ssp2.window(2015, 2300)
    shares = np.asarray(CONFIG.carbon_shares)
    decay = iam.retention_factors(CONFIG)
    boxes = iam.initial_carbon_state(CONFIG).boxes.copy()
    temp = CONFIG.initial_temp
    ref_income = window.gdp[0] / window.population[0]
    for i in range(len(window.years)):
        boxes = boxes * decay + shares * window.emissions[i]
        conc = 275.0 + boxes.sum() / 2.13
        rf = 3.7 * math.log(conc / 275.0) / math.log(2.0)
        temp = temp + (3.0 * rf / 3.7 - temp) / 40.0
        income = window.gdp[i] / window.population[i]
        d = min(0.99, max(0.0, 0.003467 * temp * temp
                          * (income / ref_income) ** -0.36))
        assert traj.concentration[i] == pytest.approx(conc, rel=1e-12)
        assert traj.temperature[i] == pytest.approx(temp, rel=1e-12)
        assert traj.damage_fraction[i] == pytest.approx(d, rel=1e-12)


def test_pulse_superposition_linearity(ssp2):
    base = s.run(ssp2, CONFIG, s.DamageSpec())
    small = s.run(ssp2, CONFIG, s.DamageSpec(), extra_emissions={2015: 0.001})
    large = s.run(ssp2, CONFIG, s.DamageSpec(), extra_emissions={2015: 0.1})
    dt_small = (small.temperature - base.temperature) / 0.001
    dt_large = (large.temperature - base.temperature) / 0.1
    mask = dt_small > 1e-12
    assert np.all(np.abs(dt_large[mask] / dt_small[mask] - 1.0) < 0.01)


def test_run_requires_scenario_coverage(ssp2):
    config = s.ModelConfig(horizon=2400)
    with pytest.raises(s.LoadError):
        s.run(ssp2, config, s.DamageSpec())


def test_trajectory_export(tmp_path, ssp2):
    traj = s.run(ssp2, CONFIG, s.DamageSpec())
    out = tmp_path / "trajectory.csv"
    traj.write_csv(out, config_hash="cafe")
    lines = out.read_text().splitlines()
    assert lines[0] == "# config=cafe"
    assert lines[1].startswith("year,emissions_gtc,concentration_ppm")
    assert len(lines) == 2 + len(traj.years)


def test_model_config_validation():
    with pytest.raises(ValueError):
        s.ModelConfig(horizon=2000)
    with pytest.raises(ValueError):
        s.ModelConfig(timestep=5)
    with pytest.raises(ValueError):
        s.ModelConfig(climate_sensitivity=-1.0)
    with pytest.raises(ValueError):
        s.ModelConfig(carbon_shares=(0.5, 0.6), carbon_lifetimes=(math.inf, 2.0))
