"""Running the climate-economy model.

Loads the bundled scenario aggregates, integrates the carbon cycle,
temperature, and damage blocks over 2015-2300, and prints the headline
trajectory for the middle-of-the-road scenario.
"""

import sccalib as s

scenarios = s.load_scenarios(horizon=2300)
ssp2 = scenarios["SSP2"]

traj = s.run(ssp2, s.ModelConfig(), s.DamageSpec())

print("year   GtC/yr    ppm    degC   damage%   net output ($T)")
for year in (2015, 2050, 2100, 2150, 2200, 2300):
    i = year - 2015
    print(f"{year}   {traj.emissions[i]:6.2f}  {traj.concentration[i]:6.1f}"
          f"  {traj.temperature[i]:6.2f}   {100 * traj.damage_fraction[i]:6.2f}"
          f"    {traj.net_output[i] / 1e12:8.1f}")

# Carbon accounting: a unit pulse decays toward the permanent-box share.
state = s.iam.initial_carbon_state(s.ModelConfig())
print(f"\ninitial airborne stock: {state.boxes.sum():.1f} GtC "
      f"({state.concentration(s.ModelConfig()):.1f} ppm)")

pulse = s.CarbonState(boxes=[0, 0, 0, 0, 0], shares=state.shares,
                      decay=state.decay)
pulse = s.step_carbon(pulse, 1.0)
for years in (0, 20, 100, 500):
    boxes = pulse.boxes * pulse.decay ** years
    print(f"  airborne fraction of a 1 GtC pulse after {years:4d} y: "
          f"{boxes.sum():.3f}")

# Damages scale with warming squared and fall with income growth under the
# default negative vulnerability elasticity.
spec = s.DamageSpec(reference_income=10000.0)
for temp in (1.0, 2.0, 3.0):
    base = s.damage_fraction(temp, 10000.0, spec)
    rich = s.damage_fraction(temp, 40000.0, spec)
    print(f"  T={temp:.0f}: damage {100 * base:.2f}% at reference income, "
          f"{100 * rich:.2f}% at 4x income")
