"""Computing the social cost of carbon.

A 1 MtC pulse added to 2015 emissions is run against the unperturbed
scenario; the damage-fraction difference times baseline gross output gives
the marginal damage path, which Ramsey discounting turns into a single
present value per tonne of carbon.
"""

import sccalib as s

scenarios = s.load_scenarios()
ssp2 = scenarios["SSP2"]

# One pulse experiment serves every preference profile.
experiment = s.PulseExperiment.build(ssp2, s.ModelConfig(), s.DamageSpec(),
                                     s.PulseSpec(year=2015, size=0.001))

print("named discount-rate positions (SSP2, default damages):")
for label, (rho, eta) in s.NAMED_EXPERTS.items():
    result = s.compute_scc(ssp2, params=s.WelfareParams(rho, eta),
                           experiment=experiment)
    print(f"  {label:13s} rho={rho:3.1f}% eta={eta:3.1f} -> "
          f"{result.scc:7.1f} $/tC  ({result.scc * 12 / 44:6.1f} $/tCO2)")

# Per-country values follow from the calibrated preferences.
falk = s.load_falk()
params = s.calibrate_falk(falk, "unweighted")
sccs = s.compute_scc_by_country(params, ssp2, experiment=experiment)
ranked = sorted(sccs, key=sccs.get, reverse=True)
print("\nhighest and lowest national SCCs (survey calibration):")
for iso in ranked[:3]:
    print(f"  {iso}: {sccs[iso]:7.1f} $/tC   "
          f"(rho={params[iso].rho:.2f}, eta={params[iso].eta:.2f})")
print("  ...")
for iso in ranked[-3:]:
    print(f"  {iso}: {sccs[iso]:7.1f} $/tC   "
          f"(rho={params[iso].rho:.2f}, eta={params[iso].eta:.2f})")

# The decomposition identity: the SCC is exactly the discounted sum of the
# stored marginal damages.
result = s.compute_scc(ssp2, params=s.WelfareParams(1.0, 1.5),
                       experiment=experiment)
check = float((result.discount_factors * result.marginal_damages).sum())
print(f"\ndecomposition identity: {result.scc:.6f} == {check:.6f}")

# Discounting dominates: a decade of marginal damages around 2100 is worth
# little to an impatient planner.
w = result.discount_factors
print(f"discount factor at 2050: {w[35]:.3f}, at 2100: {w[85]:.4f}")
