"""Driving the verification registry from Python.

Every identity the library implements is registered as a named check that
pits an independent computation against the enumeration oracle (or against
the gamma machinery) with exact equality.  The CLI command
``gammaexc verify`` wraps exactly this.
"""

from gammaexc.checks import REGISTRY, SUITES, VerifyLimits, run_suite

print(f"{len(REGISTRY)} registered checks across suites: {', '.join(SUITES)}")
print()

for check in REGISTRY:
    if check.suite == "signed_sums":
        print(f"{check.check_id}\n    claim: {check.claim}")
print()

# Small ranges keep this instant; push the limits up to re-prove everything
# the hardware can reach (defaults: A=8, B=6, D=6 take about ten seconds).
limits = VerifyLimits(max_n_a=5, max_n_b=4, max_n_d=4)
results = run_suite("all", limits)
width = max(len(r.check_id) for r in results)
for r in results:
    print(f"{r.status.upper():<8} {r.check_id:<{width}}  ({r.n_range})")
    if r.witness:
        print(f"         -> {r.witness}")

passed = sum(1 for r in results if r.status == "pass")
print(f"\n{passed}/{len(results)} checks passed "
      f"at limits A={limits.max_n_a}, B={limits.max_n_b}, D={limits.max_n_d}")
