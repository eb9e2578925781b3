#!/usr/bin/env python3
"""The asymmetric measurement family and its three preset mixing weights.

One knob (the mixing weight x) decides which correlations survive in which
pair. The three presets produce three different classification tables, and
the x = 0.3 preset shows a counter-intuitive non-monotone entanglement
transfer. The script ends on a fine detail: at x = 0.725 the (3,4) steering
quantifier is not quite zero all the way to full sharpness.
"""
import numpy as np

from entswap import asymmetric_povm, case2_closed_forms, find_extremum, measures, run_swap

PRESETS = {"II": 0.3, "III": 0.725, "IV": 0.8}

print("=" * 76)
print("Classification pattern per preset (grid scan at tolerance 1e-9)")
print("=" * 76)
for case, x in PRESETS.items():
    print(f"case {case} (x = {x}):")
    for pair in ("14", "12", "34"):
        tags = {"negativity": [], "steering3": [], "nonlocality": []}
        for lam in np.linspace(0.05, 1.0, 20):
            outcome = run_swap(asymmetric_povm(x, float(lam)))[0]
            rep = measures.report(outcome.pair_state(pair))
            tags["negativity"].append(rep.negativity > 1e-9)
            tags["steering3"].append(rep.S3 > 1e-9)
            tags["nonlocality"].append(rep.N > 1e-9)
        summary = []
        for name, hits in tags.items():
            if all(hits):
                summary.append(f"{name}: everywhere")
            elif not any(hits):
                summary.append(f"{name}: never")
            else:
                summary.append(f"{name}: {sum(hits)}/20 grid points")
        print(f"  pair ({pair[0]},{pair[1]}): " + "; ".join(summary))

print()
print("=" * 76)
print("x = 0.3: entanglement gained by (1,4) rises while the loss in the")
print("residual pairs is still shrinking, up to the peak")
print("=" * 76)
lam_star, peak = find_extremum("II", None, "14", "negativity")
print(f"(1,4) negativity peaks at lam = {lam_star:.6f} with value {peak:.6f}")
print(f"{'lam':>5} {'E(1,4)':>9} {'E(1,2)':>9} {'E(3,4)':>9}")
for lam in (0.1, 0.2, 0.3, lam_star, 0.4, 0.6, 0.8, 1.0):
    forms = case2_closed_forms(0.3, float(lam))
    print(
        f"{lam:5.2f} {forms.negativity_14:9.6f} {forms.negativity_12:9.6f} "
        f"{forms.negativity_34:9.6f}"
    )

print()
print("=" * 76)
print("x = 0.725 fine print: the (3,4) steering quantifier near lam = 1")
print("=" * 76)
print("The closed-form eigenvalue total for pair (3,4) creeps above 1 on a")
print("narrow sliver ending at full sharpness:")
print(f"{'lam':>10} {'Lambda3':>14} {'steering3':>12}")
for lam in (0.99, 0.999, 0.99995, 0.99998, 1.0):
    forms = case2_closed_forms(0.725, lam)
    rep = forms.report("34")
    print(f"{lam:10.5f} {rep.Lambda3:14.9f} {rep.S3:12.3e}")
print("so 'never steerable' holds on coarse grids but not at lam = 1 itself,")
print("where pairs (1,2) and (3,4) coincide and share S3 ~ 1.47e-3.")
