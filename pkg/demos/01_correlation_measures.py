#!/usr/bin/env python3
"""Tour of the two-qubit correlation quantifiers.

Walks the Werner family from noise to a pure Bell state and shows where
entanglement, three-setting steering, and CHSH violation switch on. Ends
with a quick census of 500 random mixed states to show how rare nonlocality
is relative to plain entanglement.
"""
import numpy as np

from entswap import bell_state, bell_nonlocality, negativity, report, steering3, werner_state

print("=" * 72)
print("Werner family  w|Bell><Bell| + (1-w) I/4")
print("=" * 72)
print(f"{'w':>6} {'negativity':>11} {'steering3':>11} {'nonlocality':>12}  classification")
for w in np.linspace(0.0, 1.0, 11):
    rep = report(werner_state(w, 1))
    flags = [
        name
        for name, on in [
            ("entangled", rep.entangled),
            ("steerable", rep.steerable),
            ("nonlocal", rep.nonlocal_),
        ]
        if on
    ]
    print(
        f"{w:6.2f} {rep.negativity:11.6f} {rep.S3:11.6f} {rep.N:12.6f}  "
        + (", ".join(flags) or "separable-looking")
    )

print()
print("thresholds (exact): entangled above 1/3 = 0.3333,")
print("                    steerable above 1/sqrt3 = 0.5774,")
print("                    nonlocal  above 1/sqrt2 = 0.7071")

print()
print("=" * 72)
print("A Bell state saturates everything at 1")
print("=" * 72)
bell = np.outer(bell_state(1), bell_state(1).conj())
print("negativity :", negativity(bell))
print("steering3  :", steering3(bell))
print("nonlocality:", bell_nonlocality(bell))

print()
print("=" * 72)
print("Census of 500 random full-rank states")
print("=" * 72)
rng = np.random.default_rng(7)
counts = {"entangled": 0, "steerable": 0, "nonlocal": 0}
for _ in range(500):
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    rho = a @ a.conj().T
    rep = report(rho / np.trace(rho).real)
    counts["entangled"] += rep.entangled
    counts["steerable"] += rep.steerable
    counts["nonlocal"] += rep.nonlocal_
for name, count in counts.items():
    print(f"{name:>10}: {count:3d} / 500")
print("(each class is a strict subset of the previous one)")
