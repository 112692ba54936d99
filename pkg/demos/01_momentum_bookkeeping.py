"""Walk through the two momentum bookkeepings for a plane wave in glass.

The Abraham density E x H / c^2 is the bare field momentum; the Minkowski
density D x B is what actually travels with the wave, because the Abraham
force pumps the difference into the medium as mechanical momentum.  This
script shows the ledger closing numerically.
"""

import numpy as np

from abmink import (
    SI,
    FieldPoint,
    Medium,
    MomentumTag,
    PlaneWave,
    em_quantities,
    mechanical_momentum_density,
    momentum_density,
)

glass = Medium.from_index(1.5)
wave = PlaneWave(E0=1e3, omega=2.4e15, direction=(1, 0, 0),
                 polarization=(0, 1, 0), medium=glass)
fp = wave.field_at(t=0.2e-15)

g_A = momentum_density(fp, MomentumTag.ABRAHAM)
g_M = momentum_density(fp, MomentumTag.MINKOWSKI)
g_mech = mechanical_momentum_density(glass, fp)

print(f"plane wave in n = {glass.n} glass, E0 = {wave.E0:.0f} V/m")
print(f"  Abraham   g_A    = {g_A}")
print(f"  mechanical g_mech = {g_mech}")
print(f"  Minkowski g_M    = {g_M}")
print(f"  ledger |g_A + g_mech - g_M| = "
      f"{np.max(np.abs(g_A + g_mech - g_M)):.3e}")
print(f"  ratio  g_M / g_A along x    = {g_M[0] / g_A[0]:.6f}  (n^2 = "
      f"{glass.n**2})")

# the whole bundle at once
q = em_quantities(fp)
print(f"\n  energy density w = {q.w:.6e} J/m^3")
print(f"  Poynting flux |S| = {np.linalg.norm(q.S):.6e} W/m^2")
print(f"  g_A = S/c^2 check: {np.max(np.abs(q.g_A - q.S / SI.c**2)):.3e}")

# the stress tensor is shared by both bookkeepings and is symmetric
print("\n  stress tensor [Pa]:")
for row in q.stress:
    print("   ", "  ".join(f"{v:+.3e}" for v in row))
print(f"  asymmetry: {np.max(np.abs(q.stress - q.stress.T)):.3e}")

# arbitrary (non-constitutive) field points are allowed too
fp_manual = FieldPoint(E=[1, 0, 0], D=[2 * SI.eps0, 0, 0],
                       H=[0, 1, 0], B=[0, SI.mu0, 0])
print(f"\n  hand-built field point, w = "
      f"{em_quantities(fp_manual).w:.3e} J/m^3")
