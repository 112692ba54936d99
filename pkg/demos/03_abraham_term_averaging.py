"""Why the Abraham force hides in stationary optical fields.

The term ((n^2-1)/c^2) dS/dt oscillates at twice the optical frequency, so
averaged over whole periods it vanishes to machine precision.  Slowing the
envelope down (intensity modulation) is what makes it observable; that is
the whispering-gallery proposal in demo 04.
"""

import numpy as np

from abmink import Medium, PlaneWave, SI, abraham_term, time_average

water = Medium.from_index(1.33)
wave = PlaneWave(E0=2e3, omega=2.4e15, direction=(0, 0, 1),
                 polarization=(1, 0, 0), medium=water)

period = 2 * np.pi / wave.omega
peak = (water.n**2 - 1) / SI.c**2 * wave.E0 * wave.H0 * wave.omega
print(f"n = {water.n}, optical period = {period:.3e} s")
print(f"instantaneous Abraham-term peak = {peak:.4e} N/m^3")

for n_periods in (1, 2, 5, 10):
    ts = np.linspace(0.0, n_periods * period, n_periods * 128 + 1)
    samples = [(t, abraham_term(water, wave.poynting_time_derivative(t=t)))
               for t in ts]
    avg = time_average(samples, period)
    print(f"  average over {n_periods:2d} period(s): |<f>|/peak = "
          f"{np.max(np.abs(avg)) / peak:.2e}")

# a partial trailing period is discarded rather than biasing the mean
ts = np.linspace(0.0, 1.7 * period, 220)
samples = [(t, abraham_term(water, wave.poynting_time_derivative(t=t)))
           for t in ts]
avg = time_average(samples, period)
naive = np.mean([s[1] for s in samples], axis=0)
print(f"\n1.7 periods sampled: naive mean/peak = "
      f"{np.max(np.abs(naive)) / peak:.2e}, "
      f"whole-period average/peak = {np.max(np.abs(avg)) / peak:.2e}")
