"""
Random signs on an analytic signal
==================================

Take a smooth signal whose spectrum lives on the positive half-line,
split it into dyadic pieces and put random signs on the pieces. The L^1
norm of the signed sum stays within a fixed multiple of the original,
whatever N is.
"""

import numpy as np

from lpmeasures.grid import Grid, frequencies, make_h1_test, spectrum
from lpmeasures.littlewood_paley import reconstruct_vdp_identity, reconstruction_residual, unconditional_ratio

grid = Grid.centered(2.0**-12, 2**18)
f = make_h1_test(seed=1, band=(1.0, 2.0**11), grid=grid)
s = frequencies(grid)
print(f"||f||_1 = {f.norm1():.3f}, energy at s <= 0: {np.abs(spectrum(f)[s <= 0]).max():.1e}")

# The de la Vallee Poussin identity holds to round-off on such signals,
# and once the blocks cover the band the sum reproduces f.
for N in (6, 10, 12):
    vdp = reconstruct_vdp_identity(f, N).residual
    rec = reconstruction_residual(f, N)
    print(f"N = {N:2d}: identity residual {vdp:.1e}, reconstruction residual {rec:.2e}")

# Largest ratio ||signed sum||_1 / ||f||_1 seen over 100 random sign patterns.
for N in (4, 8, 12):
    report = unconditional_ratio(f, N, trials=100, seed=0)
    print(f"N = {N:2d}: max ratio {report.max_ratio:.4f}")
