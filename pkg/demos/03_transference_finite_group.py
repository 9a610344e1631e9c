"""
Transference on a finite cyclic group
=====================================

A representation of Z_8 acts on measures with three atoms. Convolving
through the representation with a multiplier that contracts on the
spectrum keeps the norm under control.
"""

import numpy as np

from lpmeasures.group_core import FiniteAbelianGroup, inverse_dft
from lpmeasures.transference import (
    SpectrumSet,
    check_algebra,
    fourier_coefficients,
    random_representation,
    spec_fourier,
    spec_ideal,
    subspace_contraction_estimate,
    subspace_contraction_upper,
    t_convolve,
    verify_main_theorem,
)

G = FiniteAbelianGroup.cyclic(8)
rng = np.random.default_rng(3)
T = random_representation(G, 3, rng, kind="similar")

# Keep two characters of a random measure's spectrum, then take S a little larger.
full = rng.normal(size=3) + 1j * rng.normal(size=3)
coeffs = fourier_coefficients(full, T)
keep = sorted(spec_fourier(full, T).indices)[:2]
mu = coeffs[keep].sum(axis=0)
spec = spec_fourier(mu, T)
S = SpectrumSet.of(G, set(keep) | {0, 1})
print("S:", S.characters())
print("spectrum from coefficients:", spec.characters())
print("spectrum from the ideal:   ", spec_ideal(mu, T).characters())

# A multiplier supported on S, scaled to a certified contraction on L^1_S.
nu = inverse_dft(np.where(S.mask(), rng.normal(size=8) + 1j * rng.normal(size=8), 0), G)
nu = nu * (1 / subspace_contraction_upper(nu, S))
print(f"contraction on L^1_S: estimate {subspace_contraction_estimate(nu, S):.4f}, certified {subspace_contraction_upper(nu, S):.4f}")

report = verify_main_theorem(T, S, nu, mu, seed=0)
print(f"c = {report.c:.3f}, ||nu *_T mu|| / ||mu|| = {report.ratio:.4f} <= c^3 C = {report.bound:.4f}: {report.passed}")

sigma = inverse_dft(rng.normal(size=8) + 0j, G)
res = check_algebra(sigma, nu, mu, T)
print(f"commutation {res.commutation:.1e}, associativity {res.associativity:.1e}, norm ratio {res.norm_bound_ratio:.3f}")
print("nu *_T mu =", np.round(t_convolve(nu, mu, T).masses, 4))
