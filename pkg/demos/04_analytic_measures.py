"""
Analytic measures on the line and two counterexamples
=====================================================

A measure is analytic here when every trajectory t -> mu(A + t) has no
spectrum on the negative half-line. We decompose one, push it through
operators that commute with translation, split it against a reference
measure, and then look at two measures where the conclusions fail.
"""

from fractions import Fraction

import numpy as np

from lpmeasures.analytic import (
    FiberedMeasure,
    LineMeasure,
    analytic_lebesgue_parts,
    commuting_operator_check,
    convolution_operator,
    lp_decompose_measure,
    modulus_decrease_factors,
    orbit_continuity_modulus,
    weakly_analytic_check,
)
from lpmeasures.cocountable import CoCountable, Countable, cocountable_demo, example_measure, gaussian_counterexample_trajectory
from lpmeasures.grid import Grid, GridSignal, make_h1_test

grid = Grid.centered(2.0**-6, 2**14)
mu = LineMeasure.from_density(make_h1_test(seed=0, band=(1.0, 8.0), grid=grid))
print("analyticity:", weakly_analytic_check(mu).status)

# Dyadic pieces: every piece is a density, and they add back to mu.
pieces = lp_decompose_measure(mu, 4)
print(f"reconstruction error {pieces.reconstruction_error:.1e}, atom mass in pieces {pieces.piece_atom_mass}")
print("piece norms:", [round(b.norm(), 4) for b in [pieces.low] + pieces.blocks])

# Translation is norm continuous on analytic measures.
deltas = [grid.delta * 2**j for j in (3, 2, 1, 0)]
omega = orbit_continuity_modulus(mu, deltas)
print("orbit modulus:", np.round(omega, 5), "decrease factors:", np.round(modulus_decrease_factors(omega), 3))

# Convolution with an even bump commutes with translation and keeps analyticity.
bump = GridSignal.from_function(grid, lambda x: np.exp(-x * x))
rep = commuting_operator_check(convolution_operator(bump), mu)
print(f"convolved measure analytic: {rep.passed} (commutation residual {rep.commutation_residual:.1e})")

# Split against sigma = Lebesgue on one copy of the line, zero on a second copy.
ones, zero = GridSignal(grid, np.ones(grid.n)), GridSignal.zeros(grid)
sigma = FiberedMeasure((LineMeasure.from_density(ones), LineMeasure.from_density(zero)))
pair = FiberedMeasure((mu, LineMeasure.from_density(make_h1_test(seed=1, band=(1.0, 8.0), grid=grid))))
parts = analytic_lebesgue_parts(pair, sigma)
print(f"absolutely continuous part: {parts.absolutely_continuous_part.status}, singular part: {parts.singular_part.status}")

# Counterexample 1: a Gaussian trajectory has half its energy at negative frequencies.
g, defect = gaussian_counterexample_trajectory()
print(f"Gaussian trajectory defect {defect:.4f}")

# Counterexample 2: nu - delta_0 on the countable/co-countable sets.
sets = [Countable([0, Fraction(1, 2)]), CoCountable([0]), CoCountable([1, 2]), Countable([3])]
report = cocountable_demo(example_measure(), sets, [Fraction(k, 4) for k in range(-12, 13)])
for tr in report.trajectories:
    print(f"{tr.set_repr:>24}: nonzero at t = {[str(Fraction(t)) for t in tr.nonzero_times]}")
print(report.conclusion)
