"""
Dyadic blocks and their multipliers
===================================

Build the low-pass profile and the dyadic blocks, check that they add up
to one, and look at the kernels in time.
"""

from fractions import Fraction

import numpy as np

from lpmeasures.grid import Grid
from lpmeasures.kernels import fejer_time, h_profile, mn_profile, mn_time, partition_profile, two_sided_profile
from lpmeasures.littlewood_paley import SignPattern, hormander_sup, split_K

# Each block m_n^ is piecewise linear with dyadic breakpoints, so it is
# stored exactly.
for n in range(3):
    print(f"m_{n}^ breakpoints:", [(str(s), str(v)) for s, v in mn_profile(n).breakpoints])
print("h^ breakpoints:", [(str(s), str(v)) for s, v in h_profile().breakpoints])

# The low-pass profile plus blocks 0..N is exactly 1 from -1/2 up to 2^N.
N = 10
total = partition_profile(None, N)
for s in [Fraction(-1, 2), Fraction(0), Fraction(3, 7), Fraction(1000), Fraction(2**N)]:
    print(f"sum at s = {str(s):>5}: {total.exact(s)}")
print("two-sided sum at 2^-6 and 2^10:", two_sided_profile(None, 6, N).exact(Fraction(1, 64)),
      two_sided_profile(None, 6, N).exact(Fraction(1024)))

# Random signs never push the multiplier above 1.
rng = np.random.default_rng(0)
worst = max(partition_profile(SignPattern.random(rng, N + 1).values, N).sup_abs() for _ in range(20))
print("largest |h^ + sum eps_n m_n^| over 20 sign patterns:", worst)

# In time the blocks are modulated Fejer kernels.
x = np.linspace(-6, 6, 7)
print("k_1(x):", np.round(fejer_time(1.0, x), 4))
print("|m_2(x)|:", np.round(np.abs(mn_time(2, x)), 4))

# Hormander integrals of the split kernels stay bounded as N grows.
grid = Grid.window(0.004, 160.0)
for N in (4, 6, 8):
    eps = SignPattern.random(np.random.default_rng(N), N + 1)
    K = split_K(eps, 0, N, grid)
    print(f"N = {N}: B_emp(K2) = {hormander_sup(K[1])[0]:.4f}, B_emp(K4) = {hormander_sup(K[3])[0]:.4f}")
