"""Littlewood-Paley decompositions of measures under group representations.

Submodules:

``group_core``
    finite abelian groups, characters, the convolution algebra
``kernels``
    exact piecewise-linear frequency profiles and dyadic kernels
``grid``
    sampled signals on a periodic window of the line
``littlewood_paley``
    dyadic partial sums, reconstruction, Hormander integrals
``transference``
    finite representations acting on measures, spectra, the transferred bound
``analytic``
    translation of measures on the line, weak analyticity, Lebesgue parts
``cocountable``
    symbolic counterexamples on the countable/co-countable sigma algebra
"""

from . import analytic, cocountable, grid, group_core, kernels, littlewood_paley, transference
from .grid import DEFAULT_GRID, Grid, GridSignal
from .group_core import FiniteAbelianGroup, GroupFunction
from .kernels import FrequencyProfile

__version__ = "0.1.0"

__all__ = [
    "analytic",
    "cocountable",
    "grid",
    "group_core",
    "kernels",
    "littlewood_paley",
    "transference",
    "DEFAULT_GRID",
    "Grid",
    "GridSignal",
    "FiniteAbelianGroup",
    "GroupFunction",
    "FrequencyProfile",
]
