"""Exact computation of Demazure flag multiplicities in sl2[t] fusion
products, Kostka-Foulkes and cocharge Kostka-Foulkes polynomials, and graded
characters, with independent cross-checking routes for every quantity.

All arithmetic is over unbounded integers; every headline number can be
recomputed along at least two unrelated paths (a Chebyshev series quotient
vs a partition recursion for flag multiplicities; a content recursion vs
raising operators vs a tableau statistic for Kostka polynomials).
"""

from .characters import (
    graded_character,
    irreducible_multiplicity,
    irreducible_multiplicity_ses,
    sl2_character,
)
from .chebyshev import (
    cheb,
    cheb_closed,
    cheb_product,
    numerical_multiplicity,
    weyl_generating_series,
)
from .demazure import demazure_dimension, flag_table, graded_multiplicity
from .errors import ConsistencyError
from .hall_littlewood import (
    SymPoly2,
    bernstein,
    cocharge_by_operators,
    complete_homogeneous,
    kostka_by_operators,
    modified_hall_littlewood,
    schur_expand,
    schur_poly,
)
from .kostka import (
    Tableau,
    charge,
    cocharge_kostka,
    kostka_by_charge,
    ssyt_tableaux,
)
from .partitions import (
    Partition,
    demazure_partition,
    level_decompose,
    partition_count,
    partitions_of,
)
from .polynomials import GradedCharacter, IntPoly, IntSeries
from .selfcheck import run_selfcheck

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "GradedCharacter",
    "IntPoly",
    "IntSeries",
    "Partition",
    "SymPoly2",
    "Tableau",
    "bernstein",
    "charge",
    "cheb",
    "cheb_closed",
    "cheb_product",
    "cocharge_by_operators",
    "cocharge_kostka",
    "complete_homogeneous",
    "demazure_dimension",
    "demazure_partition",
    "flag_table",
    "graded_character",
    "graded_multiplicity",
    "irreducible_multiplicity",
    "irreducible_multiplicity_ses",
    "kostka_by_charge",
    "kostka_by_operators",
    "level_decompose",
    "modified_hall_littlewood",
    "numerical_multiplicity",
    "partition_count",
    "partitions_of",
    "run_selfcheck",
    "schur_expand",
    "schur_poly",
    "sl2_character",
    "ssyt_tableaux",
    "weyl_generating_series",
]
