"""Fibonacci words, word-decomposition trees and degree-based irregularity indices."""

from .fibnum import fib, fib_binet, fib_gcd, gen_fib, lucas
from .indices import f1, fwi, fwi_star, index_report, irr, irr_total, m1, m2, sigma
from .trees import (
    BACKEND,
    Tree,
    decomposition_tree,
    enumerate_trees,
    kragujevac,
    neighbor_partition,
    path,
    star,
)
from .words import (
    Word,
    correlation,
    df_pair,
    fib_word,
    grid_growth,
    grid_word,
    ones_density,
    residue_density,
    rev_fib_word,
    std_fib_word,
)

__version__ = "0.1.0"
