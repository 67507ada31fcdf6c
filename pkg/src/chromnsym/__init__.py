"""Chromatic noncommutative symmetric functions of directed graphs.

A digraph D gives an element X_D of NSym, expanded in the noncommutative
power-sum basis Psi, whose commutative image is Stanley's chromatic
symmetric function of the underlying undirected graph.
"""

from .errors import InputError, IntegrityError
from .combinatorics import (
    coarsenings,
    compositions_of,
    descent_set,
    refines,
    sort_to_partition,
)
from .nsym import NSymElement, chi, combine, convert, multiply, psi_generator_in_h
from .sym import (
    MultivariatePolynomial,
    SymElement,
    UndirectedGraph,
    coloring_oracle,
    evaluate_p_truncated,
    h_to_p,
    lambda_of_subset,
    p_to_h,
    stanley_power_sum,
)
from .digraph import (
    Digraph,
    alpha,
    component_tuple,
    relabel,
    total_degree,
    underlying_graph,
)
from .chromatic import (
    GeneratorFamily,
    GeneratorPolynomial,
    chromatic_nsym,
    inward_star,
    rewrite_in_generators,
    star_closed_form,
    substitute_generators,
    verify_projection,
)

__version__ = "0.1.0"
