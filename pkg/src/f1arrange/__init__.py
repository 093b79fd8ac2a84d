"""Exact characteristic polynomials and torifiability of hyperplane arrangement complements."""

from .arrangement import (
    Arrangement,
    Hyperplane,
    coordinate_arrangement,
    cone,
    delete,
    format_arrangement,
    is_boolean,
    is_essential,
    normalize,
    parse_arrangement,
    read_arrangement,
    restrict,
)
from .f1 import taylor_at_one, torification_verdict, torus_decomposition
from .graphs import Graph, build_cycle_arrangement, is_cactus, parse_graph, read_graph, theorem44_report
from .lattice import (
    build_lattice,
    characteristic_polynomial,
    charpoly_delres,
    charpoly_mobius,
    grothendieck_class,
    mobius,
)
from .oracle import FieldSpec, certify, count_complement, count_points, good_prime
from .polynomial import IntPolynomial

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "Hyperplane",
    "coordinate_arrangement",
    "cone",
    "delete",
    "format_arrangement",
    "is_boolean",
    "is_essential",
    "normalize",
    "parse_arrangement",
    "read_arrangement",
    "restrict",
    "taylor_at_one",
    "torification_verdict",
    "torus_decomposition",
    "Graph",
    "build_cycle_arrangement",
    "is_cactus",
    "parse_graph",
    "read_graph",
    "theorem44_report",
    "build_lattice",
    "characteristic_polynomial",
    "charpoly_delres",
    "charpoly_mobius",
    "grothendieck_class",
    "mobius",
    "FieldSpec",
    "certify",
    "count_complement",
    "count_points",
    "good_prime",
    "IntPolynomial",
]
