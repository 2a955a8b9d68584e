"""Exact lattice and Seiberg-Witten invariants of plumbing graphs of surface singularities."""

__version__ = "0.1.0"

from .classes import ClassGroup, GroupClass
from .cover import (
    cover_lambda_identity,
    cover_pg_table,
    equivariant_pg,
    intermediate_cover_pg,
    lambda_from_sw,
    sum_formula_rhs,
)
from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    EnumerationCapExceeded,
    InvalidSeifertPair,
    MalformedGraph,
    NotInLprime,
    NotNegativeDefinite,
    NotRational,
    SelfLoop,
    SingularMatrix,
)
from .graph import PlumbingGraph, chain, from_edges, load_graph, parse_graph
from .invariants import conjecture_rhs, h1_rational, is_rational_graph, sw_rational, verify_equality_suite
from .lattice import Cycle, Lattice, cycle_min
from .lifting import (
    anti_nef_lift,
    distinguished_char,
    fundamental_cycle,
    in_script_L,
    laufer_reduce,
    nef_lift,
    unit_cube_rep,
)
from .seifert import SeifertData, neg_cont_fraction, star_graph
