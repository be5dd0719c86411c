"""Structural tools for fork-free graphs: forbidden-configuration detectors,
perfect divisions, and certified colourings within C(omega+1, 2) colours."""

from .canon import canonical_form, enumerate_graphs
from .classes import CLASSES, GraphClass, get_class
from .coloring import color_fork_butterfly, color_fork_gem, color_perfect, divide_and_color, greedy_extend
from .divisibility import PerfectDivision, find_perfect_division, search_minimal_non_pd, verify_perfectly_divisible
from .graph import Graph, complement, from_edges, induced
from .graph6 import parse_graph6, to_graph6
from .patterns import (
    OddBalloon,
    Occurrence,
    PatternId,
    contains_induced,
    find_odd_antihole,
    find_odd_balloon,
    find_odd_hole,
    is_free,
    is_perfect,
    minimum_odd_balloon,
)
from .solvers import chromatic_number, clique_number, exact_coloring, is_proper
from .structure import (
    anticonnected_components,
    audit_lemma_2_4,
    expand_homogeneous,
    find_homogeneous_set,
    is_bisimplicial,
    is_homogeneous_set,
    is_trisimplicial,
)

__version__ = "0.1.0"
