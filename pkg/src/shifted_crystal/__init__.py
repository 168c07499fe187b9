"""Shifted tableau crystals, shifted evacuation and reversal, the reflection
operators sigma_i and the cactus group action eta_{p,q}."""

from .cactus import braid_order, eta_pq, sigma, verify_cactus_relations
from .graph import CrystalGraph, build, components, lrs_coefficient, strings
from .involutions import complement_tableau, complement_word, eta, evacuate, reversal
from .jdt import SlideRecord, inner_slide, knuth_equivalent, outer_slide, rect, rectify
from .kernels import BACKEND
from .operators import (
    apply_to_tableau,
    is_antiballot,
    is_ballot,
    lattice_walk,
    length_functions,
    lower_primed,
    lower_unprimed,
    raise_primed,
    raise_unprimed,
)
from .shapes import ShiftedShape, complement_shape, strict_partition
from .tableau import (
    ShiftedTableau,
    diagonal_tableau,
    enumerate_tableaux,
    parse_tableau,
    restrict,
    yamanouchi,
)
from .words import Entry, canonicalize, destandardize, parse_word, standardize, weight

__version__ = "0.1.0"
