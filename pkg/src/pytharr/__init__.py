"""Exact computations with Pythagorean hyperplane arrangements.

An arrangement is built from reference points ``q_v`` and a gain graph: the
edge ``u -> v`` with gain ``g`` contributes the hyperplane of points ``x``
with ``|x - q_u|^2 - |x - q_v|^2 = g``.  Everything is computed over the
rationals.
"""

from .arrangement import (
    Arrangement,
    Hyperplane,
    LabeledSemilattice,
    build_arrangement,
    central_sets,
    flat_of,
    intersection_semilattice,
    is_central,
)
from .gaingraph import Circle, Edge, GainGraph, all_circles, balance_closure, is_balanced, walk_gain
from .genericity import (
    EdgeSpaceHyperplane,
    FlatOfF,
    balance_hyperplane,
    bias_restricted_flats,
    central_circuits,
    centres_correspondence,
    derived_arrangement,
    flat_of_gain,
    flats_lattice,
    forbidden_hyperplane,
    is_gain_generic,
    system_matrix,
)
from .matroid import VectorMatroid, circuits, fundamental_circuit, modular_ideal_from_linear_class
from .pointconfig import Configuration, affinographic_configuration, direction, matroid_at_infinity
from .transport import (
    Triple,
    are_equivalent,
    parallelism_canonicalization,
    realize_circuit_as_circle,
    transport_to,
    transported_gain,
    tree_representation,
)
