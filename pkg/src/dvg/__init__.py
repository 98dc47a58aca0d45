"""Exact arithmetic with Dieudonne modules of p-divisible groups.

Newton polygons by two independent algorithms (linearized characteristic
polygon, annihilating-relation hull), minimal-module constructions,
Cartier duality, and a seeded perturbation harness for the isogeny-cutoff
bound ceil(c*d / (c+d)) together with the witness showing it is sharp.
"""

from .dieudonne import (DieudonneModule, SmithData, change_basis, dual,
                        make_module, module_from_json, module_to_json,
                        perturb, phi_power, smith_valuations, verschiebung)
from .errors import (CutoffTooSmall, CyclicVectorNotFound, DegenerateRelation,
                     DvgError, EndpointMismatch, HenselFailure, MalformedInput,
                     NotADieudonneModule, NotAUnit, NotInvertible, NotPrime,
                     PrecisionExhausted, RingMismatch)
from .harness import (BoundsTable, ExperimentReport, default_precision,
                      run_table, verify_cutoff_upper, witness_lower)
from .minimal import (WitnessPair, build_minimal, build_simple_minimal,
                      build_traverso_witness)
from .newton import (CutoffBounds, NewtonPolygon, bounds, lies_above,
                     np_compare, np_enumerate, np_from_blocks, np_from_points,
                     np_of_module, np_to_simple_blocks, polygon_from_json,
                     polygon_to_json)
from .relation import (CyclicVector, RelationData, a_number,
                       find_cyclic_vector, newton_from_relation,
                       relation_coefficients, relation_to_json)
from .wittring import (RingParams, WittElem, WittRing, elem_from_json,
                       elem_to_json, make_ring, ring_from_json)

__version__ = "0.1.0"

__all__ = [
    "BoundsTable", "CutoffBounds", "CutoffTooSmall", "CyclicVector",
    "CyclicVectorNotFound", "DegenerateRelation", "DieudonneModule",
    "DvgError", "EndpointMismatch", "ExperimentReport", "HenselFailure",
    "MalformedInput", "NewtonPolygon", "NotADieudonneModule", "NotAUnit",
    "NotInvertible", "NotPrime", "PrecisionExhausted", "RelationData",
    "RingMismatch", "RingParams", "SmithData", "WitnessPair", "WittElem",
    "WittRing", "a_number", "bounds", "build_minimal", "build_simple_minimal",
    "build_traverso_witness", "change_basis", "default_precision", "dual",
    "elem_from_json", "elem_to_json", "find_cyclic_vector", "lies_above",
    "make_module", "make_ring", "module_from_json", "module_to_json",
    "newton_from_relation", "np_compare", "np_enumerate", "np_from_blocks",
    "np_from_points", "np_of_module", "np_to_simple_blocks", "perturb",
    "phi_power", "polygon_from_json", "polygon_to_json",
    "relation_coefficients", "relation_to_json", "ring_from_json",
    "run_table", "smith_valuations", "verschiebung", "verify_cutoff_upper",
    "witness_lower",
]
