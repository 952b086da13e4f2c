"""Triple systems, codegree classes and the .3g format"""

from .index import IncidenceIndex
from .io import read_file, read_system, write_file, write_system
from .profile import CodegreeProfile, codegree_profile
from .triple_system import (
    CodegreeClasses,
    PairGraph,
    TripleSystem,
    canonical_triple,
    codegree_classes,
    handshake_holds,
    mask_vertices,
    triple_pairs,
    vertex_mask,
)

__all__ = [
    "CodegreeClasses",
    "CodegreeProfile",
    "IncidenceIndex",
    "PairGraph",
    "TripleSystem",
    "canonical_triple",
    "codegree_classes",
    "codegree_profile",
    "handshake_holds",
    "mask_vertices",
    "read_file",
    "read_system",
    "triple_pairs",
    "vertex_mask",
    "write_file",
    "write_system",
]
