"""H_t gadgets, greedy packing, the lift and Steiner baselines"""

from .gadget import Gadget, build_gadget
from .lift import guaranteed_copies, lift, recommended_t
from .packing import Embedding, GreedyPacker, PackingResult, greedy_pack
from .steiner import FANO_PLANE, bose_steiner

__all__ = [
    "Embedding",
    "FANO_PLANE",
    "Gadget",
    "GreedyPacker",
    "PackingResult",
    "bose_steiner",
    "build_gadget",
    "greedy_pack",
    "guaranteed_copies",
    "lift",
    "recommended_t",
]
