"""Lower-bound instance generators, the pointer-jumping reduction, and gap checks."""

from .chain import ChainInstance, JumpInstance, jump_to_chain
from .cliques import (
    CliqueGadget,
    clique_gadget,
    coloring_certificate,
    find_prime,
    gen_chained_clique_instance,
    is_prime,
    minimal_party_size,
)
from .geometric import gen_explicit_interval_gadget, gen_square_chain3_gadget, gen_strip_region_gadget
from .maximal import (
    decode_maximal_index,
    decode_rs_index,
    gen_maximal_index_gadget,
    gen_rs_index_gadget,
    random_rs_selection,
)
from .output import GadgetOutput
from .verify import GapReport, verify_gap

__all__ = [name for name in dir() if not name.startswith("_")]
