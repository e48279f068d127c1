"""dnacodes: algebraic construction, verification and bounds for DNA codes."""

from . import bounds, codes, dna, formats, nho, quinary, ring
from .codes import (
    Codebook,
    ConstraintSpec,
    VerificationReport,
    check_constraint,
    check_constraints,
    closure_under,
    greedy_lexicode,
    max_code_size_exact,
    min_hamming_distance,
    parse_constraints,
)
from .nho import BlockPair
from .ring import RingElement

__version__ = "0.1.0"

__all__ = [
    "BlockPair",
    "Codebook",
    "ConstraintSpec",
    "RingElement",
    "VerificationReport",
    "bounds",
    "check_constraint",
    "check_constraints",
    "closure_under",
    "codes",
    "dna",
    "formats",
    "greedy_lexicode",
    "max_code_size_exact",
    "min_hamming_distance",
    "nho",
    "parse_constraints",
    "quinary",
    "ring",
]
