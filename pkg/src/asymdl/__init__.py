"""Codes for 0-deletions, adjacent transpositions and block deletions."""
from .errors import (
    AmbiguousDecoding,
    BCHDecodeFailure,
    CapacityExceeded,
    DecodeError,
    GridTooLarge,
    InapplicablePattern,
    MarkerNotFound,
    NoSolution,
)
from .seqcore import lee_distance, lee_weight, phi, phi_inverse, psi, psi_inverse, vt_syndrome

__version__ = "0.1.0"

__all__ = [
    "AmbiguousDecoding",
    "BCHDecodeFailure",
    "CapacityExceeded",
    "DecodeError",
    "GridTooLarge",
    "InapplicablePattern",
    "MarkerNotFound",
    "NoSolution",
    "lee_distance",
    "lee_weight",
    "phi",
    "phi_inverse",
    "psi",
    "psi_inverse",
    "vt_syndrome",
]
