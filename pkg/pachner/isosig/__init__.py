"""Canonical labellings and isomorphism signatures."""

from pachner.isosig.labelling import CanonicalLabelling, canonical_labellings
from pachner.isosig.signature import (
    decode,
    encode_labelled,
    is_isomorphic,
    isosig,
    signature_length,
)

__all__ = [
    "CanonicalLabelling",
    "canonical_labellings",
    "decode",
    "encode_labelled",
    "is_isomorphic",
    "isosig",
    "signature_length",
]
