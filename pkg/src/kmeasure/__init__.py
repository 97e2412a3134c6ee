"""Partition/word encodings that transport k-measure, and exact q-series identity checks."""

from .codecs import (
    alpha_decode,
    alpha_encode,
    beta_decode,
    beta_encode,
    burge_composite,
    delta_decode,
    delta_encode,
    foata_F,
    theta_decode,
    theta_encode,
)
from .partitions import Frobenius, from_parts, k_measure, to_parts
from .series import Ring, TruncatedSeries
from .verify import IdentityParams, IdentityReport, verify_identity
from .words import OrderSpec, Word

__all__ = [
    "Frobenius",
    "IdentityParams",
    "IdentityReport",
    "OrderSpec",
    "Ring",
    "TruncatedSeries",
    "Word",
    "alpha_decode",
    "alpha_encode",
    "beta_decode",
    "beta_encode",
    "burge_composite",
    "delta_decode",
    "delta_encode",
    "foata_F",
    "from_parts",
    "k_measure",
    "theta_decode",
    "theta_encode",
    "to_parts",
    "verify_identity",
]
