"""Constructive procedures behind the linear signature bounds."""

from .asymptotic import AsymptoticEstimate, affine_signature_bound, asymptotic_sigma
from .blocks import BlockCompletion, Insertion, complete_block
from .certificate import Certificate, main_prop_certificate
from .invariants import defect, defect_bound, handle_deletion_deltas, invariants, signature
from .reduction import Reduction, reduction_constant, reduction_decompose
from .verify import (
    BOUND_FAMILIES,
    BoundFamily,
    BoundReport,
    check_bound,
    enumerate_classes,
    verify_bound,
)

__all__ = [
    "BOUND_FAMILIES",
    "AsymptoticEstimate",
    "BlockCompletion",
    "BoundFamily",
    "BoundReport",
    "Certificate",
    "Insertion",
    "Reduction",
    "affine_signature_bound",
    "asymptotic_sigma",
    "check_bound",
    "complete_block",
    "defect",
    "defect_bound",
    "enumerate_classes",
    "handle_deletion_deltas",
    "invariants",
    "main_prop_certificate",
    "reduction_constant",
    "reduction_decompose",
    "signature",
    "verify_bound",
]
