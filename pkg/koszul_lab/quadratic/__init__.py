"""Quadratic presentations: relation lattices, duals, eigenbasis, Koszul certificates."""

from .presentation import K3_LIKE, Presentation, chop, align_generators, same_relation_space
from .relations import RelationLattice, graded_dim, graded_dims, relation_dim, relation_subspace
from .dual import (
    DualPresentation, annihilator, quadratic_dual, dual_dims, duality_convolution, convolution_vanishes,
)
from .eigenbasis import (
    CyclicEigenbasis, compute_eigenbasis, eigenbasis, is_invariant, permute, vertex_cycle,
)
from .certificate import (
    MODES, CellResult, CertificateResult, check_cell, cross_check_reduction, koszul_certificate,
)

__all__ = [
    "K3_LIKE", "Presentation", "chop", "align_generators", "same_relation_space",
    "RelationLattice", "graded_dim", "graded_dims", "relation_dim", "relation_subspace",
    "DualPresentation", "annihilator", "quadratic_dual", "dual_dims", "duality_convolution",
    "convolution_vanishes",
    "CyclicEigenbasis", "compute_eigenbasis", "eigenbasis", "is_invariant", "permute",
    "vertex_cycle",
    "MODES", "CellResult", "CertificateResult", "check_cell", "cross_check_reduction",
    "koszul_certificate",
]
