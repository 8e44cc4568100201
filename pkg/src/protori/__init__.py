"""Exact computation with finitely generated profinite abelian groups,
supernatural numbers, completely factorable protori and their duals."""

from .decomposable import CdGroupDescriptor, acd_witness, cd_of_dual, dual_of_cd, quasi_isomorphic
from .dsl import (
    ParseError,
    format_cd,
    format_group,
    format_lattice,
    format_protorus,
    format_sn,
    format_value,
    parse_any,
    parse_cd,
    parse_group,
    parse_lattice,
    parse_protorus,
    parse_sn,
)
from .errors import (
    DimMismatch,
    InvalidDescriptor,
    InvalidExponent,
    InvalidPrime,
    InvalidScalar,
    MismatchedBase,
    NotContained,
    NotTorusFree,
    ProtoriError,
)
from .lattice import LatticeElement, find_conductor, index, join, leq, meet, preimage_mu, scale
from .profinite import (
    FgProfiniteGroup,
    KernelDescriptor,
    NaInvariants,
    isogenous,
    kernel_descriptor,
    na_invariants,
    quotient_mod_k,
    scalar_mul,
    standardize,
    verify_exactness,
)
from .protorus import (
    ProtorusDescriptor,
    TildeDeltaStructure,
    decompose,
    dim,
    dim_na,
    from_profinite,
    isogenous_protori,
    projective_resolution,
    tilde_delta,
    torsion_structure,
)
from .supernatural import (
    INF,
    ONE,
    SupernaturalNumber,
    sn_divides,
    sn_exponent,
    sn_is_finite,
    sn_max,
    sn_min,
    sn_mul,
    sn_type_equivalent,
)
from .truncation import FiniteAbelianGroup, fab_iso, fab_quotient_mod_k, truncate

__version__ = "0.1.0"
