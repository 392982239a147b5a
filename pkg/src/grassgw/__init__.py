"""Additive Grothendieck-Witt decompositions of even Grassmannians.

The library computes, for an even-dimensional Grassmannian Gr(d, d+e),
how many copies of GW(k) and of K(k) make up its Hermitian K-theory
spectrum, by way of a duality on Young diagrams in a d x e frame and a
sign classification of self-dual GL_n weights.
"""

from .decomp import (
    BundleExpression,
    SpectrumDecomposition,
    Summand,
    Theory,
    count_half_partitions,
    decomposition_from_classification,
    dual_bundle,
    equivariant_gw,
    grassmannian_counts,
    gw_grassmannian,
    gw_middle,
    gw_partial,
    middle_block_dual_check,
    resolve_middle,
    to_json_dict,
)
from .errors import (
    FrameViolation,
    GrassGWError,
    MalformedExpression,
    MalformedSequence,
    NotDominant,
    OddDimension,
    OddFrame,
    TooLarge,
    VerificationMismatch,
)
from .rootdata import (
    BoxClassification,
    RootDatumA,
    SignClass,
    WeightVector,
    classify_box,
    dual_weight,
    is_dominant,
    is_self_dual,
    pair_two_rho_check,
    sign_of,
)
from .young import (
    BinarySequence,
    Frame,
    Partition,
    contains,
    degree,
    dual,
    enumerate_partitions,
    from_binary,
    is_half_partition,
    is_palindrome,
    is_symmetric,
    to_binary,
    transpose,
)

__version__ = "0.1.0"
