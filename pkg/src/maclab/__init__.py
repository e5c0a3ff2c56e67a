"""Exact-arithmetic verification of partition-indexed Macdonald identities,
Nekrasov-Okounkov hook-length formulas and their q- and (q,t)-deformations.

The package is organised bottom-up: ``partitions`` (diagrams, hooks,
boundary words), ``littlewood`` (core/quotient decomposition), ``vcoding``
(family vectors and V-codings), ``hookprods`` (hook-product theorems and
sign congruences), ``characters`` (Weyl character evaluation and their
hook-product specializations), ``series`` (exact truncated series), and
``identities`` (the end-to-end verifiers).  ``cli`` exposes the ``maclab``
command.
"""

from .partitions import (
    EMPTY,
    BoundaryWord,
    BoxOutOfShape,
    InvalidParts,
    NotInFamily,
    Partition,
    UnbalancedWord,
    decode_word,
    encode_word,
    family_membership,
    partitions_upto,
)
from .littlewood import LittlewoodData, compose, decompose
from .vcoding import (
    FamilyTag,
    VCoding,
    check_weight_identity,
    core_weight,
    enumerate_family,
    family_weight,
    from_family_vector,
    in_family,
    phi,
    phi_inverse,
    r_vector,
    to_family_vector,
    vcoding,
    weight_constant,
)
from .hookprods import (
    HookStats,
    TauFn,
    coding_parity,
    hook_product_counters,
    hook_stats,
    sign_stats,
    verify_hook_product,
)
from .characters import (
    XSpec,
    char_eval,
    char_hook_form,
    char_lemma_stats,
    mu_from_vcoding,
)
from .series import (
    LaurentPoly,
    PolyFraction,
    PolyRing,
    TruncatedSeries,
    euler_products,
    partition_numbers,
    pochhammer,
)
from .identities import (
    MACDONALD,
    NO_IDS,
    QNO_IDS,
    VerifyReport,
    qno_macdonald_coherence,
    qtno_matches_qno_a,
    raw_lattice_check,
    verify_macdonald,
    verify_no,
    verify_qno,
    verify_qtno,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "BoundaryWord",
    "BoxOutOfShape",
    "FamilyTag",
    "HookStats",
    "InvalidParts",
    "LaurentPoly",
    "LittlewoodData",
    "MACDONALD",
    "NO_IDS",
    "NotInFamily",
    "Partition",
    "PolyFraction",
    "PolyRing",
    "QNO_IDS",
    "TauFn",
    "TruncatedSeries",
    "UnbalancedWord",
    "VCoding",
    "VerifyReport",
    "XSpec",
    "char_eval",
    "char_hook_form",
    "char_lemma_stats",
    "check_weight_identity",
    "coding_parity",
    "compose",
    "core_weight",
    "decode_word",
    "decompose",
    "encode_word",
    "enumerate_family",
    "euler_products",
    "family_membership",
    "family_weight",
    "from_family_vector",
    "hook_product_counters",
    "hook_stats",
    "in_family",
    "mu_from_vcoding",
    "partition_numbers",
    "partitions_upto",
    "phi",
    "phi_inverse",
    "pochhammer",
    "qno_macdonald_coherence",
    "qtno_matches_qno_a",
    "r_vector",
    "raw_lattice_check",
    "sign_stats",
    "to_family_vector",
    "vcoding",
    "verify_hook_product",
    "verify_macdonald",
    "verify_no",
    "verify_qno",
    "verify_qtno",
    "weight_constant",
]
