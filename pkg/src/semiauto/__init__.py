"""Algebra of finite deterministic semiautomata.

Classification (strongly connected, permutation, synchronizing,
quasi-ideal), transition semigroups and their minimal ideals, and the
decomposition of a quasi-ideal automaton into a permutation factor and a
synchronizing factor.
"""

from .core import (
    Automaton,
    AutomatonError,
    Transformation,
    apply,
    compose,
    format_word,
    identity,
    image,
    make_automaton,
    parse_word,
    rank,
    transformation_of_word,
)
from .semigroup import SemigroupTooLarge, TransitionSemigroup, cayley_table, class_of, semigroup
from .structure import (
    ImagePartition,
    MinimalIdeal,
    QuasiIdealReport,
    find_reset_word,
    idempotent_image_partition,
    is_permutation,
    is_right_simple,
    is_strongly_connected,
    is_synchronizing,
    minimal_ideal,
    quasi_ideal_report,
    reset_word_to,
)
from .congruence import (
    CongruenceError,
    Partition,
    is_congruence,
    pi_congruence,
    quotient,
    rho_congruence,
)
from .product import (
    StateMap,
    FactorPairEvidence,
    direct_product,
    find_isomorphism,
    is_homomorphism,
    factor_pair_check,
    factor_pair_iso,
)
from .decompose import (
    DecompositionReport,
    InternalInconsistency,
    decompose,
    roundtrip,
    verify_product,
)

__version__ = "0.1.0"
