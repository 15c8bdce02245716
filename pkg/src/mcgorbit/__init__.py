"""Exact-arithmetic engine for orbits of matrix representation tuples.

Decides, at desk scale, whether the conjugacy class of an N-tuple of
invertible matrices over a number field has finite orbit under the
elementary moves generating the outer automorphisms of a free group
(cyclic shift, transposition, inversion, twist), and certifies the
generated matrix group finite or infinite where an exact criterion exists.
"""

from .autgen import (
    MoveSet,
    Substitution,
    apply_substitution,
    nielsen_move,
    nielsen_moves,
    peripheral_check,
    substitution_for_move,
)
from .conj import (
    ConjugacyVerdict,
    TraceFingerprint,
    are_conjugate,
    conjugated,
    fingerprint,
    intertwiners,
)
from .finimg import (
    ClosureResult,
    ConsistencyReport,
    ImageVerdict,
    ScreenReport,
    group_closure,
    image_verdict,
    infinite_image_witness,
    jordan_commutator_test,
    screens,
    theorem_gate,
)
from .matrep import (
    GroupShape,
    RepTuple,
    SquareMatrix,
    det_screen,
    direct_sum,
    free_shape,
    is_absolutely_irreducible,
    matrix_finite_order,
    surface_shape,
    tensor,
    word_eval,
)
from .numfield import (
    FieldElement,
    NumberField,
    field_new,
    is_algebraic_integer,
    is_root_of_unity,
    minimal_polynomial,
    rational_field,
)
from .orbit import (
    OrbitBudget,
    OrbitResult,
    enumerate_orbit,
    mcg_finite_check,
    rank1_verdict,
    verify_closure,
)
from .words import Word, free_reduce, gen_word, identity_word, parse_word, word_str

__version__ = "0.1.0"

__all__ = [
    "MoveSet",
    "Substitution",
    "apply_substitution",
    "nielsen_move",
    "nielsen_moves",
    "peripheral_check",
    "substitution_for_move",
    "ConjugacyVerdict",
    "TraceFingerprint",
    "are_conjugate",
    "conjugated",
    "fingerprint",
    "intertwiners",
    "ClosureResult",
    "ConsistencyReport",
    "ImageVerdict",
    "ScreenReport",
    "group_closure",
    "image_verdict",
    "infinite_image_witness",
    "jordan_commutator_test",
    "screens",
    "theorem_gate",
    "GroupShape",
    "RepTuple",
    "SquareMatrix",
    "det_screen",
    "direct_sum",
    "free_shape",
    "is_absolutely_irreducible",
    "matrix_finite_order",
    "surface_shape",
    "tensor",
    "word_eval",
    "FieldElement",
    "NumberField",
    "field_new",
    "is_algebraic_integer",
    "is_root_of_unity",
    "minimal_polynomial",
    "rational_field",
    "OrbitBudget",
    "OrbitResult",
    "enumerate_orbit",
    "mcg_finite_check",
    "rank1_verdict",
    "verify_closure",
    "Word",
    "free_reduce",
    "gen_word",
    "identity_word",
    "parse_word",
    "word_str",
]
