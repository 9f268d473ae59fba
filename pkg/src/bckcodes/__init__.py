"""Finite BCK-algebras from n-ary block codes.

Construct a zero-rooted lower-triangular algebra from any admissible block
code, verify its axioms exhaustively, regenerate codes through cut
functions, and analyse order, ideals and isomorphism.
"""

from .algebra import (
    Axiom,
    AxiomReport,
    CayleyTable,
    OrderRelation,
    Violation,
    are_isomorphic,
    check_bci,
    check_bck,
    check_bck_alt,
    is_commutative,
    is_implicative,
    is_positive_implicative,
    partial_order,
    relabel,
    violation_holds,
)
from .bridge import (
    AssociatedMatrix,
    ConstructionParams,
    RoundtripReport,
    build_algebra,
    build_matrix,
    construction_params,
    cut_codeword,
    default_points,
    dimension,
    generate_code,
    roundtrip_check,
)
from .codes import (
    BlockCode,
    Codeword,
    ValidationFailure,
    ValidationReport,
    lex_compare,
    sort_ascending,
    validate_admissible,
)
from .errors import (
    ConstructionFailedError,
    DuplicateWordError,
    InadmissibleCodeError,
    ParseError,
    SearchCapExceeded,
)
from .ideals import (
    CandidateReport,
    IdealReport,
    check_candidate,
    check_subset,
    enumerate_closed_right_ideals,
)

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "AxiomReport",
    "CayleyTable",
    "OrderRelation",
    "Violation",
    "are_isomorphic",
    "check_bci",
    "check_bck",
    "check_bck_alt",
    "is_commutative",
    "is_implicative",
    "is_positive_implicative",
    "partial_order",
    "relabel",
    "violation_holds",
    "AssociatedMatrix",
    "ConstructionParams",
    "RoundtripReport",
    "build_algebra",
    "build_matrix",
    "construction_params",
    "cut_codeword",
    "default_points",
    "dimension",
    "generate_code",
    "roundtrip_check",
    "BlockCode",
    "Codeword",
    "ValidationFailure",
    "ValidationReport",
    "lex_compare",
    "sort_ascending",
    "validate_admissible",
    "ConstructionFailedError",
    "DuplicateWordError",
    "InadmissibleCodeError",
    "ParseError",
    "SearchCapExceeded",
    "CandidateReport",
    "IdealReport",
    "check_candidate",
    "check_subset",
    "enumerate_closed_right_ideals",
    "__version__",
]
