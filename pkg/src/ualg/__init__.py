"""Multi-sorted universal algebra with stack-validated flat terms.

Terms are flat sequences of operation symbols checked by a sort-stack
machine; algebras interpret signatures over arbitrary or finite carriers;
equations are model checked exhaustively over finite algebras.
"""

from .algebra import (
    Algebra,
    AlgebraError,
    FiniteAlgebra,
    Hom,
    HomVerdict,
    UNIT_ELEMENT,
    check_hom,
    compose_hom,
    hom_to_unit,
    make_finite_algebra,
    unit_algebra,
)
from .equations import (
    EqReport,
    EqSpec,
    EqSystem,
    EqVerdict,
    Equation,
    EquationError,
    free_vars,
    holds,
    holds_sampled,
    is_eqalgebra,
    make_eqspec,
)
from .free_algebra import (
    Assignment,
    FreeAlgebra,
    MissingBindingError,
    UniversalityVerdict,
    check_universality,
    enumerate_terms,
    evaluate,
    universal_map,
)
from .signature import (
    OpId,
    Signature,
    SignatureError,
    SortId,
    VarId,
    VarSpec,
    make_signature,
    make_signature_simple,
    make_signature_single_sorted,
    make_varspec,
    vsignature,
)
from .term_vm import (
    ExecReport,
    SortStack,
    Term,
    TermError,
    build_term,
    depth,
    explain_oplist,
    failure_message,
    infer_sort,
    is_term,
    opexec,
    oplistexec,
    parse_term,
    prefix_remove,
    term_decompose,
    term_fold,
    term_from_syms,
)

__all__ = [
    "Algebra",
    "AlgebraError",
    "Assignment",
    "EqReport",
    "EqSpec",
    "EqSystem",
    "EqVerdict",
    "Equation",
    "EquationError",
    "ExecReport",
    "FiniteAlgebra",
    "FreeAlgebra",
    "Hom",
    "HomVerdict",
    "MissingBindingError",
    "OpId",
    "Signature",
    "SignatureError",
    "SortId",
    "SortStack",
    "Term",
    "TermError",
    "UNIT_ELEMENT",
    "UniversalityVerdict",
    "VarId",
    "VarSpec",
    "build_term",
    "check_hom",
    "check_universality",
    "compose_hom",
    "depth",
    "enumerate_terms",
    "evaluate",
    "explain_oplist",
    "failure_message",
    "free_vars",
    "holds",
    "holds_sampled",
    "hom_to_unit",
    "infer_sort",
    "is_eqalgebra",
    "is_term",
    "make_eqspec",
    "make_finite_algebra",
    "make_signature",
    "make_signature_simple",
    "make_signature_single_sorted",
    "make_varspec",
    "opexec",
    "oplistexec",
    "parse_term",
    "prefix_remove",
    "term_decompose",
    "term_fold",
    "term_from_syms",
    "unit_algebra",
    "universal_map",
    "vsignature",
]
