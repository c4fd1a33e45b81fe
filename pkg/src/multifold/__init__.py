"""Compile rational polynomials into strip-folding scripts, simulate the
resulting geometry symbolically in the rolling parameter, and solve for
real and complex roots through the alignment condition."""

from .algebra import (
    HornerChain,
    Interval,
    Poly,
    Rational,
    SturmChain,
    cauchy_root_bound,
    count_real_roots,
    eval_horner,
    horner_chain,
    isolate_real_roots,
    negate_variable,
    poly_parse,
    poly_to_text,
    resultant,
    squarefree_part,
    sturm_chain,
)
from .compiler import (
    FoldScript,
    FoldStep,
    StripPair,
    compile,
    compile_steps,
    iteration_step,
    placement_policy,
    seed_pair,
    validate_script,
)
from .document import FoldScriptDocument, document_from_script, parse_script, serialize_script
from .errors import (
    DomainError,
    InternalConsistencyError,
    MultifoldError,
    PolyParseError,
)
from .reduction import (
    RealImagReduction,
    diff_roots_poly,
    imag_part_poly,
    real_part_poly,
    reduce,
    sum_roots_poly,
)
from .simulator import (
    ConcreteScene,
    Element,
    Extents,
    Scene,
    check_intersections,
    elaborate,
    evaluate,
    extent_violations,
    free_parameters,
    paper_extents,
    symbolic_gap,
    total_strip_length,
)
from .solver import (
    ComplexRootReport,
    DEFAULT_TOLERANCE,
    EvenTouchError,
    NoRootError,
    NotIsolatedError,
    RealRoot,
    RootReport,
    certify,
    roll_to_alignment,
    solve_complex,
    solve_real,
)

__all__ = [
    "ComplexRootReport",
    "ConcreteScene",
    "DEFAULT_TOLERANCE",
    "DomainError",
    "Element",
    "EvenTouchError",
    "Extents",
    "FoldScript",
    "FoldScriptDocument",
    "FoldStep",
    "HornerChain",
    "InternalConsistencyError",
    "Interval",
    "MultifoldError",
    "NoRootError",
    "NotIsolatedError",
    "Poly",
    "PolyParseError",
    "Rational",
    "RealImagReduction",
    "RealRoot",
    "RootReport",
    "Scene",
    "StripPair",
    "SturmChain",
    "cauchy_root_bound",
    "certify",
    "check_intersections",
    "compile",
    "compile_steps",
    "count_real_roots",
    "diff_roots_poly",
    "document_from_script",
    "elaborate",
    "eval_horner",
    "evaluate",
    "extent_violations",
    "free_parameters",
    "horner_chain",
    "imag_part_poly",
    "isolate_real_roots",
    "iteration_step",
    "negate_variable",
    "paper_extents",
    "parse_script",
    "placement_policy",
    "poly_parse",
    "poly_to_text",
    "real_part_poly",
    "reduce",
    "resultant",
    "roll_to_alignment",
    "seed_pair",
    "serialize_script",
    "solve_complex",
    "solve_real",
    "squarefree_part",
    "sturm_chain",
    "symbolic_gap",
    "total_strip_length",
    "validate_script",
]
