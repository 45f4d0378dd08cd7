"""profcat: a finite-scale kernel for profunctors and indexed profunctors
over 2-categories, with limits computed by universal-element search and the
structural theorems machine-checked on concrete instances."""

from .budget import DEFAULT_BUDGET, resolve_budget
from .errors import (
    AdjunctionInvalid,
    BudgetExceeded,
    DanglingRef,
    DocumentError,
    DocumentSyntaxError,
    GenerationFailed,
    MalformedDocument,
    Mismatch,
    NoTerminal,
    ProfcatError,
    SchemaError,
    TooLarge,
)
from .report import VerificationReport
from .fincat import (
    FinCategory,
    FinFunctor,
    FinNatTrans,
    FunctorCategory,
    compose_functor,
    compose_nat,
    constant_functor,
    functor_category,
    identity_functor,
    identity_nat,
    is_essentially_surjective,
    is_faithful,
    is_full,
    is_iso,
    opposite_category,
    product_category,
    validate_category,
    validate_functor,
    validate_nat_trans,
)
from .prof import (
    FinProfunctor,
    LimitAssignment,
    PowerResult,
    ProfMorphism,
    ProfNatTrans,
    auto_limit_assignment,
    end_of,
    hom_profunctor,
    identity_morphism,
    is_limit,
    is_monic_hetero,
    limit_functor,
    limits_of,
    opposite_profunctor,
    power_profunctor,
    pullback_profunctor,
    pullback_transformation,
    representing_check,
    square_commutes,
    validate_morphism,
    validate_prof_nat_trans,
    validate_profunctor,
)
from .twocat import Adjunction, FinTwoCategory, check_adjunction, validate_two_category
from .indexed import (
    IndexedCategory,
    IndexedFunctor,
    IndexedProfunctor,
    check_extranaturality_pointwise,
    check_extranaturality_transformation,
    induced_profunctor_morphism,
    validate_all,
    validate_indexed_category,
    validate_indexed_functor,
    validate_indexed_profunctor,
)
from .examples import (
    BuiltSub2Cat,
    Sub2CatSpec,
    build_conical_ip,
    build_ends_ip,
    build_finset_skeleton,
    build_hom_ip,
    build_kan_ip,
    build_sub2cat,
    build_weighted_ip,
    full_sub2cat,
    hom_from,
)
from .theorems import (
    RelativeAdjunctionData,
    check_creation,
    check_lifting,
    check_preservation,
    check_reflection,
    natural_family_check,
    relative_adjunction,
    validate_relative_adjunction,
    verify_adjoints_preserve,
    verify_ff_reflection,
    verify_jointly_create,
    verify_preservator_naturality,
    verify_whisker_prop,
)
from .documents import (
    Document,
    canonicalize,
    document_for,
    emit_bundle,
    emit_document,
    load_document,
    parse_document,
)
from .gen import GenSpec, generate
from . import fixtures

__all__ = [name for name in dir() if not name.startswith("_")]
