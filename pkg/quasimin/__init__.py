from .certificate import descent_certificate, expand_along, verify_certificate
from .config import DecisionConfig, RunConfig
from .const import (
    EXIT_LOCAL_MIN,
    EXIT_NOT_LOCAL_MIN,
    EXIT_UNRESOLVED,
    EXIT_USAGE,
    KIND_AXIS_DESCENT,
    KIND_CURVE_DESCENT,
    KIND_SCALED_POINT_DESCENT,
    STATUS_LOCAL_MIN,
    STATUS_NOT_LOCAL_MIN,
    STATUS_UNRESOLVED,
)
from .decision import (
    analyze_faces,
    axis_condition,
    decide,
    is_joint,
    perturbed_descent,
    two_form_decide,
)
from .error import (
    CertificateError,
    InvalidConfig,
    InvalidNormal,
    NegativeExponent,
    NotStationary,
    ParseError,
    PreconditionError,
    QuasiminError,
    ZeroPolynomial,
)
from .geometry import (
    check_corner_condition,
    hull,
    newton_model,
    omega,
    pareto,
    southwest_edges,
)
from .oracle import SampleReport, falsify_local_min, root_count_bruteforce
from .parser import parse
from .poly import BivariatePoly, UniPoly
from .quasiform import (
    CharPoly,
    Decomposition,
    QuasiForm,
    decompose,
    factor_out_root,
    form_nonnegative,
    form_weakly_nondegenerate,
    negativity_witness,
    single_form_case,
)
from .realroots import (
    AlgebraicNumber,
    isolate_roots,
    sign_at_root,
    univariate_nonnegative,
)
from .substitution import (
    CurveTemplate,
    LeadingPairSet,
    expand_template,
    leading_pair_candidates,
    search_descent,
)
from .types import Certificate, Curve, NormalVector, TraceEntry, Verdict

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "BivariatePoly",
    "Certificate",
    "CertificateError",
    "CharPoly",
    "Curve",
    "CurveTemplate",
    "DecisionConfig",
    "Decomposition",
    "EXIT_LOCAL_MIN",
    "EXIT_NOT_LOCAL_MIN",
    "EXIT_UNRESOLVED",
    "EXIT_USAGE",
    "InvalidConfig",
    "InvalidNormal",
    "KIND_AXIS_DESCENT",
    "KIND_CURVE_DESCENT",
    "KIND_SCALED_POINT_DESCENT",
    "LeadingPairSet",
    "NegativeExponent",
    "NormalVector",
    "NotStationary",
    "ParseError",
    "PreconditionError",
    "QuasiForm",
    "QuasiminError",
    "RunConfig",
    "STATUS_LOCAL_MIN",
    "STATUS_NOT_LOCAL_MIN",
    "STATUS_UNRESOLVED",
    "SampleReport",
    "TraceEntry",
    "UniPoly",
    "Verdict",
    "ZeroPolynomial",
    "analyze_faces",
    "axis_condition",
    "check_corner_condition",
    "decide",
    "decompose",
    "descent_certificate",
    "expand_along",
    "expand_template",
    "factor_out_root",
    "falsify_local_min",
    "form_nonnegative",
    "form_weakly_nondegenerate",
    "hull",
    "is_joint",
    "isolate_roots",
    "leading_pair_candidates",
    "negativity_witness",
    "newton_model",
    "omega",
    "pareto",
    "parse",
    "perturbed_descent",
    "root_count_bruteforce",
    "search_descent",
    "sign_at_root",
    "single_form_case",
    "southwest_edges",
    "two_form_decide",
    "univariate_nonnegative",
    "verify_certificate",
]
