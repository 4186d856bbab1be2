"""Moment-class membership, representing measures and continued fractions
for the Gauss hypergeometric function on the slit plane."""

from .classify import (
    Reason,
    StarlikeBranch,
    StarlikeClassification,
    TClassification,
    Verdict,
    classify_T,
    classify_starlike,
    starlike_coefficient_witness,
    tm_coefficients,
)
from .errors import (
    ConvergenceError,
    HGError,
    InconsistentSequenceError,
    NotInTError,
    ParameterError,
    PoleError,
    QuadratureError,
    SlitError,
)
from .gfraction import (
    CFractionCoeffs,
    ConversionResult,
    ConversionStatus,
    GFraction,
    eval_gfraction,
    gauss_g_params,
    gauss_ratio_check,
    gfraction_to_series,
    series_to_gfraction,
)
from .hyp2f1 import (
    EvalResult,
    HGParams,
    Method,
    OneLimitClass,
    OneLimitKind,
    f21_boundary_im,
    f21_lambda,
    f21_near_one,
    f21_plus,
    f21_series,
    limit_at_one,
)
from .measure import (
    DensityKind,
    RepresentingMeasure,
    VerifyReport,
    density_eval,
    reconstruct,
    representing_measure,
    verify_measure,
)
from .moments import (
    DegenerateMeasure,
    DifferenceTable,
    MomentSequence,
    SimpleMeasure,
    TMVerdict,
    TailLimits,
    delta_table,
    detect_degenerate,
    dual_coefficients,
    generating_function,
    is_totally_monotone,
    moment_of_measure,
    tail_limits,
)
from .quadrature import QuadratureSpec
from .scalar import (
    GaussianRational,
    digamma,
    gamma,
    pochhammer,
    pochhammer_exact,
    rgamma,
)

__version__ = "0.1.0"
