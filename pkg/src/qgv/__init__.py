"""qgv: exact-arithmetic verification of terminating q-hypergeometric
summation identities, their classical limits, and the closing pi series."""

from .errors import (
    ArityError,
    GridConstructionFailed,
    NonTerminating,
    NumericallyIllConditioned,
    PoleError,
    PoleOfGamma,
    QgvError,
    SamplingExhausted,
    UnknownIdentity,
    ZeroToNegativePower,
)
from .factorials import (
    QBase,
    QFactorArg,
    classical_fraction_form,
    fraction_form,
    q_pochhammer,
    rising_factorial,
)
from .identities import (
    EvalPoint,
    IdentityDescriptor,
    eval_side,
    get_identity,
    instance_degree_bound,
    list_identities,
    pole_predicate,
    residual,
)
from .numerics import (
    DEFAULT_PRECISION_BITS,
    ExactRational,
    QPoint,
    format_rational,
    gamma_hp,
    half_power,
    pi_hp,
    pow_int,
    rational,
)
from .report import Counterexample, InstanceResult, VerificationReport
from .series import (
    HyperSpec,
    QHyperSpec,
    eval_custom_sum,
    eval_hyper,
    eval_qhyper,
)
from .verifier import (
    LIMIT_CHAINS,
    SampleConfig,
    certify_instance,
    check_reduction,
    gamma_2f1_check,
    limit_check,
    pi_check,
    run_suite,
    sample_point,
    verify_instance,
)

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "GridConstructionFailed",
    "NonTerminating",
    "NumericallyIllConditioned",
    "PoleError",
    "PoleOfGamma",
    "QgvError",
    "SamplingExhausted",
    "UnknownIdentity",
    "ZeroToNegativePower",
    "QBase",
    "QFactorArg",
    "classical_fraction_form",
    "fraction_form",
    "q_pochhammer",
    "rising_factorial",
    "EvalPoint",
    "IdentityDescriptor",
    "eval_side",
    "get_identity",
    "instance_degree_bound",
    "list_identities",
    "pole_predicate",
    "residual",
    "DEFAULT_PRECISION_BITS",
    "ExactRational",
    "QPoint",
    "format_rational",
    "gamma_hp",
    "half_power",
    "pi_hp",
    "pow_int",
    "rational",
    "Counterexample",
    "InstanceResult",
    "VerificationReport",
    "HyperSpec",
    "QHyperSpec",
    "eval_custom_sum",
    "eval_hyper",
    "eval_qhyper",
    "LIMIT_CHAINS",
    "SampleConfig",
    "certify_instance",
    "check_reduction",
    "gamma_2f1_check",
    "limit_check",
    "pi_check",
    "run_suite",
    "sample_point",
    "verify_instance",
    "__version__",
]
