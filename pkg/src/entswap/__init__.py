"""Generalized entanglement swapping with POVMs.

Two Bell pairs, an arbitrary four-outcome measurement on the middle pair
updated with the square-root rule, and the entanglement / EPR-steering /
Bell-nonlocality quantifiers of every conditional pair state.
"""

from .analysis import (
    MeasureRange,
    SweepConfig,
    SweepRecord,
    ThresholdResult,
    VerificationReport,
    classify_table,
    find_extremum,
    find_threshold,
    sweep,
    verify,
)
from .errors import (
    BadDimError,
    BadIndexError,
    BadParamError,
    DegenerateEffectError,
    EntswapError,
    InvalidPovmError,
    NoBracketError,
    NonMonotoneWarning,
    NotAStateError,
    NotHermitianError,
    NotPsdError,
)
from .linalg import (
    HermitianEig,
    hermitian_eig,
    kron,
    partial_trace,
    partial_transpose,
    psd_sqrt,
    trace_norm,
)
from .measures import (
    CorrelationReport,
    CorrelationSpectrum,
    bell_nonlocality,
    correlation_spectrum,
    negativity,
    report,
    steering2,
    steering3,
)
from .povm import (
    AsymmetricPovmParams,
    Povm,
    asymmetric_povm,
    effect_entanglement,
    povm_from_dict,
    povm_to_dict,
    werner_bell_povm,
)
from .states import (
    DensityMatrix,
    bell_state,
    initial_four_qubit,
    lambda_basis,
    product_basis,
    pure_density_matrix,
    werner_state,
)
from .swap import (
    Case1ClosedForms,
    Case2ClosedForms,
    SwapOutcome,
    case1_closed_forms,
    case2_closed_forms,
    rho14_spectral,
    run_swap,
    s_of_lambda,
)

__version__ = "0.1.0"
