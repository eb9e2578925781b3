"""The generalized entanglement-swapping engine.

Two Bell pairs (1,2) and (3,4) start in the same maximally entangled state.
A four-outcome POVM is measured on the middle pair (2,3) and the state is
updated with the square-root (Lueders) rule, conditioning on the outcome.
``run_swap`` returns, per outcome, the probability and the conditional
two-qubit states of the pairs (1,4), (1,2) and (3,4).

The module also carries the closed forms for the two built-in measurement
families. They are exact and serve as independent oracles for the full
16-dimensional pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParamError, DegenerateEffectError, InvalidPovmError
from .linalg import kron, partial_trace, psd_sqrt
from .measures import CorrelationReport
from .povm import AsymmetricPovmParams, Povm, validate
from .states import DensityMatrix, initial_four_qubit

_SQRT2 = np.sqrt(2.0)
_SQRT3 = np.sqrt(3.0)

# Outcomes below this probability carry no conditional states: normalizing
# by a vanishing trace would just amplify rounding noise.
DEGENERATE_PROBABILITY = 1e-12

PAIRS = ("14", "12", "34")

_I2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class SwapOutcome:
    """One measurement outcome with its conditional pair states.

    ``rho14``, ``rho12`` and ``rho34`` are None when the outcome is
    degenerate (probability below DEGENERATE_PROBABILITY).
    """

    outcome_index: int
    probability: float
    rho14: DensityMatrix | None
    rho12: DensityMatrix | None
    rho34: DensityMatrix | None
    degenerate: bool = False

    def pair_state(self, pair: str) -> DensityMatrix:
        if pair not in PAIRS:
            raise BadParamError(f"pair must be one of {PAIRS}, got {pair!r}")
        state = getattr(self, f"rho{pair}")
        if state is None:
            raise DegenerateEffectError(
                f"outcome {self.outcome_index} is degenerate "
                f"(probability {self.probability:.3e})"
            )
        return state


def run_swap(p: Povm) -> list[SwapOutcome]:
    """Run the protocol for every outcome of a valid POVM.

    For each effect E the four-qubit state is updated with
    K = I x sqrt(E) x I acting on qubits (2,3), the outcome probability is
    the trace of K rho K-dagger, and the conditional pair states are the
    normalized partial traces onto (1,4), (1,2) and (3,4).
    """
    problems = validate(p)
    if problems:
        raise InvalidPovmError("; ".join(problems))
    rho0 = np.asarray(initial_four_qubit())
    outcomes = []
    for index, effect in enumerate(p.effects, start=1):
        k = kron(kron(_I2, psd_sqrt(effect)), _I2)
        joint = k @ rho0 @ k.conj().T
        probability = float(np.trace(joint).real)
        if probability < DEGENERATE_PROBABILITY:
            outcomes.append(
                SwapOutcome(index, probability, None, None, None, degenerate=True)
            )
            continue
        conditional = joint / probability
        outcomes.append(
            SwapOutcome(
                outcome_index=index,
                probability=probability,
                rho14=DensityMatrix(2, partial_trace(conditional, 4, {1, 4})),
                rho12=DensityMatrix(2, partial_trace(conditional, 4, {1, 2})),
                rho34=DensityMatrix(2, partial_trace(conditional, 4, {3, 4})),
            )
        )
    return outcomes


def rho14_spectral(p: Povm, i: int) -> DensityMatrix:
    """Conditional (1,4) state without running the pipeline.

    Because both pairs start maximally entangled, the (1,4) state for
    outcome i is the entrywise complex conjugate of effect i divided by its
    trace. ``run_swap`` reproduces this to machine precision.
    """
    if not 1 <= i <= len(p.effects):
        raise DegenerateEffectError(f"effect index must be 1..{len(p.effects)}, got {i}")
    effect = p.effects[i - 1]
    trace = float(np.trace(effect).real)
    if trace <= DEGENERATE_PROBABILITY:
        raise DegenerateEffectError(f"effect {i} has trace {trace:.3e}")
    return DensityMatrix(2, effect.conj() / trace)


def s_of_lambda(lam: float) -> float:
    """Residual correlation strength of the pairs (1,2) and (3,4).

    After the Bell-projector family at sharpness lam, those pairs are left
    in the lam-independent-of-outcome mixed state of strength
    s = (1 - lam + sqrt((1 - lam)(1 + 3 lam)))/2, which falls from 1 at
    lam = 0 to 0 at lam = 1.
    """
    if not 0.0 <= lam <= 1.0:
        raise BadParamError(f"sharpness must be in [0, 1], got {lam}")
    return 0.5 * (1.0 - lam + np.sqrt((1.0 - lam) * (1.0 + 3.0 * lam)))


def _werner_measures(strength: float) -> tuple[float, float, float]:
    negativity = max(0.0, (3.0 * strength - 1.0) / 2.0)
    steering = max(0.0, (_SQRT3 * strength - 1.0) / (_SQRT3 - 1.0))
    nonlocality = max(0.0, (_SQRT2 * strength - 1.0) / (_SQRT2 - 1.0))
    return negativity, steering, nonlocality


@dataclass(frozen=True)
class Case1ClosedForms:
    """Exact measures for the Bell-projector family at one sharpness.

    Pair (1,4) carries strength lam, pairs (1,2) and (3,4) both carry
    strength s(lam); all values are clamped at zero from below.
    """

    lam: float
    s: float
    negativity_14: float
    steering3_14: float
    nonlocality_14: float
    negativity_12: float
    steering3_12: float
    nonlocality_12: float

    # Pair (3,4) equals pair (1,2) for this family.
    @property
    def negativity_34(self) -> float:
        return self.negativity_12

    @property
    def steering3_34(self) -> float:
        return self.steering3_12

    @property
    def nonlocality_34(self) -> float:
        return self.nonlocality_12

    def report(self, pair: str, tol: float = 1e-9) -> CorrelationReport:
        if pair not in PAIRS:
            raise BadParamError(f"pair must be one of {PAIRS}, got {pair!r}")
        strength = self.lam if pair == "14" else self.s
        negativity = self.negativity_14 if pair == "14" else self.negativity_12
        # T^T T has the triple (w^2, w^2, w^2) at strength w.
        w2 = strength * strength
        return CorrelationReport.from_quantities(negativity, 2.0 * w2, 3.0 * w2, tol=tol)


def case1_closed_forms(lam: float) -> Case1ClosedForms:
    """All six closed-form measures of the Bell-projector family."""
    s = s_of_lambda(lam)
    e14, s14, n14 = _werner_measures(lam)
    e12, s12, n12 = _werner_measures(s)
    return Case1ClosedForms(
        lam=lam,
        s=s,
        negativity_14=e14,
        steering3_14=s14,
        nonlocality_14=n14,
        negativity_12=e12,
        steering3_12=s12,
        nonlocality_12=n12,
    )


@dataclass(frozen=True)
class Case2ClosedForms:
    """Exact measures for the asymmetric family at one (x, lam).

    Negativities are stored as printed (they are nonnegative throughout the
    preset range); the t triples are the eigenvalues of T^T T for each pair,
    from which the steering and nonlocality quantifiers follow.
    """

    x: float
    lam: float
    params: AsymmetricPovmParams
    negativity_14: float
    negativity_12: float
    negativity_34: float
    t_14: tuple[float, float, float]
    t_12: tuple[float, float, float]
    t_34: tuple[float, float, float]

    def report(self, pair: str, tol: float = 1e-9) -> CorrelationReport:
        if pair not in PAIRS:
            raise BadParamError(f"pair must be one of {PAIRS}, got {pair!r}")
        negativity = getattr(self, f"negativity_{pair}")
        t = sorted(getattr(self, f"t_{pair}"), reverse=True)
        return CorrelationReport.from_quantities(
            max(0.0, negativity), t[0] + t[1], sum(t), tol=tol
        )


def case2_closed_forms(x: float, lam: float) -> Case2ClosedForms:
    """Closed-form negativities and T^T T eigenvalue triples, all pairs."""
    p = AsymmetricPovmParams(x, lam)
    e, f, g, h = p.e, p.f, p.g, p.h
    t14_pair = (2.0 * p.a * p.b * (p.y2 * x + p.y1 * (2.0 * x - 1.0)) / (p.y1 + p.y2)) ** 2
    t14_last = ((p.y1 + p.y2 * (2.0 * x - 1.0)) / (p.y1 + p.y2)) ** 2
    t_shared = (e * e + f * f + g * g - 2.0 * h * h) ** 2
    return Case2ClosedForms(
        x=x,
        lam=lam,
        params=p,
        negativity_14=np.sqrt(4.0 * p.q * p.q + p.r * p.r) - p.r,
        negativity_12=2.0 * (e * f - h * h),
        negativity_34=2.0 * (e * g - h * h),
        t_14=(t14_pair, t14_pair, t14_last),
        t_12=(4.0 * e * e * f * f, 4.0 * e * e * f * f, t_shared),
        t_34=(4.0 * e * e * g * g, 4.0 * e * e * g * g, t_shared),
    )
