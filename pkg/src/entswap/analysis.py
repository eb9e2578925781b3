"""Parameter sweeps, threshold localization, and analytic-vs-numeric checks.

A "case" selects a measurement family: case I is the Bell-projector family,
cases II, III and IV are the asymmetric family at the preset mixing weights
x = 0.3, 0.725 and 0.8. Case "custom" sweeps a caller-supplied POVM builder.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import bisect

from . import measures
from .errors import BadParamError, EntswapError, NoBracketError, NonMonotoneWarning
from .povm import Povm, asymmetric_povm, werner_bell_povm
from .states import DensityMatrix
from .swap import PAIRS, case1_closed_forms, case2_closed_forms, run_swap

CASES = ("I", "II", "III", "IV", "custom")
CASE_PRESETS = {"II": 0.3, "III": 0.725, "IV": 0.8}
MEASURES = ("negativity", "steering2", "steering3", "nonlocality")

# Analytic closed forms must match the numeric pipeline this tightly.
VERIFY_TOL = 1e-9

_SIGNED = {
    "negativity": measures.negativity_signed,
    "steering2": measures.steering2_signed,
    "steering3": measures.steering3_signed,
    "nonlocality": measures.nonlocality_signed,
}

_CLAMPED = {
    "negativity": measures.negativity,
    "steering2": measures.steering2,
    "steering3": measures.steering3,
    "nonlocality": measures.bell_nonlocality,
}


def _resolve_x(case: str, x: float | None) -> float | None:
    if case == "I":
        if x is not None:
            raise BadParamError("case I has no x parameter")
        return None
    if case in CASE_PRESETS:
        return CASE_PRESETS[case] if x is None else float(x)
    return x


def _builder_for(
    case: str, x: float | None, povm_builder: Callable[[float], Povm] | None = None
) -> Callable[[float], Povm]:
    if case == "I":
        return werner_bell_povm
    if case in CASE_PRESETS:
        weight = _resolve_x(case, x)
        return lambda lam: asymmetric_povm(weight, lam)
    if case == "custom":
        if povm_builder is None:
            raise BadParamError("case 'custom' needs a povm_builder")
        return povm_builder
    raise BadParamError(f"case must be one of {CASES}, got {case!r}")


@dataclass(frozen=True)
class SweepConfig:
    """Grid specification for one family sweep."""

    case: str
    x: float | None = None
    lambda_start: float = 0.0
    lambda_stop: float = 1.0
    count: int = 101
    tol: float = 1e-9
    pipeline: str = "numeric"
    povm_builder: Callable[[float], Povm] | None = None

    def __post_init__(self) -> None:
        if self.case not in CASES:
            raise BadParamError(f"case must be one of {CASES}, got {self.case!r}")
        if not 0.0 <= self.lambda_start <= self.lambda_stop <= 1.0:
            raise BadParamError(
                f"need 0 <= start <= stop <= 1, got [{self.lambda_start}, {self.lambda_stop}]"
            )
        if self.count < 2:
            raise BadParamError(f"grid needs at least 2 points, got {self.count}")
        if self.tol <= 0:
            raise BadParamError(f"tolerance must be positive, got {self.tol}")
        if self.pipeline not in ("numeric", "analytic", "both"):
            raise BadParamError(f"unknown pipeline {self.pipeline!r}")
        if self.case == "custom" and self.pipeline != "numeric":
            raise BadParamError("custom POVMs have no analytic closed forms")

    def grid(self) -> np.ndarray:
        return np.linspace(self.lambda_start, self.lambda_stop, self.count)


@dataclass(frozen=True)
class SweepRecord:
    """One (lambda, outcome, pair) row of a sweep."""

    case: str
    x: float | None
    lam: float
    outcome: int
    pair: str
    probability: float
    negativity: float
    steering2: float
    steering3: float
    nonlocality: float
    M: float
    Lambda3: float


def _record(cfg: SweepConfig, x, lam, outcome, pair, probability, rep) -> SweepRecord:
    return SweepRecord(
        case=cfg.case,
        x=x,
        lam=float(lam),
        outcome=outcome,
        pair=pair,
        probability=float(probability),
        **rep.values(),
    )


def _closed_forms(case: str, x: float | None, lam: float):
    if case == "I":
        return case1_closed_forms(lam)
    if case in CASE_PRESETS:
        return case2_closed_forms(_resolve_x(case, x), lam)
    raise BadParamError(f"no closed forms for case {case!r}")


def sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """Evaluate every grid point, outcome and pair, in deterministic order.

    Rows are ordered by lambda ascending, then outcome, then pair in the
    order (1,4), (1,2), (3,4). Degenerate outcomes contribute no rows. With
    pipeline "analytic" the closed forms replace the numeric engine; with
    "both" the numeric rows are emitted after checking them against the
    closed forms at VERIFY_TOL.
    """
    x = _resolve_x(cfg.case, cfg.x)
    builder = _builder_for(cfg.case, cfg.x, cfg.povm_builder)
    records: list[SweepRecord] = []
    for lam in cfg.grid():
        try:
            records.extend(_sweep_point(cfg, x, builder, float(lam)))
        except EntswapError as exc:
            raise type(exc)(f"lambda={lam:.12g}: {exc}") from exc
    return records


def _sweep_point(cfg, x, builder, lam) -> list[SweepRecord]:
    rows: list[SweepRecord] = []
    if cfg.pipeline == "analytic":
        forms = _closed_forms(cfg.case, x, lam)
        reports = {pair: forms.report(pair, cfg.tol) for pair in PAIRS}
        for outcome in (1, 2, 3, 4):
            for pair in PAIRS:
                rows.append(_record(cfg, x, lam, outcome, pair, 0.25, reports[pair]))
        return rows

    forms = _closed_forms(cfg.case, x, lam) if cfg.pipeline == "both" else None
    for outcome in run_swap(builder(lam)):
        if outcome.degenerate:
            continue
        for pair in PAIRS:
            rep = measures.report(outcome.pair_state(pair), cfg.tol)
            if forms is not None:
                expected = forms.report(pair, cfg.tol)
                deviation = max(
                    abs(rep.values()[k] - expected.values()[k]) for k in rep.values()
                )
                if deviation > VERIFY_TOL:
                    raise EntswapError(
                        f"closed form deviates by {deviation:.3e} "
                        f"(outcome {outcome.outcome_index}, pair {pair})"
                    )
            rows.append(
                _record(cfg, x, lam, outcome.outcome_index, pair, outcome.probability, rep)
            )
    return rows


@dataclass(frozen=True)
class ThresholdResult:
    """Bisected sign change of one signed measure."""

    measure: str
    pair: str
    bracket: tuple[float, float]
    root: float
    achieved_tol: float


def _signed_pair_value(builder, lam: float, pair: str, measure: str) -> float:
    state: DensityMatrix = run_swap(builder(lam))[0].pair_state(pair)
    return _SIGNED[measure](state)


def find_threshold(
    case: str,
    x: float | None,
    pair: str,
    measure: str,
    bracket: tuple[float, float],
    tol: float = 1e-9,
) -> ThresholdResult:
    """Bisect the lambda at which a measure switches classification.

    The bisection runs on the signed (unclamped) quantifier of the first
    outcome's conditional state, so the root is a genuine sign change rather
    than the edge of a clamped-to-zero plateau. Monotonicity over the
    bracket is the caller's responsibility; a 10-point sub-grid check emits
    NonMonotoneWarning when it looks violated.
    """
    if pair not in PAIRS:
        raise BadParamError(f"pair must be one of {PAIRS}, got {pair!r}")
    if measure not in MEASURES:
        raise BadParamError(f"measure must be one of {MEASURES}, got {measure!r}")
    lo, hi = float(bracket[0]), float(bracket[1])
    if not 0.0 <= lo < hi <= 1.0:
        raise BadParamError(f"bracket must satisfy 0 <= lo < hi <= 1, got {bracket}")
    builder = _builder_for(case, x)
    f = lambda lam: _signed_pair_value(builder, lam, pair, measure)
    f_lo, f_hi = f(lo), f(hi)
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise NoBracketError(
            f"{measure} of pair {pair} classifies identically at both ends "
            f"({f_lo:.3e} and {f_hi:.3e})"
        )
    probe = [f(v) for v in np.linspace(lo, hi, 10)]
    steps = np.diff(probe)
    if not (np.all(steps >= -1e-12) or np.all(steps <= 1e-12)):
        warnings.warn(
            f"{measure} of pair {pair} is not monotone on [{lo:g}, {hi:g}]",
            NonMonotoneWarning,
            stacklevel=2,
        )
    root = float(bisect(f, lo, hi, xtol=tol, maxiter=200))
    return ThresholdResult(
        measure=measure, pair=pair, bracket=(lo, hi), root=root, achieved_tol=tol
    )


@dataclass(frozen=True)
class MeasureRange:
    """Interval of sharpness values on which a measure is positive.

    kind "never" and "all" refer to the half-open interval (0, 1]; "above"
    means positive for lam > threshold, "below" positive for lam below it.
    The lambda = 0 grid point never enters classification.
    """

    kind: str
    threshold: float | None = None

    def describe(self) -> str:
        if self.kind == "never":
            return "never"
        if self.kind == "all":
            return "0 < lam <= 1"
        if self.kind == "above":
            return f"{self.threshold:.6f} < lam <= 1"
        return f"0 <= lam < {self.threshold:.6f}"


def classify_table(
    case: str,
    x: float | None = None,
    grid: np.ndarray | None = None,
    tol: float = 1e-9,
    root_tol: float = 1e-9,
) -> dict[tuple[str, str], MeasureRange]:
    """Positivity pattern of every (pair, measure) over the sharpness grid.

    Grid points are classified with the signed quantifiers at tolerance
    ``tol``; interval endpoints are then bisected to ``root_tol`` in lambda.
    Patterns that are not a single interval raise.
    """
    if grid is None:
        grid = np.linspace(0.0, 1.0, 101)
    grid = np.asarray(grid, dtype=float)
    lams = grid[grid > 0.0]
    builder = _builder_for(case, x)
    signed: dict[tuple[str, str], list[float]] = {
        (pair, measure): [] for pair in PAIRS for measure in MEASURES
    }
    for lam in lams:
        first = run_swap(builder(float(lam)))[0]
        for pair in PAIRS:
            state = first.pair_state(pair)
            spectrum = measures.correlation_spectrum(state)
            chsh = measures.nonlocality_from_pair_sum(spectrum.M)
            signed[(pair, "negativity")].append(measures.negativity_signed(state))
            signed[(pair, "steering2")].append(chsh)
            signed[(pair, "steering3")].append(
                measures.steering3_from_total(spectrum.Lambda3)
            )
            signed[(pair, "nonlocality")].append(chsh)

    out: dict[tuple[str, str], MeasureRange] = {}
    for key, values in signed.items():
        pair, measure = key
        positive = np.asarray(values) > tol
        if not positive.any():
            out[key] = MeasureRange("never")
        elif positive.all():
            out[key] = MeasureRange("all")
        else:
            flips = np.flatnonzero(np.diff(positive.astype(int)))
            if flips.size != 1:
                raise EntswapError(
                    f"{measure} of pair {pair} is positive on {positive.sum()} "
                    "grid points that do not form a single interval"
                )
            i = int(flips[0])
            bracket = (float(lams[i]), float(lams[i + 1]))
            root = find_threshold(case, x, pair, measure, bracket, tol=root_tol).root
            kind = "above" if positive[-1] else "below"
            out[key] = MeasureRange(kind, threshold=root)
    return out


def _golden_max(f: Callable[[float], float], lo: float, hi: float, xtol: float) -> float:
    """Golden-section maximization of a unimodal function on [lo, hi]."""
    ratio = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - ratio * (b - a)
    d = a + ratio * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - ratio * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + ratio * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def find_extremum(
    case: str,
    x: float | None,
    pair: str,
    measure: str,
    grid: np.ndarray | None = None,
) -> tuple[float, float]:
    """Locate the maximum of a measure over the sharpness grid.

    The grid argmax is refined by golden-section search between its
    neighboring grid points, to 1e-6 in lambda. A boundary argmax is
    returned as-is.
    """
    if grid is None:
        grid = np.linspace(0.0, 1.0, 101)
    grid = np.asarray(grid, dtype=float)
    if pair not in PAIRS:
        raise BadParamError(f"pair must be one of {PAIRS}, got {pair!r}")
    if measure not in MEASURES:
        raise BadParamError(f"measure must be one of {MEASURES}, got {measure!r}")
    builder = _builder_for(case, x)
    f = lambda lam: _CLAMPED[measure](run_swap(builder(float(lam)))[0].pair_state(pair))
    values = [f(lam) for lam in grid]
    peak = int(np.argmax(values))
    if peak in (0, len(grid) - 1):
        return float(grid[peak]), float(values[peak])
    lam_star = _golden_max(f, float(grid[peak - 1]), float(grid[peak + 1]), xtol=1e-6)
    return lam_star, f(lam_star)


@dataclass(frozen=True)
class VerificationReport:
    """Worst analytic-vs-numeric deviation over a sweep grid."""

    case: str
    x: float | None
    points: int
    max_deviation: float
    worst_lam: float
    worst_outcome: int
    worst_pair: str
    worst_quantity: str
    passed: bool


def verify(
    case: str, x: float | None = None, grid: np.ndarray | None = None
) -> VerificationReport:
    """Compare closed forms against the numeric pipeline on a grid.

    Every quantifier of every pair and outcome is compared, as is the
    outcome probability against the family value 1/4. The report passes iff
    the worst absolute deviation stays below VERIFY_TOL.
    """
    if case not in ("I", "II", "III", "IV"):
        raise BadParamError(f"verification needs a preset case, got {case!r}")
    if grid is None:
        grid = np.linspace(0.0, 1.0, 101)
    grid = np.asarray(grid, dtype=float)
    x = _resolve_x(case, x)
    builder = _builder_for(case, x)
    worst = (-1.0, 0.0, 0, "", "")
    for lam in grid:
        lam = float(lam)
        forms = _closed_forms(case, x, lam)
        expected = {pair: forms.report(pair).values() for pair in PAIRS}
        for outcome in run_swap(builder(lam)):
            deviations = {"probability": abs(outcome.probability - 0.25)}
            for pair in PAIRS:
                actual = measures.report(outcome.pair_state(pair)).values()
                for name, value in actual.items():
                    deviations[f"{pair}:{name}"] = abs(value - expected[pair][name])
            for name, dev in deviations.items():
                if dev > worst[0]:
                    pair, _, quantity = name.partition(":")
                    if not quantity:
                        pair, quantity = "", name
                    worst = (dev, lam, outcome.outcome_index, pair, quantity)
    return VerificationReport(
        case=case,
        x=x,
        points=len(grid),
        max_deviation=worst[0],
        worst_lam=worst[1],
        worst_outcome=worst[2],
        worst_pair=worst[3],
        worst_quantity=worst[4],
        passed=worst[0] < VERIFY_TOL,
    )
