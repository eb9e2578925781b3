"""Correlation quantifiers for two-qubit states.

All three quantifiers derive from the 3x3 correlation matrix
T_ij = Tr[rho (sigma_i x sigma_j)] and the partial transpose:

* nonlocality  N  = max{0, (sqrt(M) - 1)/(sqrt2 - 1)}, M = two largest
  eigenvalues of T^T T summed; the CHSH value is B = 2 sqrt(M).
* steering     S2 = N (two-setting), S3 = max{0, (sqrt(L3) - 1)/(sqrt3 - 1)}
  with L3 the full eigenvalue sum of T^T T (three-setting).
* negativity   E  = 2 max{0, -min eigenvalue of the partial transpose},
  which equals trace_norm(partial transpose) - 1 whenever positive.

The *_signed variants return the expression before the max{0, .} clamp; the
sign change marks the classification boundary and is what root finders
should bisect on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotAStateError
from .linalg import hermitian_eig, kron, partial_transpose
from .states import check_density_matrix

_SQRT2 = np.sqrt(2.0)
_SQRT3 = np.sqrt(3.0)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# Pre-built two-qubit Pauli products sigma_i x sigma_j.
_PAULI_PAIRS = [[kron(si, sj) for sj in PAULI] for si in PAULI]


def _as_state(rho) -> np.ndarray:
    return check_density_matrix(np.asarray(rho, dtype=complex), qubits=2)


@dataclass(frozen=True)
class CorrelationSpectrum:
    """Correlation matrix T with the eigenvalues of T^T T (descending)."""

    T: np.ndarray = field(repr=False)
    t: tuple[float, float, float]
    M: float
    Lambda3: float


def correlation_spectrum(rho) -> CorrelationSpectrum:
    """Correlation matrix and the derived pair-sum / total eigenvalue data."""
    m = _as_state(rho)
    raw = np.array(
        [[np.trace(m @ _PAULI_PAIRS[i][j]) for j in range(3)] for i in range(3)]
    )
    residue = float(np.abs(raw.imag).max())
    if residue > 1e-10:
        raise NotAStateError(f"correlation matrix has imaginary residue {residue:.3e}")
    T = raw.real
    eig = hermitian_eig(T.T @ T)
    t = tuple(float(max(0.0, v)) for v in eig.eigenvalues[::-1])
    return CorrelationSpectrum(T=T, t=t, M=t[0] + t[1], Lambda3=t[0] + t[1] + t[2])


def nonlocality_from_pair_sum(m_value: float) -> float:
    """Signed CHSH quantifier from the largest eigenvalue pair sum."""
    return (np.sqrt(max(m_value, 0.0)) - 1.0) / (_SQRT2 - 1.0)


def steering3_from_total(lambda3: float) -> float:
    """Signed three-setting steering quantifier from the eigenvalue total."""
    return (np.sqrt(max(lambda3, 0.0)) - 1.0) / (_SQRT3 - 1.0)


def nonlocality_signed(rho) -> float:
    return nonlocality_from_pair_sum(correlation_spectrum(rho).M)


def steering2_signed(rho) -> float:
    return nonlocality_signed(rho)


def steering3_signed(rho) -> float:
    return steering3_from_total(correlation_spectrum(rho).Lambda3)


def negativity_signed(rho) -> float:
    """Twice the negated smallest partial-transpose eigenvalue, unclamped."""
    m = _as_state(rho)
    mu = float(np.linalg.eigvalsh(partial_transpose(m, "second")).min())
    return -2.0 * mu


def bell_nonlocality(rho) -> float:
    """Degree of CHSH violation, normalized to 1 for a Bell state."""
    return max(0.0, nonlocality_signed(rho))


def steering2(rho) -> float:
    """Two-setting steering quantifier; coincides with ``bell_nonlocality``."""
    return max(0.0, steering2_signed(rho))


def steering3(rho) -> float:
    """Three-setting steering quantifier, normalized to 1 for a Bell state."""
    return max(0.0, steering3_signed(rho))


def negativity(rho) -> float:
    """Entanglement negativity, normalized to 1 for a Bell state."""
    return max(0.0, negativity_signed(rho))


@dataclass(frozen=True)
class CorrelationReport:
    """All quantifiers of one state plus threshold classifications.

    Booleans hold when the corresponding quantifier exceeds ``tol``; the
    hierarchy nonlocal => steerable => entangled is enforced.
    """

    negativity: float
    M: float
    Lambda3: float
    B: float
    S2: float
    S3: float
    N: float
    entangled: bool
    steerable: bool
    nonlocal_: bool
    tol: float

    @classmethod
    def from_quantities(
        cls, negativity: float, m_value: float, lambda3: float, tol: float = 1e-9
    ) -> "CorrelationReport":
        if tol <= 0:
            raise ValueError(f"classification tolerance must be positive, got {tol}")
        n = float(max(0.0, nonlocality_from_pair_sum(m_value)))
        s3 = float(max(0.0, steering3_from_total(lambda3)))
        neg = float(max(0.0, negativity))
        rep = cls(
            negativity=neg,
            M=float(m_value),
            Lambda3=float(lambda3),
            B=float(2.0 * np.sqrt(max(m_value, 0.0))),
            S2=n,
            S3=s3,
            N=n,
            entangled=bool(neg > tol),
            steerable=bool(s3 > tol),
            nonlocal_=bool(n > tol),
            tol=tol,
        )
        if (rep.nonlocal_ and not rep.steerable) or (rep.steerable and not rep.entangled):
            raise NotAStateError(
                "correlation hierarchy violated: "
                f"N={n:.3e}, S3={s3:.3e}, negativity={neg:.3e}"
            )
        return rep

    def values(self) -> dict[str, float]:
        """Quantifier columns keyed by their CSV names."""
        return {
            "negativity": self.negativity,
            "steering2": self.S2,
            "steering3": self.S3,
            "nonlocality": self.N,
            "M": self.M,
            "Lambda3": self.Lambda3,
        }


def report(rho, tol: float = 1e-9) -> CorrelationReport:
    """Evaluate every quantifier of a two-qubit state at one tolerance."""
    spectrum = correlation_spectrum(rho)
    return CorrelationReport.from_quantities(
        negativity(rho), spectrum.M, spectrum.Lambda3, tol=tol
    )
