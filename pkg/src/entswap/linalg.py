"""Dense complex linear algebra for small multi-qubit operators (dim <= 16).

Bit convention used everywhere in this package: qubit 1 is the most
significant bit, so the basis index of |b1 b2 b3 b4> is
b1*8 + b2*4 + b3*2 + b4. Qubit indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import BadDimError, BadIndexError, NotHermitianError, NotPsdError

# Asymmetry beyond this is an input error; below it is rounding noise that
# gets symmetrized away.
HERMITIAN_ATOL = 1e-8

# Eigenvalues in [-EIG_CLAMP, 0) are clamped to zero for PSD operations;
# anything below -EIG_CLAMP is a hard error, since silently clamping a real
# negative eigenvalue would corrupt the physics downstream.
EIG_CLAMP = 1e-10


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor (Kronecker) product, left factor most significant."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


@dataclass(frozen=True)
class HermitianEig:
    """Spectral decomposition: eigenvalues ascending, orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _symmetrized(m: np.ndarray) -> np.ndarray:
    """Return (m + m†)/2, rejecting asymmetry beyond HERMITIAN_ATOL."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise BadDimError(f"expected a square matrix, got shape {m.shape}")
    residual = float(np.abs(m - m.conj().T).max())
    if residual >= HERMITIAN_ATOL:
        raise NotHermitianError(
            f"matrix deviates from Hermitian by {residual:.3e} "
            f"(allowed {HERMITIAN_ATOL:.0e})"
        )
    return (m + m.conj().T) / 2


def hermitian_eig(m: np.ndarray) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized as (m + m†)/2 before solving; eigenvalues come
    back sorted ascending with matching orthonormal eigenvector columns.
    """
    sym = _symmetrized(m)
    values, vectors = np.linalg.eigh(sym)
    return HermitianEig(eigenvalues=values, eigenvectors=vectors)


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in [-EIG_CLAMP, 0) are treated as zero; anything below the
    clamp raises NotPsdError.
    """
    eig = hermitian_eig(m)
    low = float(eig.eigenvalues.min())
    if low < -EIG_CLAMP:
        raise NotPsdError(f"eigenvalue {low:.3e} below the PSD floor -{EIG_CLAMP:.0e}")
    roots = np.sqrt(np.clip(eig.eigenvalues, 0.0, None))
    v = eig.eigenvectors
    out = (v * roots) @ v.conj().T
    return (out + out.conj().T) / 2


def partial_trace(m: np.ndarray, qubits_total: int, keep: Iterable[int]) -> np.ndarray:
    """Trace out all qubits not in ``keep`` (1-based indices, qubit 1 = MSB).

    ``keep`` must be a nonempty strict subset of {1..qubits_total}; kept
    qubits retain their relative order. The total trace is preserved.
    """
    m = np.asarray(m, dtype=complex)
    dim = 2**qubits_total
    if m.shape != (dim, dim):
        raise BadDimError(f"expected shape {(dim, dim)} for {qubits_total} qubits, got {m.shape}")
    keep_set = set(int(q) for q in keep)
    if not keep_set:
        raise BadIndexError("keep set is empty")
    if not keep_set <= set(range(1, qubits_total + 1)):
        raise BadIndexError(f"keep set {sorted(keep_set)} not within 1..{qubits_total}")
    if len(keep_set) == qubits_total:
        raise BadIndexError("keep set must be a strict subset; nothing to trace out")

    kept = [q - 1 for q in sorted(keep_set)]
    traced = [q for q in range(qubits_total) if q not in kept]
    tensor = m.reshape((2,) * (2 * qubits_total))
    perm = (
        kept
        + [qubits_total + q for q in kept]
        + traced
        + [qubits_total + q for q in traced]
    )
    tensor = tensor.transpose(perm)
    dim_keep = 2 ** len(kept)
    dim_traced = 2 ** len(traced)
    tensor = tensor.reshape(dim_keep, dim_keep, dim_traced, dim_traced)
    return np.trace(tensor, axis1=2, axis2=3)


def partial_transpose(m: np.ndarray, subsystem: str) -> np.ndarray:
    """Transpose one qubit of a two-qubit operator (``"first"`` or ``"second"``)."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise BadDimError(f"partial transpose is defined for 4x4 matrices, got {m.shape}")
    if subsystem not in ("first", "second"):
        raise BadIndexError(f"subsystem must be 'first' or 'second', got {subsystem!r}")
    tensor = m.reshape(2, 2, 2, 2)
    axes = (2, 1, 0, 3) if subsystem == "first" else (0, 3, 2, 1)
    return tensor.transpose(axes).reshape(4, 4)


def trace_norm(m: np.ndarray) -> float:
    """Trace norm of a Hermitian matrix: sum of absolute eigenvalues."""
    sym = _symmetrized(m)
    return float(np.abs(np.linalg.eigvalsh(sym)).sum())
