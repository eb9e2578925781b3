"""Constructors for the specific states the swapping protocol works with.

State vectors are plain complex ndarrays of length 2**qubits, unit norm,
indexed with qubit 1 as the most significant bit (see ``linalg``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadIndexError, BadParamError, NotAStateError
from .linalg import kron

# Density-matrix invariants: Hermitian and unit trace within STATE_ATOL,
# eigenvalues no lower than -STATE_ATOL.
STATE_ATOL = 1e-10

_SQRT2 = np.sqrt(2.0)


def check_density_matrix(matrix: np.ndarray, qubits: int) -> np.ndarray:
    """Validate a density matrix, returning it as a complex ndarray.

    Raises NotAStateError if the matrix is not Hermitian within STATE_ATOL,
    its trace is not 1 within STATE_ATOL, or any eigenvalue is below
    -STATE_ATOL.
    """
    m = np.asarray(matrix, dtype=complex)
    dim = 2**qubits
    if m.shape != (dim, dim):
        raise NotAStateError(f"expected a {dim}x{dim} matrix for {qubits} qubits, got {m.shape}")
    herm = float(np.abs(m - m.conj().T).max())
    if herm > STATE_ATOL:
        raise NotAStateError(f"not Hermitian: residual {herm:.3e}")
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > STATE_ATOL:
        raise NotAStateError(f"trace is {tr:.12g}, expected 1")
    low = float(np.linalg.eigvalsh((m + m.conj().T) / 2).min())
    if low < -STATE_ATOL:
        raise NotAStateError(f"negative eigenvalue {low:.3e}")
    return m


@dataclass(frozen=True)
class DensityMatrix:
    """Unit-trace PSD Hermitian matrix tagged with its qubit count.

    The wrapped array is validated on construction and frozen; instances
    behave like arrays under ``np.asarray``.
    """

    qubits: int
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        m = check_density_matrix(self.matrix, self.qubits).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return 2**self.qubits

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return np.asarray(self.matrix, dtype=dtype)


def pure_density_matrix(amplitudes: np.ndarray) -> DensityMatrix:
    """Rank-1 density matrix |v><v| from a unit-norm amplitude vector."""
    v = np.asarray(amplitudes, dtype=complex)
    qubits = int(round(np.log2(v.size)))
    if 2**qubits != v.size:
        raise NotAStateError(f"amplitude vector length {v.size} is not a power of two")
    return DensityMatrix(qubits, np.outer(v, v.conj()))


def bell_state(k: int) -> np.ndarray:
    """One of the four Bell vectors, ordered as

    1: (|00> + |11>)/sqrt2    2: (|00> - |11>)/sqrt2
    3: (|01> + |10>)/sqrt2    4: (|01> - |10>)/sqrt2
    """
    table = {
        1: (1, 0, 0, 1),
        2: (1, 0, 0, -1),
        3: (0, 1, 1, 0),
        4: (0, 1, -1, 0),
    }
    if k not in table:
        raise BadIndexError(f"Bell index must be 1..4, got {k}")
    return np.array(table[k], dtype=complex) / _SQRT2


def werner_state(w: float, k: int) -> DensityMatrix:
    """Bell state k mixed with white noise: w |b_k><b_k| + (1-w)/4 * I."""
    if not 0.0 <= w <= 1.0:
        raise BadParamError(f"mixing weight must be in [0, 1], got {w}")
    v = bell_state(k)
    matrix = w * np.outer(v, v.conj()) + (1.0 - w) / 4.0 * np.eye(4)
    return DensityMatrix(2, matrix)


def lambda_basis(lam: float, k: int) -> np.ndarray:
    """Member k of the sharpness-parameterized orthonormal basis.

    With a = sqrt(1 - sqrt(1-lam))/sqrt2 and b = sqrt(1 + sqrt(1-lam))/sqrt2:

    1: a|00> - b|11>    2: b|00> + a|11>
    3: a|01> - b|10>    4: b|01> + a|10>
    """
    if not 0.0 <= lam <= 1.0:
        raise BadParamError(f"sharpness must be in [0, 1], got {lam}")
    a = np.sqrt(1.0 - np.sqrt(1.0 - lam)) / _SQRT2
    b = np.sqrt(1.0 + np.sqrt(1.0 - lam)) / _SQRT2
    table = {
        1: (a, 0, 0, -b),
        2: (b, 0, 0, a),
        3: (0, a, -b, 0),
        4: (0, b, a, 0),
    }
    if k not in table:
        raise BadIndexError(f"basis index must be 1..4, got {k}")
    return np.array(table[k], dtype=complex)


def product_basis(k: int) -> np.ndarray:
    """Computational product vectors in the order |00>, |11>, |01>, |10>."""
    table = {1: 0, 2: 3, 3: 1, 4: 2}
    if k not in table:
        raise BadIndexError(f"basis index must be 1..4, got {k}")
    v = np.zeros(4, dtype=complex)
    v[table[k]] = 1.0
    return v


def initial_four_qubit() -> DensityMatrix:
    """The protocol's initial state: Bell pair on (1,2) times Bell pair on (3,4)."""
    vec = kron(bell_state(1), bell_state(1))
    return pure_density_matrix(vec)
