"""Fixed-seed random generators shared by the test modules."""

from __future__ import annotations

import numpy as np

from entswap import Povm

SEED = 20240817


def rng(salt: int = 0) -> np.random.Generator:
    return np.random.default_rng(SEED + salt)


def random_hermitian(gen: np.random.Generator, dim: int = 4) -> np.ndarray:
    a = gen.standard_normal((dim, dim)) + 1j * gen.standard_normal((dim, dim))
    return (a + a.conj().T) / 2


def random_density_matrix(gen: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Full-rank random state built as A A-dagger, trace-normalized."""
    a = gen.standard_normal((dim, dim)) + 1j * gen.standard_normal((dim, dim))
    m = a @ a.conj().T
    return m / np.trace(m).real


def random_unitary(gen: np.random.Generator, dim: int = 2) -> np.ndarray:
    a = gen.standard_normal((dim, dim)) + 1j * gen.standard_normal((dim, dim))
    q, r = np.linalg.qr(a)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_povm(gen: np.random.Generator, outcomes: int = 4, dim: int = 4) -> Povm:
    """Valid random POVM: PSD blocks G_i whitened by (sum G)^(-1/2)."""
    blocks = []
    for _ in range(outcomes):
        a = gen.standard_normal((dim, dim)) + 1j * gen.standard_normal((dim, dim))
        blocks.append(a @ a.conj().T)
    total = sum(blocks)
    w, v = np.linalg.eigh(total)
    inv_root = (v / np.sqrt(w)) @ v.conj().T
    return Povm(
        tuple(inv_root @ g @ inv_root for g in blocks),
        label=f"random-{outcomes}",
    )
