"""Multi-particle S-matrices of the integrable contact models.

``X_ij = Y^{ij}(k_i - k_j) P^{ij}`` and

    S = [X_21 X_31 ... X_N1][X_32 ... X_N2] ... [X_N,N-1],

multiplied left to right in exactly this order.  The matrix element
``<s'|S|s>`` sits at ``(basis_index(s'), basis_index(s))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bethe import MomentumSet, _as_momenta
from .contact_params import Separated
from .errors import DomainError
from .spectra import bound_momenta
from .spinspace import SpinSystem, basis_index, reversal_operator, statistics_operator
from .yops import y_operator

__all__ = [
    "SMatrix",
    "SPropertyReport",
    "x_operator",
    "s_matrix",
    "s_prime",
    "s_matrix_via_sprime",
    "cluster_momenta",
    "cluster_s_matrix",
    "verify_s_properties",
]


@dataclass(frozen=True, eq=False)
class SMatrix:
    system: SpinSystem
    momenta: MomentumSet
    family: object
    matrix: np.ndarray

    def element(self, out_spins: Sequence[int], in_spins: Sequence[int]) -> complex:
        return complex(self.matrix[basis_index(self.system, out_spins), basis_index(self.system, in_spins)])

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)


def x_operator(family, momenta, i: int, j: int, system: SpinSystem) -> np.ndarray:
    momenta = _as_momenta(momenta)
    if momenta[i] == momenta[j]:
        raise DomainError(f"k_{i} = k_{j}")
    y = y_operator(family, momenta[i] - momenta[j], system, (i, j)).matrix
    return y @ statistics_operator(system, i, j)


def _check(momenta, system):
    momenta = _as_momenta(momenta)
    if len(momenta) != system.N:
        raise DomainError(f"{len(momenta)} momenta given for N = {system.N}")
    return momenta


def s_matrix(family, momenta, system: SpinSystem) -> SMatrix:
    momenta = _check(momenta, system)
    S = np.eye(system.dim, dtype=complex)
    for j in range(1, system.N):
        for i in range(j + 1, system.N + 1):
            S = S @ x_operator(family, momenta, i, j, system)
    return SMatrix(system, momenta, family, S)


def s_prime(family, momenta, system: SpinSystem) -> np.ndarray:
    """The nested adjacent-site chain relating ``alpha_{12...N}`` to ``alpha_{N...1}``.

    Bracket ``b`` is ``Y^{12}_{b+1,b} Y^{23}_{b+2,b} ... Y^{N-b,N-b+1}_{N,b}``, where
    ``Y_{ab}`` carries the spectral parameter ``k_a - k_b``.
    """
    momenta = _check(momenta, system)
    out = np.eye(system.dim, dtype=complex)
    N = system.N
    for b in range(1, N):
        for q, a in enumerate(range(b + 1, N + 1), start=1):
            out = out @ y_operator(family, momenta[a] - momenta[b], system, q).matrix
    return out


def s_matrix_via_sprime(family, momenta, system: SpinSystem) -> SMatrix:
    momenta = _check(momenta, system)
    S = s_prime(family, momenta, system) @ reversal_operator(system)
    return SMatrix(system, momenta, family, S)


def cluster_momenta(sizes: tuple[int, int], h: float, shifts: tuple[float, float]) -> np.ndarray:
    """Bound-state ladders of each cluster, each shifted by a real momentum."""
    parts = []
    for size, q in zip(sizes, shifts):
        ladder = bound_momenta(size, h).k if size > 1 else np.zeros(1, dtype=complex)
        parts.append(ladder + q)
    return np.concatenate(parts)


def cluster_s_matrix(family, sizes: tuple[int, int], momenta, system: SpinSystem) -> np.ndarray:
    """Scattering of cluster A (particles ``1..N_a``) on cluster B (the rest).

    Product of ``X_ij`` with ``i`` in B and ``j`` in A: one bracket per ``j``,
    taken from ``j = N_a`` down to 1, each bracket ascending in ``i``.  For
    sizes (2, 3) this is ``[X_32 X_42 X_52][X_31 X_41 X_51]``; other sizes
    extend the same index pattern.
    """
    if not isinstance(family, Separated):
        raise DomainError("cluster scattering is defined for the separated family")
    na, nb = sizes
    if na < 1 or nb < 1 or na + nb != system.N:
        raise DomainError(f"cluster sizes {sizes} do not add up to N = {system.N}")
    momenta = _check(momenta, system)
    S = np.eye(system.dim, dtype=complex)
    for j in range(na, 0, -1):
        for i in range(na + 1, na + nb + 1):
            S = S @ x_operator(family, momenta, i, j, system)
    return S


@dataclass
class SPropertyReport:
    unitarity: float
    symmetry: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.unitarity <= self.tol and self.symmetry <= self.tol


def verify_s_properties(S, tol: float = 1e-10) -> SPropertyReport:
    m = np.asarray(S)
    unit = float(np.max(np.abs(m.conj().T @ m - np.eye(len(m)))))
    sym = float(np.max(np.abs(m - m.T)))
    return SPropertyReport(unit, sym, tol)
