"""Tensor-product spin space of N particles with n internal states each.

Basis states are ranked big-endian: site 1 is the most significant digit, so
``(s_1, ..., s_N)`` maps to ``sum_q s_q * n**(N - q)``.  Sites are 1-based in
every public function.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "Statistics",
    "SpinSystem",
    "SpinVector",
    "basis_index",
    "basis_labels",
    "site_permutation_operator",
    "permutation_operator",
    "statistics_operator",
    "reversal_operator",
    "permutation_sign",
]


class Statistics(enum.Enum):
    BOSON = "boson"
    FERMION = "fermion"

    @property
    def sign(self) -> int:
        return 1 if self is Statistics.BOSON else -1

    def flipped(self) -> "Statistics":
        return Statistics.FERMION if self is Statistics.BOSON else Statistics.BOSON

    @classmethod
    def parse(cls, value) -> "Statistics":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"unknown statistics {value!r}; use 'boson' or 'fermion'") from None


@dataclass(frozen=True)
class SpinSystem:
    N: int
    n: int
    statistics: Statistics = Statistics.BOSON

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"particle count must be a positive integer, got {self.N}")
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"spin dimension must be a positive integer, got {self.n}")
        object.__setattr__(self, "statistics", Statistics.parse(self.statistics))

    @property
    def dim(self) -> int:
        return self.n**self.N

    @property
    def sign(self) -> int:
        return self.statistics.sign

    def with_statistics(self, statistics) -> "SpinSystem":
        return SpinSystem(self.N, self.n, Statistics.parse(statistics))

    def with_particles(self, N: int) -> "SpinSystem":
        return SpinSystem(N, self.n, self.statistics)


@dataclass(frozen=True, eq=False)
class SpinVector:
    """A column of n**N complex amplitudes attached to a spin system."""

    system: SpinSystem
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=complex)
        if arr.shape != (self.system.dim,):
            raise DomainError(f"expected {self.system.dim} entries, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @classmethod
    def basis(cls, system: SpinSystem, index: int) -> "SpinVector":
        v = np.zeros(system.dim, dtype=complex)
        v[index] = 1.0
        return cls(system, v)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def basis_index(system: SpinSystem, spins: Sequence[int]) -> int:
    if len(spins) != system.N:
        raise DomainError(f"expected {system.N} spin labels, got {len(spins)}")
    rank = 0
    for s in spins:
        if int(s) != s or not 0 <= s < system.n:
            raise DomainError(f"spin label {s!r} outside [0, {system.n})")
        rank = rank * system.n + int(s)
    return rank


def basis_labels(system: SpinSystem) -> list[tuple[int, ...]]:
    """All multi-indices in rank order."""
    return list(itertools.product(range(system.n), repeat=system.N))


@lru_cache(maxsize=512)
def _site_permutation(n: int, N: int, image: tuple[int, ...]) -> np.ndarray:
    # spin at site q moves to site image[q] (0-based)
    dim = n**N
    labels = np.array(list(itertools.product(range(n), repeat=N)), dtype=np.int64).reshape(dim, N)
    moved = np.empty_like(labels)
    moved[:, list(image)] = labels
    weights = n ** np.arange(N - 1, -1, -1, dtype=np.int64)
    rows = moved @ weights
    mat = np.zeros((dim, dim))
    mat[rows, np.arange(dim)] = 1.0
    mat.flags.writeable = False
    return mat


def site_permutation_operator(system: SpinSystem, image: Sequence[int]) -> np.ndarray:
    """0/1 matrix carrying the spin label at site ``q`` to site ``image[q-1]``.

    ``image`` is a permutation of ``1..N`` in one-line notation.
    """
    image = tuple(int(q) - 1 for q in image)
    if sorted(image) != list(range(system.N)):
        raise DomainError(f"{[q + 1 for q in image]} is not a permutation of 1..{system.N}")
    return _site_permutation(system.n, system.N, image)


def _check_pair(system: SpinSystem, i: int, j: int) -> None:
    if i == j:
        raise DomainError(f"sites must differ, got i = j = {i}")
    for q in (i, j):
        if not 1 <= q <= system.N:
            raise DomainError(f"site {q} outside 1..{system.N}")


def permutation_operator(system: SpinSystem, i: int, j: int) -> np.ndarray:
    """The swap p^{ij} exchanging the spin labels at sites i and j."""
    _check_pair(system, i, j)
    image = list(range(1, system.N + 1))
    image[i - 1], image[j - 1] = image[j - 1], image[i - 1]
    return site_permutation_operator(system, image)


def statistics_operator(system: SpinSystem, i: int, j: int) -> np.ndarray:
    """P^{ij}: the swap for bosons, minus the swap for fermions."""
    p = permutation_operator(system, i, j)
    return p if system.sign == 1 else -p


def reversal_operator(system: SpinSystem) -> np.ndarray:
    """Statistics-signed operator of the site reversal 1..N -> N..1.

    Built as [P^{12}][P^{23}P^{12}]...[P^{N-1,N}...P^{12}].
    """
    out = np.eye(system.dim)
    for m in range(2, system.N + 1):
        for q in range(m - 1, 0, -1):
            out = out @ statistics_operator(system, q, q + 1)
    return out


def permutation_sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        q = start
        while not seen[q]:
            seen[q] = True
            q = perm[q] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
