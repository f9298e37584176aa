"""Bound states of the separated (Robin-type) contact interaction for h < 0.

The N-particle states are kink products

    psi(x) = v * prod_{k>l} (theta(x_k - x_l) + eps_kl theta(x_l - x_k)) * exp(h sum_{i>j} |x_i - x_j|)

with a spin vector ``v`` obeying ``P^{ij} v = eps_ij v``.  In the ordered region
they are single Bethe terms with the imaginary momentum ladder
``k_j = i h (N + 1 - 2j)`` and energy ``-h^2 N (N^2 - 1) / 3``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

import numpy as np
import scipy.linalg

from .bethe import MomentumSet, boundary_residual, one_sided_data
from .contact_params import Separated
from .errors import DomainError
from .spinspace import SpinSystem, statistics_operator

__all__ = [
    "RANK_TOL",
    "EpsilonPattern",
    "BoundState",
    "BoundStateReport",
    "bound_momenta",
    "bound_energy",
    "all_patterns",
    "spin_eigenspace",
    "bound_wavefunction",
    "verify_bound_state",
    "degeneracy_table",
]

RANK_TOL = 1e-10


@dataclass(frozen=True)
class EpsilonPattern:
    """Signs ``eps_kl`` for every pair ``k > l``, keyed by ``(k, l)``."""

    N: int
    signs: Mapping[tuple[int, int], int]

    def __post_init__(self):
        signs = {}
        for (k, l), s in dict(self.signs).items():
            if k < l:
                k, l = l, k
            if s not in (1, -1):
                raise DomainError(f"pattern sign must be +1 or -1, got {s!r}")
            signs[(k, l)] = int(s)
        expected = {(k, l) for k in range(1, self.N + 1) for l in range(1, k)}
        if set(signs) != expected:
            raise DomainError(f"pattern needs exactly the {len(expected)} pairs k > l")
        object.__setattr__(self, "signs", dict(sorted(signs.items())))

    def __getitem__(self, pair) -> int:
        k, l = pair
        return self.signs[(max(k, l), min(k, l))]

    def __hash__(self):
        return hash((self.N, tuple(self.signs.items())))

    @classmethod
    def uniform(cls, N: int, sign: int = 1) -> "EpsilonPattern":
        return cls(N, {(k, l): sign for k in range(1, N + 1) for l in range(1, k)})

    @classmethod
    def from_string(cls, N: int, text: str) -> "EpsilonPattern":
        """Parse ``"+,-,+"`` listing eps for pairs (2,1), (3,1), (3,2), ... in that order."""
        tokens = [t for t in text.replace(" ", "").split(",") if t]
        pairs = [(k, l) for k in range(2, N + 1) for l in range(1, k)]
        if len(tokens) != len(pairs):
            raise DomainError(f"pattern for N = {N} needs {len(pairs)} signs, got {len(tokens)}")
        return cls(N, {p: (1 if t in ("+", "+1", "1") else -1 if t in ("-", "-1") else _bad(t)) for p, t in zip(pairs, tokens)})

    def to_string(self) -> str:
        return ",".join("+" if self[(k, l)] == 1 else "-" for k in range(2, self.N + 1) for l in range(1, k))


def _bad(token):
    raise DomainError(f"bad pattern sign {token!r}")


def all_patterns(N: int) -> Iterator[EpsilonPattern]:
    pairs = [(k, l) for k in range(2, N + 1) for l in range(1, k)]
    for signs in itertools.product((1, -1), repeat=len(pairs)):
        yield EpsilonPattern(N, dict(zip(pairs, signs)))


def bound_momenta(N: int, h: float) -> MomentumSet:
    """``k_j = i h (N + 1 - 2j)``: ``k_1 = i h (N - 1)``, steps of ``-2 i h``, ``k_N = -k_1``."""
    if N < 2:
        raise DomainError("a bound state needs N >= 2")
    return MomentumSet([1j * h * (N + 1 - 2 * j) for j in range(1, N + 1)])


def bound_energy(N: int, h: float) -> float:
    if N < 1:
        raise DomainError("N must be positive")
    return -(h**2) * N * (N**2 - 1) / 3


def spin_eigenspace(system: SpinSystem, pattern: EpsilonPattern) -> list[np.ndarray]:
    """Orthonormal basis of ``{v : P^{ij} v = eps_ij v for all i < j}`` (may be empty)."""
    if pattern.N != system.N:
        raise DomainError("pattern and system disagree on N")
    if system.N == 1:
        return list(np.eye(system.dim, dtype=complex))
    blocks = [
        statistics_operator(system, i, j) - pattern[(j, i)] * np.eye(system.dim)
        for i, j in itertools.combinations(range(1, system.N + 1), 2)
    ]
    basis = scipy.linalg.null_space(np.vstack(blocks), rcond=RANK_TOL)
    return [basis[:, q].astype(complex) for q in range(basis.shape[1])]


def degeneracy_table(system: SpinSystem) -> dict[str, int]:
    """Realised eigenspace dimension for each of the 2^{N(N-1)/2} patterns."""
    return {p.to_string(): len(spin_eigenspace(system, p)) for p in all_patterns(system.N)}


@dataclass(frozen=True, eq=False)
class BoundState:
    system: SpinSystem
    h: float
    pattern: EpsilonPattern
    spin: np.ndarray
    momenta: MomentumSet = field(init=False)
    energy: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "momenta", bound_momenta(self.system.N, self.h))
        object.__setattr__(self, "energy", bound_energy(self.system.N, self.h))

    def exponent_gradient(self, order: Sequence[int]) -> np.ndarray:
        """Coefficients ``g_m`` with ``log|psi| = sum_m g_m x_m`` in the region ``order``."""
        N = self.system.N
        rank = np.empty(N, dtype=int)
        rank[list(order)] = np.arange(N)
        # sgn(x_m - x_j) summed over j
        return self.h * np.array([(2 * rank[m] - (N - 1)) for m in range(N)], dtype=float)

    def _kink(self, order: Sequence[int]) -> int:
        rank = np.empty(self.system.N, dtype=int)
        rank[list(order)] = np.arange(self.system.N)
        s = 1
        for k in range(self.system.N):
            for l in range(k):
                if rank[k] < rank[l]:
                    s *= self.pattern[(k + 1, l + 1)]
        return s

    def value_and_gradient(self, x, order) -> tuple[np.ndarray, np.ndarray]:
        x = np.asarray(x, dtype=float)
        g = self.exponent_gradient(order)
        scalar = self._kink(order) * np.exp(g @ x)
        value = scalar * self.spin
        return value, np.outer(g, value)

    def __call__(self, x) -> np.ndarray:
        x = [float(v) for v in x]
        if len(set(x)) < len(x):
            raise DomainError("point lies on a coincidence hyperplane")
        return self.value_and_gradient(x, sorted(range(len(x)), key=lambda m: x[m]))[0]

    def laplacian_eigenvalue(self, order: Sequence[int]) -> float:
        """``-sum d^2/dx_m^2`` acting on the region's exponential is multiplication by this."""
        g = self.exponent_gradient(order)
        return float(-(g @ g))


def bound_wavefunction(system: SpinSystem, h: float, pattern: EpsilonPattern, spin, tol: float = 1e-10) -> BoundState:
    if not h < 0:
        raise DomainError(f"bound states exist only for h < 0, got h = {h}")
    if system.N < 2:
        raise DomainError("a bound state needs N >= 2")
    v = np.asarray(spin, dtype=complex)
    if v.shape != (system.dim,):
        raise DomainError(f"spin vector must have length {system.dim}")
    if np.linalg.norm(v) == 0:
        raise DomainError("spin vector is zero")
    for i, j in itertools.combinations(range(1, system.N + 1), 2):
        r = np.max(np.abs(statistics_operator(system, i, j) @ v - pattern[(j, i)] * v))
        if r > tol * max(1.0, np.linalg.norm(v)):
            raise DomainError(f"spin vector is not in the eigenspace of pattern {pattern.to_string()} (pair {(i, j)}, residual {r:.3g})")
    return BoundState(system, float(h), pattern, v)


@dataclass
class BoundStateReport:
    boundary_residual: float
    energy_residual: float
    ladder_residual: float
    decay_ok: bool
    worst_location: tuple | None
    tol: float

    @property
    def passed(self) -> bool:
        return self.boundary_residual <= self.tol and self.energy_residual <= self.tol and self.ladder_residual <= self.tol and self.decay_ok

    def as_dict(self) -> dict:
        return {
            "boundary": self.boundary_residual,
            "energy": self.energy_residual,
            "ladder": self.ladder_residual,
            "decay": self.decay_ok,
        }


def _sample_adjacent_meeting(rng, N, i, j, span=1.5, min_gap=0.2):
    # x_i = x_j with no other coordinate between or on them
    for _ in range(10_000):
        vals = np.sort(rng.uniform(-span, span, N - 1))
        if N > 2 and np.min(np.diff(vals)) < min_gap:
            continue
        slot = rng.integers(N - 1)
        others = [m for m in range(N) if m not in (i, j)]
        rest = list(np.delete(vals, slot))
        rng.shuffle(others)
        x = np.empty(N)
        x[i] = x[j] = vals[slot]
        for m, v in zip(others, rest):
            x[m] = v
        return list(x)
    raise RuntimeError("sampling failed")


def verify_bound_state(state: BoundState, trials: int = 50, tol: float = 1e-10, seed: int = 0, rays: int = 20) -> BoundStateReport:
    """Robin conditions at every pair plane, energy in open regions, and decay.

    Every pair ``(i, j)`` is sampled with ``x_i, x_j`` adjacent in the sorted
    configuration.  The energy check compares the analytic action of
    ``-sum d^2`` in each ordering region against ``bound_energy``; for the
    identity ordering it also compares the exponent with ``i k_j`` from the
    momentum ladder.
    """
    rng = np.random.default_rng(seed)
    N = state.system.N
    fam = Separated(state.h)
    scale = max(1.0, float(np.max(np.abs(state.spin))))
    worst, where = 0.0, None
    for i, j in itertools.combinations(range(N), 2):
        for _ in range(trials):
            base = _sample_adjacent_meeting(rng, N, i, j)
            r = boundary_residual(fam, one_sided_data(state, (i + 1, j + 1), base)) / scale
            if r > worst:
                worst, where = r, ((i + 1, j + 1), tuple(base))

    energy_res = 0.0
    for order in itertools.permutations(range(N)):
        energy_res = max(energy_res, abs(state.laplacian_eigenvalue(order) - state.energy) / max(1.0, abs(state.energy)))

    ladder = 1j * state.momenta.k
    ladder_res = float(np.max(np.abs(state.exponent_gradient(range(N)) - ladder)))

    decay_ok = True
    ones = np.ones(N) / np.sqrt(N)
    for _ in range(rays):
        u = rng.normal(size=N)
        u -= (u @ ones) * ones
        u /= np.linalg.norm(u)
        x0 = rng.uniform(-0.5, 0.5, N)
        mags = [np.linalg.norm(state(x0 + t * u)) for t in (0.0, 2.0, 5.0, 10.0)]
        if not (mags[-1] < mags[0] and all(b <= a * (1 + 1e-12) for a, b in zip(mags[1:], mags[2:]))):
            decay_ok = False
    return BoundStateReport(worst, energy_res, ladder_res, decay_ok, where, tol)
