"""Bethe-ansatz coefficient tables and wavefunctions.

In the region ``x_1 < ... < x_N`` the wavefunction is
``psi = sum_sigma alpha_sigma exp(i sum_q k_{sigma(q)} x_q)``, where sigma runs
over permutations in one-line notation (labels 1..N).  Neighbouring
coefficients are linked by

    alpha_{sigma s_p} = Y^{p,p+1}(k_{sigma(p)} - k_{sigma(p+1)}) alpha_sigma,

with ``s_p`` the swap of positions p, p+1.  Outside the fundamental region the
wavefunction follows from exchange symmetry of ``(x_i, s_i)`` pairs.

Derivatives across a hyperplane ``x_i = x_j`` are taken with respect to the
relative coordinate ``x = x_j - x_i`` at fixed centre of mass, i.e.
``d/dx = (d/dx_j - d/dx_i) / 2``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .contact_params import AntiDelta, Delta, NonSeparatedParams, Separated, SeparatedParams
from .errors import DomainError
from .spinspace import SpinSystem, SpinVector, permutation_sign, site_permutation_operator
from .yops import y_operator

__all__ = [
    "MAX_PARTICLES",
    "MomentumSet",
    "CoefficientTable",
    "WaveFunction",
    "OneSidedData",
    "BoundaryReport",
    "KinkGaugeReport",
    "reduced_word",
    "apply_word",
    "build_coefficient_table",
    "evaluate",
    "one_sided_data",
    "boundary_residual",
    "check_boundary_conditions",
    "path_independence_residual",
    "statistics_residual",
    "sample_hyperplane_point",
    "gauge_sign",
    "dual_family",
    "kink_gauge_check",
]

MAX_PARTICLES = 6


@dataclass(frozen=True, eq=False)
class MomentumSet:
    k: np.ndarray

    def __post_init__(self):
        k = np.array(self.k, dtype=complex).ravel()
        for a, b in itertools.combinations(range(len(k)), 2):
            if k[a] == k[b]:
                raise DomainError(f"momenta must be pairwise distinct; k_{a + 1} = k_{b + 1} = {k[a]}")
        k.flags.writeable = False
        object.__setattr__(self, "k", k)

    def __len__(self):
        return len(self.k)

    def __getitem__(self, label: int) -> complex:
        """Momentum of label ``1..N``."""
        return self.k[label - 1]


def _as_momenta(momenta) -> MomentumSet:
    return momenta if isinstance(momenta, MomentumSet) else MomentumSet(momenta)


def reduced_word(perm: Sequence[int], direction: str = "left") -> list[int]:
    """Positions ``p_1, ..., p_m`` with ``perm = s_{p_1} ... s_{p_m}`` applied to the identity in order.

    Found by bubble-sorting ``perm``; ``direction="left"`` sweeps left to right,
    ``"right"`` sweeps right to left.  Both give reduced words, usually different.
    """
    if direction not in ("left", "right"):
        raise DomainError(f"unknown direction {direction!r}")
    work = list(perm)
    N = len(work)
    sort_steps = []
    positions = range(N - 1) if direction == "left" else range(N - 2, -1, -1)
    changed = True
    while changed:
        changed = False
        for p in positions:
            if work[p] > work[p + 1]:
                work[p], work[p + 1] = work[p + 1], work[p]
                sort_steps.append(p + 1)
                changed = True
    return sort_steps[::-1]


def apply_word(family, momenta, system: SpinSystem, initial, word: Sequence[int]) -> np.ndarray:
    """Carry the identity coefficient along ``word``; returns the final vector."""
    momenta = _as_momenta(momenta)
    perm = list(range(1, system.N + 1))
    vec = np.array(initial, dtype=complex)
    for p in word:
        a, b = perm[p - 1], perm[p]
        y = y_operator(family, momenta[a] - momenta[b], system, p).matrix
        vec = y @ vec
        perm[p - 1], perm[p] = b, a
    return vec


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    system: SpinSystem
    momenta: MomentumSet
    family: object
    entries: dict
    words: dict

    def __getitem__(self, perm) -> np.ndarray:
        return self.entries[tuple(perm)]

    @property
    def permutations(self) -> list[tuple[int, ...]]:
        return list(self.entries)

    @property
    def initial(self) -> np.ndarray:
        return self.entries[tuple(range(1, self.system.N + 1))]

    def as_array(self) -> tuple[np.ndarray, np.ndarray]:
        perms = np.array(self.permutations, dtype=np.int64) - 1
        alphas = np.array([self.entries[p] for p in self.permutations])
        return perms, alphas


def build_coefficient_table(family, momenta, system: SpinSystem, initial=None, direction: str = "left") -> CoefficientTable:
    """All N! coefficient vectors, each reached from the identity by a bubble-sort word.

    ``initial`` defaults to the first spin basis vector.
    """
    if system.N > MAX_PARTICLES:
        raise DomainError(f"N = {system.N} exceeds the supported maximum {MAX_PARTICLES}")
    momenta = _as_momenta(momenta)
    if len(momenta) != system.N:
        raise DomainError(f"{len(momenta)} momenta given for N = {system.N}")
    if initial is None:
        initial = SpinVector.basis(system, 0)
    init = np.array(initial, dtype=complex)
    if init.shape != (system.dim,):
        raise DomainError(f"initial vector must have length {system.dim}")

    entries, words = {}, {}
    for perm in itertools.permutations(range(1, system.N + 1)):
        word = reduced_word(perm, direction)
        vec = apply_word(family, momenta, system, init, word)
        vec.flags.writeable = False
        entries[perm] = vec
        words[perm] = tuple(word)
    return CoefficientTable(system, momenta, family, entries, words)


def path_independence_residual(table: CoefficientTable) -> float:
    """Max difference between the stored entries and ones rebuilt along the opposite sweep."""
    worst = 0.0
    for perm, vec in table.entries.items():
        alt = apply_word(table.family, table.momenta, table.system, table.initial, reduced_word(perm, "right"))
        worst = max(worst, float(np.max(np.abs(alt - vec))))
    return worst


@dataclass(frozen=True, eq=False)
class WaveFunction:
    table: CoefficientTable
    _perms: np.ndarray = field(init=False, repr=False)
    _alphas: np.ndarray = field(init=False, repr=False)
    _kperm: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        perms, alphas = self.table.as_array()
        object.__setattr__(self, "_perms", perms)
        object.__setattr__(self, "_alphas", alphas)
        object.__setattr__(self, "_kperm", self.table.momenta.k[perms])

    @property
    def system(self) -> SpinSystem:
        return self.table.system

    @property
    def family(self):
        return self.table.family

    def value_and_gradient(self, x: Sequence[float], order: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
        """Analytic continuation of one region's plane-wave sum.

        ``order`` lists 0-based coordinate indices by increasing position; the
        point may sit on the region's boundary.  Returns ``(psi, grad)`` with
        ``grad[m]`` the derivative with respect to ``x_m``.
        """
        x = np.asarray(x, dtype=float)
        order = list(order)
        y = x[order]
        phase = np.exp(1j * (self._kperm @ y))
        fund = phase @ self._alphas
        grad_fund = (1j * self._kperm * phase[:, None]).T @ self._alphas
        Q = site_permutation_operator(self.system, [q + 1 for q in order])
        sign = permutation_sign([q + 1 for q in order]) if self.system.sign == -1 else 1
        value = sign * (Q @ fund)
        grad = np.empty((self.system.N, self.system.dim), dtype=complex)
        grad[order] = sign * (grad_fund @ Q.T)
        return value, grad

    def __call__(self, x) -> np.ndarray:
        return evaluate(self, x)


def _order(x) -> list[int]:
    return sorted(range(len(x)), key=lambda m: x[m])


def evaluate(wavefn: WaveFunction, x: Sequence[float]) -> np.ndarray:
    """Spin-vector value at a point with no two coordinates equal."""
    x = [float(v) for v in x]
    if len(x) != wavefn.system.N:
        raise DomainError(f"expected {wavefn.system.N} coordinates")
    if len(set(x)) < len(x):
        raise DomainError(f"{x} lies on a coincidence hyperplane; use one_sided_data")
    return wavefn.value_and_gradient(x, _order(x))[0]


@dataclass
class OneSidedData:
    plus: np.ndarray
    minus: np.ndarray
    dplus: np.ndarray
    dminus: np.ndarray
    order_plus: list[int]
    order_minus: list[int]


def _side_orders(base, i: int, j: int) -> tuple[list[int], list[int]]:
    # 0-based i, j; plus side puts x_i just below x_j
    def key(side):
        def k(m):
            tie = 0
            if m == i:
                tie = -side
            elif m == j:
                tie = side
            return (base[m], tie)

        return k

    return sorted(range(len(base)), key=key(1)), sorted(range(len(base)), key=key(-1))


def one_sided_data(wavefn, pair, base: Sequence[float]) -> OneSidedData:
    """psi and d psi/dx on both sides of ``x_i = x_j``, with ``x = x_j - x_i``.

    ``pair`` is ``(i, j)`` with 1-based coordinate labels, or a single ``i``
    meaning ``(i, i + 1)``.  ``wavefn`` is anything exposing
    ``value_and_gradient(x, order)``.
    """
    N = wavefn.system.N
    if isinstance(pair, int):
        pair = (pair, pair + 1)
    i, j = pair[0] - 1, pair[1] - 1
    if not (0 <= i < N and 0 <= j < N) or i == j:
        raise DomainError(f"invalid pair {pair}")
    base = [float(v) for v in base]
    if base[i] != base[j]:
        raise DomainError(f"base point has x_{i + 1} = {base[i]} != x_{j + 1} = {base[j]}")
    for m in range(N):
        if m not in (i, j) and base[m] == base[i]:
            raise DomainError("base point lies on a higher-codimension coincidence")
    o_plus, o_minus = _side_orders(base, i, j)
    v_p, g_p = wavefn.value_and_gradient(base, o_plus)
    v_m, g_m = wavefn.value_and_gradient(base, o_minus)
    return OneSidedData(v_p, v_m, (g_p[j] - g_p[i]) / 2, (g_m[j] - g_m[i]) / 2, o_plus, o_minus)


def boundary_residual(family, data: OneSidedData) -> float:
    """Largest violation of the family's matching conditions."""
    p, m, dp, dm = data.plus, data.minus, data.dplus, data.dminus
    if isinstance(family, Delta):
        parts = [p - m, dp - family.c * m - dm]
    elif isinstance(family, AntiDelta):
        parts = [p + m, dp - family.c * m + dm]
    elif isinstance(family, (Separated, SeparatedParams)):
        if math.isinf(family.h):
            parts = [p, m]
        else:
            parts = [dp - family.h * p, dm + family.h * m]
    elif isinstance(family, NonSeparatedParams):
        e = np.exp(1j * family.theta)
        parts = [p - e * (family.a * m + family.b * dm), dp - e * (family.c * m + family.d * dm)]
    else:
        raise DomainError(f"unknown family {family!r}")
    return float(max(np.max(np.abs(q)) for q in parts))


def sample_hyperplane_point(rng: np.random.Generator, N: int, pair, span: float = 1.5, min_gap: float = 0.2) -> list[float]:
    """Random point with ``x_i = x_j`` and all other gaps at least ``min_gap``."""
    i, j = (pair, pair + 1) if isinstance(pair, int) else pair
    for _ in range(10_000):
        vals = rng.uniform(-span, span, N - 1)
        s = np.sort(vals)
        if N > 2 and np.min(np.diff(s)) < min_gap:
            continue
        x = []
        it = iter(vals)
        shared = None
        for m in range(1, N + 1):
            if m == j:
                continue
            v = float(next(it))
            if m == i:
                shared = v
            x.append((m, v))
        x.append((j, shared))
        return [v for _, v in sorted(x)]
    raise RuntimeError("could not sample a hyperplane point")


@dataclass
class BoundaryReport:
    max_residual: float
    per_pair: dict
    trials: int
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def check_boundary_conditions(wavefn: WaveFunction, trials: int = 20, tol: float = 1e-9, seed: int = 0, family=None) -> BoundaryReport:
    """Sample every coincidence plane ``x_i = x_j`` and measure the matching residual."""
    family = wavefn.family if family is None else family
    rng = np.random.default_rng(seed)
    N = wavefn.system.N
    per_pair = {}
    for pair in itertools.combinations(range(1, N + 1), 2):
        worst = 0.0
        for _ in range(trials):
            base = sample_hyperplane_point(rng, N, pair)
            worst = max(worst, boundary_residual(family, one_sided_data(wavefn, pair, base)))
        per_pair[pair] = worst
    return BoundaryReport(max(per_pair.values(), default=0.0), per_pair, trials, tol)


def statistics_residual(wavefn: WaveFunction, trials: int = 20, seed: int = 0) -> float:
    """Check ``psi(x o sigma) = sign * M_sigma^T psi(x)`` at random points and permutations."""
    rng = np.random.default_rng(seed)
    system = wavefn.system
    worst = 0.0
    for _ in range(trials):
        x = rng.uniform(-2, 2, system.N)
        sigma = [int(q) + 1 for q in rng.permutation(system.N)]
        xp = [x[s - 1] for s in sigma]
        M = site_permutation_operator(system, sigma)
        sign = permutation_sign(sigma) if system.sign == -1 else 1
        worst = max(worst, float(np.max(np.abs(evaluate(wavefn, xp) - sign * (M.T @ evaluate(wavefn, x))))))
    return worst


# --- kink gauge -------------------------------------------------------------


def gauge_sign(order: Sequence[int]) -> int:
    """``prod_{i>j} sgn(x_i - x_j)`` for a point whose increasing order is ``order``."""
    return permutation_sign([q + 1 for q in order])


class _Gauged:
    """psi multiplied pointwise by the kink factor."""

    def __init__(self, wavefn: WaveFunction, system: SpinSystem):
        self.wavefn = wavefn
        self.system = system

    def value_and_gradient(self, x, order):
        v, g = self.wavefn.value_and_gradient(x, order)
        s = gauge_sign(order)
        return s * v, s * g

    def __call__(self, x):
        x = [float(v) for v in x]
        return self.value_and_gradient(x, _order(x))[0]


def dual_family(family):
    """Partner of a delta-type family under the kink gauge (c -> -c, delta <-> anti-delta)."""
    if isinstance(family, Delta):
        return AntiDelta(-family.c)
    if isinstance(family, AntiDelta):
        return Delta(-family.c)
    raise DomainError(f"kink duality is defined for delta and anti-delta families, got {family!r}")


@dataclass
class KinkGaugeReport:
    boundary_residual: float
    opposite_sign_residual: float
    statistics_residual: float
    direct_residual: float
    verified_sign: int
    tol: float

    @property
    def max_residual(self) -> float:
        return max(self.boundary_residual, self.statistics_residual, self.direct_residual)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def kink_gauge_check(wavefn: WaveFunction, trials: int = 20, tol: float = 1e-9, seed: int = 0) -> KinkGaugeReport:
    """Multiply psi by ``prod_{i>j} sgn(x_i - x_j)`` and test it against the dual model.

    The gauged function is checked three ways: the dual family's matching
    conditions on every coincidence plane, exchange symmetry with the flipped
    statistics, and pointwise agreement with the dual model's own Bethe
    wavefunction built from the same initial coefficient.  The strength sign
    is not assumed: the residual for ``c' = +c`` is reported too, and
    ``verified_sign`` is whichever of ``-1, +1`` actually fits.
    """
    family = wavefn.family
    dual = dual_family(family)
    flipped = wavefn.system.with_statistics(wavefn.system.statistics.flipped())
    gauged = _Gauged(wavefn, flipped)
    same_sign = type(dual)(-dual.c)

    bc = check_boundary_conditions(gauged, trials, tol, seed, family=dual)
    alt = check_boundary_conditions(gauged, trials, tol, seed, family=same_sign)

    direct = WaveFunction(build_coefficient_table(dual, wavefn.table.momenta, flipped, wavefn.table.initial))
    rng = np.random.default_rng(seed + 1)
    stat_worst, direct_worst = 0.0, 0.0
    for _ in range(trials):
        x = rng.uniform(-2, 2, flipped.N)
        sigma = [int(q) + 1 for q in rng.permutation(flipped.N)]
        xp = [x[s - 1] for s in sigma]
        M = site_permutation_operator(flipped, sigma)
        sign = permutation_sign(sigma) if flipped.sign == -1 else 1
        stat_worst = max(stat_worst, float(np.max(np.abs(gauged(xp) - sign * (M.T @ gauged(x))))))
        direct_worst = max(direct_worst, float(np.max(np.abs(gauged(x) - evaluate(direct, x)))))
    verified = -1 if bc.max_residual <= alt.max_residual else 1
    return KinkGaugeReport(bc.max_residual, alt.max_residual, stat_worst, direct_worst, verified, tol)
