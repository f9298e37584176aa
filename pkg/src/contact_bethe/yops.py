"""Closed-form two-body Y-operators.

Every constructor takes the full momentum difference ``k_diff = k_a - k_b``
and halves it internally where the formula is written in ``k12 = k_diff / 2``.
This is the only place the halving happens.

The operator acts on sites ``(i, j)`` through the statistics-signed swap
``P^{ij}``; for the Bethe recursion ``j = i + 1``, while the scattering
products also use non-adjacent pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .contact_params import (
    AntiDelta,
    Delta,
    NonSeparatedParams,
    Separated,
    SeparatedParams,
)
from .errors import DomainError, PoleError
from .spinspace import SpinSystem, statistics_operator

__all__ = ["YOperator", "POLE_RTOL", "y_nonseparated", "y_separated", "y_family", "y_operator"]

POLE_RTOL = 1e-13


@dataclass(frozen=True, eq=False)
class YOperator:
    system: SpinSystem
    pair: tuple[int, int]
    k_diff: complex
    matrix: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)


def _pair(system: SpinSystem, pair) -> tuple[int, int]:
    if isinstance(pair, int):
        pair = (pair, pair + 1)
    i, j = int(pair[0]), int(pair[1])
    if not (1 <= i <= system.N and 1 <= j <= system.N) or i == j:
        raise DomainError(f"invalid site pair {pair} for N = {system.N}")
    return i, j


def _check_pole(den: complex, scale: float, k_diff: complex, pair) -> None:
    if abs(den) < POLE_RTOL * (1.0 + scale):
        raise PoleError(
            f"Y-operator pole at k_diff = {k_diff} (denominator {den})",
            denominator=den,
            pair=pair,
        )


def _finish(system, pair, k_diff, matrix) -> YOperator:
    matrix.flags.writeable = False
    return YOperator(system, pair, complex(k_diff), matrix)


def y_nonseparated(params: NonSeparatedParams, k_diff: complex, system: SpinSystem, pair=1) -> YOperator:
    """General transfer-matrix condition.

    ``Y = [2i e^{i theta} k12 P + i k12 (a - d) + k12^2 b + c] / [i k12 (a + d) + k12^2 b - c]``.
    """
    i, j = _pair(system, pair)
    theta, a, b, c, d = params.as_tuple()
    k = complex(k_diff) / 2
    den = 1j * k * (a + d) + k * k * b - c
    scalar = 1j * k * (a - d) + k * k * b + c
    p_coeff = 2j * np.exp(1j * theta) * k
    _check_pole(den, max(abs(scalar), abs(p_coeff)), k_diff, (i, j))
    P = statistics_operator(system, i, j)
    matrix = (p_coeff * P + scalar * np.eye(system.dim)) / den
    return _finish(system, (i, j), k_diff, matrix)


def _separated_scalar(h: float, k_diff: complex, pair) -> complex:
    if math.isinf(h):
        return -1.0 + 0j
    kd = complex(k_diff)
    den = 1j * kd - 2 * h
    num = 1j * kd + 2 * h
    _check_pole(den, abs(num), k_diff, pair)
    return num / den


def y_separated(params, k_diff: complex, system: SpinSystem, pair=1) -> YOperator:
    """``(i k_diff + 2h) / (i k_diff - 2h)`` times the identity; -1 for h = inf."""
    i, j = _pair(system, pair)
    scalar = _separated_scalar(params.h, k_diff, (i, j))
    matrix = scalar * np.eye(system.dim, dtype=complex)
    return _finish(system, (i, j), k_diff, matrix)


def _delta_like(c: float, sign: int, k_diff: complex, system: SpinSystem, pair) -> YOperator:
    # sign=+1: (i kd P + c)/(i kd - c);  sign=-1: -(i kd P + c)/(i kd + c)
    i, j = _pair(system, pair)
    kd = complex(k_diff)
    den = 1j * kd - sign * c
    _check_pole(den, max(abs(kd), abs(c)), k_diff, (i, j))
    P = statistics_operator(system, i, j)
    num = 1j * kd * P + c * np.eye(system.dim)
    matrix = num / den if sign == 1 else -num / den
    return _finish(system, (i, j), k_diff, matrix)


def y_family(family, k_diff: complex, system: SpinSystem, pair=1) -> YOperator:
    if isinstance(family, Delta):
        return _delta_like(float(family.c), 1, k_diff, system, pair)
    if isinstance(family, AntiDelta):
        return _delta_like(float(family.c), -1, k_diff, system, pair)
    if isinstance(family, Separated):
        return y_separated(family, k_diff, system, pair)
    raise DomainError(f"not an integrable family: {family!r}")


def y_operator(params, k_diff: complex, system: SpinSystem, pair=1) -> YOperator:
    """Dispatch on any parameter record."""
    if isinstance(params, NonSeparatedParams):
        return y_nonseparated(params, k_diff, system, pair)
    if isinstance(params, SeparatedParams):
        return y_separated(params, k_diff, system, pair)
    return y_family(params, k_diff, system, pair)
