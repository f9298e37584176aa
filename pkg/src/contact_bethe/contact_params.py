"""Boundary-condition parameters for pairwise contact interactions.

Two kinds of condition are imposed on the relative coordinate ``x = x_2 - x_1``:

* nonseparated: ``(phi, phi')(0+) = e^{i theta} [[a, b], [c, d]] (phi, phi')(0-)``
  with real ``theta, a, b, c, d`` and ``ad - bc = 1``;
* separated: ``phi'(0+) = h+ phi(0+)``, ``phi'(0-) = h- phi(0-)``.

This module also holds the numerical two-body oracle, which recovers the
relation between the two Bethe coefficients by a dense linear solve of the
boundary conditions instead of the closed-form operator in :mod:`yops`.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np

from .errors import DomainError, InconsistentBoundaryError, PoleError, ValidationError
from .spinspace import SpinSystem, Statistics, statistics_operator

__all__ = [
    "INF",
    "DET_TOL",
    "NonSeparatedParams",
    "SeparatedParams",
    "Delta",
    "AntiDelta",
    "Separated",
    "IntegrableFamily",
    "ContactParams",
    "validate_nonseparated",
    "validate_separated",
    "nonseparated_from_constraint",
    "as_nonseparated",
    "family_from_nonseparated",
    "two_body_relation_oracle",
    "parse_h",
    "params_from_mapping",
    "load_config",
]

INF = math.inf
DET_TOL = 1e-12


def parse_h(value) -> float:
    """Read an ``h`` value; ``inf``/``infinity`` (any case) is the Dirichlet limit."""
    if isinstance(value, str):
        token = value.strip().lower()
        if token in ("inf", "+inf", "infinity", "+infinity"):
            return INF
        if token in ("-inf", "-infinity"):
            return -INF
        value = float(token)
    return float(value)


def _wrap_angle(theta: float) -> float:
    wrapped = math.remainder(theta, 2 * math.pi)
    # remainder lands in [-pi, pi]; move -pi to +pi
    return math.pi if wrapped == -math.pi else wrapped


@dataclass(frozen=True)
class NonSeparatedParams:
    theta: float
    a: float
    b: float
    c: float
    d: float

    @property
    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.theta, self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class SeparatedParams:
    h: float

    @property
    def dirichlet(self) -> bool:
        return math.isinf(self.h)


@dataclass(frozen=True)
class Delta:
    c: float


@dataclass(frozen=True)
class AntiDelta:
    c: float


@dataclass(frozen=True)
class Separated:
    h: float

    def __post_init__(self):
        object.__setattr__(self, "h", parse_h(self.h))


IntegrableFamily = Union[Delta, AntiDelta, Separated]
ContactParams = Union[NonSeparatedParams, SeparatedParams, Delta, AntiDelta, Separated]


def validate_nonseparated(params: NonSeparatedParams) -> NonSeparatedParams:
    """Check ``ad - bc = 1`` and return the record with theta wrapped into (-pi, pi]."""
    values = params.as_tuple()
    if not all(math.isfinite(v) for v in values):
        raise ValidationError(f"non-finite parameter in {params}")
    residual = params.determinant - 1.0
    if residual != 0.0 and abs(residual) > DET_TOL:
        raise ValidationError(
            f"ad - bc = {params.determinant!r} violates ad - bc = 1 (residual {residual:.3g})",
            residual=residual,
        )
    return NonSeparatedParams(_wrap_angle(params.theta), params.a, params.b, params.c, params.d)


def validate_separated(h_plus, h_minus) -> SeparatedParams:
    """Combine the one-sided Robin constants; they must satisfy h+ = -h-.

    Both infinite is accepted as the Dirichlet condition on each side.
    """
    hp, hm = parse_h(h_plus), parse_h(h_minus)
    if math.isinf(hp) or math.isinf(hm):
        if math.isinf(hp) and math.isinf(hm):
            return SeparatedParams(INF)
        raise InconsistentBoundaryError(f"h+ = {hp}, h- = {hm}: only one side is Dirichlet")
    if math.isnan(hp) or math.isnan(hm):
        raise InconsistentBoundaryError("h is NaN")
    residual = hp + hm
    if abs(residual) > DET_TOL * max(1.0, abs(hp)):
        raise InconsistentBoundaryError(
            f"h+ = {hp}, h- = {hm}: the two-body conditions are contradictory unless h+ = -h-",
            residual=residual,
        )
    return SeparatedParams(hp)


def nonseparated_from_constraint(theta: float, a: float, b: float, c: float) -> NonSeparatedParams:
    """Solve ``ad - bc = 1`` for d (requires a != 0)."""
    if a == 0:
        raise DomainError("d is not determined by the constraint when a = 0")
    return validate_nonseparated(NonSeparatedParams(theta, a, b, c, (1.0 + b * c) / a))


def as_nonseparated(family) -> NonSeparatedParams:
    """Embed the delta / anti-delta families into the general record."""
    if isinstance(family, NonSeparatedParams):
        return family
    if isinstance(family, Delta):
        return NonSeparatedParams(0.0, 1.0, 0.0, float(family.c), 1.0)
    if isinstance(family, AntiDelta):
        return NonSeparatedParams(0.0, -1.0, 0.0, float(family.c), -1.0)
    raise DomainError(f"{family!r} has no nonseparated embedding")


def family_from_nonseparated(params: NonSeparatedParams):
    """Inverse of :func:`as_nonseparated`; None for a non-integrable point."""
    if params.theta == 0 and params.b == 0:
        if params.a == params.d == 1:
            return Delta(params.c)
        if params.a == params.d == -1:
            return AntiDelta(params.c)
    return None


def two_body_relation_oracle(params, k12: complex, system: SpinSystem, eliminate: str = "p_alpha21"):
    """Matrix M with ``alpha_21 = M alpha_12`` from a dense solve of the two-body conditions.

    ``k12`` is half the momentum difference, ``(k_1 - k_2) / 2``.  Substituting the
    two-region Bethe ansatz into the boundary conditions at ``x = 0`` gives two
    block equations in ``alpha_12, alpha_21, P alpha_12, P alpha_21``.  One of the
    two swapped vectors is promoted to an independent unknown and eliminated by
    the solve:

    * ``"p_alpha21"`` (default) treats ``P alpha_21`` as the unknown; this route
      reproduces the closed-form operator for every parameter set.
    * ``"p_alpha12"`` treats ``P alpha_12`` as the unknown.  It agrees with the
      default only when ``theta = 0`` and ``a = d``.

    For separated conditions the two equations collapse onto each other only if
    ``h+ = -h-``; the record passed in is already reduced to a single ``h``.
    """
    if system.N != 2:
        raise DomainError("the two-body oracle needs a system with N = 2")
    if eliminate not in ("p_alpha21", "p_alpha12"):
        raise DomainError(f"unknown elimination {eliminate!r}")
    k = complex(k12)
    m = system.dim
    eye = np.eye(m)
    P = statistics_operator(system, 1, 2)

    if isinstance(params, (SeparatedParams, Separated)):
        h = params.h
        if math.isinf(h):
            # Dirichlet: alpha_12 + alpha_21 = 0 on both sides
            return -eye.astype(complex)
        # ik(a21 - a12) = h (a12 + a21);  ik P(a12 - a21) = -h P(a12 + a21)
        c1 = {"a12": (-1j * k - h) * eye, "a21": (1j * k - h) * eye, "p12": 0 * eye, "p21": 0 * eye}
        c2 = {"a12": 0 * eye, "a21": 0 * eye, "p12": (1j * k + h) * eye, "p21": (-1j * k + h) * eye}
    else:
        ns = as_nonseparated(params)
        e = np.exp(1j * ns.theta)
        # a12 + a21 - e a P(a12 + a21) - i e b k P(a12 - a21) = 0
        # ik(a21 - a12) - e c P(a12 + a21) - i e d k P(a12 - a21) = 0
        c1 = {
            "a12": eye,
            "a21": eye,
            "p12": -(e * ns.a + 1j * e * ns.b * k) * eye,
            "p21": -(e * ns.a - 1j * e * ns.b * k) * eye,
        }
        c2 = {
            "a12": -1j * k * eye,
            "a21": 1j * k * eye,
            "p12": -(e * ns.c + 1j * e * ns.d * k) * eye,
            "p21": -(e * ns.c - 1j * e * ns.d * k) * eye,
        }

    if eliminate == "p_alpha21":
        lhs = np.block([[c1["a21"], c1["p21"]], [c2["a21"], c2["p21"]]])
        rhs = -np.vstack([c1["a12"] + c1["p12"] @ P, c2["a12"] + c2["p12"] @ P])
    else:
        lhs = np.block([[c1["a21"] + c1["p21"] @ P, c1["p12"]], [c2["a21"] + c2["p21"] @ P, c2["p12"]]])
        rhs = -np.vstack([c1["a12"], c2["a12"]])

    lhs = lhs.astype(complex)
    scale = max(1.0, np.abs(lhs).max())
    sv = np.linalg.svd(lhs, compute_uv=False)
    if sv[-1] < 1e-13 * scale:
        raise PoleError(
            f"two-body system is singular at k12 = {k} (smallest singular value {sv[-1]:.3g})",
            denominator=sv[-1],
        )
    return np.linalg.solve(lhs, rhs)[:m]


def params_from_mapping(values: Mapping[str, object]):
    """Build parameters and a spin system from flat keys.

    Recognised keys: ``family`` (delta, antidelta, separated, general), ``theta``,
    ``a``, ``b``, ``c``, ``d``, ``h``, ``n``, ``N``, ``statistics``.  Returns
    ``(params, system)``; ``system`` is None when neither n nor N is given.
    """
    values = {str(k): v for k, v in values.items()}
    family = str(values.get("family", "general")).strip().lower()

    def num(key, default=None):
        if key not in values or values[key] in (None, ""):
            if default is None:
                raise DomainError(f"missing key {key!r} for family {family!r}")
            return default
        return float(values[key])

    if family == "delta":
        params = Delta(num("c"))
    elif family in ("antidelta", "anti-delta", "anti_delta"):
        params = AntiDelta(num("c"))
    elif family == "separated":
        if "h" not in values:
            raise DomainError("missing key 'h' for family 'separated'")
        params = Separated(parse_h(values["h"]))
    elif family == "general":
        theta, a, b, c = num("theta", 0.0), num("a"), num("b"), num("c")
        if "d" in values and values["d"] not in (None, ""):
            params = validate_nonseparated(NonSeparatedParams(theta, a, b, c, num("d")))
        else:
            params = nonseparated_from_constraint(theta, a, b, c)
    else:
        raise DomainError(f"unknown family {family!r}")

    system = None
    if "n" in values or "N" in values:
        system = SpinSystem(
            int(values.get("N", 2)),
            int(values.get("n", 1)),
            Statistics.parse(values.get("statistics", "boson")),
        )
    return params, system


def load_config(path) -> dict[str, str]:
    """Read a flat ``key = value`` file (``#`` comments allowed, no sections)."""
    with open(path) as fh:
        text = fh.read()
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#", ";"))
    parser.optionxform = str  # keep n and N apart
    parser.read_string("[run]\n" + text)
    return dict(parser["run"])
