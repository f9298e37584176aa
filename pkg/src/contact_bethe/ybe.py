"""Yang-Baxter residuals and the integrability scan over contact parameters.

The consistency conditions on the Y-operators are

* the three-site relation
  ``Y^{12}(k_i-k_j) Y^{23}(k_k-k_j) Y^{12}(k_k-k_i) = Y^{23}(k_k-k_i) Y^{12}(k_k-k_j) Y^{23}(k_i-k_j)``,
* the inverse relation ``Y(k_i-k_j) Y(k_j-k_i) = 1``,
* commutation of operators on disjoint site pairs.

A parameter point passes when all residuals (max-abs entry norm) are within
tolerance.  The three-site relation alone also holds for ``theta != 0`` on
``a = d = +-1, b = 0``; it is the inverse relation that pins ``theta = 0``.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .contact_params import (
    DET_TOL,
    NonSeparatedParams,
    Separated,
    SeparatedParams,
    as_nonseparated,
    validate_nonseparated,
)
from .errors import DomainError, PoleError
from .spinspace import SpinSystem
from .yops import y_operator

__all__ = [
    "PASS_TOL",
    "FAIL_FLOOR",
    "YbeReport",
    "GridSpec",
    "ScanRow",
    "ScanResult",
    "ybe_residual",
    "inverse_residual",
    "commute_residual",
    "sample_momenta",
    "denominator",
    "predicted_integrable",
    "classification_scan",
    "separated_scan",
    "scan_to_csv",
    "scan_to_json",
]

PASS_TOL = 1e-10
FAIL_FLOOR = 1e-6


def _maxabs(m) -> float:
    return float(np.max(np.abs(m)))


def _y(params, k_diff, system, pair):
    return y_operator(params, k_diff, system, pair).matrix


@dataclass
class YbeReport:
    params: object
    momenta: tuple[complex, complex, complex]
    residual_ybe1: float
    residual_inverse: float
    residual_commute: float | None = None
    tol: float = PASS_TOL

    @property
    def max_residual(self) -> float:
        vals = [self.residual_ybe1, self.residual_inverse]
        if self.residual_commute is not None:
            vals.append(self.residual_commute)
        return max(vals)

    @property
    def verdict(self) -> bool:
        return self.max_residual <= self.tol


def _three_site_residual(params, momenta, system) -> float:
    ki, kj, kk = momenta
    lhs = _y(params, ki - kj, system, 1) @ _y(params, kk - kj, system, 2) @ _y(params, kk - ki, system, 1)
    rhs = _y(params, kk - ki, system, 2) @ _y(params, kk - kj, system, 1) @ _y(params, ki - kj, system, 2)
    return _maxabs(lhs - rhs)


def inverse_residual(params, k_i: complex, k_j: complex, system: SpinSystem) -> float:
    """``max|Y(k_i - k_j) Y(k_j - k_i) - 1|`` on sites (1, 2)."""
    if system.N < 2:
        raise DomainError("inverse relation needs N >= 2")
    if k_i == k_j:
        raise DomainError("coincident momenta are excluded")
    prod = _y(params, k_i - k_j, system, 1) @ _y(params, k_j - k_i, system, 1)
    return _maxabs(prod - np.eye(system.dim))


def commute_residual(params, momenta: Sequence[complex], system: SpinSystem) -> float:
    """``max|[Y^{12}(k_1 - k_2), Y^{34}(k_3 - k_4)]|`` on a four-particle space."""
    if system.N < 4:
        raise DomainError("commutation relation needs N >= 4 (disjoint pairs (1,2) and (3,4))")
    k1, k2, k3, k4 = momenta[:4]
    y12 = _y(params, k1 - k2, system, 1)
    y34 = _y(params, k3 - k4, system, 3)
    return _maxabs(y12 @ y34 - y34 @ y12)


def ybe_residual(params, momenta: Sequence[complex], system: SpinSystem, tol: float = PASS_TOL, with_commute: bool = False) -> YbeReport:
    """Three-site and inverse residuals at one momentum triple.

    ``system`` supplies n and statistics; it is used with N = 3 (and N = 4 for
    the optional commutation residual).
    """
    if len(momenta) != 3:
        raise DomainError(f"expected three momenta, got {len(momenta)}")
    ks = tuple(complex(k) for k in momenta)
    if len(set(ks)) < 3:
        raise DomainError(f"momenta must be pairwise distinct, got {ks}")
    sys3 = system.with_particles(3)
    try:
        r1 = _three_site_residual(params, ks, sys3)
        rinv = max(inverse_residual(params, ks[a], ks[b], sys3) for a, b in ((0, 1), (0, 2), (1, 2)))
    except PoleError as err:
        raise PoleError(f"{err} while evaluating momenta {ks}", err.denominator, err.pair) from err
    rcom = None
    if with_commute:
        rcom = commute_residual(params, ks + (ks[0] + ks[2],), system.with_particles(4))
    return YbeReport(params, ks, r1, rinv, rcom, tol)


def denominator(params, k_diff: complex) -> complex:
    """Scalar denominator of the Y-operator (inf for the Dirichlet limit)."""
    kd = complex(k_diff)
    if isinstance(params, NonSeparatedParams):
        k = kd / 2
        return 1j * k * (params.a + params.d) + k * k * params.b - params.c
    if isinstance(params, (Separated, SeparatedParams)):
        return complex(math.inf) if math.isinf(params.h) else 1j * kd - 2 * params.h
    return denominator(as_nonseparated(params), kd)


def sample_momenta(
    rng: np.random.Generator,
    params,
    count: int = 3,
    low: float = -5.0,
    high: float = 5.0,
    min_sep: float = 0.1,
    min_pole: float = 0.1,
    max_tries: int = 10_000,
) -> tuple[np.ndarray, int]:
    """Uniform real momenta with pairwise gap and pole distance; returns (k, resamples)."""
    for tries in range(max_tries):
        k = rng.uniform(low, high, count)
        gaps = [abs(k[a] - k[b]) for a, b in itertools.combinations(range(count), 2)]
        if min(gaps, default=math.inf) < min_sep:
            continue
        dens = [abs(denominator(params, k[a] - k[b])) for a in range(count) for b in range(count) if a != b]
        if min(dens, default=math.inf) < min_pole:
            continue
        return k, tries
    raise RuntimeError("could not sample momenta away from poles")


# --- classification scan ---------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    thetas: tuple[float, ...] = (0.0, 0.5, -0.5)
    a_values: tuple[float, ...] = (1.0, -1.0, 2.0, -2.0)
    b_values: tuple[float, ...] = (0.0, 1.0, -1.0)
    c_values: tuple[float, ...] = (-2.0, 0.0, 2.0)
    # d is free when a = 0 (then bc = -1 is required)
    d_values_for_a0: tuple[float, ...] = (0.0,)

    def points(self) -> list[NonSeparatedParams]:
        pts = []
        for theta, a, b, c in itertools.product(self.thetas, self.a_values, self.b_values, self.c_values):
            if a == 0:
                if abs(b * c + 1.0) > DET_TOL:
                    continue
                for d in self.d_values_for_a0:
                    pts.append(validate_nonseparated(NonSeparatedParams(theta, a, b, c, d)))
            else:
                pts.append(validate_nonseparated(NonSeparatedParams(theta, a, b, c, (1.0 + b * c) / a)))
        return pts

    def __len__(self) -> int:
        return len(self.points())


@dataclass
class ScanRow:
    theta: float
    a: float
    b: float
    c: float
    d: float
    max_residual: float
    verdict: bool
    residual_ybe1: float = 0.0
    residual_inverse: float = 0.0


@dataclass
class ScanResult:
    rows: list[ScanRow]
    resamples: int
    tol: float
    n: int
    triples: list[tuple[float, float, float]] = field(default_factory=list)

    @property
    def pass_set(self) -> list[ScanRow]:
        return [r for r in self.rows if r.verdict]

    def matches_prediction(self, fail_floor: float = FAIL_FLOOR) -> bool:
        """Pass set equals the predicted integrable points and every other point is clearly failing."""
        for r in self.rows:
            predicted = predicted_integrable(NonSeparatedParams(r.theta, r.a, r.b, r.c, r.d))
            if predicted != r.verdict:
                return False
            if not predicted and r.max_residual <= fail_floor:
                return False
        return True


def predicted_integrable(params: NonSeparatedParams, atol: float = 1e-12) -> bool:
    return abs(params.theta) <= atol and abs(params.a - params.d) <= atol and abs(params.b) <= atol


def _momentum_triples(rng, params, count):
    triples, resamples = [], 0
    for _ in range(count):
        k, tries = sample_momenta(rng, params, 3)
        triples.append(tuple(float(x) for x in k))
        resamples += tries
    return triples, resamples


def classification_scan(
    grid: GridSpec | Iterable[NonSeparatedParams] = GridSpec(),
    system: SpinSystem = SpinSystem(3, 2),
    n_triples: int = 3,
    tol: float = PASS_TOL,
    seed: int = 0,
) -> ScanResult:
    """Maximum Yang-Baxter residual at every grid point.

    Momentum triples are drawn per grid point from one seeded generator after
    sorting the grid, so the table does not depend on evaluation order.
    """
    points = grid.points() if isinstance(grid, GridSpec) else [validate_nonseparated(p) for p in grid]
    if not points:
        raise DomainError("empty parameter grid")
    points = sorted(points, key=lambda p: p.as_tuple())
    rng = np.random.default_rng(seed)
    rows, total_resamples, all_triples = [], 0, []
    for p in points:
        triples, resamples = _momentum_triples(rng, p, n_triples)
        total_resamples += resamples
        all_triples.extend(triples)
        reports = [ybe_residual(p, t, system, tol) for t in triples]
        r1 = max(r.residual_ybe1 for r in reports)
        rinv = max(r.residual_inverse for r in reports)
        worst = max(r1, rinv)
        rows.append(ScanRow(*p.as_tuple(), worst, worst <= tol, r1, rinv))
    return ScanResult(rows, total_resamples, tol, system.n, all_triples)


@dataclass
class SeparatedScanRow:
    h: float
    max_residual: float
    verdict: bool


def separated_scan(h_values: Sequence[float], system: SpinSystem = SpinSystem(3, 2), n_triples: int = 10, tol: float = PASS_TOL, seed: int = 0):
    if len(h_values) == 0:
        raise DomainError("empty h grid")
    rng = np.random.default_rng(seed)
    rows = []
    for h in sorted(h_values):
        fam = Separated(h)
        triples, _ = _momentum_triples(rng, fam, n_triples)
        worst = max(ybe_residual(fam, t, system, tol).max_residual for t in triples)
        rows.append(SeparatedScanRow(h, worst, worst <= tol))
    return rows


def _fmt(x: float) -> str:
    return repr(float(x))


def scan_to_csv(result: ScanResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theta", "a", "b", "c", "d", "max_residual", "verdict"])
    for r in result.rows:
        writer.writerow([_fmt(r.theta), _fmt(r.a), _fmt(r.b), _fmt(r.c), _fmt(r.d), _fmt(r.max_residual), "pass" if r.verdict else "fail"])
    return buf.getvalue()


def scan_to_json(result: ScanResult) -> str:
    payload = {
        "tol": result.tol,
        "n": result.n,
        "resamples": result.resamples,
        "matches_prediction": result.matches_prediction(),
        "rows": [asdict(r) for r in result.rows],
    }
    return json.dumps(payload, sort_keys=True, indent=2)
