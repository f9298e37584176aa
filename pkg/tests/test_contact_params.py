import math

import numpy as np
import pytest

from contact_bethe.contact_params import (
    INF,
    AntiDelta,
    Delta,
    NonSeparatedParams,
    Separated,
    SeparatedParams,
    as_nonseparated,
    family_from_nonseparated,
    load_config,
    nonseparated_from_constraint,
    params_from_mapping,
    two_body_relation_oracle,
    validate_nonseparated,
    validate_separated,
)
from contact_bethe.errors import DomainError, InconsistentBoundaryError, PoleError, ValidationError
from contact_bethe.spinspace import SpinSystem, statistics_operator


class TestValidation:
    def test_delta_point(self):
        p = validate_nonseparated(NonSeparatedParams(0, 1, 0, 5, 1))
        assert p == NonSeparatedParams(0, 1, 0, 5, 1)

    def test_scaling_point(self):
        validate_nonseparated(NonSeparatedParams(0, 2, 0, 0, 0.5))

    def test_determinant_violation_reports_residual(self):
        with pytest.raises(ValidationError) as info:
            validate_nonseparated(NonSeparatedParams(0, 1, 1, 1, 1))
        assert info.value.residual == pytest.approx(-1.0)

    def test_theta_wrapped(self):
        p = validate_nonseparated(NonSeparatedParams(3 * math.pi, 1, 0, 0, 1))
        assert p.theta == pytest.approx(math.pi)
        p = validate_nonseparated(NonSeparatedParams(-math.pi, 1, 0, 0, 1))
        assert p.theta == pytest.approx(math.pi)
        p = validate_nonseparated(NonSeparatedParams(2 * math.pi + 0.25, 1, 0, 0, 1))
        assert p.theta == pytest.approx(0.25)

    def test_inexact_determinant_within_tolerance(self):
        a, b, c = 3.0, 0.7, 1.9
        validate_nonseparated(NonSeparatedParams(0, a, b, c, (1 + b * c) / a))

    def test_constraint_solver(self):
        p = nonseparated_from_constraint(0.1, 2.0, 1.0, 1.0)
        assert p.d == 1.0
        with pytest.raises(DomainError):
            nonseparated_from_constraint(0, 0, 1, -1)

    def test_separated(self):
        assert validate_separated(1, -1) == SeparatedParams(1.0)
        assert validate_separated("inf", "inf").dirichlet
        assert validate_separated(INF, INF).h == INF
        with pytest.raises(InconsistentBoundaryError):
            validate_separated(1, 1)
        with pytest.raises(InconsistentBoundaryError):
            validate_separated(INF, 2.0)

    @pytest.mark.parametrize("h", [-3.0, -0.1, 0.0, 0.4, 17.25, 1e6])
    def test_separated_never_errors_for_opposite_pair(self, h):
        assert validate_separated(h, -h).h == h


class TestFamilies:
    @pytest.mark.parametrize("fam", [Delta(2.5), AntiDelta(-1.5), Delta(0.0)])
    def test_embedding_round_trip(self, fam):
        assert family_from_nonseparated(as_nonseparated(fam)) == fam

    def test_embedding_values(self):
        assert as_nonseparated(Delta(3)) == NonSeparatedParams(0, 1, 0, 3, 1)
        assert as_nonseparated(AntiDelta(3)) == NonSeparatedParams(0, -1, 0, 3, -1)

    def test_non_integrable_has_no_family(self):
        assert family_from_nonseparated(NonSeparatedParams(0, 2, 0, 0, 0.5)) is None
        assert family_from_nonseparated(NonSeparatedParams(0.3, 1, 0, 1, 1)) is None

    def test_separated_parses_inf(self):
        assert Separated("inf").h == INF
        assert Separated("-2").h == -2.0


class TestOracle:
    def test_delta_scalar(self):
        m = two_body_relation_oracle(Delta(2), 1.0, SpinSystem(2, 1))
        # (2i*1*1 + 2) / (2i*1 - 2)
        assert m[0, 0] == pytest.approx((2j + 2) / (2j - 2))
        assert m[0, 0] == pytest.approx(-1j)

    def test_separated_scalar(self):
        m = two_body_relation_oracle(Separated(1.0), 1.0, SpinSystem(2, 2))
        assert np.allclose(m, (1j + 1) / (1j - 1) * np.eye(4))
        assert np.allclose(m, -1j * np.eye(4))

    def test_dirichlet(self):
        m = two_body_relation_oracle(SeparatedParams(INF), 0.3, SpinSystem(2, 2))
        assert np.array_equal(m, -np.eye(4))

    @pytest.mark.parametrize("stats", ["boson", "fermion"])
    @pytest.mark.parametrize("k12", [0.2, -1.7, 3.0])
    def test_free_case_is_statistics_swap(self, stats, k12):
        sy = SpinSystem(2, 2, stats)
        m = two_body_relation_oracle(NonSeparatedParams(0, 1, 0, 0, 1), k12, sy)
        assert np.allclose(m, statistics_operator(sy, 1, 2), atol=1e-14)

    def test_substitution_satisfies_both_block_equations_on_integrable_points(self, rng):
        # alpha_21 = M alpha_12 must solve the full 2n^2 system when theta = 0, a = d
        sy = SpinSystem(2, 2, "fermion")
        P = statistics_operator(sy, 1, 2)
        for fam in (Delta(1.3), AntiDelta(-0.4), NonSeparatedParams(0, 2, 1, 3, 2)):
            ns = as_nonseparated(fam)
            k = 0.81
            M = two_body_relation_oracle(fam, k, sy)
            a12 = rng.normal(size=4) + 1j * rng.normal(size=4)
            a21 = M @ a12
            eq1 = a12 + a21 - ns.a * P @ (a12 + a21) - 1j * ns.b * k * P @ (a12 - a21)
            eq2 = 1j * k * (a21 - a12) - ns.c * P @ (a12 + a21) - 1j * ns.d * k * P @ (a12 - a21)
            assert np.max(np.abs(eq1)) < 1e-12 and np.max(np.abs(eq2)) < 1e-12

    def test_eliminations_disagree_off_the_symmetric_line(self):
        sy = SpinSystem(2, 2)
        p = NonSeparatedParams(0.4, 2, 1, 1, 1)
        m1 = two_body_relation_oracle(p, 0.7, sy, eliminate="p_alpha21")
        m2 = two_body_relation_oracle(p, 0.7, sy, eliminate="p_alpha12")
        assert np.max(np.abs(m1 - m2)) > 0.1
        q = NonSeparatedParams(0, 2, 1, 3, 2)
        assert np.allclose(
            two_body_relation_oracle(q, 0.7, sy, eliminate="p_alpha21"),
            two_body_relation_oracle(q, 0.7, sy, eliminate="p_alpha12"),
            atol=1e-13,
        )

    def test_requires_two_particles(self):
        with pytest.raises(DomainError):
            two_body_relation_oracle(Delta(1), 1.0, SpinSystem(3, 1))

    def test_pole(self):
        # delta with c = 2: singular where 2 i k12 = c
        with pytest.raises(PoleError):
            two_body_relation_oracle(Delta(2.0), -1j, SpinSystem(2, 1))


class TestConfig:
    def test_mapping_families(self):
        p, sy = params_from_mapping({"family": "delta", "c": "1.5", "n": "2", "N": "3", "statistics": "fermion"})
        assert p == Delta(1.5)
        assert sy == SpinSystem(3, 2, "fermion")
        p, sy = params_from_mapping({"family": "separated", "h": "inf"})
        assert p.h == INF and sy is None
        p, _ = params_from_mapping({"family": "general", "theta": 0, "a": 1, "b": 0.5, "c": 0})
        assert p.d == 1.0
        with pytest.raises(ValidationError):
            params_from_mapping({"family": "general", "a": 1, "b": 1, "c": 1, "d": 1})
        with pytest.raises(DomainError):
            params_from_mapping({"family": "bogus"})

    def test_load_config(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("# anti-delta run\nfamily = antidelta\nc = -2\nn = 2\nN = 3\nstatistics = fermion\n")
        values = load_config(path)
        assert values["n"] == "2" and values["N"] == "3"
        p, sy = params_from_mapping(values)
        assert p == AntiDelta(-2.0) and sy == SpinSystem(3, 2, "fermion")
