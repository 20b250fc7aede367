"""Tests for body files and the inertia form."""

import numpy as np
import pytest

from pga_kit.algebra import Multivector
from pga_kit.dynamics import (
    BodyFileError,
    InertiaTensor,
    InvalidBodyError,
    PointMass,
    SingularInertiaError,
    bivector_from_coords,
    build_inertia,
    classical_velocity,
    integrate,
    load_body,
    parse_body,
    principal_axes,
)
from pga_kit.dynamics.kinematics import body_velocity_from_classical
from pga_kit.geometry import Motor, point3
from pga_kit.geometry.primitives import D301, point_coords

from ...fixtures.factories import CUBE_MASSES, make_body_file, make_body_state


class TestBuildInertia:
    """Tests for assembling the 6x6 form from point masses."""

    def test_cube_classical_inertia(self, cube_inertia):
        classical = cube_inertia.classical()
        assert np.allclose(classical.rotational, 16.0 * np.eye(3))
        assert classical.mass == pytest.approx(8.0)
        assert np.allclose(classical.center, 0.0)

    def test_ellipsoid_principal_moments(self, ellipsoid_inertia):
        moments = principal_axes(ellipsoid_inertia).principal_moments()
        assert moments == pytest.approx([10.0, 20.0, 26.0])

    def test_offset_center_of_mass(self):
        classical = build_inertia([(2.0, (1.0, 0.0, 0.0)), (2.0, (3.0, 0.0, 0.0))]).classical()
        assert classical.mass == pytest.approx(4.0)
        assert classical.center == pytest.approx([2.0, 0.0, 0.0])

    def test_points_as_multivectors(self):
        from_tuples = build_inertia([(1.0, (1.0, 2.0, 3.0))])
        from_points = build_inertia([(1.0, point3(1.0, 2.0, 3.0))])
        assert np.allclose(from_tuples.matrix, from_points.matrix)

    def test_matrix_is_symmetric_positive_definite(self, cube_inertia):
        assert np.allclose(cube_inertia.matrix, cube_inertia.matrix.T)
        assert cube_inertia.is_positive_definite()

    def test_empty_body_raises(self):
        with pytest.raises(InvalidBodyError, match="at least one"):
            build_inertia([])

    def test_negative_mass_raises(self):
        with pytest.raises(InvalidBodyError, match="positive"):
            build_inertia([PointMass(-1.0, (0.0, 0.0, 0.0))])

    def test_non_symmetric_matrix_raises(self):
        matrix = np.eye(6)
        matrix[0, 1] = 1.0
        with pytest.raises(InvalidBodyError, match="symmetric"):
            InertiaTensor(matrix)

    def test_wrong_shape_raises(self):
        with pytest.raises(InvalidBodyError, match="6x6"):
            InertiaTensor(np.eye(3))


class TestEnergyAndMomentum:
    """Tests for energy, momentum and the inverse map."""

    def test_rotational_energy(self, cube_inertia):
        omega = body_velocity_from_classical((0.0, 0.0, 1.0), (0.0, 0.0, 0.0))
        assert cube_inertia.energy(omega) == pytest.approx(8.0)

    def test_translational_energy(self, cube_inertia):
        omega = body_velocity_from_classical((0.0, 0.0, 0.0), (1.0, 0.0, 0.0))
        assert cube_inertia.energy(omega) == pytest.approx(4.0)

    def test_energy_from_momentum_pairing(self, spinning_cube):
        assert spinning_cube.energy == pytest.approx(8.0)
        assert spinning_cube.inertia.energy(spinning_cube.omega) == pytest.approx(8.0)

    def test_velocity_inverts_momentum(self, ellipsoid_inertia):
        omega = body_velocity_from_classical((0.3, -1.0, 0.5), (0.2, 0.1, -0.4))
        back = ellipsoid_inertia.velocity(ellipsoid_inertia.momentum(omega))
        assert back.allclose(omega, atol=1e-12)

    def test_momentum_is_a_bivector(self, cube_inertia):
        omega = body_velocity_from_classical((1.0, 0.0, 0.0), (0.0, 0.0, 0.0))
        momentum = cube_inertia.momentum(omega)
        assert (momentum - momentum.grade(2)).is_zero()

    def test_single_point_is_singular(self):
        inertia = build_inertia([(1.0, (1.0, 2.0, 3.0))])
        omega = body_velocity_from_classical((1.0, 0.0, 0.0), (0.0, 0.0, 0.0))
        with pytest.raises(SingularInertiaError, match="invert inertia"):
            inertia.velocity(omega)


class TestDegenerateBodies:
    """Bodies whose inertia is singular move only where they have inertia."""

    @pytest.mark.parametrize(
        "masses,rank",
        [
            ([(1.0, (1.0, 2.0, 3.0))], 3),
            ([(1.0, (0.0, 0.0, -1.0)), (1.0, (0.0, 0.0, 1.0))], 5),
            (CUBE_MASSES, 6),
        ],
    )
    def test_rank(self, masses, rank):
        assert build_inertia(masses).rank == rank

    def test_velocity_of_translational_momentum(self):
        inertia = build_inertia([(2.0, (0.0, 0.0, 0.0))])
        omega = body_velocity_from_classical((0.0, 0.0, 0.0), (1.0, -0.5, 0.25))
        assert inertia.velocity(inertia.momentum(omega)).allclose(omega, atol=1e-12)

    def test_zero_momentum_is_at_rest(self):
        inertia = build_inertia([(1.0, (1.0, 2.0, 3.0))])
        assert inertia.velocity(Multivector.zero(D301)).is_zero()

    def test_rotational_momentum_raises_for_collinear_masses(self):
        inertia = build_inertia([(1.0, (0.0, 0.0, -1.0)), (1.0, (0.0, 0.0, 1.0))])
        # angular momentum about the line through both masses
        spin = bivector_from_coords([0.0, 0.0, 1.0, 0.0, 0.0, 0.0])
        with pytest.raises(SingularInertiaError, match="outside the range"):
            inertia.velocity(spin)

    def test_translating_point_mass_integrates(self):
        inertia = build_inertia([(2.0, (0.0, 0.0, 0.0))])
        state = make_body_state(inertia, linear=(1.0, 0.5, 0.0))
        trajectory = integrate(state, None, 1e-2, 100)
        angular, linear = classical_velocity(trajectory.final.state.omega)
        assert np.allclose(angular, 0.0, atol=1e-12)
        assert np.allclose(linear, [1.0, 0.5, 0.0], atol=1e-12)
        assert trajectory.final.energy == pytest.approx(1.25)
        position = point_coords(trajectory.final.state.g.apply(point3(0.0, 0.0, 0.0)))
        assert position == pytest.approx((1.0, 0.5, 0.0), abs=1e-9)

    def test_point_mass_at_rest_stays_put(self):
        inertia = build_inertia([(1.0, (1.0, 2.0, 3.0))])
        trajectory = integrate(make_body_state(inertia), None, 1e-2, 10)
        assert trajectory.final.state.omega.is_zero()
        assert trajectory.final.state.g.allclose(Motor.identity(D301))


class TestBodyFiles:
    """Tests for parsing `mass x y z` files."""

    def test_parse_with_comments(self):
        masses = parse_body("# unit masses\n1 0 0 0  # origin\n\n2.5 1 2 3\n")
        assert masses == [PointMass(1.0, (0.0, 0.0, 0.0)), PointMass(2.5, (1.0, 2.0, 3.0))]

    def test_wrong_field_count(self):
        with pytest.raises(BodyFileError, match=r"<body>:2: expected 'mass x y z'"):
            parse_body("1 0 0 0\n1 0 0\n")

    def test_non_numeric_field(self):
        with pytest.raises(BodyFileError, match=r"box.txt:1:"):
            parse_body("one 0 0 0\n", source="box.txt")

    def test_non_positive_mass(self):
        with pytest.raises(BodyFileError, match="mass must be positive"):
            parse_body("0 1 1 1\n")

    def test_no_masses(self):
        with pytest.raises(BodyFileError, match="no point masses"):
            parse_body("# nothing here\n")

    def test_load_shipped_cube(self, cube_file):
        assert sorted(load_body(cube_file)) == sorted(CUBE_MASSES)

    def test_load_written_file(self, tmp_path):
        path = make_body_file(tmp_path / "pair.txt", CUBE_MASSES[:2], header="# pair")
        assert load_body(path) == CUBE_MASSES[:2]

    def test_missing_file(self, tmp_path):
        with pytest.raises(BodyFileError, match="read body file"):
            load_body(tmp_path / "missing.txt")
