"""Tests for constructions and measurements in space."""

import math

import pytest

from pga_kit.geometry import (
    ideal_point3,
    line3,
    plane3,
    point3,
    point_coords,
    sandwich,
    translation3,
)
from pga_kit.geometry import space as geo
from pga_kit.geometry.plane import DegenerateLoopError
from pga_kit.geometry.space import ParallelLinesError

A = point3(0.0, 0.0, 0.0)
B = point3(1.0, 0.0, 0.0)
C = point3(0.0, 1.0, 0.0)
D = point3(0.0, 0.0, 1.0)

# Consistently oriented faces of the corner tetrahedron.
TETRA_FACES = [(A, C, B), (A, B, D), (A, D, C), (B, C, D)]

X_AXIS = line3((0.0, 0.0, 0.0), (1.0, 0.0, 0.0))
Y_AXIS = line3((0.0, 0.0, 0.0), (0.0, 1.0, 0.0))
Z_AXIS = line3((0.0, 0.0, 0.0), (0.0, 0.0, 1.0))


def coords(*xyz):
    return pytest.approx(xyz, abs=1e-12)


class TestPlanesAndPoints:
    """Tests for plane and point incidence formulas."""

    def test_dist_point_plane(self):
        result = geo.dist_point_plane(point3(0.0, 0.0, 2.0), plane3(0.0, 0.0, 1.0, 0.0))
        assert result.value == pytest.approx(2.0)
        assert result.case == "euclidean"

    def test_dist_point_plane_sign(self):
        result = geo.dist_point_plane(point3(0.0, 0.0, -2.0), plane3(0.0, 0.0, 2.0, 0.0))
        assert result.value == pytest.approx(-2.0)

    def test_meet_of_three_planes(self):
        p = geo.meet3_planes(
            plane3(1.0, 0.0, 0.0, -1.0), plane3(0.0, 1.0, 0.0, -2.0), plane3(0.0, 0.0, 1.0, -3.0)
        )
        assert point_coords(p) == coords(1.0, 2.0, 3.0)

    def test_join_of_three_points(self):
        plane = geo.join3_points(B, C, D)
        centroid = point3(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)
        assert geo.dist_point_plane(centroid, plane).value == pytest.approx(0.0, abs=1e-12)
        assert abs(geo.dist_point_plane(A, plane).value) == pytest.approx(1.0 / math.sqrt(3.0))

    def test_angle_between_planes(self):
        a, b = plane3(1.0, 0.0, 0.0, 0.0), plane3(0.0, 1.0, 0.0, 4.0)
        assert geo.angle_planes(a, b).value == pytest.approx(math.pi / 2)
        assert geo.angle_planes_sin(a, b).value == pytest.approx(math.pi / 2)

    def test_parallel_planes(self):
        a, b = plane3(0.0, 0.0, 1.0, 0.0), plane3(0.0, 0.0, 1.0, -5.0)
        assert geo.angle_planes(a, b).case == "parallel"
        assert geo.dist_parallel_planes(a, b).value == pytest.approx(5.0)
        assert geo.dist_parallel_planes(a, plane3(1.0, 0.0, 0.0, 0.0)).case == "intersecting"

    def test_dist_points3(self):
        assert geo.dist_points3(A, point3(1.0, 2.0, 2.0)).value == pytest.approx(3.0)

    def test_project_point_plane(self):
        foot = geo.project_point_plane(point3(1.0, 2.0, 5.0), plane3(0.0, 0.0, 1.0, 0.0))
        assert point_coords(foot) == coords(1.0, 2.0, 0.0)

    def test_project_plane_point(self):
        plane = geo.project_plane_point(point3(1.0, 2.0, 5.0), plane3(0.0, 0.0, 1.0, 0.0))
        assert geo.dist_point_plane(point3(7.0, -3.0, 5.0), plane).value == pytest.approx(
            0.0, abs=1e-12
        )

    def test_angle_ideal_point_plane(self):
        direction = ideal_point3(1.0, 0.0, 1.0)
        result = geo.angle_ideal_point_plane(direction, plane3(0.0, 0.0, 1.0, 0.0))
        assert abs(result.value) == pytest.approx(math.pi / 4)


class TestLines:
    """Tests for lines, their projections and mutual measurements."""

    def test_meet_line_plane(self):
        p = geo.meet_line_plane(Z_AXIS, plane3(0.0, 0.0, 1.0, -4.0))
        assert point_coords(p) == coords(0.0, 0.0, 4.0)

    def test_join_point_line(self):
        plane = geo.join_point_line(point3(0.0, 3.0, 0.0), X_AXIS)
        assert geo.dist_point_plane(point3(5.0, 1.0, 0.0), plane).value == pytest.approx(
            0.0, abs=1e-12
        )

    def test_project_point_line(self):
        foot = geo.project_point_line(point3(1.0, 2.0, 5.0), Z_AXIS)
        assert point_coords(foot.grade(3)) == coords(0.0, 0.0, 5.0)

    def test_orthogonal_line_through_point(self):
        p = point3(1.0, 2.0, 5.0)
        line = geo.orthogonal_line_through_point(p, Z_AXIS)
        assert geo.angle_between_lines(line, Z_AXIS).value == pytest.approx(math.pi / 2)
        assert geo.dist_between_lines(line, Z_AXIS) == pytest.approx(0.0, abs=1e-12)

    def test_angle_between_lines(self):
        result = geo.angle_between_lines(X_AXIS, Y_AXIS)
        assert result.value == pytest.approx(math.pi / 2)
        assert geo.angle_between_lines(X_AXIS, X_AXIS).value == pytest.approx(0.0)

    def test_skew_line_distance(self):
        other = line3((0.0, 0.0, 2.0), (0.0, 1.0, 0.0))
        assert abs(geo.dist_between_lines(X_AXIS, other)) == pytest.approx(2.0)

    def test_parallel_lines_raise_with_fallback(self):
        other = line3((0.0, 3.0, 0.0), (1.0, 0.0, 0.0))
        with pytest.raises(ParallelLinesError) as excinfo:
            geo.dist_between_lines(X_AXIS, other)
        assert excinfo.value.fallback.value == pytest.approx(3.0)
        assert geo.dist_between_lines_safe(X_AXIS, other).case == "parallel"

    def test_common_normal_of_skew_lines(self):
        other = line3((0.0, 0.0, 2.0), (0.0, 1.0, 0.0))
        normal = geo.common_normal(X_AXIS, other)
        assert geo.angle_between_lines(normal, X_AXIS).value == pytest.approx(math.pi / 2)
        angle = geo.angle_between_lines(normal, Z_AXIS).value
        assert abs(math.cos(angle)) == pytest.approx(1.0)

    def test_common_normal_of_parallel_lines_raises(self):
        with pytest.raises(ParallelLinesError):
            geo.common_normal(X_AXIS, line3((0.0, 1.0, 0.0), (1.0, 0.0, 0.0)))

    def test_common_point_of_axes(self):
        assert point_coords(geo.common_point(X_AXIS, Y_AXIS)) == coords(0.0, 0.0, 0.0)

    def test_common_plane_of_axes(self):
        plane = geo.common_plane(X_AXIS, Y_AXIS)
        assert geo.dist_point_plane(point3(4.0, -2.0, 0.0), plane).value == pytest.approx(
            0.0, abs=1e-12
        )


class TestVolumes:
    """Tests for simplex and mesh measurements."""

    def test_simplex_volume(self):
        assert abs(geo.simplex_volume(A, B, C, D)) == pytest.approx(1.0 / 6.0)

    def test_tetra_volume_is_twice_simplex(self):
        assert geo.tetra_volume(A, B, C, D) == pytest.approx(2.0 * geo.simplex_volume(A, B, C, D))

    def test_swapping_vertices_flips_sign(self):
        assert geo.simplex_volume(B, A, C, D) == pytest.approx(-geo.simplex_volume(A, B, C, D))

    def test_mesh_volume(self):
        assert geo.mesh_volume(TETRA_FACES) == pytest.approx(1.0 / 6.0)
        assert geo.mesh_volume(TETRA_FACES, one_third=True) == pytest.approx(1.0 / 3.0)

    def test_mesh_area(self):
        assert geo.mesh_area(TETRA_FACES) == pytest.approx(1.5 + math.sqrt(3.0) / 2.0)

    def test_empty_mesh_raises(self):
        with pytest.raises(DegenerateLoopError):
            geo.mesh_volume([])

    def test_open_mesh_raises(self):
        with pytest.raises(DegenerateLoopError, match="not closed"):
            geo.mesh_volume(TETRA_FACES[:3])


class TestSpaceMotions:
    """Tests for reflections, rotors, translators and screws."""

    def test_reflect_in_plane(self):
        image = geo.reflect_in_plane(plane3(1.0, 0.0, 0.0, 0.0), point3(2.0, 3.0, 4.0))
        assert point_coords(image) == coords(-2.0, 3.0, 4.0)

    def test_rotor_is_right_handed(self):
        rotor = geo.rotor_about_axis(Z_AXIS, math.pi / 2)
        assert point_coords(rotor.apply(B)) == coords(0.0, 1.0, 0.0)

    def test_translator_3d(self):
        motor = geo.translator_3d(ideal_point3(1.0, 0.0, 0.0), 2.0)
        assert point_coords(motor.apply(A)) == coords(2.0, 0.0, 0.0)

    def test_translation3(self):
        moved = sandwich(translation3(1.0, 2.0, 3.0), A)
        assert point_coords(moved) == coords(1.0, 2.0, 3.0)

    def test_screw_moves_along_and_around_axis(self):
        motor = geo.screw(Z_AXIS, math.pi / 4, 1.0)
        moved = point_coords(motor.apply(B))
        assert math.hypot(moved[0], moved[1]) == pytest.approx(1.0)
        assert abs(moved[2]) == pytest.approx(math.pi / 2)
