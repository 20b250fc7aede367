"""Tests for dense multivectors and their products."""

import numpy as np
import pytest

from pga_kit.algebra import (
    Algebra,
    Multivector,
    SignatureMismatchError,
    grade_part,
    join_all,
    meet_all,
    to_text,
)
from pga_kit.errors import NotInvertibleError


@pytest.fixture
def plane(d201):
    return Algebra(d201)


@pytest.fixture
def space(d301):
    return Algebra(d301)


class TestConstruction:
    """Tests for constructors and coefficient storage."""

    def test_wrong_shape_raises(self, d201):
        with pytest.raises(ValueError, match="Expected 8 coefficients"):
            Multivector(d201, np.zeros(4))

    def test_coefficients_are_read_only(self, plane):
        x = plane.e1
        with pytest.raises(ValueError):
            x.coeffs[0] = 1.0

    def test_from_blades_applies_token_signs(self, d301):
        x = Multivector.from_blades(d301, {"e31": 2.0})
        assert x["e13"] == -2.0
        assert x["e31"] == 2.0

    def test_from_blades_accumulates(self, d201):
        x = Multivector.from_blades(d201, {"E1": 1.0, "e02": 1.0})
        assert x.is_zero()

    def test_vector_constructor(self, plane):
        v = plane.vector([3.0, 4.0, 7.0])
        assert v["e0"] == 3.0
        assert v["e2"] == 7.0

    def test_algebra_attribute_lookup(self, plane):
        assert plane.E0.allclose(plane.e12)
        with pytest.raises(AttributeError):
            plane.missing


class TestGeometricProduct:
    """Tests for the geometric product and its metric."""

    def test_unit_generator_squares_to_one(self, plane):
        assert (plane.e1 * plane.e1).allclose(1.0)

    def test_degenerate_generator_squares_to_zero(self, plane):
        assert (plane.e0 * plane.e0).is_zero()

    def test_generators_anticommute(self, plane):
        assert (plane.e1 * plane.e2).allclose(plane.e12)
        assert (plane.e2 * plane.e1).allclose(-plane.e12)

    def test_negative_generator(self):
        alg = Algebra("custom:0,1,0")
        assert (alg.e0 * alg.e0).allclose(-1.0)

    def test_scalar_multiplication_both_sides(self, plane):
        assert (2 * plane.e1).allclose(plane.e1 * 2.0)
        assert (np.float64(2.0) * plane.e1)["e1"] == 2.0

    def test_power(self, plane):
        v = plane.e1 + plane.e2
        assert (v**2).allclose(2.0)
        assert (v**0).allclose(1.0)

    def test_mixed_signatures_raise(self, d201, d301):
        with pytest.raises(SignatureMismatchError):
            Multivector.blade(d201, "e1") * Multivector.blade(d301, "e1")


class TestDerivedProducts:
    """Tests for wedge, inner, join and commutator."""

    def test_wedge_of_distinct_generators(self, plane):
        assert (plane.e1 ^ plane.e2).allclose(plane.e12)

    def test_wedge_of_equal_vectors_vanishes(self, plane):
        v = plane.e1 + 2 * plane.e2
        assert (v ^ v).is_zero()

    def test_inner_of_unit_vectors(self, plane):
        assert (plane.e1 | plane.e1).allclose(1.0)
        assert (plane.e1 | plane.e2).is_zero()

    def test_line_wedge_point_is_incidence(self, plane):
        """(a e1 + b e2 + c e0) ^ (x E1 + y E2 + E0) = (ax + by + c) I."""
        line = 2 * plane.e1 + 3 * plane.e2 - 1 * plane.e0
        point = 4 * plane.E1 + 5 * plane.E2 + plane.E0
        assert (line ^ point).allclose(plane.I * (2 * 4 + 3 * 5 - 1))

    def test_join_of_two_points_is_their_line(self, plane):
        """The origin and (1, 0) span the x axis, a multiple of e2."""
        line = plane.E0 & (plane.E1 + plane.E0)
        assert line["e0"] == pytest.approx(0.0)
        assert line["e1"] == pytest.approx(0.0)
        assert line["e2"] != 0.0

    def test_commutator_of_commuting_elements(self, plane):
        assert plane.e1.commutator(plane.e1).is_zero()
        assert plane.e1.commutator(plane.e2).allclose(plane.e12)

    def test_join_all_and_meet_all_fold_left(self, space):
        assert meet_all([space.e1, space.e2, space.e3]).allclose(space.e123)
        planes = [space.e1, space.e2, space.e3]
        assert meet_all(planes).allclose(planes[0] ^ planes[1] ^ planes[2])
        points = [space.E0, space.E0 + space.E1]
        assert join_all(points).allclose(points[0] & points[1])


class TestUnaryOperations:
    """Tests for reverse, involution, duality and inverse."""

    def test_reverse_signs_by_grade(self, space):
        assert space.e12.reverse().allclose(-space.e12)
        assert space.e123.reverse().allclose(-space.e123)
        assert space.I.reverse().allclose(space.I)
        assert (~space.e1).allclose(space.e1)

    def test_grade_involution(self, space):
        assert space.e1.involute().allclose(-space.e1)
        assert space.e12.involute().allclose(space.e12)

    def test_dual_maps_grades(self, space):
        assert space.e0.dual().grades() == [3]
        assert space.I.dual().grades() == [0]

    def test_undual_inverts_dual(self, space):
        x = space.from_blades({"1": 1.0, "e01": 2.0, "e123": -3.0, "I": 4.0})
        assert x.dual().undual().allclose(x)

    def test_polarity_is_right_multiplication_by_i(self, plane):
        assert plane.e1.polarity().allclose(plane.e1 * plane.I)

    def test_versor_inverse(self, plane):
        v = plane.e1 + plane.e2
        assert (v * v.inverse()).allclose(1.0)
        assert v.inverse().allclose(v / 2.0)

    def test_null_vector_is_not_invertible(self, plane):
        with pytest.raises(NotInvertibleError):
            plane.e0.inverse()


class TestGrades:
    def test_grade_projection(self, plane):
        x = plane.from_blades({"1": 1.0, "e1": 2.0, "e12": 3.0})
        assert x.grade(1).allclose(2 * plane.e1)
        assert x.grades() == [0, 1, 2]

    def test_grades_respect_tolerance(self, plane):
        x = plane.from_blades({"1": 1.0, "e1": 1e-15})
        assert x.grades(1e-12) == [0]
        assert x.is_scalar(1e-12)

    def test_grade_part_range_check(self, plane):
        with pytest.raises(ValueError, match="outside"):
            grade_part(plane.e1, 4)

    def test_is_even(self, space):
        assert (1.0 + space.e12 + space.I).is_even()
        assert not (1.0 + space.e1).is_even()


class TestTextForm:
    """Tests for the shared text rendering."""

    def test_scalar_prints_as_number(self, plane):
        assert str(plane.scalar(1.0)) == "1"

    def test_zero_prints_as_zero(self, plane):
        assert str(plane.zero()) == "0"

    def test_terms_in_grade_order_with_signs(self, plane):
        x = plane.from_blades({"e1": -3.0, "1": 2.0})
        assert str(x) == "2 - 3*e1"

    def test_unit_blade_keeps_its_coefficient(self, plane):
        assert str(plane.e12) == "1*e12"

    def test_leading_negative(self, plane):
        assert str(-plane.e0) == "-1*e0"

    def test_digits_and_zero_tolerance(self, plane):
        x = plane.from_blades({"1": 1.0 / 3.0, "e1": 1e-14})
        assert to_text(x, digits=3, zero_tol=1e-12) == "0.333"
        assert to_text(x, digits=3) == "0.333 + 1e-14*e1"

    def test_negative_zero_is_folded(self, plane):
        assert str(plane.scalar(-0.0)) == "0"
