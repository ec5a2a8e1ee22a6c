import random
from fractions import Fraction

import pytest

import echlens as e
from echlens.errors import InvalidDomain, RecursionLimit


def standard(vertices):
    return e.validate_standard(vertices)


class TestValidateStandard:
    def test_triangle(self):
        dom = standard([(2, 0), (0, 1)])
        assert dom.vertices == ((2, 0), (0, 1))

    @pytest.mark.parametrize(
        "vertices",
        [
            [(2, 0)],
            [(0, 1), (2, 0)],  # wrong orientation
            [(2, 1), (0, 1)],  # first vertex off the x-axis
            [(2, 0), (1, 0), (0, 1)],  # interior vertex on an axis
            [(2, 0), (1, 2), (0, 3)],  # slopes not strictly decreasing
        ],
    )
    def test_rejects(self, vertices):
        with pytest.raises(InvalidDomain):
            e.validate_standard(vertices)


class TestSplitDomain:
    def test_triangle_base_case(self):
        dom = e.validate_domain(2, [(4, 2), (0, 2)])
        a, left, right = e.split_domain(dom)
        assert (a, left, right) == (2, None, None)

    def test_left_piece_only(self):
        dom = e.validate_domain(2, [(4, 2), (2, 2), (0, 3)])
        a, left, right = e.split_domain(dom)
        assert a == 2
        assert left.vertices == ((2, 0), (0, 1))  # the y-axis side, dropped by a
        assert right is None

    def test_right_piece_only(self):
        dom = e.validate_domain(2, [(6, 3), (3, 2), (0, 2)])
        a, left, right = e.split_domain(dom)
        assert a == 2
        assert left is None
        assert right.vertices == ((1, 0), (0, 1))


class TestSplitStandard:
    def test_ball(self):
        a, left, right = e.split_standard(standard([(3, 0), (0, 3)]))
        assert (a, left, right) == (3, None, None)

    def test_ellipsoid_21(self):
        a, left, right = e.split_standard(standard([(2, 0), (0, 1)]))
        assert a == 1
        assert left is None
        assert right.vertices == ((1, 0), (0, 1))

    def test_corner_touch(self):
        # the supporting line x+y=a meets the boundary at a single vertex
        a, left, right = e.split_standard(standard([(3, 0), (1, 1), (0, 3)]))
        assert a == 2
        assert left.vertices == ((1, 0), (0, 1))
        assert right.vertices == ((1, 0), (0, 1))


class TestStandardExpansion:
    def test_ball(self):
        assert e.standard_weight_expansion(standard([(5, 0), (0, 5)])) == [5]

    def test_ellipsoids(self):
        assert sorted(e.standard_weight_expansion(standard([(2, 0), (0, 1)]))) == [1, 1]
        assert sorted(e.standard_weight_expansion(standard([(3, 0), (0, 1)]))) == [1, 1, 1]

    def test_empty(self):
        assert e.standard_weight_expansion(None) == []

    def test_recursion_limit(self):
        with pytest.raises(RecursionLimit):
            e.standard_weight_expansion(standard([(2, 0), (0, 1)]), limit=1)


class TestSingularExpansion:
    def test_triangle(self):
        dom = e.validate_domain(2, [(4, 2), (0, 2)])
        w = e.singular_weight_expansion(dom)
        assert w.singular_weight == 2
        assert w.plain_weights == ()

    def test_left_remainder(self):
        dom = e.validate_domain(2, [(4, 2), (2, 2), (0, 3)])
        w = e.singular_weight_expansion(dom)
        assert w.singular_weight == 2
        assert w.plain_weights == (1, 1)

    def test_right_remainder(self):
        dom = e.validate_domain(2, [(6, 3), (3, 2), (0, 2)])
        w = e.singular_weight_expansion(dom)
        assert w.singular_weight == 2
        assert w.plain_weights == (1,)

    def test_as_multiset(self):
        dom = e.validate_domain(2, [(6, 3), (3, 2), (0, 2)])
        assert e.singular_weight_expansion(dom).as_multiset() == [2, 1]

    def test_weights_sorted_nonincreasing(self):
        rng = random.Random(7)
        for _ in range(100):
            w = e.singular_weight_expansion(e.random_concave_domain(rng))
            assert all(x > 0 for x in w.as_multiset())
            assert list(w.plain_weights) == sorted(w.plain_weights, reverse=True)

    def test_area_conservation(self):
        rng = random.Random(9)
        for _ in range(200):
            dom = e.random_concave_domain(rng)
            w = e.singular_weight_expansion(dom)
            total = Fraction(dom.n) * w.singular_weight**2 / 2 + sum(
                (x * x for x in w.plain_weights), Fraction(0)
            ) / 2
            assert total == e.domain_area(dom)

    def test_scaling(self):
        rng = random.Random(13)
        for _ in range(50):
            dom = e.random_concave_domain(rng)
            w = e.singular_weight_expansion(dom)
            for r in (Fraction(1, 3), 2, Fraction(7, 5)):
                ws = e.singular_weight_expansion(e.scale_domain(dom, r))
                assert ws.singular_weight == r * w.singular_weight
                assert ws.plain_weights == tuple(r * x for x in w.plain_weights)

    def test_first_weight_is_largest_inscribed_ball(self):
        rng = random.Random(21)
        for _ in range(50):
            dom = e.random_concave_domain(rng)
            w0 = e.singular_weight_expansion(dom).singular_weight
            n = dom.n
            # the triangle of size w0 fits: its top edge stays under the boundary
            for x, _ in dom.vertices:
                if x <= n * w0:
                    assert e.boundary_height(dom, x) >= w0
            # any larger triangle pokes out above the lowest boundary vertex
            t = w0 + Fraction(1, 7)
            x_low = min(
                (v[0] for v in dom.vertices if v[1] == w0),
            )
            assert not e.contains_point(dom, (x_low, t))
