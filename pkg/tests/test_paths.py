import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import echlens as e
from echlens.errors import InvalidVertex, PathError
from helpers import brute_path_length, pick_lattice_count


class TestConstruction:
    def test_empty(self):
        p = e.empty_path(2)
        assert p.is_empty()
        assert p.start == (0, 0)
        assert e.lattice_count(p) == 0

    def test_vertices(self):
        p = e.make_path(2, (4, 2), (((-1, 0), 1), ((-3, 1), 1)))
        assert p.vertices() == [(4, 2), (3, 2), (0, 3)]
        assert p.end == (0, 3)

    @pytest.mark.parametrize(
        "start,edges",
        [
            ((3, 1), (((-3, 1), 1),)),  # start off the ray
            ((2, 1), (((-2, 2), 1),)),  # non-primitive direction
            ((2, 1), (((1, 0), 1),)),  # rightward direction
            ((2, 1), (((-1, 0), 1),)),  # does not reach the y-axis
            ((2, 1), (((-1, 0), 1), ((-1, 0), 1))),  # repeated direction
            ((2, 1), (((-1, 1), 1), ((-1, 0), 1))),  # slopes decreasing
            ((4, 2), (((-1, -1), 2), ((-1, 1), 2))),  # touches ray midway
            ((0, 0), (((-1, 0), 0),)),  # zero multiplicity
        ],
    )
    def test_rejects(self, start, edges):
        with pytest.raises(PathError):
            e.make_path(2, start, edges)

    def test_is_concave_path(self):
        ok, reason = e.is_concave_path(2, (2, 1), (((-2, 1), 1),))
        assert ok and reason is None
        ok, reason = e.is_concave_path(2, (4, 2), ())
        assert not ok and "empty" in reason

    def test_from_vertices_collapses(self):
        p = e.path_from_vertices(2, [(4, 2), (3, 2), (2, 2), (0, 3)])
        assert p.edges == (((-1, 0), 2), ((-2, 1), 1))

    def test_text_roundtrip(self):
        p = e.make_path(2, (4, 2), (((-1, 0), 2), ((-2, 1), 1)))
        text = e.path_to_text(p, labels=("e", "h"))
        q, labels = e.parse_path_text(2, text)
        assert q == p and labels == ("e", "h")


class TestLatticeCount:
    def test_worked_example(self):
        # single edge (2,1) -> (0,2): column 0 holds {(0,0),(0,1)}, column 1
        # holds {(1,1)}; the path point (0,2) is excluded
        assert e.lattice_count(e.make_path(2, (2, 1), (((-2, 1), 1),))) == 3

    def test_horizontal(self):
        assert e.lattice_count(e.make_path(2, (2, 1), (((-1, 0), 2),))) == 1

    def test_pick_oracle(self):
        for n in (1, 2, 3):
            for k, bucket in e.enumerate_paths_up_to(n, 6).items():
                for p in bucket:
                    assert e.lattice_count(p) == pick_lattice_count(p) == k

    def test_pick_oracle_n4(self):
        for k, bucket in e.enumerate_paths_up_to(4, 4).items():
            for p in bucket:
                assert e.lattice_count(p) == pick_lattice_count(p) == k


class TestHomology:
    @given(st.integers(0, 40), st.integers(-20, 20), st.integers(1, 5))
    def test_roundtrip(self, x, y, n):
        l, k1, k2 = e.homology_class((x, y), n)
        assert 0 <= l < n
        assert (x - l, y) == (k1 * n, k1 + k2)

    def test_displacement(self):
        p = e.make_path(2, (4, 2), (((-1, 0), 2), ((-2, 1), 1)))
        assert e.displacement(p) == 4


class TestGeneratorIndex:
    def test_all_elliptic(self):
        p = e.make_path(2, (2, 1), (((-2, 1), 1),))
        gen = e.ConcaveGenerator(path=p, labels=("e",))
        assert e.generator_index(gen) == 6

    def test_hyperbolic_labels(self):
        p = e.make_path(2, (4, 2), (((-1, 0), 2), ((-2, 1), 1)))
        gen = e.ConcaveGenerator(path=p, labels=("h", "h"))
        assert e.generator_index(gen) == 2 * e.lattice_count(p) + 2


class TestEnumeration:
    def test_deterministic(self):
        assert e.enumerate_paths(2, 3) == e.enumerate_paths(2, 3)

    def test_unique_l0(self):
        for n in (1, 2, 3, 4):
            assert e.enumerate_paths(n, 0) == [e.empty_path(n)]

    def test_counts_exact(self):
        for n in (1, 2, 3):
            for k in range(5):
                for p in e.enumerate_paths(n, k):
                    assert e.lattice_count(p) == k

    def test_box_is_wide_enough(self):
        # widening the search box must not discover new paths
        for n in (1, 2, 3, 4):
            for k in range(4):
                assert e.enumerate_paths(n, k, margin=2) == e.enumerate_paths(n, k)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            e.enumerate_paths(2, -1)


class TestCoround:
    def test_invalid_vertex(self):
        p = e.make_path(2, (2, 1), (((-2, 1), 1),))
        with pytest.raises(InvalidVertex):
            e.coround_corner(p, 0)

    def test_monotone_on_enumerated_paths(self):
        rng = random.Random(17)
        cases = 0
        for n in (1, 2, 3):
            dom = e.random_concave_domain(rng, n=n)
            for k in range(1, 8):
                for p in e.enumerate_paths(n, k):
                    for i in range(1, len(p.vertices()) - 1):
                        q = e.coround_corner(p, i)
                        assert e.omega_length_path(dom, q) >= e.omega_length_path(dom, p)
                        assert e.lattice_count(q) >= e.lattice_count(p)
                        cases += 1
        assert cases > 100

    def test_removes_corner(self):
        # corounding (2,1)->(1,1)->(0,2) lifts the corner (1,1)
        p = e.make_path(2, (2, 1), (((-1, 0), 1), ((-1, 1), 1)))
        q = e.coround_corner(p, 1)
        assert (1, 1) not in q.vertices()
        assert e.lattice_count(q) > e.lattice_count(p)


class TestLengthOracle:
    def test_brute_force_agreement(self):
        rng = random.Random(23)
        for _ in range(50):
            dom = e.random_concave_domain(rng)
            for p in e.enumerate_paths(dom.n, rng.randint(0, 4)):
                assert e.omega_length_path(dom, p) == brute_path_length(dom, p)
