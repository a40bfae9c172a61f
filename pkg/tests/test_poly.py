"""Tests for integer polynomials, the game polynomial, and its event model."""

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treegamekit.game import mover_loses
from treegamekit.lattice import PruningLattice
from treegamekit.poly import (
    ONE,
    Q,
    ZERO,
    Poly,
    event_frequency,
    game_polynomial,
    game_polynomial_from_prunings,
    pruning_profiles,
)
from treegamekit.tree import parse_plane_tree, plane_trees, vertex_count

coeff_lists = st.lists(st.integers(-9, 9), max_size=6)


class TestPolyArithmetic:
    def test_trailing_zeros_stripped(self):
        assert Poly((1, 2, 0, 0)) == Poly((1, 2))
        assert Poly((0, 0)) == ZERO

    def test_degree(self):
        assert ZERO.degree == -1
        assert ONE.degree == 0
        assert Q.degree == 1
        assert Poly((1, 0, 3)).degree == 2

    def test_coefficient_out_of_range_is_zero(self):
        p = Poly((1, 2))
        assert p.coefficient(5) == 0
        assert p.coefficient(1) == 2

    def test_add_sub(self):
        assert Poly((1, 2)) + Poly((0, 1, 1)) == Poly((1, 3, 1))
        assert Poly((1, 2)) - Poly((1, 2)) == ZERO

    def test_mul(self):
        assert Poly((1, 1)) * Poly((1, 1)) == Poly((1, 2, 1))
        assert Poly((1, 1)) * ZERO == ZERO
        assert (ONE + Q) * (ONE - Q) == Poly((1, 0, -1))

    def test_eval(self):
        p = Poly((1, 2, 3))
        assert p(0) == 1
        assert p(1) == 6
        assert p(-1) == 2
        assert p(2) == 17
        assert p(Fraction(1, 2)) == Fraction(11, 4)

    def test_hash_consistency(self):
        assert hash(Poly((1, 2, 0))) == hash(Poly((1, 2)))
        assert len({Poly((1, 2)), Poly((1, 2, 0))}) == 1

    def test_immutable(self):
        p = Poly((1, 2))
        with pytest.raises(AttributeError):
            p.coeffs = (3,)

    @given(coeff_lists, coeff_lists, coeff_lists)
    def test_ring_laws(self, a, b, c):
        pa, pb, pc = Poly(a), Poly(b), Poly(c)
        assert pa + pb == pb + pa
        assert pa * pb == pb * pa
        assert (pa + pb) * pc == pa * pc + pb * pc
        assert pa * (pb * pc) == (pa * pb) * pc

    @given(coeff_lists, st.integers(-5, 5))
    def test_eval_is_ring_map(self, a, x):
        pa = Poly(a)
        assert (pa * pa)(x) == pa(x) ** 2
        assert (pa + ONE)(x) == pa(x) + 1


class TestSubstitutions:
    def test_neg_q(self):
        assert Poly((1, 2, 3)).substitute_neg_q() == Poly((1, -2, 3))
        assert ZERO.substitute_neg_q() == ZERO

    def test_q_squared(self):
        assert Poly((1, 2, 3)).substitute_q_squared() == Poly((1, 0, 2, 0, 3))

    def test_times_one_plus_q_power(self):
        assert ONE.times_one_plus_q_power(2) == Poly((1, 2, 1))
        assert Q.times_one_plus_q_power(1) == Poly((0, 1, 1))
        assert ONE.times_one_plus_q_power(0) == ONE

    @given(coeff_lists, st.integers(-5, 5))
    def test_neg_q_agrees_with_eval(self, a, x):
        assert Poly(a).substitute_neg_q()(x) == Poly(a)(-x)

    @given(coeff_lists, st.integers(-5, 5))
    def test_q_squared_agrees_with_eval(self, a, x):
        assert Poly(a).substitute_q_squared()(x) == Poly(a)(x * x)


class TestFormatting:
    def test_examples(self):
        assert str(ZERO) == "0"
        assert str(ONE) == "1"
        assert str(Q) == "q"
        assert str(Poly((0, -1))) == "-q"
        assert str(Poly((-1, 2))) == "-1 + 2*q"
        assert str(Poly((1, 0, -3))) == "1 - 3*q^2"
        assert str(Poly((1, 2, 3, 4, 4, 3, 1))) == (
            "1 + 2*q + 3*q^2 + 4*q^3 + 4*q^4 + 3*q^5 + q^6"
        )

    def test_repr_round_trip(self):
        p = Poly((1, 0, -3))
        assert eval(repr(p)) == p


class TestGamePolynomial:
    def test_single_vertex(self):
        assert game_polynomial(()) == ONE

    def test_single_edge(self):
        assert game_polynomial(((),)) == Poly((1, 1))

    def test_path(self):
        # a path multiplies one factor of (1 + q * ..) per edge
        assert game_polynomial(((((),),),)) == Poly((1, 1, 1, 1))

    def test_star(self):
        assert game_polynomial(((), (), ())) == Poly((1, 3, 3, 1))

    def test_worked_example(self):
        t = parse_plane_tree("(() (() ()))")
        assert game_polynomial(t) == Poly((1, 2, 3, 3, 1))

    def test_two_trees_one_polynomial(self):
        t1 = parse_plane_tree("(() (() ((()))))")
        t2 = parse_plane_tree("((()) ((() ())))")
        expected = Poly((1, 2, 3, 4, 4, 3, 1))
        assert game_polynomial(t1) == expected
        assert game_polynomial(t2) == expected
        assert t1 != t2

    def test_shared_polynomial_values(self):
        t1 = parse_plane_tree("(() (() ((()))))")
        assert game_polynomial(t1)(2) == 273
        assert game_polynomial(t1)(1) == 18

    def test_nonunimodal_example(self):
        t3 = parse_plane_tree("((((() ()))) ((() () ())))")
        coeffs = [1, 2, 3, 6, 10, 11, 10, 11, 10, 5, 1]
        p = game_polynomial(t3)
        assert [p.coefficient(d) for d in range(11)] == coeffs
        # the coefficients dip and rise again past the midpoint
        assert coeffs[5] > coeffs[6] < coeffs[7]

    def test_degree_counts_edges(self):
        for t in plane_trees(7):
            assert game_polynomial(t).degree == vertex_count(t) - 1

    def test_constant_term_one(self):
        for t in plane_trees(6):
            assert game_polynomial(t).coefficient(0) == 1

    def test_linear_term_counts_root_children(self):
        for t in plane_trees(6):
            assert game_polynomial(t).coefficient(1) == len(t)

    def test_invariant_under_sibling_order(self):
        t_a = parse_plane_tree("((()) () (() ()))")
        t_b = parse_plane_tree("((() ()) (()) ())")
        assert game_polynomial(t_a) == game_polynomial(t_b)


class TestPruningProfiles:
    def test_single_vertex(self):
        assert pruning_profiles(()) == [(0, 0, True)]

    def test_single_edge(self):
        # root alone: rank 0, one edge to restore, stuck mover loses;
        # whole edge: rank 1, nothing to restore, mover wins
        got = sorted(pruning_profiles(((),)))
        assert got == [(0, 1, True), (1, 0, False)]

    def test_profiles_match_lattice(self):
        # rank, cover count, and winner flag of every pruning, checked
        # against the materialized lattice one mask at a time
        for n in range(1, 9):
            for t in plane_trees(n):
                lat = PruningLattice(t)
                expected = Counter(
                    (
                        lat.rank(m),
                        lat.cover_count(m),
                        mover_loses(lat.pruned_subtree(m)),
                    )
                    for m in lat
                )
                assert Counter(pruning_profiles(t)) == expected

    def test_sum_route_matches_product_route(self):
        for n in range(1, 9):
            for t in plane_trees(n):
                assert game_polynomial_from_prunings(t) == game_polynomial(t)

    def test_sum_route_worked_example(self):
        t3 = parse_plane_tree("((((() ()))) ((() () ())))")
        assert game_polynomial_from_prunings(t3) == game_polynomial(t3)


class TestEventFrequency:
    def test_single_vertex_always_occurs(self):
        assert event_frequency((), Fraction(-1, 2), trials=10) == 1.0

    def test_zero_q_never_descends(self):
        t = parse_plane_tree("(() (() ()))")
        assert event_frequency(t, 0, trials=100) == 1.0

    def test_deterministic(self):
        t = parse_plane_tree("(() (() ()))")
        a = event_frequency(t, Fraction(-1, 2), trials=2000, seed=4)
        b = event_frequency(t, Fraction(-1, 2), trials=2000, seed=4)
        assert a == b

    def test_seed_matters(self):
        t = parse_plane_tree("(() (() ()))")
        a = event_frequency(t, Fraction(-1, 2), trials=2000, seed=1)
        b = event_frequency(t, Fraction(-1, 2), trials=2000, seed=2)
        assert a != b

    def test_matches_polynomial(self):
        t = parse_plane_tree("(() (() ()))")
        q = Fraction(-1, 2)
        exact = game_polynomial(t)(q)
        got = event_frequency(t, q, trials=60_000, seed=0)
        assert abs(got - exact) < 0.02

    def test_q_must_lie_in_unit_interval(self):
        with pytest.raises(ValueError):
            event_frequency((), Fraction(1, 2))
        with pytest.raises(ValueError):
            event_frequency((), -2)

    def test_trials_must_be_positive(self):
        with pytest.raises(ValueError):
            event_frequency((), 0, trials=0)
