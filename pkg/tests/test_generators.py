"""Tests for seeded generators and the SAT oracle"""

import pytest

from ulamk.exceptions import OutOfRangeError
from ulamk.generators import brute_force_sat, gen_random, random_formula, random_graph
from ulamk.models import CnfFormula
from ulamk.solvers import ulam_distance


class TestGenRandom:
    """Test gen_random"""

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_single_element(self, k):
        """n=1 has only the identity, distance 0"""
        instance = gen_random(1, k, 7)
        assert instance.k == k
        assert ulam_distance(instance).distance == 0

    def test_deterministic(self):
        """Same arguments, same instance"""
        assert gen_random(6, 2, 0) == gen_random(6, 2, 0)

    def test_seed_matters(self):
        """Different seeds give different instances"""
        assert gen_random(8, 2, 0) != gen_random(8, 2, 1)

    def test_shape(self):
        """k rows of length n on each side"""
        instance = gen_random(7, 3, 42)
        assert (instance.n, instance.k) == (7, 3)
        for row in instance.source.rows() + instance.target.rows():
            assert sorted(row) == list(range(1, 8))

    @pytest.mark.parametrize("n,k", [(0, 1), (3, 0)])
    def test_positive_arguments(self, n, k):
        """n and k must be at least 1"""
        with pytest.raises(OutOfRangeError):
            gen_random(n, k, 0)


class TestRandomFormula:
    """Test random_formula"""

    def test_shape(self):
        """Three distinct variables per clause"""
        phi = random_formula(5, 10, 3)
        assert phi.m == 10
        for clause in phi.clauses:
            assert len({abs(lit) for lit in clause}) == 3
            assert all(1 <= abs(lit) <= 5 for lit in clause)

    def test_deterministic(self):
        """Same seed, same formula"""
        assert random_formula(4, 6, 9) == random_formula(4, 6, 9)

    def test_few_variables(self):
        """With fewer than three variables, repeats are allowed"""
        phi = random_formula(2, 4, 0)
        assert all(1 <= abs(lit) <= 2 for clause in phi.clauses for lit in clause)


class TestRandomGraph:
    """Test random_graph"""

    def test_labels(self):
        """Vertices are 1..n"""
        assert sorted(random_graph(5, 0.5, 1).nodes) == [1, 2, 3, 4, 5]

    def test_extremes(self):
        """p=0 has no edges, p=1 is complete"""
        assert random_graph(4, 0.0, 0).number_of_edges() == 0
        assert random_graph(4, 1.0, 0).number_of_edges() == 6


class TestBruteForceSat:
    """Test the truth-table oracle"""

    def test_satisfiable(self):
        """x2 satisfies both clauses; False-first order finds it"""
        phi = CnfFormula(var_count=3, clauses=((1, 2, -3), (-1, 2, 3)))
        assert brute_force_sat(phi) == {1: False, 2: False, 3: False}

    def test_unsatisfiable(self):
        """All eight sign patterns over three variables"""
        clauses = tuple(
            (a * 1, b * 2, c * 3) for a in (1, -1) for b in (1, -1) for c in (1, -1)
        )
        assert brute_force_sat(CnfFormula(var_count=3, clauses=clauses)) is None

    def test_assignment_satisfies(self):
        """Returned assignments satisfy every clause"""
        for seed in range(20):
            phi = random_formula(4, 6, seed)
            assignment = brute_force_sat(phi)
            if assignment is not None:
                for clause in phi.clauses:
                    assert any(assignment[abs(lit)] == (lit > 0) for lit in clause)
