"""Tests for instance validation, feasibility and the agreement graph"""

from itertools import combinations

import pytest

from ulamk.core import (
    AgreementGraph,
    agreement_graph,
    check_members,
    conflict_edges,
    dual_complement,
    is_feasible,
    restrict,
    validate_instance,
)
from ulamk.exceptions import (
    DimensionMismatchError,
    DuplicateValueError,
    LengthMismatchError,
    OutOfRangeError,
)
from ulamk.models import FeasibleSet, Instance, Permutation
from ulamk.reductions import pad_dimensions

from .conftest import FIGURE1_SOURCE, FIGURE1_TARGET

TWO_DIM_S = [[1, 2, 3], [1, 2, 3]]
TWO_DIM_T = [[2, 1, 3], [1, 2, 3]]


def all_subsets(n):
    for size in range(n + 1):
        yield from (frozenset(c) for c in combinations(range(1, n + 1), size))


class TestValidateInstance:
    """Test validate_instance error reporting"""

    def test_identity_case(self):
        """A single identical row pair is a valid k=1 instance"""
        instance = validate_instance([[1, 2, 3]], [[1, 2, 3]])
        assert instance.n == 3
        assert instance.k == 1

    def test_figure1_instance(self):
        """The two-dimensional example validates"""
        instance = validate_instance(FIGURE1_SOURCE, FIGURE1_TARGET)
        assert (instance.n, instance.k) == (6, 2)

    def test_duplicate_value_names_dimension(self):
        """Repeated labels are reported with side and dimension"""
        with pytest.raises(DuplicateValueError) as exc_info:
            validate_instance([[1, 2, 2]], [[1, 2, 3]])
        assert exc_info.value.context["side"] == "s"
        assert exc_info.value.context["dim"] == 1
        assert exc_info.value.exit_code == 2

    def test_out_of_range(self):
        """Labels outside [1, n] are rejected"""
        with pytest.raises(OutOfRangeError) as exc_info:
            validate_instance([[1, 2, 3]], [[1, 2, 4]])
        assert exc_info.value.context["side"] == "t"

    def test_length_mismatch(self):
        """Rows of different length are rejected"""
        with pytest.raises(LengthMismatchError) as exc_info:
            validate_instance([[1, 2, 3], [1, 2]], [[1, 2, 3], [1, 2, 3]])
        assert exc_info.value.context["dim"] == 2

    @pytest.mark.parametrize(
        "source,target",
        [
            ([[1, 2]], [[1, 2], [2, 1]]),
            ([], []),
        ],
    )
    def test_dimension_mismatch(self, source, target):
        """Sides must carry the same k >= 1 rows"""
        with pytest.raises(DimensionMismatchError):
            validate_instance(source, target)


class TestRestrict:
    """Test restrict"""

    @pytest.mark.parametrize(
        "labels,members,expected",
        [
            ((4, 3, 1, 6, 2, 5), {1, 2, 3, 6}, (3, 1, 6, 2)),
            ((1, 2, 3), set(), ()),
            ((2, 1, 3), {1, 3}, (1, 3)),
        ],
    )
    def test_restrict(self, labels, members, expected):
        """Members are read off in permutation order"""
        assert restrict(Permutation(labels=labels), members) == expected

    def test_accepts_feasible_set(self):
        """FeasibleSet arguments work like plain sets"""
        perm = Permutation(labels=(3, 1, 2))
        assert restrict(perm, FeasibleSet.of([1, 3])) == (3, 1)


class TestIsFeasible:
    """Test is_feasible"""

    def test_figure1_fixed_set(self, figure1):
        """The four unmoved blocks are feasible"""
        assert is_feasible(figure1, {1, 2, 3, 6})

    def test_empty_set(self, figure1):
        """The empty set is always feasible"""
        assert is_feasible(figure1, set())

    def test_reversed_triple(self, figure1):
        """{1, 4, 5} reads (4,1,5) against (5,1,4) in dimension 1"""
        assert not is_feasible(figure1, {1, 4, 5})

    def test_out_of_range_member(self, figure1):
        """Members outside [n] raise"""
        with pytest.raises(OutOfRangeError) as exc_info:
            is_feasible(figure1, {1, 7})
        assert exc_info.value.context["out_of_range"] == [7]

    def test_hereditary(self, random_batch):
        """Every subset of a feasible set is feasible"""
        for instance in random_batch[:20]:
            for members in all_subsets(instance.n):
                if is_feasible(instance, members):
                    for v in members:
                        assert is_feasible(instance, members - {v})

    def test_swap_symmetry(self, random_batch):
        """Feasibility does not depend on which side is the source"""
        for instance in random_batch[:20]:
            swapped = instance.swap()
            for members in all_subsets(instance.n):
                assert is_feasible(instance, members) == is_feasible(swapped, members)


class TestAgreementGraph:
    """Test the agreement graph and its complement"""

    def test_identity_is_complete(self, identity_instance):
        """All pairs agree when source equals target"""
        graph = agreement_graph(identity_instance)
        assert graph.edge_count() == 5 * 4 // 2
        assert conflict_edges(identity_instance) == []

    def test_reversal_is_empty(self):
        """Every pair of a full reversal conflicts"""
        instance = Instance.from_rows([[1, 2, 3]], [[3, 2, 1]])
        assert agreement_graph(instance).edges() == []
        assert conflict_edges(instance) == [(1, 2), (1, 3), (2, 3)]

    def test_two_dimensional_example(self):
        """Only the pair {1, 2} is reversed"""
        instance = Instance.from_rows(TWO_DIM_S, TWO_DIM_T)
        assert agreement_graph(instance).edges() == [(1, 3), (2, 3)]
        assert conflict_edges(instance) == [(1, 2)]

    def test_figure1_edges(self, figure1):
        """Block 5 conflicts with everything, block 4 agrees only with 6"""
        graph = agreement_graph(figure1)
        assert graph.edges() == [(1, 2), (1, 3), (1, 6), (2, 3), (2, 6), (3, 6), (4, 6)]
        assert graph.neighbors(5) == frozenset()
        assert graph.degree(4) == 1

    def test_cliques_are_feasible_sets(self, random_batch):
        """A set is feasible iff it is a clique of the agreement graph"""
        for instance in random_batch:
            graph = agreement_graph(instance)
            for members in all_subsets(instance.n):
                assert graph.is_clique(members) == is_feasible(instance, members)

    def test_edges_and_conflicts_partition_pairs(self, random_batch):
        """Edges and conflict edges cover every pair exactly once"""
        for instance in random_batch:
            edges = set(agreement_graph(instance).edges())
            conflicts = set(conflict_edges(instance))
            pairs = set(combinations(range(1, instance.n + 1), 2))
            assert edges | conflicts == pairs
            assert not edges & conflicts

    def test_sparse_storage_matches_dense(self, random_batch):
        """Adjacency-set storage gives the same graph as the bit matrix"""
        for instance in random_batch:
            dense = agreement_graph(instance)
            sparse = agreement_graph(instance, dense_max_n=1)
            assert dense.is_dense
            assert not sparse.is_dense
            assert dense == sparse
            assert sparse.non_edges() == dense.non_edges()

    def test_duplicate_dimension_keeps_graph(self, figure1):
        """Repeating a dimension adds no order constraint"""
        assert agreement_graph(pad_dimensions(figure1, 4)) == agreement_graph(figure1)

    def test_from_edges_ignores_self_loops(self):
        """Self-loops never become edges"""
        graph = AgreementGraph.from_edges(3, [(1, 1), (1, 2)])
        assert graph.edges() == [(1, 2)]
        assert graph.to_networkx().number_of_edges() == 1

    def test_needs_exactly_one_storage(self):
        """Constructor rejects ambiguous storage"""
        with pytest.raises(ValueError):
            AgreementGraph(2)


class TestDualComplement:
    """Test dual_complement"""

    @pytest.mark.parametrize(
        "members,expected",
        [({1, 3}, {2}), (set(), {1, 2, 3})],
    )
    def test_complement_small(self, members, expected):
        """Complement within [3]"""
        instance = Instance.from_rows([[1, 2, 3]], [[1, 2, 3]])
        assert dual_complement(instance, members).members == expected

    def test_figure1_complement(self, figure1):
        """The fixed set maps to the two moved blocks"""
        assert dual_complement(figure1, {1, 2, 3, 6}).members == {4, 5}

    def test_check_members_rejects_zero(self):
        """0 is not a label"""
        with pytest.raises(OutOfRangeError):
            check_members(3, [0, 1])
