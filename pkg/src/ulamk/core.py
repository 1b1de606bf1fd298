"""Instance validation, feasibility, duality and the agreement graph."""

import logging
from collections.abc import Iterable, Sequence
from functools import cached_property

import networkx as nx
import numpy as np

from .config import get_config
from .exceptions import (
    DimensionMismatchError,
    LengthMismatchError,
    OutOfRangeError,
)
from .models import (
    FeasibleSet,
    Instance,
    Permutation,
    SetLike,
    as_members,
    check_permutation,
)

logger = logging.getLogger("ulamk.core")


def validate_instance(
    source: Sequence[Sequence[int]], target: Sequence[Sequence[int]]
) -> Instance:
    """Check raw source/target rows and build an Instance.

    Args:
        source: k integer sequences (Gamma_s).
        target: k integer sequences (Gamma_t).

    Returns:
        The validated Instance.

    Raises:
        DimensionMismatchError: If the sides have different (or zero) row counts.
        LengthMismatchError: If some row's length differs from the first row's.
        OutOfRangeError: If a value lies outside [1, n].
        DuplicateValueError: If a row repeats a value.
    """
    if len(source) != len(target) or not source:
        raise DimensionMismatchError(
            f"Source has {len(source)} dimensions, target has {len(target)}",
            suggestions=["Give the same number k >= 1 of permutations on both sides"],
            context={"source_k": len(source), "target_k": len(target)},
        )
    n = len(source[0])
    for side, rows in (("s", source), ("t", target)):
        for r, row in enumerate(rows, start=1):
            if len(row) != n:
                raise LengthMismatchError(
                    f"Row {side}[{r}] has length {len(row)}, expected {n}",
                    context={"side": side, "dim": r, "length": len(row), "n": n},
                )
            check_permutation(row, side=side, dim=r)

    instance = Instance.from_rows(source, target)
    logger.debug(f"Validated instance n={instance.n} k={instance.k}")
    return instance


def check_members(n: int, members: SetLike) -> frozenset[int]:
    """Normalise a set argument and check it is a subset of [n].

    Raises:
        OutOfRangeError: If some member lies outside [1, n].
    """
    normalised = as_members(members)
    bad = sorted(v for v in normalised if not 1 <= v <= n)
    if bad:
        raise OutOfRangeError(
            f"Set members {bad} lie outside [1, {n}]",
            context={"n": n, "out_of_range": bad},
        )
    return normalised


def restrict(perm: Permutation, members: SetLike) -> tuple[int, ...]:
    """The subsequence of ``perm`` formed by ``members``, in ``perm``'s order."""
    keep = as_members(members)
    return tuple(v for v in perm.labels if v in keep)


def is_feasible(instance: Instance, members: SetLike) -> bool:
    """Whether ``members`` induces a common subsequence in every dimension.

    Runs in O(k*n) with a membership bitmap.

    Raises:
        OutOfRangeError: If ``members`` is not a subset of [n].
    """
    keep = check_members(instance.n, members)
    if len(keep) <= 1:
        return True
    bitmap = [False] * (instance.n + 1)
    for v in keep:
        bitmap[v] = True
    for sigma_s, sigma_t in instance.pairs():
        picked_t = [v for v in sigma_t.labels if bitmap[v]]
        if [v for v in sigma_s.labels if bitmap[v]] != picked_t:
            return False
    return True


def dual_complement(instance: Instance, members: SetLike) -> FeasibleSet:
    """[n] minus ``members``: a kLFS witness maps to a kU witness and back.

    Raises:
        OutOfRangeError: If ``members`` is not a subset of [n].
    """
    keep = check_members(instance.n, members)
    return FeasibleSet(members=frozenset(range(1, instance.n + 1)) - keep)


def position_matrix(perms: Iterable[Permutation]) -> np.ndarray:
    """k x n array whose [r, v-1] entry is the 0-based position of v in perms[r]."""
    return np.array([perm.index[1:] for perm in perms], dtype=np.int64)


class AgreementGraph:
    """Graph on [n] with {i, j} an edge iff i, j keep their order in every dimension.

    Stored as a dense boolean matrix up to ``dense_graph_max_n`` vertices and as
    adjacency sets above; both expose the same interface.
    """

    def __init__(
        self,
        n: int,
        *,
        matrix: np.ndarray | None = None,
        adjacency: Sequence[frozenset[int]] | None = None,
    ):
        """Initialize AgreementGraph.

        Args:
            n: Vertex count; vertices are 1..n.
            matrix: n x n symmetric boolean matrix with a False diagonal.
            adjacency: Neighbor sets of vertices 1..n (index v-1).
        """
        if (matrix is None) == (adjacency is None):
            raise ValueError("Pass exactly one of matrix or adjacency")
        self.n = n
        self._matrix = matrix
        self._adjacency = tuple(adjacency) if adjacency is not None else None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        dense_max_n: int | None = None,
    ) -> "AgreementGraph":
        """Build a graph on [n] from an explicit edge list (self-loops ignored)."""
        limit = (
            dense_max_n if dense_max_n is not None else get_config().dense_graph_max_n
        )
        if n <= limit:
            matrix = np.zeros((n, n), dtype=bool)
            for i, j in edges:
                if i != j:
                    matrix[i - 1, j - 1] = matrix[j - 1, i - 1] = True
            return cls(n, matrix=matrix)
        adjacency: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            if i != j:
                adjacency[i - 1].add(j)
                adjacency[j - 1].add(i)
        return cls(n, adjacency=[frozenset(a) for a in adjacency])

    @property
    def is_dense(self) -> bool:
        return self._matrix is not None

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        """Neighbors of vertices 1..n, index v-1."""
        if self._adjacency is not None:
            return self._adjacency
        return tuple(
            frozenset((np.flatnonzero(row) + 1).tolist()) for row in self._matrix
        )

    def has_edge(self, i: int, j: int) -> bool:
        if self._matrix is not None:
            return bool(self._matrix[i - 1, j - 1])
        return j in self.neighbor_sets[i - 1]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.neighbor_sets[v - 1]

    def degree(self, v: int) -> int:
        return len(self.neighbor_sets[v - 1])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) pairs with i < j, lexicographically ordered."""
        if self._matrix is not None:
            pairs = np.argwhere(np.triu(self._matrix, k=1)) + 1
            return [(int(i), int(j)) for i, j in pairs]
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in sorted(self.neighbor_sets[i - 1])
            if i < j
        ]

    def non_edges(self) -> list[tuple[int, int]]:
        """Pairs i < j that are not edges, lexicographically ordered."""
        if self._matrix is not None:
            pairs = np.argwhere(np.triu(~self._matrix, k=1)) + 1
            return [(int(i), int(j)) for i, j in pairs]
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if j not in self.neighbor_sets[i - 1]
        ]

    def edge_count(self) -> int:
        if self._matrix is not None:
            return int(self._matrix.sum()) // 2
        return sum(len(a) for a in self.neighbor_sets) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        members = sorted(set(vertices))
        return all(
            self.has_edge(members[a], members[b])
            for a in range(len(members))
            for b in range(a + 1, len(members))
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AgreementGraph):
            return NotImplemented
        return self.n == other.n and self.edges() == other.edges()

    def __repr__(self) -> str:
        return f"AgreementGraph(n={self.n}, edges={self.edge_count()})"


def agreement_graph(
    instance: Instance, dense_max_n: int | None = None
) -> AgreementGraph:
    """The agreement graph of ``instance``; its cliques are exactly the feasible sets.

    O(k*n^2) time. Storage is a dense bit matrix for n <= ``dense_max_n``
    (default ``Config.dense_graph_max_n``) and adjacency sets above.
    """
    limit = dense_max_n if dense_max_n is not None else get_config().dense_graph_max_n
    n = instance.n
    pos_s = position_matrix(instance.source.dims)
    pos_t = position_matrix(instance.target.dims)

    if n <= limit:
        agree = np.ones((n, n), dtype=bool)
        for r in range(instance.k):
            before_s = pos_s[r][:, None] < pos_s[r][None, :]
            before_t = pos_t[r][:, None] < pos_t[r][None, :]
            agree &= before_s == before_t
        np.fill_diagonal(agree, False)
        graph = AgreementGraph(n, matrix=agree)
    else:
        adjacency = []
        for i in range(n):
            row = np.ones(n, dtype=bool)
            for r in range(instance.k):
                row &= (pos_s[r][i] < pos_s[r]) == (pos_t[r][i] < pos_t[r])
            row[i] = False
            adjacency.append(frozenset((np.flatnonzero(row) + 1).tolist()))
        graph = AgreementGraph(n, adjacency=adjacency)

    logger.debug(
        f"Agreement graph n={n} edges={graph.edge_count()} dense={graph.is_dense}"
    )
    return graph


def conflict_edges(instance: Instance) -> list[tuple[int, int]]:
    """Pairs reversed in at least one dimension (the complement of the agreement graph).

    Vertex covers of this conflict graph are exactly the kU-feasible sets.
    """
    return agreement_graph(instance).non_edges()
