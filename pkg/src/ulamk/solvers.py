"""Exact, approximate, parameterized and brute-force kLFS/kU solvers."""

import logging
from bisect import bisect_left
from collections.abc import Iterator

from .config import get_config
from .core import AgreementGraph, agreement_graph, conflict_edges, is_feasible
from .exceptions import OutOfRangeError, TooLargeError, WrongDimensionError
from .models import DecisionResult, FeasibleSet, Instance, SolveResult, UlamResult
from .protocols import LfsSolver

logger = logging.getLogger("ulamk.solvers")


def _check_brute_force_size(instance: Instance, max_n: int | None) -> None:
    limit = max_n if max_n is not None else get_config().brute_force_max_n
    if instance.n > limit:
        raise TooLargeError(
            f"Brute force is limited to n <= {limit}, got n={instance.n}",
            suggestions=["Use the exact clique solver (solve exact) instead"],
            context={"n": instance.n, "limit": limit},
        )


def brute_force_opt(instance: Instance, max_n: int | None = None) -> SolveResult:
    """Exhaustive kLFS oracle, independent of the agreement graph.

    Subsets are enumerated in lexicographic order of their sorted sequences,
    extending only feasible sets (feasibility is hereditary) and cutting
    branches that cannot beat the incumbent. The first maximum set met is
    therefore the lexicographically smallest one.

    Args:
        instance: The instance to solve.
        max_n: Size guard; defaults to ``Config.brute_force_max_n``.

    Returns:
        The lexicographically smallest maximum feasible set.

    Raises:
        TooLargeError: If n exceeds the guard.
    """
    _check_brute_force_size(instance, max_n)
    n = instance.n
    best: list[int] = []
    chosen: list[int] = []
    nodes = 0

    def extend(start: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if len(chosen) > len(best):
            best = list(chosen)
        for v in range(start, n + 1):
            if len(chosen) + (n - v + 1) <= len(best):
                return
            chosen.append(v)
            if is_feasible(instance, chosen):
                extend(v + 1)
            chosen.pop()

    extend(1)
    logger.info(f"Brute force n={n}: optimum {len(best)} after {nodes} nodes")
    return SolveResult(
        witness=FeasibleSet.of(best), size=len(best), optimal=True, node_count=nodes
    )


def iter_feasible_sets(
    instance: Instance, max_n: int | None = None
) -> Iterator[frozenset[int]]:
    """Yield every feasible set once, in lexicographic order of sorted sequences.

    Raises:
        TooLargeError: If n exceeds the brute-force guard.
    """
    _check_brute_force_size(instance, max_n)
    n = instance.n
    chosen: list[int] = []

    def extend(start: int) -> Iterator[frozenset[int]]:
        yield frozenset(chosen)
        for v in range(start, n + 1):
            chosen.append(v)
            if is_feasible(instance, chosen):
                yield from extend(v + 1)
            chosen.pop()

    yield from extend(1)


def _colour_bound(candidates: list[int], graph: AgreementGraph) -> int:
    """Colour count of a greedy colouring; bounds the clique size inside candidates.

    Vertices are coloured by descending degree, ties by label.
    """
    order = sorted(candidates, key=lambda v: (-graph.degree(v), v))
    classes: list[set[int]] = []
    for v in order:
        nbrs = graph.neighbors(v)
        for colour_class in classes:
            if not nbrs & colour_class:
                colour_class.add(v)
                break
        else:
            classes.append({v})
    return len(classes)


def _greedy_clique(graph: AgreementGraph) -> list[int]:
    """Take each vertex in ascending order that is adjacent to all taken so far.

    This is the lexicographically smallest maximal clique.
    """
    clique: list[int] = []
    open_vertices = set(range(1, graph.n + 1))
    for v in range(1, graph.n + 1):
        if v in open_vertices:
            clique.append(v)
            open_vertices &= graph.neighbors(v)
    return clique


def _clique_search(graph: AgreementGraph) -> tuple[list[int], int]:
    """Depth-first branch and bound over an explicit stack of (clique, candidates, idx).

    Cliques are visited in lexicographic order of their sorted sequences and
    only strictly larger ones replace the incumbent.
    """
    if graph.n > get_config().clique_warn_n:
        logger.warning(
            f"Exact clique search on n={graph.n} vertices may take a long time"
        )
    best = _greedy_clique(graph)
    nodes = 0
    stack: list[tuple[list[int], list[int], int]] = []

    def enter(clique: list[int], candidates: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if len(clique) > len(best):
            best = clique
        if not candidates or len(clique) + len(candidates) <= len(best):
            return
        if len(clique) + _colour_bound(candidates, graph) <= len(best):
            return
        stack.append((clique, candidates, 0))

    enter([], list(range(1, graph.n + 1)))
    while stack:
        clique, candidates, idx = stack.pop()
        if len(clique) + len(candidates) - idx <= len(best):
            continue
        v = candidates[idx]
        if idx + 1 < len(candidates):
            stack.append((clique, candidates, idx + 1))
        nbrs = graph.neighbors(v)
        enter(clique + [v], [u for u in candidates[idx + 1 :] if u in nbrs])

    logger.debug(f"Clique search on n={graph.n}: size {len(best)} after {nodes} nodes")
    return best, nodes


def max_clique(graph: AgreementGraph) -> frozenset[int]:
    """A maximum clique by branch and bound with a greedy-colouring bound.

    Vertices are branched on in ascending label order and only strictly larger
    cliques replace the incumbent, so the result is the lexicographically
    smallest maximum clique and is reproducible across runs.
    """
    clique, _ = _clique_search(graph)
    return frozenset(clique)


def solve_lfs_exact(instance: Instance) -> SolveResult:
    """Exact kLFS through the maximum clique of the agreement graph."""
    clique, nodes = _clique_search(agreement_graph(instance))
    logger.info(f"Exact kLFS n={instance.n} k={instance.k}: size {len(clique)}")
    return SolveResult(
        witness=FeasibleSet.of(clique),
        size=len(clique),
        optimal=True,
        node_count=nodes,
    )


def solve_lfs_k1(instance: Instance) -> SolveResult:
    """LCS of two permutations as the LIS of sigma_s relabelled by sigma_t positions.

    Patience sorting with back-pointers, O(n log n).

    Raises:
        WrongDimensionError: If k != 1.
    """
    if instance.k != 1:
        raise WrongDimensionError(
            f"The k=1 solver needs exactly one dimension, got k={instance.k}",
            suggestions=["Use solve exact for k > 1"],
            context={"k": instance.k},
        )
    sigma_s = instance.source.dims[0].labels
    index_t = instance.target.dims[0].index
    seq = [index_t[v] for v in sigma_s]

    tails: list[int] = []  # smallest tail value of an increasing run per length
    tail_at: list[int] = []  # index in seq of that tail
    prev = [-1] * len(seq)
    for i, x in enumerate(seq):
        pile = bisect_left(tails, x)
        if pile == len(tails):
            tails.append(x)
            tail_at.append(i)
        else:
            tails[pile] = x
            tail_at[pile] = i
        prev[i] = tail_at[pile - 1] if pile > 0 else -1

    members = []
    i = tail_at[-1] if tail_at else -1
    while i != -1:
        members.append(sigma_s[i])
        i = prev[i]
    return SolveResult(
        witness=FeasibleSet.of(members), size=len(members), optimal=True, node_count=0
    )


def approx_u(instance: Instance) -> SolveResult:
    """2-approximate kU: endpoints of a maximal matching of the conflict graph.

    Edges are scanned in lexicographic order. The returned set D satisfies
    opt_U <= |D| <= 2 * opt_U and its complement is kLFS-feasible.
    """
    matched: set[int] = set()
    for i, j in conflict_edges(instance):
        if i not in matched and j not in matched:
            matched.update((i, j))
    logger.info(f"Matching cover of size {len(matched)} for n={instance.n}")
    return SolveResult(
        witness=FeasibleSet.of(matched),
        size=len(matched),
        optimal=not matched,
        node_count=0,
    )


def decide_ud_fpt(instance: Instance, budget: int) -> DecisionResult:
    """Whether some kU-feasible set has size <= ``budget`` (bounded search tree).

    Each node takes the first remaining conflict pair {i, j} and branches on
    deleting i or j, so the tree has depth <= budget and at most
    2^(budget+1) - 1 nodes. Because supersets of kU-feasible sets stay
    feasible, "size <= l" and "size exactly l" coincide for l <= n.

    Raises:
        OutOfRangeError: If budget is outside [0, n].
    """
    if not 0 <= budget <= instance.n:
        raise OutOfRangeError(
            f"Budget l={budget} must lie in [0, {instance.n}]",
            context={"l": budget, "n": instance.n},
        )
    nodes = 0

    def search(
        edges: list[tuple[int, int]], remaining: int, removed: frozenset[int]
    ) -> frozenset[int] | None:
        nonlocal nodes
        nodes += 1
        if not edges:
            return removed
        if remaining == 0:
            return None
        for w in edges[0]:
            found = search(
                [e for e in edges if w not in e], remaining - 1, removed | {w}
            )
            if found is not None:
                return found
        return None

    witness = search(conflict_edges(instance), budget, frozenset())
    logger.debug(f"kUD l={budget}: answer={witness is not None} nodes={nodes}")
    return DecisionResult(
        answer=witness is not None,
        node_count=nodes,
        witness=FeasibleSet.of(witness) if witness is not None else None,
    )


def ulam_distance(
    instance: Instance, solver: LfsSolver = solve_lfs_exact
) -> UlamResult:
    """The k-dimensional Ulam distance n - |LFS| with witnesses on both sides."""
    fixed = solver(instance).witness
    removed = frozenset(range(1, instance.n + 1)) - fixed.members
    return UlamResult(
        distance=len(removed), removed=FeasibleSet.of(removed), fixed=fixed
    )


SOLVERS: dict[str, LfsSolver] = {
    "exact": solve_lfs_exact,
    "brute": brute_force_opt,
    "k1": solve_lfs_k1,
}
