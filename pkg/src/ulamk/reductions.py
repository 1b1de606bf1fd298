"""Hardness-instance generators and solution maps.

Covers 3SAT -> 2LFS with its assignment decoder, graph -> nLFS, the power
construction T^c with solution lifting and extraction, the kU power
construction, and dimension padding.
"""

import logging

import networkx as nx
import numpy as np

from .config import get_config
from .core import check_members, dual_complement, is_feasible
from .exceptions import (
    InconsistentAssignmentError,
    LevelTooLargeError,
    NotFeasibleError,
    NotSquareError,
    OutOfRangeError,
    SelfLoopError,
    ShrinkNotAllowedError,
)
from .models import (
    CnfFormula,
    FeasibleSet,
    Instance,
    PartitionStats,
    PermutationTuple,
    PowerInstance,
    SetLike,
    Symbol,
    SymbolTable,
    as_members,
)

logger = logging.getLogger("ulamk.reductions")


# =============================================================================
# 3SAT -> 2LFS
# =============================================================================


def build_symbol_table(phi: CnfFormula) -> SymbolTable:
    """Number literal occurrences 1..3m.

    Variables in ascending order; per variable, positive occurrences in clause
    order, then negative occurrences in clause order.
    """
    symbols: list[Symbol] = []
    for var in range(1, phi.var_count + 1):
        for neg in (False, True):
            literal = -var if neg else var
            occ = 0
            for j, clause in enumerate(phi.clauses, start=1):
                for slot, lit in enumerate(clause, start=1):
                    if lit == literal:
                        occ += 1
                        symbols.append(
                            Symbol(
                                id=len(symbols) + 1,
                                var=var,
                                neg=neg,
                                occ=occ,
                                clause=j,
                                slot=slot,
                            )
                        )
    return SymbolTable(formula=phi, symbols=tuple(symbols))


def sat_to_2lfs(phi: CnfFormula) -> tuple[Instance, SymbolTable]:
    """The two-dimensional instance whose optimum is m iff ``phi`` is satisfiable.

    Dimension 1 lists each variable's positive block A_i then its negative
    block B_i in the source and B_i A_i in the target, so opposite literals of
    a variable always conflict. Dimension 2 lists clause blocks E_j in the
    source and their reversals in the target, so at most one symbol per clause
    survives. The optimum never exceeds m.
    """
    table = build_symbol_table(phi)
    blocks: dict[tuple[int, bool], list[int]] = {}
    for s in table.symbols:
        blocks.setdefault((s.var, s.neg), []).append(s.id)

    source_1: list[int] = []
    target_1: list[int] = []
    for var in range(1, phi.var_count + 1):
        positive = blocks.get((var, False), [])
        negative = blocks.get((var, True), [])
        source_1 += positive + negative
        target_1 += negative + positive

    source_2: list[int] = []
    target_2: list[int] = []
    for j in range(1, phi.m + 1):
        block = [table.id_of(j, slot) for slot in (1, 2, 3)]
        source_2 += block
        target_2 += block[::-1]

    instance = Instance.from_rows([source_1, source_2], [target_1, target_2])
    logger.info(
        f"3SAT->2LFS: {phi.var_count} variables, {phi.m} clauses, n={instance.n}"
    )
    return instance, table


def decode_assignment(
    table: SymbolTable, fixed: SetLike
) -> tuple[dict[int, bool], int]:
    """Read a partial assignment off a feasible set of the SAT instance.

    Every fixed symbol sets its variable so that its literal is true.

    Returns:
        The partial assignment (variable -> value) and the number of clauses it
        satisfies, which is at least |fixed| for a feasible set.

    Raises:
        OutOfRangeError: If ``fixed`` is not a subset of [3m].
        InconsistentAssignmentError: If a variable is forced both ways, which
            cannot happen for a feasible set.
    """
    members = check_members(3 * table.formula.m, fixed)
    assignment: dict[int, bool] = {}
    for symbol_id in sorted(members):
        symbol = table.symbol(symbol_id)
        value = not symbol.neg
        if assignment.setdefault(symbol.var, value) != value:
            raise InconsistentAssignmentError(
                f"Variable {symbol.var} is forced both ways",
                suggestions=["Check that the set is feasible for the SAT instance"],
                context={"var": symbol.var, "symbol": symbol_id},
            )
    satisfied = sum(
        1
        for clause in table.formula.clauses
        if any(assignment.get(abs(lit)) == (lit > 0) for lit in clause)
    )
    return assignment, satisfied


# =============================================================================
# GRAPH -> nLFS
# =============================================================================


def _check_graph(g: nx.Graph) -> int:
    n = g.number_of_nodes()
    if set(g.nodes) != set(range(1, n + 1)):
        raise OutOfRangeError(
            "Graph vertices must be exactly 1..n",
            context={"n": n, "nodes": sorted(g.nodes)[:10]},
        )
    loops = list(nx.selfloop_edges(g))
    if loops:
        raise SelfLoopError(
            f"Graph has self-loops at {sorted(u for u, _ in loops)}",
            context={"vertices": sorted(u for u, _ in loops)},
        )
    return n


def graph_to_nlfs(g: nx.Graph) -> Instance:
    """The n-dimensional instance whose feasible sets are exactly the cliques of g.

    For vertex i with ascending non-neighbors a_i and ascending neighbors b_i:
    sigma^i_s = (i) a_i b_i and sigma^i_t = a_i (i) b_i.

    Raises:
        SelfLoopError: If g has a self-loop.
        OutOfRangeError: If the vertices are not 1..n.
    """
    n = _check_graph(g)
    source: list[list[int]] = []
    target: list[list[int]] = []
    for i in range(1, n + 1):
        neighbours = set(g.adj[i])
        a = [v for v in range(1, n + 1) if v != i and v not in neighbours]
        b = sorted(neighbours)
        source.append([i] + a + b)
        target.append(a + [i] + b)
    return Instance.from_rows(source, target)


def clique_witness(g: nx.Graph, fixed: SetLike) -> frozenset[int]:
    """Map a feasible set of graph_to_nlfs(g) back to the clique of g it is.

    Raises:
        NotFeasibleError: If the set is not a clique of g.
    """
    members = as_members(fixed)
    for u in members:
        for v in members:
            if u < v and not g.has_edge(u, v):
                raise NotFeasibleError(
                    f"Vertices {u} and {v} are not adjacent",
                    context={"pair": [u, v]},
                )
    return members


# =============================================================================
# POWER CONSTRUCTION T^c
# =============================================================================


def _check_square(base: Instance) -> int:
    if base.k != base.n:
        raise NotSquareError(
            f"Power constructions need k == n, got k={base.k}, n={base.n}",
            suggestions=["Use pad_dimensions to raise k up to n"],
            context={"k": base.k, "n": base.n},
        )
    return base.n


def _check_level(nu: int, c: int, max_elements: int | None) -> None:
    if c < 1:
        raise OutOfRangeError(f"Level c={c} must be >= 1", context={"c": c})
    cap = max_elements if max_elements is not None else get_config().power_max_elements
    if nu**c > cap:
        raise LevelTooLargeError(
            f"nu^c = {nu}^{c} exceeds the cap of {cap} elements",
            context={"nu": nu, "c": c, "cap": cap},
        )


def _lift_rows(
    sigma: PermutationTuple, tau: PermutationTuple, width: int
) -> list[list[int]]:
    rows = []
    for outer, inner in zip(sigma.rows(), tau.rows(), strict=True):
        blocks = (np.asarray(outer)[:, None] - 1) * width + np.asarray(inner)
        rows.append(blocks.ravel().tolist())
    return rows


def power_construct(
    base: Instance, c: int, max_elements: int | None = None
) -> PowerInstance:
    """Build the tower T^1 = base, ..., T^c.

    T^level arranges, in dimension i, the blocks f_k(tau^i) for k in the order
    of sigma^i, where tau^i is dimension i of T^(level-1) and
    f_k(x) = (k-1) * nu^(level-1) + x.

    Raises:
        NotSquareError: If base.k != base.n.
        LevelTooLargeError: If nu^c exceeds the element cap.
    """
    nu = _check_square(base)
    _check_level(nu, c, max_elements)

    tower = [base]
    for level in range(2, c + 1):
        width = nu ** (level - 1)
        prev = tower[-1]
        tower.append(
            Instance.from_rows(
                _lift_rows(base.source, prev.source, width),
                _lift_rows(base.target, prev.target, width),
            )
        )
        logger.debug(f"Built T^{level} with n={nu**level}")

    return PowerInstance(base=base, level=c, tower=tuple(tower))


def lift_solution(
    members: SetLike, prev: SetLike, c: int, nu: int
) -> FeasibleSet:
    """The product set {(j-1) * nu^(c-1) + k : j in members, k in prev} of T^c."""
    width = nu ** (c - 1)
    return FeasibleSet.of(
        (j - 1) * width + k for j in as_members(members) for k in as_members(prev)
    )


def _split(s: int, width: int) -> tuple[int, int]:
    return (s - 1) // width + 1, (s - 1) % width + 1


def block_maps(s: int, level: int, nu: int) -> tuple[int, int]:
    """(block, inblock) of s for blocks of width nu^level.

    Raises:
        OutOfRangeError: If s is outside [nu^(level+1)].
    """
    if not 1 <= s <= nu ** (level + 1):
        raise OutOfRangeError(
            f"s={s} is outside [1, {nu ** (level + 1)}]",
            context={"s": s, "level": level, "nu": nu},
        )
    return _split(s, nu**level)


def partition_stats(members: SetLike, level: int, nu: int) -> PartitionStats:
    """W, H(l), alpha and beta of a set J of T^level (blocks of width nu^(level-1)).

    Raises:
        OutOfRangeError: If J is not a subset of [nu^level].
    """
    j_set = check_members(nu**level, members)
    parts: dict[int, set[int]] = {block: set() for block in range(1, nu + 1)}
    for s in j_set:
        block, inner = block_maps(s, level - 1, nu)
        parts[block].add(inner)
    H = {block: frozenset(inner) for block, inner in parts.items()}
    alpha = max(len(h) for h in H.values())
    beta = max(block for block, h in H.items() if len(h) == alpha)
    W = frozenset(block for block, h in H.items() if h)
    return PartitionStats(W=W, H=H, alpha=alpha, beta=beta)


def extract_lfs(pinst: PowerInstance, c: int, members: SetLike) -> FeasibleSet:
    """Recover a base-feasible set of size >= |J|^(1/c) from a feasible J of T^c.

    If the fullest block holds fewer than |J|^((c-1)/c) elements, the set W of
    hit blocks is returned; otherwise the recursion descends into that block's
    image H(beta, J), which is feasible for T^(c-1). At c = 2 the threshold is
    |J|^(1/2). All root comparisons use integer powers.

    Raises:
        OutOfRangeError: If c is outside [1, pinst.level] or J outside [nu^c].
        NotFeasibleError: If J is not feasible for T^c.
    """
    if not 1 <= c <= pinst.level:
        raise OutOfRangeError(
            f"Level c={c} must lie in [1, {pinst.level}]",
            context={"c": c, "level": pinst.level},
        )
    nu = pinst.nu
    j_set = check_members(nu**c, members)
    if not is_feasible(pinst.at(c), j_set):
        raise NotFeasibleError(
            f"The set is not feasible for T^{c}",
            context={"c": c, "size": len(j_set)},
        )

    while c > 1 and j_set:
        stats = partition_stats(j_set, c, nu)
        if stats.alpha**c < len(j_set) ** (c - 1):
            logger.debug(f"ExtractLFS level {c}: returning W of size {len(stats.W)}")
            return FeasibleSet(members=stats.W)
        j_set = stats.H[stats.beta]
        c -= 1
        logger.debug(f"ExtractLFS: descending to level {c} with |J|={len(j_set)}")
    return FeasibleSet(members=j_set)


# =============================================================================
# kU POWER CONSTRUCTION
# =============================================================================


def u_power_construct(
    base: Instance, c: int, max_elements: int | None = None
) -> Instance:
    """nu^(c-1) shifted copies of each base permutation, g_k(p) = (k-1) * nu + p.

    Raises:
        NotSquareError: If base.k != base.n.
        LevelTooLargeError: If nu^c exceeds the element cap.
    """
    nu = _check_square(base)
    _check_level(nu, c, max_elements)
    offsets = np.arange(nu ** (c - 1))[:, None] * nu

    def lift(rows: tuple[tuple[int, ...], ...]) -> list[list[int]]:
        return [(offsets + np.asarray(row)).ravel().tolist() for row in rows]

    return Instance.from_rows(lift(base.source.rows()), lift(base.target.rows()))


def _is_u_feasible(instance: Instance, removed: frozenset[int]) -> bool:
    return is_feasible(instance, dual_complement(instance, removed))


def u_extract(
    members: SetLike, nu: int, c: int, base: Instance | None = None
) -> FeasibleSet:
    """The smallest per-copy image of a kU-feasible J of u_power_construct(base, c).

    Splits J into the nu^(c-1) copies (blocks of width nu) and returns the
    image of the copy with the fewest members, the smallest copy on ties.
    With ``base`` given, J and the result are checked for kU-feasibility.

    Raises:
        OutOfRangeError: If J is not a subset of [nu^c].
        NotFeasibleError: If a feasibility check fails.
    """
    j_set = check_members(nu**c, members)
    if base is not None and not _is_u_feasible(u_power_construct(base, c), j_set):
        raise NotFeasibleError(
            "The set is not kU-feasible for the lifted instance",
            context={"c": c, "size": len(j_set)},
        )
    copies: dict[int, set[int]] = {copy: set() for copy in range(1, nu ** (c - 1) + 1)}
    for s in j_set:
        copy, inner = _split(s, nu)
        copies[copy].add(inner)
    best = min(copies, key=lambda copy: (len(copies[copy]), copy))
    result = frozenset(copies[best])
    if base is not None and not _is_u_feasible(base, result):
        raise NotFeasibleError(
            f"Copy {best} does not give a kU-feasible set of the base",
            context={"copy": best},
        )
    return FeasibleSet(members=result)


def pad_dimensions(instance: Instance, k_new: int) -> Instance:
    """Append copies of the last dimension pair until k == k_new.

    Duplicated dimensions impose no new order constraints, so the family of
    feasible sets is unchanged.

    Raises:
        ShrinkNotAllowedError: If k_new < k.
    """
    if k_new < instance.k:
        raise ShrinkNotAllowedError(
            f"Cannot pad from k={instance.k} down to k={k_new}",
            context={"k": instance.k, "k_new": k_new},
        )
    extra = k_new - instance.k
    return Instance(
        source=PermutationTuple(
            dims=instance.source.dims + (instance.source.dims[-1],) * extra
        ),
        target=PermutationTuple(
            dims=instance.target.dims + (instance.target.dims[-1],) * extra
        ),
    )
