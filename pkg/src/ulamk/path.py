"""Insert moves: application, neighbourhood test and shortest-path reconstruction.

An insert move removes one element from every permutation of a tuple and
re-inserts it at a chosen position per dimension. Re-inserting at the original
position is allowed, so every tuple is its own neighbour and an element that is
already placed correctly in some dimension can stay put there.
"""

import logging

from .core import check_members, is_feasible
from .exceptions import (
    BadPositionError,
    NotFeasibleError,
    ShapeMismatchError,
    UlamKError,
)
from .models import (
    Instance,
    InsertMove,
    MovePath,
    PathIssue,
    PathVerdict,
    PermutationTuple,
    SetLike,
)

logger = logging.getLogger("ulamk.path")


def apply_insert_move(gamma: PermutationTuple, move: InsertMove) -> PermutationTuple:
    """Move ``move.element`` to ``move.targets[r]`` in every dimension r.

    Targets are 1-based positions in the permutation after the element has been
    removed, so each lies in [1, n].

    Raises:
        BadPositionError: If the element or a target position is invalid, or the
            move does not give one target per dimension.
    """
    n, k = gamma.n, gamma.k
    if not 1 <= move.element <= n:
        raise BadPositionError(
            f"Element {move.element} is outside [1, {n}]",
            context={"element": move.element, "n": n},
        )
    if len(move.targets) != k:
        raise BadPositionError(
            f"Move has {len(move.targets)} targets for {k} dimensions",
            context={"targets": list(move.targets), "k": k},
        )
    rows = []
    for r, (labels, target) in enumerate(zip(gamma.rows(), move.targets), start=1):
        if not 1 <= target <= n:
            raise BadPositionError(
                f"Target position {target} in dim {r} is outside [1, {n}]",
                context={"dim": r, "target": target, "n": n},
            )
        row = [v for v in labels if v != move.element]
        row.insert(target - 1, move.element)
        rows.append(row)
    return PermutationTuple.from_rows(rows)


def _without(gamma: PermutationTuple, v: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(x for x in row if x != v) for row in gamma.rows())


def is_neighbor(a: PermutationTuple, b: PermutationTuple) -> bool:
    """Whether one insert move turns ``a`` into ``b`` (a == b counts).

    Raises:
        ShapeMismatchError: If the tuples differ in n or k.
    """
    if a.n != b.n or a.k != b.k:
        raise ShapeMismatchError(
            f"Cannot compare tuples of shape {a.k}x{a.n} and {b.k}x{b.n}",
            context={"a": [a.k, a.n], "b": [b.k, b.n]},
        )
    return any(_without(a, v) == _without(b, v) for v in range(1, a.n + 1))


def reconstruct_path(instance: Instance, fixed: SetLike) -> MovePath:
    """A path of n - |fixed| insert moves from Gamma_s to Gamma_t.

    Elements outside ``fixed`` are settled one at a time in ascending order of
    their position in sigma^1_t. In each dimension the element goes to the
    smallest position right after its last settled predecessor in sigma^r_t,
    which keeps the settled elements in their target relative order; once all
    elements are settled every dimension equals its target.

    Raises:
        OutOfRangeError: If ``fixed`` is not a subset of [n].
        NotFeasibleError: If ``fixed`` is not feasible.
    """
    settled = set(check_members(instance.n, fixed))
    if not is_feasible(instance, settled):
        raise NotFeasibleError(
            "Cannot build a move path from an infeasible fixed set",
            suggestions=["Use the witness of a kLFS solver as the fixed set"],
            context={"fixed": sorted(settled)},
        )

    targets = [perm.labels for perm in instance.target.dims]
    target_index = [perm.index for perm in instance.target.dims]
    current = [list(row) for row in instance.source.rows()]
    pending = sorted(
        (v for v in range(1, instance.n + 1) if v not in settled),
        key=lambda v: target_index[0][v],
    )

    moves = []
    for v in pending:
        positions = []
        for r, row in enumerate(current):
            row.remove(v)
            position = 1
            for u in reversed(targets[r][: target_index[r][v]]):
                if u in settled:
                    position = row.index(u) + 2
                    break
            row.insert(position - 1, v)
            positions.append(position)
        settled.add(v)
        moves.append(InsertMove(element=v, targets=tuple(positions)))
        logger.debug(f"Move {len(moves)}: element {v} to {positions}")

    end = PermutationTuple.from_rows(current)
    if end != instance.target:
        raise UlamKError("Reconstructed path does not end at the target tuple")
    return MovePath(start=instance.source, moves=tuple(moves), end=end)


def replay(path: MovePath) -> list[PermutationTuple]:
    """The tuples visited by ``path``: its start and the tuple after each move.

    Raises:
        BadPositionError: If a move cannot be applied.
    """
    states = [path.start]
    for move in path.moves:
        states.append(apply_insert_move(states[-1], move))
    return states


def verify_path(instance: Instance, path: MovePath) -> PathVerdict:
    """Check that ``path`` leads from Gamma_s to Gamma_t by its recorded moves."""
    if path.start != instance.source:
        return PathVerdict(valid=False, reason=PathIssue.START_MISMATCH)
    state = path.start
    for step, move in enumerate(path.moves, start=1):
        try:
            state = apply_insert_move(state, move)
        except BadPositionError:
            return PathVerdict(valid=False, reason=PathIssue.BAD_MOVE, step=step)
    if state != path.end:
        return PathVerdict(valid=False, reason=PathIssue.END_MISMATCH)
    if path.end != instance.target:
        return PathVerdict(valid=False, reason=PathIssue.TARGET_MISMATCH)
    return PathVerdict(valid=True)
