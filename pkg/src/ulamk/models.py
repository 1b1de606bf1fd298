from collections.abc import Iterable, Sequence
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):  # type: ignore[no-untyped-def]
            return name.lower()
from functools import cached_property
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from .config import get_config
from .exceptions import (
    DimensionMismatchError,
    DuplicateValueError,
    LengthMismatchError,
    MalformedClauseError,
    OutOfRangeError,
    ShapeMismatchError,
    UlamKError,
)

# =============================================================================
# UNIFIED RESPONSE MODEL
# =============================================================================
# Error envelope for the CLI; every failure is reported through it. Successful
# commands print their result dict directly.


class Response(BaseModel):
    """Error envelope printed by the CLI in place of a result."""

    status: Literal["error"] = Field("error", description="Response status")
    message: str = Field(..., description="Human-readable summary of the failure")
    errors: list[str] = Field(
        default_factory=list, description="List of error messages"
    )
    suggestions: list[str] = Field(
        default_factory=list, description="Actionable suggestions for the user"
    )
    metadata: dict[str, Any] | None = Field(
        None, description="Additional context and domain-specific information"
    )

    @classmethod
    def from_error(cls, error: Exception) -> "Response":
        """Create Response from any Exception, with potentially helpful info for recovery.

        Args:
            error: Any Exception instance

        Returns:
            Response object with error details
        """
        if isinstance(error, UlamKError):
            return cls(
                status="error",
                message=error.message,
                errors=error.errors,
                suggestions=error.suggestions,
                metadata={
                    **error.context,
                    "exception_type": type(error).__name__,
                    "exit_code": error.exit_code,
                },
            )
        elif isinstance(error, OSError):
            return cls(
                status="error",
                message=f"File error: {error}",
                errors=[str(error)],
                suggestions=["Check the path exists and is readable"],
                metadata={"exception_type": type(error).__name__, "exit_code": 2},
            )
        else:
            return cls(
                status="error",
                message=f"Unexpected error: {error}",
                errors=[str(error)],
                suggestions=["Re-run with --log-level DEBUG for detailed information"],
                metadata={"exception_type": type(error).__name__, "exit_code": 1},
            )


# =============================================================================
# PERMUTATION INSTANCES
# =============================================================================
# Labels are 1-based everywhere. Position indices are 0-based and stay
# internal (Permutation.index).


def check_permutation(
    labels: Sequence[int], *, side: str | None = None, dim: int | None = None
) -> None:
    """Check that ``labels`` is a permutation of [len(labels)].

    Raises:
        LengthMismatchError: If the sequence is empty.
        OutOfRangeError: If a value lies outside [1, n].
        DuplicateValueError: If a value repeats.
    """
    where = {k: v for k, v in (("side", side), ("dim", dim)) if v is not None}
    label = f" (dim {dim})" if dim is not None else ""
    n = len(labels)
    if n == 0:
        raise LengthMismatchError(
            f"Empty permutation{label}", context={**where, "length": 0}
        )
    seen = [False] * (n + 1)
    for i, value in enumerate(labels, start=1):
        if not 1 <= value <= n:
            raise OutOfRangeError(
                f"Value {value} at index {i}{label} is outside [1, {n}]",
                context={**where, "index": i, "value": value, "n": n},
            )
        if seen[value]:
            raise DuplicateValueError(
                f"Value {value} repeats at index {i}{label}",
                suggestions=["Each of 1..n must occur exactly once per sequence"],
                context={**where, "index": i, "value": value},
            )
        seen[value] = True


class Permutation(BaseModel):
    """A permutation of [n] given as its label sequence (sigma(1), ..., sigma(n))."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[int, ...] = Field(..., description="1-based label sequence")

    @model_validator(mode="after")
    def _check_labels(self) -> "Permutation":
        check_permutation(self.labels)
        return self

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> tuple[int, ...]:
        """0-based position of each label (the inverse permutation); slot 0 unused."""
        index = [-1] * (len(self.labels) + 1)
        for pos, label in enumerate(self.labels):
            index[label] = pos
        return tuple(index)


class PermutationTuple(BaseModel):
    """A k-tuple of permutations over the same [n]."""

    model_config = ConfigDict(frozen=True)

    dims: tuple[Permutation, ...] = Field(..., description="The k permutations")

    @model_validator(mode="after")
    def _check_dims(self) -> "PermutationTuple":
        if not self.dims:
            raise DimensionMismatchError(
                "A permutation tuple needs at least one dimension",
                context={"k": 0},
            )
        n = self.dims[0].n
        for r, perm in enumerate(self.dims, start=1):
            if perm.n != n:
                raise LengthMismatchError(
                    f"Dimension {r} has length {perm.n}, expected {n}",
                    context={"dim": r, "length": perm.n, "expected": n},
                )
        return self

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "PermutationTuple":
        return cls(dims=tuple(Permutation(labels=tuple(row)) for row in rows))

    @property
    def k(self) -> int:
        return len(self.dims)

    @property
    def n(self) -> int:
        return self.dims[0].n

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(perm.labels for perm in self.dims)


class Instance(BaseModel):
    """A pair of k-tuples of permutations <Gamma_s, Gamma_t>."""

    model_config = ConfigDict(frozen=True)

    source: PermutationTuple = Field(..., description="Gamma_s")
    target: PermutationTuple = Field(..., description="Gamma_t")

    @model_validator(mode="after")
    def _check_shape(self) -> "Instance":
        if self.source.k != self.target.k:
            raise DimensionMismatchError(
                f"Source has {self.source.k} dimensions, target has {self.target.k}",
                context={"source_k": self.source.k, "target_k": self.target.k},
            )
        if self.source.n != self.target.n:
            raise LengthMismatchError(
                f"Source permutations have length {self.source.n}, "
                f"target permutations {self.target.n}",
                context={"source_n": self.source.n, "target_n": self.target.n},
            )
        return self

    @classmethod
    def from_rows(
        cls, source: Iterable[Sequence[int]], target: Iterable[Sequence[int]]
    ) -> "Instance":
        return cls(
            source=PermutationTuple.from_rows(source),
            target=PermutationTuple.from_rows(target),
        )

    @computed_field
    @property
    def n(self) -> int:
        return self.source.n

    @computed_field
    @property
    def k(self) -> int:
        return self.source.k

    def pairs(self) -> Iterable[tuple[Permutation, Permutation]]:
        """Yield (sigma^r_s, sigma^r_t) for r = 1..k."""
        return zip(self.source.dims, self.target.dims, strict=True)

    def swap(self) -> "Instance":
        """The instance with Gamma_s and Gamma_t exchanged."""
        return Instance(source=self.target, target=self.source)


class FeasibleSet(BaseModel):
    """A subset of [n]; a kLFS witness when feasible, its complement a kU witness."""

    model_config = ConfigDict(frozen=True)

    members: frozenset[int] = Field(default_factory=frozenset)

    @classmethod
    def of(cls, members: "Iterable[int] | FeasibleSet") -> "FeasibleSet":
        if isinstance(members, FeasibleSet):
            return members
        return cls(members=frozenset(members))

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)


SetLike = FeasibleSet | Iterable[int]


def as_members(value: SetLike) -> frozenset[int]:
    """Normalise a FeasibleSet or any iterable of labels to a frozenset."""
    if isinstance(value, FeasibleSet):
        return value.members
    return frozenset(value)


# =============================================================================
# SOLVER RESULTS
# =============================================================================


class SolveResult(BaseModel):
    """A kLFS (or kU) solution: witness set plus search statistics."""

    model_config = ConfigDict(frozen=True)

    witness: FeasibleSet
    size: int = Field(..., ge=0, description="|witness|")
    optimal: bool = Field(..., description="True when the solver proves optimality")
    node_count: int = Field(0, ge=0, description="Search-tree nodes expanded")

    @model_validator(mode="after")
    def _check_size(self) -> "SolveResult":
        if self.size != len(self.witness):
            raise UlamKError(
                f"Result size {self.size} differs from witness size {len(self.witness)}"
            )
        return self


class UlamResult(BaseModel):
    """The k-dimensional Ulam distance with a fixed set and its complement."""

    model_config = ConfigDict(frozen=True)

    distance: int = Field(..., ge=0)
    removed: FeasibleSet = Field(..., description="A member of U_k(Gamma_s, Gamma_t)")
    fixed: FeasibleSet = Field(..., description="A member of LFS(Gamma_s, Gamma_t)")

    @model_validator(mode="after")
    def _check_partition(self) -> "UlamResult":
        overlap = self.removed.members & self.fixed.members
        if self.distance != len(self.removed) or overlap:
            raise UlamKError("Removed and fixed sets must partition [n]")
        return self


class DecisionResult(BaseModel):
    """Answer of the kUD decision problem with search statistics."""

    model_config = ConfigDict(frozen=True)

    answer: bool
    node_count: int = Field(..., ge=0)
    witness: FeasibleSet | None = Field(
        None, description="A kU-feasible set of size <= l when answer is true"
    )

    def __bool__(self) -> bool:
        return self.answer


# =============================================================================
# REDUCTION MODELS
# =============================================================================


class CnfFormula(BaseModel):
    """A 3CNF formula; literals are DIMACS-style signed variable indices."""

    model_config = ConfigDict(frozen=True)

    var_count: int = Field(..., ge=1)
    clauses: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_clauses(self) -> "CnfFormula":
        if not self.clauses:
            raise MalformedClauseError("A formula needs at least one clause")
        for j, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise MalformedClauseError(
                    f"Clause {j} has {len(clause)} literals, expected 3",
                    context={"clause": j, "literals": list(clause)},
                )
            for lit in clause:
                if lit == 0 or abs(lit) > self.var_count:
                    raise MalformedClauseError(
                        f"Clause {j} has literal {lit} outside +-[1, {self.var_count}]",
                        context={"clause": j, "literal": lit},
                    )
        return self

    @property
    def m(self) -> int:
        return len(self.clauses)


class Symbol(BaseModel):
    """One literal occurrence x_var^(occ) (or its negation) and its label in [3m]."""

    model_config = ConfigDict(frozen=True)

    id: int = Field(..., ge=1)
    var: int = Field(..., ge=1)
    neg: bool
    occ: int = Field(..., ge=1, description="Occurrence index of this literal")
    clause: int = Field(..., ge=1, description="1-based clause index")
    slot: int = Field(..., ge=1, le=3, description="Position inside the clause")

    @property
    def literal(self) -> int:
        return -self.var if self.neg else self.var


class SymbolTable(BaseModel):
    """The bijection kappa between literal occurrences and [3m]."""

    model_config = ConfigDict(frozen=True)

    formula: CnfFormula
    symbols: tuple[Symbol, ...]

    @model_validator(mode="after")
    def _check_bijection(self) -> "SymbolTable":
        ids = [s.id for s in self.symbols]
        if sorted(ids) != list(range(1, 3 * self.formula.m + 1)):
            raise UlamKError("Symbol ids must be exactly 1..3m")
        return self

    @cached_property
    def symbol_index(self) -> dict[int, Symbol]:
        return {s.id: s for s in self.symbols}

    @cached_property
    def slot_index(self) -> dict[tuple[int, int], int]:
        return {(s.clause, s.slot): s.id for s in self.symbols}

    def symbol(self, symbol_id: int) -> Symbol:
        """kappa^-1: the literal occurrence behind a label."""
        return self.symbol_index[symbol_id]

    def id_of(self, clause: int, slot: int) -> int:
        """kappa: the label of the literal in ``slot`` of ``clause``."""
        return self.slot_index[(clause, slot)]


class PowerInstance(BaseModel):
    """Gamma together with the tower T^1 = Gamma, T^2, ..., T^c."""

    model_config = ConfigDict(frozen=True)

    base: Instance
    level: int = Field(..., ge=1)
    tower: tuple[Instance, ...]

    @model_validator(mode="after")
    def _check_tower(self) -> "PowerInstance":
        if len(self.tower) != self.level or self.tower[0] != self.base:
            raise UlamKError("The tower must hold T^1 = base through T^level")
        if self.lifted.n != self.base.n**self.level or self.lifted.k != self.base.k:
            raise UlamKError("The lifted instance must have n = nu^level and k = nu")
        return self

    @property
    def nu(self) -> int:
        return self.base.n

    @property
    def lifted(self) -> Instance:
        return self.tower[-1]

    def at(self, level: int) -> Instance:
        """T^level."""
        return self.tower[level - 1]


class PartitionStats(BaseModel):
    """Block statistics of a set J of T^level: W, H(l) for l in [nu], alpha, beta."""

    model_config = ConfigDict(frozen=True)

    W: frozenset[int]
    H: dict[int, frozenset[int]]
    alpha: int
    beta: int


# =============================================================================
# INSERT MOVES
# =============================================================================


class InsertMove(BaseModel):
    """Move ``element`` to ``targets[r]`` (1-based, after removal) in dimension r."""

    model_config = ConfigDict(frozen=True)

    element: int
    targets: tuple[int, ...]


class MovePath(BaseModel):
    """A sequence of insert moves from ``start`` to ``end``."""

    model_config = ConfigDict(frozen=True)

    start: PermutationTuple
    moves: tuple[InsertMove, ...] = ()
    end: PermutationTuple

    @property
    def length(self) -> int:
        return len(self.moves)


class PathIssue(StrEnum):
    """Why a move path failed verification."""

    START_MISMATCH = "start_mismatch"
    BAD_MOVE = "bad_move"
    END_MISMATCH = "end_mismatch"
    TARGET_MISMATCH = "target_mismatch"


class PathVerdict(BaseModel):
    """Outcome of path verification; truthy iff the path is valid."""

    model_config = ConfigDict(frozen=True)

    valid: bool
    reason: PathIssue | None = None
    step: int | None = Field(None, description="1-based move index of a bad move")

    def __bool__(self) -> bool:
        return self.valid


# =============================================================================
# RECTANGLE PLACEMENT
# =============================================================================


class RectSpec(BaseModel):
    """Widths and heights of blocks 1..n."""

    model_config = ConfigDict(frozen=True)

    w: tuple[int, ...]
    h: tuple[int, ...]

    @model_validator(mode="after")
    def _check_sizes(self) -> "RectSpec":
        if len(self.w) != len(self.h) or not self.w:
            raise ShapeMismatchError(
                f"Got {len(self.w)} widths and {len(self.h)} heights",
                context={"widths": len(self.w), "heights": len(self.h)},
            )
        for b, (wb, hb) in enumerate(zip(self.w, self.h, strict=True), start=1):
            if wb <= 0 or hb <= 0:
                raise OutOfRangeError(
                    f"Block {b} has non-positive size {wb}x{hb}",
                    context={"block": b, "w": wb, "h": hb},
                )
        return self

    @classmethod
    def unit(cls, n: int) -> "RectSpec":
        return cls(w=(1,) * n, h=(1,) * n)

    @property
    def n(self) -> int:
        return len(self.w)


class Placement(BaseModel):
    """Lower-left corners of blocks 1..n and the bounding box."""

    model_config = ConfigDict(frozen=True)

    x: tuple[int, ...]
    y: tuple[int, ...]
    width: int
    height: int


# =============================================================================
# BENCH REPORTS
# =============================================================================


class Criterion(BaseModel):
    """One acceptance check with its measured values."""

    name: str
    passed: bool
    measured: dict[str, Any] = Field(default_factory=dict)


class BenchReport(BaseModel):
    """Outcome of one bench suite; ``passed`` iff every criterion passed."""

    suite: str
    seed: int
    passed: bool
    criteria: list[Criterion]
    elapsed_s: float = Field(..., ge=0)


# =============================================================================
# RUN CONFIGURATION
# =============================================================================


class RunConfig(BaseModel):
    """One CLI invocation."""

    command: Literal[
        "solve", "approx", "decide", "distance", "reduce", "extract", "pack", "gen",
        "bench",
    ]
    method: str | None = Field(
        None, description="Solver (exact|brute|k1), reduction kind or extract kind"
    )
    input_path: Path | None = None
    output_path: Path | None = None
    seed: int = Field(default_factory=lambda: get_config().seed, ge=0, lt=2**64)
    budget: int | None = Field(None, ge=0, description="The l of the kUD decision")
    c: int | None = Field(None, ge=1, description="Power level")
    members: tuple[int, ...] | None = Field(None, description="--set argument")
    n: int | None = Field(None, ge=1)
    k: int | None = Field(None, ge=1)
    emit_path: bool = False
    svg_dir: Path | None = None
    rects_path: Path | None = None
    symbols_path: Path | None = None
    suite: str | None = None
    workers: int = Field(default_factory=lambda: get_config().workers, ge=1)
