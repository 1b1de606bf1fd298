"""Canonical file formats: instance JSON, DIMACS CNF, edge lists, rects and result dicts."""

import json
import logging
from importlib.resources import files
from pathlib import Path
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from .consts import FIGURE1_RESOURCE, PACKAGE_NAME
from .core import validate_instance
from .exceptions import FormatError, OutOfRangeError
from .models import (
    CnfFormula,
    DecisionResult,
    Instance,
    MovePath,
    RectSpec,
    SolveResult,
    SymbolTable,
    UlamResult,
)

logger = logging.getLogger("ulamk.formats")


# =============================================================================
# INSTANCE JSON
# =============================================================================


class InstancePayload(BaseModel):
    """Raw instance JSON before permutation checks."""

    model_config = ConfigDict(extra="forbid")

    n: int
    k: int
    s: list[list[int]]
    t: list[list[int]]

    @model_validator(mode="after")
    def _check_header(self) -> "InstancePayload":
        if len(self.s) != self.k or len(self.t) != self.k:
            raise FormatError(
                f"Header says k={self.k} but s has {len(self.s)} rows "
                f"and t has {len(self.t)}",
                context={"k": self.k, "s_rows": len(self.s), "t_rows": len(self.t)},
            )
        if self.s and len(self.s[0]) != self.n:
            raise FormatError(
                f"Header says n={self.n} but rows have length {len(self.s[0])}",
                context={"n": self.n, "length": len(self.s[0])},
            )
        return self


def parse_instance(text: str) -> Instance:
    """Parse canonical instance JSON.

    Raises:
        FormatError: If the text is not instance JSON or the header disagrees
            with the rows.
        InvalidInputError: If a row is not a permutation of [n].
    """
    try:
        payload = InstancePayload.model_validate_json(text)
    except ValidationError as e:
        raise FormatError(
            "Not a valid instance JSON document",
            errors=[err["msg"] for err in e.errors()],
            suggestions=['Expected {"n":..,"k":..,"s":[[..]],"t":[[..]]}'],
        ) from e
    return validate_instance(payload.s, payload.t)


def load_instance(path: str | Path) -> Instance:
    """Read and parse an instance JSON file."""
    instance = parse_instance(Path(path).read_text())
    logger.info(f"Loaded instance n={instance.n} k={instance.k} from {path}")
    return instance


def instance_to_dict(instance: Instance) -> dict[str, Any]:
    return {
        "n": instance.n,
        "k": instance.k,
        "s": [list(row) for row in instance.source.rows()],
        "t": [list(row) for row in instance.target.rows()],
    }


def dump_instance(instance: Instance) -> str:
    """Single-line canonical JSON."""
    return dumps(instance_to_dict(instance))


def load_figure1() -> Instance:
    """The shipped two-dimensional example instance on six blocks."""
    resource = files(PACKAGE_NAME) / "data" / FIGURE1_RESOURCE
    return parse_instance(resource.read_text())


def dumps(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"))


# =============================================================================
# DIMACS CNF
# =============================================================================


def parse_dimacs(text: str) -> CnfFormula:
    """Parse the 3-CNF subset of DIMACS: ``p cnf V C`` header, 0-terminated clauses.

    Comment lines starting with ``c`` and blank lines are ignored. A clause
    may span several lines.

    Raises:
        FormatError: On a missing header, stray tokens or a clause count that
            disagrees with the header.
        MalformedClauseError: If a clause does not have exactly three valid literals.
    """
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "cnf" or header is not None:
                raise FormatError(
                    f"Bad DIMACS header on line {lineno}: {line.strip()!r}",
                    context={"line": lineno},
                )
            header = (_int(tokens[2], lineno), _int(tokens[3], lineno))
            continue
        if header is None:
            raise FormatError(
                "Clause before the 'p cnf' header",
                context={"line": lineno},
            )
        for token in tokens:
            literal = _int(token, lineno)
            if literal == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(literal)

    if header is None:
        raise FormatError("Missing 'p cnf <vars> <clauses>' header")
    if pending:
        raise FormatError(
            "Last clause is not terminated by 0", context={"literals": pending}
        )
    var_count, clause_count = header
    if clause_count != len(clauses):
        raise FormatError(
            f"Header announces {clause_count} clauses, found {len(clauses)}",
            context={"announced": clause_count, "found": len(clauses)},
        )
    return CnfFormula(var_count=var_count, clauses=tuple(clauses))


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise FormatError(
            f"Expected an integer on line {lineno}, got {token!r}",
            context={"line": lineno, "token": token},
        ) from e


def format_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.var_count} {phi.m}"]
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in phi.clauses)
    return "\n".join(lines) + "\n"


# =============================================================================
# EDGE LISTS
# =============================================================================


def parse_edge_list(text: str) -> nx.Graph:
    """Parse an ``n <count>`` header followed by 1-based ``u v`` lines.

    ``#`` starts a comment. Self-loops are kept so the reduction can reject them.

    Raises:
        FormatError: On a missing header or a malformed line.
        OutOfRangeError: If an endpoint lies outside [1, n].
    """
    graph: nx.Graph | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == "n":
            if len(tokens) != 2 or graph is not None:
                raise FormatError(
                    f"Bad header on line {lineno}", context={"line": lineno}
                )
            graph = nx.Graph()
            graph.add_nodes_from(range(1, _int(tokens[1], lineno) + 1))
            continue
        if graph is None:
            raise FormatError(
                "Edge before the 'n <count>' header", context={"line": lineno}
            )
        if len(tokens) != 2:
            raise FormatError(
                f"Expected 'u v' on line {lineno}, got {raw.strip()!r}",
                context={"line": lineno},
            )
        u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
        n = graph.number_of_nodes()
        for end in (u, v):
            if not 1 <= end <= n:
                raise OutOfRangeError(
                    f"Vertex {end} on line {lineno} lies outside [1, {n}]",
                    context={"line": lineno, "vertex": end, "n": n},
                )
        graph.add_edge(u, v)

    if graph is None:
        raise FormatError("Missing 'n <count>' header")
    return graph


def format_edge_list(graph: nx.Graph) -> str:
    lines = [f"n {graph.number_of_nodes()}"]
    lines.extend(f"{min(u, v)} {max(u, v)}" for u, v in sorted(graph.edges()))
    return "\n".join(lines) + "\n"


# =============================================================================
# RECTS, SYMBOLS, RESULTS
# =============================================================================


def parse_rects(text: str) -> RectSpec:
    """Parse ``{"w":[..],"h":[..]}``.

    Raises:
        FormatError: If the document is not rects JSON.
        ShapeMismatchError: If w and h differ in length.
        OutOfRangeError: If a size is not positive.
    """
    try:
        return RectSpec.model_validate_json(text)
    except ValidationError as e:
        raise FormatError(
            "Not a valid rects JSON document",
            errors=[err["msg"] for err in e.errors()],
            suggestions=['Expected {"w":[..],"h":[..]} with positive integers'],
        ) from e


def symbols_to_dict(table: SymbolTable) -> dict[str, Any]:
    return {
        "symbols": [
            symbol.model_dump(include={"id", "var", "neg", "occ", "clause", "slot"})
            for symbol in table.symbols
        ]
    }


def solve_to_dict(result: SolveResult, n: int) -> dict[str, Any]:
    """Solver output; ``distance`` is n minus the witness size."""
    return {
        "size": result.size,
        "witness": result.witness.sorted(),
        "distance": n - result.size,
        "optimal": result.optimal,
        "nodes": result.node_count,
    }


def approx_to_dict(result: SolveResult) -> dict[str, Any]:
    return {
        "size": result.size,
        "removed": result.witness.sorted(),
        "optimal": result.optimal,
    }


def distance_to_dict(result: UlamResult) -> dict[str, Any]:
    return {
        "distance": result.distance,
        "removed": result.removed.sorted(),
        "fixed": result.fixed.sorted(),
    }


def decision_to_dict(result: DecisionResult) -> dict[str, Any]:
    data: dict[str, Any] = {"answer": result.answer, "nodes": result.node_count}
    if result.witness is not None:
        data["witness"] = result.witness.sorted()
    return data


def path_to_dict(path: MovePath) -> dict[str, Any]:
    return {
        "moves": [
            {"v": move.element, "pos": list(move.targets)} for move in path.moves
        ]
    }
