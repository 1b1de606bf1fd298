"""Seeded random instances, formulas and graphs, plus a truth-table SAT oracle."""

import logging
from itertools import product

import networkx as nx
import numpy as np

from .exceptions import OutOfRangeError
from .models import CnfFormula, Instance

logger = logging.getLogger("ulamk.generators")


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise OutOfRangeError(
                f"{name} must be >= 1, got {value}", context={name: value}
            )


def gen_random(n: int, k: int, seed: int) -> Instance:
    """An instance of 2k independent uniform permutations of [n].

    Deterministic per (n, k, seed). Source rows are drawn before target rows.

    Raises:
        OutOfRangeError: If n < 1 or k < 1.
    """
    _check_positive(n=n, k=k)
    rng = np.random.default_rng(seed)
    rows = [(rng.permutation(n) + 1).tolist() for _ in range(2 * k)]
    return Instance.from_rows(rows[:k], rows[k:])


def random_formula(var_count: int, clause_count: int, seed: int) -> CnfFormula:
    """A uniform 3CNF formula with three distinct variables per clause when possible."""
    _check_positive(var_count=var_count, clause_count=clause_count)
    rng = np.random.default_rng(seed)
    clauses = []
    for _ in range(clause_count):
        variables = rng.choice(var_count, size=3, replace=var_count < 3) + 1
        signs = rng.choice([-1, 1], size=3)
        clauses.append(tuple(int(v * s) for v, s in zip(variables, signs, strict=True)))
    return CnfFormula(var_count=var_count, clauses=tuple(clauses))


def random_graph(n: int, p: float, seed: int) -> nx.Graph:
    """G(n, p) on vertices 1..n."""
    _check_positive(n=n)
    graph = nx.gnp_random_graph(n, p, seed=seed)
    return nx.relabel_nodes(graph, {v: v + 1 for v in graph.nodes})


def brute_force_sat(phi: CnfFormula) -> dict[int, bool] | None:
    """A satisfying assignment found by truth table, or None.

    Assignments are tried with variable 1 as the most significant bit, False first.
    """
    for values in product((False, True), repeat=phi.var_count):
        if all(
            any(values[abs(lit) - 1] == (lit > 0) for lit in clause)
            for clause in phi.clauses
        ):
            return {var: values[var - 1] for var in range(1, phi.var_count + 1)}
    logger.debug(f"Formula with {phi.var_count} variables is unsatisfiable")
    return None
