"""Acceptance suites run by ``ulamk bench``.

Every suite draws its instances from one seeded generator in the parent
process, so a suite is deterministic per seed. Per-instance checks are pure
functions of their task tuple and may be sharded across worker processes;
results are merged in task order.
"""

import logging
import math
import tempfile
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import TypeVar

import networkx as nx
import numpy as np

from .config import get_config
from .consts import BDJ_COEFFICIENT, BDJ_TOLERANCE
from .core import is_feasible
from .exceptions import NotFeasibleError, UnknownSuiteError
from .formats import load_figure1
from .generators import brute_force_sat, gen_random, random_formula, random_graph
from .models import BenchReport, Criterion, Instance, PermutationTuple, RectSpec
from .path import reconstruct_path, verify_path
from .reductions import (
    clique_witness,
    decode_assignment,
    extract_lfs,
    graph_to_nlfs,
    lift_solution,
    power_construct,
    sat_to_2lfs,
)
from .seqpair import render_frames
from .solvers import (
    approx_u,
    brute_force_opt,
    decide_ud_fpt,
    iter_feasible_sets,
    solve_lfs_exact,
    solve_lfs_k1,
    ulam_distance,
)
from .utils import suggest_similar_strings

logger = logging.getLogger("ulamk.bench")

T = TypeVar("T")
R = TypeVar("R")

ORACLE_INSTANCES = 500
SAT_FORMULAS = 100
GRAPH_SAMPLES = 100
POWER_BASES = 20
PATH_INSTANCES = 200
METRIC_TRIPLES = 50
BDJ_SAMPLES = 300
BDJ_N = 400


def _shard(func: Callable[[T], R], tasks: list[T], workers: int) -> list[R]:
    if workers <= 1 or len(tasks) < 2:
        return [func(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunksize = max(1, len(tasks) // (4 * workers))
        return list(pool.map(func, tasks, chunksize=chunksize))


def _seeds(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**63))


# =============================================================================
# ORACLE, APPROX AND FPT (shared random instances)
# =============================================================================


def _oracle_tasks(seed: int) -> list[tuple[int, int, int]]:
    rng = np.random.default_rng(seed)
    return [
        (int(rng.integers(2, 10)), int(rng.integers(1, 5)), _seeds(rng))
        for _ in range(ORACLE_INSTANCES)
    ]


def _oracle_case(task: tuple[int, int, int]) -> bool:
    instance = gen_random(*task)
    brute = brute_force_opt(instance).size
    if solve_lfs_exact(instance).size != brute:
        return False
    return instance.k != 1 or solve_lfs_k1(instance).size == brute


def _approx_case(task: tuple[int, int, int]) -> tuple[int, int, bool]:
    instance = gen_random(*task)
    opt_u = instance.n - brute_force_opt(instance).size
    cover = approx_u(instance)
    complement_ok = is_feasible(
        instance, frozenset(range(1, instance.n + 1)) - cover.witness.members
    )
    return opt_u, cover.size, complement_ok


def _fpt_case(task: tuple[int, int, int]) -> tuple[int, int]:
    """(wrong answers, node-bound violations) over every l in [0, n]."""
    instance = gen_random(*task)
    opt_u = instance.n - brute_force_opt(instance).size
    wrong = over = 0
    for budget in range(instance.n + 1):
        result = decide_ud_fpt(instance, budget)
        wrong += result.answer != (opt_u <= budget)
        over += result.node_count > 2 ** (budget + 1)
    return wrong, over


def suite_oracle(seed: int, workers: int) -> list[Criterion]:
    tasks = _oracle_tasks(seed)
    agree = _shard(_oracle_case, tasks, workers)
    mismatches = agree.count(False)
    return [
        Criterion(
            name="exact_matches_brute_force",
            passed=mismatches == 0,
            measured={"instances": len(tasks), "mismatches": mismatches},
        )
    ]


def suite_approx(seed: int, workers: int) -> list[Criterion]:
    tasks = _oracle_tasks(seed)
    outcomes = _shard(_approx_case, tasks, workers)
    violations = sum(
        1 for opt_u, size, _ in outcomes if not opt_u <= size <= 2 * opt_u
    )
    infeasible = sum(1 for _, _, ok in outcomes if not ok)
    ratios = [size / opt_u for opt_u, size, _ in outcomes if opt_u]
    return [
        Criterion(
            name="approximation_sandwich",
            passed=violations == 0,
            measured={
                "instances": len(tasks),
                "violations": violations,
                "max_ratio": max(ratios, default=1.0),
            },
        ),
        Criterion(
            name="complement_is_feasible",
            passed=infeasible == 0,
            measured={"infeasible": infeasible},
        ),
    ]


def suite_fpt(seed: int, workers: int) -> list[Criterion]:
    tasks = _oracle_tasks(seed)
    outcomes = _shard(_fpt_case, tasks, workers)
    wrong = sum(w for w, _ in outcomes)
    over = sum(o for _, o in outcomes)
    return [
        Criterion(
            name="decision_matches_optimum",
            passed=wrong == 0,
            measured={"instances": len(tasks), "wrong_answers": wrong},
        ),
        Criterion(
            name="search_tree_bound",
            passed=over == 0,
            measured={"violations": over},
        ),
    ]


# =============================================================================
# REDUCTIONS
# =============================================================================


def _sat_case(task: tuple[int, int, int]) -> tuple[bool, bool, bool]:
    """(iff holds, optimum <= m, every optimal witness decodes well)."""
    phi = random_formula(*task)
    instance, table = sat_to_2lfs(phi)
    opt = brute_force_opt(instance).size
    satisfiable = brute_force_sat(phi) is not None
    decoded_ok = True
    for members in iter_feasible_sets(instance):
        if len(members) == opt:
            _, satisfied = decode_assignment(table, members)
            decoded_ok &= satisfied >= opt
    return satisfiable == (opt == phi.m), opt <= phi.m, decoded_ok


def suite_sat(seed: int, workers: int) -> list[Criterion]:
    rng = np.random.default_rng(seed)
    tasks = [
        (int(rng.integers(3, 6)), int(rng.integers(1, 7)), _seeds(rng))
        for _ in range(SAT_FORMULAS)
    ]
    outcomes = _shard(_sat_case, tasks, workers)
    return [
        Criterion(
            name=name,
            passed=all(o[i] for o in outcomes),
            measured={
                "formulas": len(tasks),
                "failures": sum(not o[i] for o in outcomes),
            },
        )
        for i, name in enumerate(
            ("satisfiable_iff_optimum_is_m", "optimum_at_most_m", "decoded_witnesses")
        )
    ]


def _graph_case(task: tuple[int, int]) -> tuple[bool, bool]:
    n, graph_seed = task
    g = random_graph(n, 0.5, graph_seed)
    instance = graph_to_nlfs(g)
    opt = brute_force_opt(instance).size
    omega = max(len(c) for c in nx.find_cliques(g))
    witnesses_ok = True
    for members in iter_feasible_sets(instance):
        if len(members) == opt:
            try:
                clique_witness(g, members)
            except NotFeasibleError:
                witnesses_ok = False
    return opt == omega, witnesses_ok


def suite_graph(seed: int, workers: int) -> list[Criterion]:
    rng = np.random.default_rng(seed)
    tasks = [(int(rng.integers(1, 9)), _seeds(rng)) for _ in range(GRAPH_SAMPLES)]
    outcomes = _shard(_graph_case, tasks, workers)
    return [
        Criterion(
            name="optimum_is_clique_number",
            passed=all(o[0] for o in outcomes),
            measured={
                "graphs": len(tasks),
                "failures": sum(not o[0] for o in outcomes),
            },
        ),
        Criterion(
            name="witnesses_are_cliques",
            passed=all(o[1] for o in outcomes),
            measured={"failures": sum(not o[1] for o in outcomes)},
        ),
    ]


def _power_case(base_seed: int) -> tuple[bool, bool, bool]:
    base = gen_random(3, 3, base_seed)
    pinst = power_construct(base, 2)
    lifted = pinst.lifted
    base_opt = brute_force_opt(base)
    squared = brute_force_opt(lifted).size == base_opt.size**2
    product = lift_solution(base_opt.witness, base_opt.witness, 2, pinst.nu)
    lift_ok = is_feasible(lifted, product) and product.size == base_opt.size**2
    extract_ok = True
    for members in iter_feasible_sets(lifted):
        found = extract_lfs(pinst, 2, members)
        extract_ok &= is_feasible(base, found) and found.size**2 >= len(members)
    return squared, lift_ok, extract_ok


def suite_power(seed: int, workers: int) -> list[Criterion]:
    rng = np.random.default_rng(seed)
    tasks = [_seeds(rng) for _ in range(POWER_BASES)]
    outcomes = _shard(_power_case, tasks, workers)
    names = ("optimum_squares", "lifted_witness_feasible", "extraction_bound")
    return [
        Criterion(
            name=name,
            passed=all(o[i] for o in outcomes),
            measured={"bases": len(tasks), "failures": sum(not o[i] for o in outcomes)},
        )
        for i, name in enumerate(names)
    ]


# =============================================================================
# PATHS AND METRIC
# =============================================================================


def _path_case(task: tuple[int, int, int]) -> bool:
    instance = gen_random(*task)
    witness = solve_lfs_exact(instance).witness
    path = reconstruct_path(instance, witness)
    distance = ulam_distance(instance).distance
    return bool(verify_path(instance, path)) and (
        path.length == distance == instance.n - witness.size
    )


def suite_path(seed: int, workers: int) -> list[Criterion]:
    rng = np.random.default_rng(seed)
    tasks = [
        (int(rng.integers(1, 9)), int(rng.integers(1, 4)), _seeds(rng))
        for _ in range(PATH_INSTANCES)
    ]
    outcomes = _shard(_path_case, tasks, workers)
    failures = outcomes.count(False)
    return [
        Criterion(
            name="path_realizes_distance",
            passed=failures == 0,
            measured={"instances": len(tasks), "failures": failures},
        )
    ]


def _brute_distance(a: PermutationTuple, b: PermutationTuple) -> int:
    pair = Instance(source=a, target=b)
    return pair.n - brute_force_opt(pair).size


def _metric_case(task: tuple[int, int, int, int]) -> tuple[bool, bool, bool]:
    n, k, seed_ab, seed_c = task
    ab = gen_random(n, k, seed_ab)
    a, b = ab.source, ab.target
    c = gen_random(n, k, seed_c).source
    d_ab, d_ba = _brute_distance(a, b), _brute_distance(b, a)
    d_bc, d_ac = _brute_distance(b, c), _brute_distance(a, c)
    identity = _brute_distance(a, a) == 0 and (d_ab == 0) == (a == b)
    return identity, d_ab == d_ba, d_ac <= d_ab + d_bc


def suite_metric(seed: int, workers: int) -> list[Criterion]:
    rng = np.random.default_rng(seed)
    tasks = [
        (int(rng.integers(1, 7)), int(rng.integers(1, 4)), _seeds(rng), _seeds(rng))
        for _ in range(METRIC_TRIPLES)
    ]
    outcomes = _shard(_metric_case, tasks, workers)
    return [
        Criterion(
            name=name,
            passed=all(o[i] for o in outcomes),
            measured={
                "triples": len(tasks),
                "failures": sum(not o[i] for o in outcomes),
            },
        )
        for i, name in enumerate(("identity", "symmetry", "triangle_inequality"))
    ]


def _bdj_case(sample_seed: int) -> int:
    return solve_lfs_k1(gen_random(BDJ_N, 1, sample_seed)).size


def bdj_target(n: int) -> float:
    """2*sqrt(n) - 1.77108 * n^(1/6), the leading terms of the mean LIS length."""
    return 2 * math.sqrt(n) - BDJ_COEFFICIENT * n ** (1 / 6)


def suite_bdj(seed: int, workers: int) -> list[Criterion]:
    rng = np.random.default_rng(seed)
    tasks = [_seeds(rng) for _ in range(BDJ_SAMPLES)]
    sizes = _shard(_bdj_case, tasks, workers)
    mean = float(np.mean(sizes))
    target = bdj_target(BDJ_N)
    return [
        Criterion(
            name="mean_lis_length",
            passed=abs(mean - target) <= BDJ_TOLERANCE * target,
            measured={
                "n": BDJ_N,
                "samples": len(sizes),
                "mean": round(mean, 4),
                "target": round(target, 4),
                "tolerance": BDJ_TOLERANCE,
            },
        )
    ]


# =============================================================================
# FIGURE 1
# =============================================================================


def suite_figure1(seed: int, workers: int) -> list[Criterion]:
    instance = load_figure1()
    result = ulam_distance(instance)
    path = reconstruct_path(instance, result.fixed)
    rects = RectSpec.unit(instance.n)
    with (
        tempfile.TemporaryDirectory() as first,
        tempfile.TemporaryDirectory() as second,
    ):
        names = render_frames(instance, path, rects, first)
        render_frames(instance, path, rects, second)
        identical = all(
            (Path(first) / name).read_bytes() == (Path(second) / name).read_bytes()
            for name in names
        )
    moved = [move.element for move in path.moves]
    return [
        Criterion(
            name="distance_and_removed_set",
            passed=result.distance == 2 and result.removed.sorted() == [4, 5],
            measured={"distance": result.distance, "removed": result.removed.sorted()},
        ),
        Criterion(
            name="two_move_path",
            passed=bool(verify_path(instance, path)) and moved == [5, 4],
            measured={"moved": moved},
        ),
        Criterion(
            name="deterministic_frames",
            passed=len(names) == 3 and identical,
            measured={"frames": len(names), "identical": identical},
        ),
    ]


SUITES: dict[str, Callable[[int, int], list[Criterion]]] = {
    "oracle": suite_oracle,
    "sat": suite_sat,
    "graph": suite_graph,
    "power": suite_power,
    "path": suite_path,
    "metric": suite_metric,
    "bdj": suite_bdj,
    "approx": suite_approx,
    "fpt": suite_fpt,
    "figure1": suite_figure1,
}


def bench(suite: str, seed: int, workers: int | None = None) -> BenchReport:
    """Run one acceptance suite.

    Raises:
        UnknownSuiteError: If ``suite`` is not a known suite name.
    """
    if suite not in SUITES:
        suggestions = [f"Known suites: {', '.join(SUITES)}"]
        similar = suggest_similar_strings(suite, list(SUITES))
        if similar:
            suggestions.insert(0, f"Did you mean: {', '.join(similar)}?")
        raise UnknownSuiteError(
            f"Unknown bench suite '{suite}'",
            suggestions=suggestions,
            context={"suite": suite},
        )
    workers = workers if workers is not None else get_config().workers
    started = time.perf_counter()
    criteria = SUITES[suite](seed, workers)
    elapsed = time.perf_counter() - started
    for criterion in criteria:
        if not criterion.passed:
            logger.warning(f"Suite {suite}: criterion {criterion.name} failed")
    logger.info(f"Suite {suite} finished in {elapsed:.2f}s")
    return BenchReport(
        suite=suite,
        seed=seed,
        passed=all(c.passed for c in criteria),
        criteria=criteria,
        elapsed_s=round(elapsed, 3),
    )
