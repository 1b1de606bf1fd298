"""ulamk command line.

Every command builds a RunConfig and hands it to ``run``, which prints one line
of JSON on stdout and returns the exit code: 0 on success, 2 for invalid input,
3 for an infeasible set or path argument, 4 when a size guard refuses the
instance. Logging goes to stderr.
"""

import logging
import sys
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
from pathlib import Path
from typing import Annotated, Any, TypeVar

import typer
from pydantic import ValidationError

from .bench import SUITES, bench
from .config import get_config
from .consts import PACKAGE_NAME, PACKAGE_VERSION
from .exceptions import FormatError, InvalidInputError, UlamKError, WrongDimensionError
from .formats import (
    approx_to_dict,
    decision_to_dict,
    distance_to_dict,
    dumps,
    instance_to_dict,
    load_instance,
    parse_dimacs,
    parse_edge_list,
    parse_rects,
    path_to_dict,
    solve_to_dict,
    symbols_to_dict,
)
from .generators import gen_random
from .models import Response, RunConfig
from .path import reconstruct_path, replay
from .reductions import (
    extract_lfs,
    graph_to_nlfs,
    power_construct,
    sat_to_2lfs,
    u_extract,
    u_power_construct,
)
from .seqpair import render_frames, sp_place
from .solvers import SOLVERS, approx_u, decide_ud_fpt, ulam_distance
from .utils import parse_members, suggest_similar_strings

logger = logging.getLogger("ulamk.cli")

T = TypeVar("T")

app = typer.Typer(
    name=PACKAGE_NAME,
    help="k-dimensional Ulam metric toolkit: solvers, reductions and move paths.",
    no_args_is_help=True,
    add_completion=False,
)


class SolveMethod(StrEnum):
    exact = "exact"
    brute = "brute"
    k1 = "k1"


class ReduceKind(StrEnum):
    sat = "sat"
    graph = "graph"
    power = "power"
    upower = "upower"


class ExtractKind(StrEnum):
    lfs = "lfs"
    u = "u"


class LogLevel(StrEnum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


# =============================================================================
# DISPATCH
# =============================================================================


def _require(value: T | None, flag: str, command: str) -> T:
    if value is None:
        raise InvalidInputError(
            f"'{command}' needs {flag}", suggestions=[f"Pass {flag}"]
        )
    return value


def _input(config: RunConfig) -> Path:
    return _require(config.input_path, "an input file", config.command)


def _solve(config: RunConfig) -> dict[str, Any]:
    method = config.method or "exact"
    if method not in SOLVERS:
        raise FormatError(
            f"Unknown solver '{method}'",
            suggestions=suggest_similar_strings(method, list(SOLVERS)),
            context={"method": method},
        )
    instance = load_instance(_input(config))
    return solve_to_dict(SOLVERS[method](instance), instance.n)


def _approx(config: RunConfig) -> dict[str, Any]:
    return approx_to_dict(approx_u(load_instance(_input(config))))


def _decide(config: RunConfig) -> dict[str, Any]:
    budget = _require(config.budget, "--l", "decide")
    return decision_to_dict(decide_ud_fpt(load_instance(_input(config)), budget))


def _distance(config: RunConfig) -> dict[str, Any]:
    instance = load_instance(_input(config))
    result = ulam_distance(instance)
    data = distance_to_dict(result)
    if config.emit_path:
        data.update(path_to_dict(reconstruct_path(instance, result.fixed)))
    return data


def _reduce(config: RunConfig) -> dict[str, Any]:
    source = _input(config)
    kind = config.method or "sat"
    if kind == "sat":
        instance, table = sat_to_2lfs(parse_dimacs(source.read_text()))
        if config.symbols_path is not None:
            config.symbols_path.write_text(dumps(symbols_to_dict(table)) + "\n")
            logger.info(f"Wrote symbol table to {config.symbols_path}")
    elif kind == "graph":
        instance = graph_to_nlfs(parse_edge_list(source.read_text()))
    elif kind == "power":
        instance = power_construct(load_instance(source), config.c or 2).lifted
    elif kind == "upower":
        instance = u_power_construct(load_instance(source), config.c or 2)
    else:
        raise FormatError(
            f"Unknown reduction '{kind}'",
            suggestions=suggest_similar_strings(kind, [k.value for k in ReduceKind]),
            context={"kind": kind},
        )
    return instance_to_dict(instance)


def _extract(config: RunConfig) -> dict[str, Any]:
    base = load_instance(_input(config))
    members = _require(config.members, "--set", "extract")
    c = config.c or 2
    if config.method == "u":
        removed = u_extract(members, base.n, c, base=base)
        return {"size": removed.size, "removed": removed.sorted()}
    found = extract_lfs(power_construct(base, c), c, members)
    return {"size": found.size, "witness": found.sorted()}


def _pack(config: RunConfig) -> dict[str, Any]:
    instance = load_instance(_input(config))
    if instance.k != 2:
        raise WrongDimensionError(
            f"Packing needs sequence pairs (k=2), got k={instance.k}",
            context={"k": instance.k},
        )
    rects = parse_rects(_require(config.rects_path, "--rects", "pack").read_text())
    path = reconstruct_path(instance, ulam_distance(instance).fixed)
    frames = [
        sp_place(state.dims, rects).model_dump(include={"x", "y", "width", "height"})
        for state in replay(path)
    ]
    data: dict[str, Any] = {"frames": frames, **path_to_dict(path)}
    if config.svg_dir is not None:
        data["svg"] = render_frames(instance, path, rects, config.svg_dir)
    return data


def _gen(config: RunConfig) -> dict[str, Any]:
    n = _require(config.n, "--n", "gen")
    k = _require(config.k, "--k", "gen")
    return instance_to_dict(gen_random(n, k, config.seed))


HANDLERS = {
    "solve": _solve,
    "approx": _approx,
    "decide": _decide,
    "distance": _distance,
    "reduce": _reduce,
    "extract": _extract,
    "pack": _pack,
    "gen": _gen,
}


def _emit(data: dict[str, Any], output_path: Path | None) -> None:
    line = dumps(data)
    if output_path is None:
        typer.echo(line)
    else:
        output_path.write_text(line + "\n")
        logger.info(f"Wrote {output_path}")


def _report_error(error: Exception) -> int:
    response = Response.from_error(error)
    typer.echo(response.model_dump_json(exclude_none=True))
    if isinstance(error, UlamKError):
        return error.exit_code
    return 2 if isinstance(error, OSError) else 1


def run(config: RunConfig) -> int:
    """Execute one command; prints single-line JSON and returns the exit code."""
    logger.debug(
        f"Running {config.command} with {config.model_dump(exclude_none=True)}"
    )
    try:
        if config.command == "bench":
            suite = _require(config.suite, "a suite name", "bench")
            report = bench(suite, config.seed, config.workers)
            _emit(report.model_dump(), config.output_path)
            return 0 if report.passed else 1
        _emit(HANDLERS[config.command](config), config.output_path)
        return 0
    except Exception as e:
        logger.debug(f"{config.command} failed", exc_info=True)
        return _report_error(e)


def _invoke(**fields: Any) -> None:
    try:
        config = RunConfig(**{k: v for k, v in fields.items() if v is not None})
    except ValidationError as e:
        code = _report_error(
            FormatError(
                "Invalid command-line arguments",
                errors=[
                    f"{'.'.join(map(str, err['loc']))}: {err['msg']}"
                    for err in e.errors()
                ],
            )
        )
    except UlamKError as e:
        code = _report_error(e)
    else:
        code = run(config)
    raise typer.Exit(code)


# =============================================================================
# COMMANDS
# =============================================================================

InstanceFile = Annotated[Path, typer.Argument(help="Instance JSON file")]
OutputOption = Annotated[
    Path | None,
    typer.Option("--output", "-o", help="Write JSON here instead of stdout"),
]


@app.callback()
def main_callback(
    log_level: Annotated[
        LogLevel | None,
        typer.Option("--log-level", help="Logging level (default: ULAMK_LOG_LEVEL)"),
    ] = None,
) -> None:
    level = log_level.value if log_level is not None else get_config().log_level
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )


@app.command()
def solve(
    method: Annotated[SolveMethod, typer.Argument(help="exact | brute | k1")],
    input_path: InstanceFile,
    output_path: OutputOption = None,
) -> None:
    """Solve kLFS; prints size, witness, distance, optimality and node count."""
    _invoke(
        command="solve",
        method=method.value,
        input_path=input_path,
        output_path=output_path,
    )


@app.command()
def approx(input_path: InstanceFile, output_path: OutputOption = None) -> None:
    """2-approximate kU by a maximal matching of the conflict graph."""
    _invoke(command="approx", input_path=input_path, output_path=output_path)


@app.command()
def decide(
    input_path: InstanceFile,
    budget: Annotated[int, typer.Option("--l", help="Decide whether opt_U <= l")],
    output_path: OutputOption = None,
) -> None:
    """Decide kU with budget l by the bounded search tree."""
    _invoke(
        command="decide", input_path=input_path, budget=budget, output_path=output_path
    )


@app.command()
def distance(
    input_path: InstanceFile,
    emit_path: Annotated[
        bool, typer.Option("--path", help="Append a shortest move path")
    ] = False,
    output_path: OutputOption = None,
) -> None:
    """The k-dimensional Ulam distance with removed and fixed sets."""
    _invoke(
        command="distance",
        input_path=input_path,
        emit_path=emit_path,
        output_path=output_path,
    )


@app.command()
def reduce(
    kind: Annotated[ReduceKind, typer.Argument(help="sat | graph | power | upower")],
    input_path: Annotated[
        Path, typer.Argument(help="DIMACS CNF, edge list or base instance JSON")
    ],
    c: Annotated[
        int | None, typer.Option("--c", help="Power level (default 2)")
    ] = None,
    symbols_path: Annotated[
        Path | None, typer.Option("--symbols", help="Symbol table sidecar (sat only)")
    ] = None,
    output_path: OutputOption = None,
) -> None:
    """Build a hardness instance: 3SAT->2LFS, graph->nLFS or a power construction."""
    _invoke(
        command="reduce",
        method=kind.value,
        input_path=input_path,
        c=c,
        symbols_path=symbols_path,
        output_path=output_path,
    )


@app.command()
def extract(
    input_path: Annotated[Path, typer.Argument(help="Base instance JSON (k == n)")],
    members: Annotated[
        str, typer.Option("--set", help="Comma-separated set of the lifted instance")
    ],
    c: Annotated[
        int | None, typer.Option("--c", help="Power level (default 2)")
    ] = None,
    kind: Annotated[
        ExtractKind, typer.Option("--kind", help="lfs | u")
    ] = ExtractKind.lfs,
    output_path: OutputOption = None,
) -> None:
    """Map a set of a power instance back to the base instance."""
    try:
        parsed = parse_members(members)
    except FormatError as e:
        raise typer.Exit(_report_error(e)) from e
    _invoke(
        command="extract",
        method=kind.value,
        input_path=input_path,
        members=parsed,
        c=c,
        output_path=output_path,
    )


@app.command()
def pack(
    input_path: InstanceFile,
    rects_path: Annotated[Path, typer.Option("--rects", help="Rects JSON file")],
    svg_dir: Annotated[
        Path | None, typer.Option("--svg", help="Write SVG frames into this directory")
    ] = None,
    output_path: OutputOption = None,
) -> None:
    """Placements for every tuple along a shortest move path (k=2)."""
    _invoke(
        command="pack",
        input_path=input_path,
        rects_path=rects_path,
        svg_dir=svg_dir,
        output_path=output_path,
    )


@app.command()
def gen(
    n: Annotated[int, typer.Option("--n", help="Number of elements")],
    k: Annotated[int, typer.Option("--k", help="Number of dimensions")],
    seed: Annotated[
        int | None, typer.Option("--seed", help="Seed (default: ULAMK_SEED or 0)")
    ] = None,
    output_path: OutputOption = None,
) -> None:
    """Generate a random instance of 2k uniform permutations."""
    _invoke(command="gen", n=n, k=k, seed=seed, output_path=output_path)


@app.command("bench")
def bench_command(
    suite: Annotated[str, typer.Argument(help=f"One of: {', '.join(SUITES)}")],
    seed: Annotated[
        int | None, typer.Option("--seed", help="Seed (default: ULAMK_SEED or 0)")
    ] = None,
    workers: Annotated[
        int | None, typer.Option("--workers", help="Worker processes (default 1)")
    ] = None,
    output_path: OutputOption = None,
) -> None:
    """Run an acceptance suite; exits non-zero if any criterion fails."""
    _invoke(
        command="bench",
        suite=suite,
        seed=seed,
        workers=workers,
        output_path=output_path,
    )


@app.command()
def version() -> None:
    """Print the package version."""
    typer.echo(dumps({"name": PACKAGE_NAME, "version": PACKAGE_VERSION}))


def main() -> None:
    """Entry point of the ``ulamk`` script."""
    app()


if __name__ == "__main__":
    main()
