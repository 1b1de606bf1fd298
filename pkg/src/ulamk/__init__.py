"""ulamk

Solvers, hardness-reduction generators and move-path tools for the
k-dimensional Ulam metric between tuples of permutations.
"""

from .config import Config, get_config
from .consts import PACKAGE_VERSION
from .core import (
    AgreementGraph,
    agreement_graph,
    conflict_edges,
    dual_complement,
    is_feasible,
    restrict,
    validate_instance,
)
from .exceptions import (
    InvalidInputError,
    InvalidPathError,
    NotFeasibleError,
    SizeGuardError,
    UlamKError,
)
from .models import (
    FeasibleSet,
    Instance,
    InsertMove,
    MovePath,
    Permutation,
    PermutationTuple,
    RectSpec,
)
from .path import apply_insert_move, is_neighbor, reconstruct_path, verify_path
from .seqpair import render_frames, sp_place
from .solvers import (
    approx_u,
    brute_force_opt,
    decide_ud_fpt,
    max_clique,
    solve_lfs_exact,
    solve_lfs_k1,
    ulam_distance,
)

__version__ = PACKAGE_VERSION

__all__ = [
    "__version__",
    "get_config",
    "Config",
    "AgreementGraph",
    "FeasibleSet",
    "Instance",
    "InsertMove",
    "MovePath",
    "Permutation",
    "PermutationTuple",
    "RectSpec",
    "agreement_graph",
    "apply_insert_move",
    "approx_u",
    "brute_force_opt",
    "conflict_edges",
    "decide_ud_fpt",
    "dual_complement",
    "is_feasible",
    "is_neighbor",
    "max_clique",
    "reconstruct_path",
    "render_frames",
    "restrict",
    "solve_lfs_exact",
    "solve_lfs_k1",
    "sp_place",
    "ulam_distance",
    "validate_instance",
    "verify_path",
    "UlamKError",
    "InvalidInputError",
    "InvalidPathError",
    "NotFeasibleError",
    "SizeGuardError",
]
