"""Protocol definitions for pluggable solvers."""

from typing import TYPE_CHECKING, Protocol

if TYPE_CHECKING:
    from .models import Instance, SolveResult


class LfsSolver(Protocol):
    """Protocol for kLFS solvers."""

    def __call__(self, instance: "Instance") -> "SolveResult":
        """Solve kLFS on an instance.

        Returns:
            A SolveResult whose witness is feasible for ``instance``.

        Raises:
            SizeGuardError: If the solver refuses the instance size.
            WrongDimensionError: If the solver is restricted to another k.
        """
        ...
