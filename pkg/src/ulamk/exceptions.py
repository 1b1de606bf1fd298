"""ulamk custom exceptions.

Exception Design Principles:
1. Use these custom exceptions only when additional useful context can be provided
2. Name the offending side/dimension/index in ``context`` (1-based, like all labels)
3. Split on domain of actionable information, which also fixes the CLI exit code:
   - Invalid input, fixable by editing the input files (InvalidInputError, exit 2)
   - A set or path argument that does not satisfy its precondition (exit 3)
   - Instance too large for the requested method (SizeGuardError, exit 4)
   - Broken internal invariants, unrecoverable without code changes (exit 1)
"""


class UlamKError(Exception):
    """Base exception for all ulamk errors.

    Provides rich context and actionable suggestions beyond standard exceptions.
    """

    exit_code: int = 1

    def __init__(
        self,
        message: str,  # the error message
        *,
        errors: list[str] | None = None,  # detailed list of errors (if available)
        suggestions: list[str] | None = None,  # remedial actions
        context: dict | None = None,  # additional detailed context
    ):
        """Initialize UlamKError.

        Args:
            message: Primary error message for users
            errors: List of specific error details
            suggestions: List of actionable suggestions for resolution
            context: Additional context information as key-value pairs
        """
        super().__init__(message)
        self.message = message
        self.errors = errors or []
        self.suggestions = suggestions or []
        self.context = context or {}


# =============================================================================
# INVALID INPUT (exit 2)
# =============================================================================


class InvalidInputError(UlamKError):
    """Input that violates a documented precondition - recoverable by the user.

    Raised while validating instances, formulas, graphs, files and arguments.
    """

    exit_code = 2


class DuplicateValueError(InvalidInputError):
    """A permutation repeats a label."""


class OutOfRangeError(InvalidInputError):
    """A label, set member, position or parameter lies outside its range."""


class LengthMismatchError(InvalidInputError):
    """Sequences that must share a length n do not."""


class DimensionMismatchError(InvalidInputError):
    """Source and target tuples (or a declared k) disagree on the dimension count."""


class ShapeMismatchError(InvalidInputError):
    """Two tuples, or a sequence pair and its rectangles, have different shapes."""


class WrongDimensionError(InvalidInputError):
    """An operation restricted to one dimension count was given another."""


class MalformedClauseError(InvalidInputError):
    """A CNF clause is not exactly three valid literals."""


class SelfLoopError(InvalidInputError):
    """A graph given to a reduction contains a self-loop."""


class NotSquareError(InvalidInputError):
    """A power construction base does not have k == n."""


class ShrinkNotAllowedError(InvalidInputError):
    """Dimension padding was asked to reduce k."""


class BadPositionError(InvalidInputError):
    """An insert move names an element or target position that does not exist."""


class UnknownSuiteError(InvalidInputError):
    """A bench suite name is not one of the known suites."""


class FormatError(InvalidInputError):
    """A file could not be parsed in its documented format."""


# =============================================================================
# INFEASIBLE ARGUMENT (exit 3)
# =============================================================================


class NotFeasibleError(UlamKError):
    """A set argument is not feasible for the instance it was given with."""

    exit_code = 3


class InvalidPathError(UlamKError):
    """A move path does not lead from the source tuple to the target tuple."""

    exit_code = 3


# =============================================================================
# SIZE GUARDS (exit 4)
# =============================================================================


class SizeGuardError(UlamKError):
    """The instance exceeds a configured guard of the requested method."""

    exit_code = 4


class TooLargeError(SizeGuardError):
    """Brute force requested above ``brute_force_max_n``."""


class LevelTooLargeError(SizeGuardError):
    """A power construction would exceed ``power_max_elements``."""


# =============================================================================
# INTERNAL (exit 1)
# =============================================================================


class InconsistentAssignmentError(UlamKError):
    """Decoding produced a variable forced both ways.

    Unreachable for genuinely feasible inputs; indicates a bug or a set that was
    never checked for feasibility.
    """


class OutputError(UlamKError):
    """Writing an output artifact failed."""
