"""Name suggestions and set-argument parsing."""

from difflib import SequenceMatcher

from .exceptions import FormatError


def suggest_similar_strings(
    target: str,
    candidates: set[str] | list[str],
    threshold: float = 0.6,
    max_results: int = 3,
) -> list[str]:
    """Suggest close matches for a mistyped suite or method name.

    Args:
        target: The name the user typed.
        candidates: Known names.
        threshold: Minimum similarity ratio (0.0 to 1.0).
        max_results: Maximum number of suggestions to return.

    Returns:
        Matching names, most similar first, ties in alphabetical order.
    """
    scored = []
    for candidate in candidates:
        similarity = SequenceMatcher(None, target.lower(), candidate.lower()).ratio()
        if similarity >= threshold:
            scored.append((-similarity, candidate))
    scored.sort()
    return [candidate for _, candidate in scored[:max_results]]


def parse_members(text: str) -> tuple[int, ...]:
    """Parse a ``--set`` argument such as ``"1,2,3,6"`` (spaces allowed, empty = {}).

    Raises:
        FormatError: If a token is not an integer.
    """
    tokens = [tok for tok in text.replace(" ", ",").split(",") if tok]
    try:
        return tuple(int(tok) for tok in tokens)
    except ValueError as e:
        raise FormatError(
            f"Cannot parse set argument {text!r}",
            suggestions=["Pass comma-separated integers, e.g. --set 1,2,3"],
            context={"set": text},
        ) from e
