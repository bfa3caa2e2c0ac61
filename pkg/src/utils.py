"""Small parsing and arithmetic helpers shared across the lab."""

import re

_RANGE_PATTERN = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(text: str) -> tuple[int, int]:
    """Parse an inclusive integer range written as "a..b" or a single "a".

    Args:
        text: Range text (e.g., "5..9", "7").

    Returns:
        Tuple (start, stop), both inclusive.

    Raises:
        ValueError: If the text is not a range or start exceeds stop.

    Examples:
        >>> parse_range("5..9")
        (5, 9)
        >>> parse_range("7")
        (7, 7)
    """
    match = _RANGE_PATTERN.match(text or "")
    if match is None:
        raise ValueError(f"Invalid range '{text}', expected 'a..b' or 'a'")
    start = int(match.group(1))
    stop = int(match.group(2)) if match.group(2) is not None else start
    if start > stop:
        raise ValueError(f"Invalid range '{text}': start {start} exceeds stop {stop}")
    return start, stop


def ceil_div(numerator: int, denominator: int) -> int:
    """Integer ceiling of numerator / denominator for positive denominators.

    >>> ceil_div(7, 3)
    3
    """
    return -(-numerator // denominator)


def ceil_log2(value: int) -> int:
    """Smallest k with 2**k >= value, for value >= 1.

    >>> ceil_log2(1), ceil_log2(3), ceil_log2(4)
    (0, 2, 2)
    """
    if value < 1:
        raise ValueError(f"ceil_log2 needs a positive value, got {value}")
    return (value - 1).bit_length()


def natural_key(text: str) -> tuple:
    """Sort key that orders embedded integers numerically ("path:10" after "path:9")."""
    return tuple(
        (0, int(part)) if part.isdigit() else (1, part)
        for part in re.split(r"(\d+)", text)
        if part
    )
