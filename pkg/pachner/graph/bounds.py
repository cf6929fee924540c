"""Known theoretical bounds on Pachner-move sequences for the 3-sphere."""

from math import log10


def mijatovic_bound(n: int) -> int:
    """Moves sufficient to turn any size-``n`` 3-sphere into the canonical one."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return 6 * 10**6 * n**2 * 2 ** (2 * 10**4 * n**2)


def mijatovic_height_bound(n: int) -> int:
    """Excess height implied by :func:`mijatovic_bound` (half of it)."""
    return mijatovic_bound(n) // 2


def ratio_exponent(n: int, measured: int) -> float:
    """``log10(mijatovic_bound(n) / measured)``."""
    return log10(mijatovic_bound(n)) - log10(measured)


# Largest excess height and path length observed for one-vertex 3-spheres;
# conjectured to hold at every level.
CONJECTURED_HEIGHT = 2
CONJECTURED_LENGTH = 13


def conjecture_status(bound: int | None, conjectured: int) -> str:
    """``consistent`` or ``violated`` for a measured bound, ``-`` if there is none."""
    if bound is None:
        return "-"
    return "consistent" if bound <= conjectured else "violated"
