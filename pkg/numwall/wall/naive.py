"""
The plain Sylvester recurrence

    S(m, n) = (S(m-1, n)^2 - S(m-1, n+1) S(m-1, n-1)) / S(m-2, n)

which cannot get past the first zero it has to divide by.
"""

from typing import List, Optional, Tuple

from ..exceptions import WallZeroDivision
from ..seqgen.sequences import SequenceSpec
from .model import Position, Wall, start_wall

DEFAULT_INTEGER_MAX_ROWS = 32


def clamp_rows(wall: Wall, max_row: int, integer_max_rows: int = DEFAULT_INTEGER_MAX_ROWS) -> int:
    """The deepest row actually worth computing for ``wall``"""
    if max_row < 0:
        raise ValueError('max_row must not be negative')
    if not wall.domain.is_field:
        max_row = min(max_row, integer_max_rows)
    if wall.deepest_row is not None:
        max_row = min(max_row, wall.deepest_row)
    return max_row


def sylvester_entry(wall: Wall, m: int, j: int) -> Optional[int]:
    """
    ``S(m, n)`` at column index ``j`` by Sylvester's identity, or ``None`` if
    the divisor is zero
    """
    divisor = wall.rows[m][j]
    if not divisor:
        return None
    above = wall.rows[m + 1]
    width = wall.width
    left = above[(j - 1) % width]
    right = above[(j + 1) % width]
    return wall.domain.divide(above[j] * above[j] - left * right, divisor)


def wall_naive(seq: SequenceSpec, max_row: int, segment: Optional[Tuple[int, int]] = None,
               integer_max_rows: int = DEFAULT_INTEGER_MAX_ROWS) -> Wall:
    wall = start_wall(seq, segment)
    max_row = clamp_rows(wall, max_row, integer_max_rows)
    for m in range(1, max_row + 1):
        if wall.terminal_zero_row is not None:
            break
        values = [None] * wall.width  # type: List[Optional[int]]
        for j in wall.column_range(m):
            value = sylvester_entry(wall, m, j)
            if value is None:
                raise WallZeroDivision(m, wall.column_number(j))
            values[j] = value
        wall.append_row(values)
    wall.finish()
    return wall


def sylvester_defects(wall: Wall) -> List[Position]:
    """
    Positions ``(m, n)``, ``m >= 0``, where
    ``S(m,n)^2 = S(m+1,n) S(m-1,n) + S(m,n+1) S(m,n-1)`` fails
    """
    domain = wall.domain
    defects = []
    for m in range(0, wall.max_row):
        for n in wall.columns(m):
            values = [wall.get(m, n), wall.get(m + 1, n), wall.get(m - 1, n),
                      wall.get(m, n + 1), wall.get(m, n - 1)]
            if any(value is None for value in values):
                continue
            centre, south, north, east, west = values
            if domain.reduce(centre * centre - south * north - east * west):
                defects.append((m, n))
    return defects
