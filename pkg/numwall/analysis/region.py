"""
Parts of a wall that statistics are taken over
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from ..wall.model import Position, Wall


@dataclass(frozen=True)
class Region:

    """
    Rows ``rows[0]..rows[1]`` and columns ``columns[0]..columns[1]``, both
    inclusive. Without columns, every column the wall defines on a row.
    """

    rows: Tuple[int, int]
    columns: Optional[Tuple[int, int]] = None

    def column_bounds(self, m: int) -> Optional[Tuple[int, int]]:
        return self.columns

    def contains(self, m: int, n: int) -> bool:
        if not self.rows[0] <= m <= self.rows[1]:
            return False
        bounds = self.column_bounds(m)
        return bounds is None or bounds[0] <= n <= bounds[1]

    def cells(self, wall: Wall) -> Iterator[Position]:
        """Cells of the region that the wall has computed"""
        last = min(self.rows[1], wall.max_row)
        for m in range(max(self.rows[0], 0), last + 1):
            bounds = self.column_bounds(m)
            if bounds is None or wall.is_periodic:
                columns = wall.columns(m)
                if bounds is not None:
                    columns = [n for n in columns if bounds[0] <= n <= bounds[1]]
            else:
                columns = range(bounds[0], bounds[1] + 1)
            for n in columns:
                if wall.get(m, n) is not None:
                    yield m, n

    def describe(self) -> str:
        if self.columns is None:
            return 'rows {}..{}'.format(*self.rows)
        return 'rows {}..{}, columns {}..{}'.format(*(self.rows + self.columns))


@dataclass(frozen=True)
class Cone(Region):

    """
    The cells of ``rows`` with ``|n - centre| <= m - apex``: the downward
    cone from row ``apex`` at column ``centre``
    """

    apex: int = 0
    centre: int = 0

    def column_bounds(self, m: int) -> Optional[Tuple[int, int]]:
        half = m - self.apex
        if half < 0:
            return (self.centre + 1, self.centre)
        return (self.centre - half, self.centre + half)

    def describe(self) -> str:
        return 'rows {}..{}, |n - {}| <= m - {}'.format(self.rows[0], self.rows[1], self.centre, self.apex)


def parse_range(text: str) -> Tuple[int, int]:
    """``"a:b"`` or ``"a..b"`` as the inclusive pair ``(a, b)``"""
    separator = '..' if '..' in text else ':'
    low, _, high = text.partition(separator)
    low, high = int(low), int(high)
    if high < low:
        raise ValueError('empty range {}'.format(text))
    return low, high
