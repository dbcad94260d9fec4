"""
The number wall grid and the zero windows found in it.

Row ``m`` of a wall holds the order ``m+1`` Toeplitz determinants of the
sequence, rows -2 and -1 are the constant rows 0 and 1. A periodic wall
stores one period of columns and reads every column modulo the period. A
segment wall stores the columns of a finite run of terms and only the
triangle ``start + m <= n <= start + L - 1 - m`` of row ``m`` is defined;
cells outside it hold ``None``.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple

from ..algebra import Domain
from ..exceptions import InternalInconsistency, OutOfRange

Position = Tuple[int, int]

FRAME_LETTERS = 'ABCDEFGH'
INNER_FRAMES = 'ABCD'


class WallMode(str, Enum):
    PERIODIC = 'periodic'
    SEGMENT = 'segment'


@dataclass
class Window:

    """
    A square ``size`` x ``size`` block of zeros with its north west cell at
    ``(m0, n0)``. Truncated windows were clipped by the segment triangle or
    by the last computed row, so some of their frame is unknown.
    """

    m0: int
    n0: int
    size: int
    truncated: bool = False
    ratios: Optional[tuple] = field(default=None, compare=False, repr=False)

    @property
    def origin(self) -> Position:
        return self.m0, self.n0

    def frame_position(self, letter: str, k: int) -> Position:
        """
        Position of entry ``k`` (``0 <= k <= size + 1``) of one of the inner
        frames A (north), B (west), C (east), D (south), or of the outer
        frames E, F, G, H one step further out
        """
        m0, n0, g = self.m0, self.n0, self.size
        positions = {
            'A': (m0 - 1, n0 - 1 + k),
            'B': (m0 - 1 + k, n0 - 1),
            'C': (m0 + g - k, n0 + g),
            'D': (m0 + g, n0 + g - k),
            'E': (m0 - 2, n0 - 1 + k),
            'F': (m0 - 1 + k, n0 - 2),
            'G': (m0 + g - k, n0 + g + 1),
            'H': (m0 + g + 1, n0 + g - k),
        }
        if letter not in positions:
            raise ValueError('Unknown frame {!r}'.format(letter))
        return positions[letter]

    def cells(self) -> Iterator[Position]:
        for m in range(self.m0, self.m0 + self.size):
            for n in range(self.n0, self.n0 + self.size):
                yield m, n


class Wall:

    def __init__(self, domain: Domain, mode: WallMode, width: int, start: int = 0):
        if width < 1:
            raise ValueError('A wall needs at least one column')
        self.domain = domain
        self.mode = mode
        self.width = width
        self.start = start
        # row m lives at index m + 2
        self.rows = [[0] * width, [1] * width]  # type: List[List[Optional[int]]]
        # window index per cell, rows m >= 0
        self.owners = []  # type: List[List[Optional[int]]]
        self.windows = []  # type: List[Window]
        self.terminal_zero_row = None  # type: Optional[int]

    @classmethod
    def periodic(cls, domain: Domain, word: Sequence[int]) -> 'Wall':
        wall = cls(domain, WallMode.PERIODIC, len(word))
        wall.append_row([domain.reduce(value) for value in word])
        return wall

    @classmethod
    def segment(cls, domain: Domain, terms: Sequence[int], start: int = 0) -> 'Wall':
        wall = cls(domain, WallMode.SEGMENT, len(terms), start)
        wall.append_row([domain.reduce(value) for value in terms])
        return wall

    @property
    def max_row(self) -> int:
        return len(self.rows) - 3

    @property
    def is_periodic(self) -> bool:
        return self.mode is WallMode.PERIODIC

    @property
    def deepest_row(self) -> Optional[int]:
        """Last row a segment of this width can hold at all; None when periodic"""
        if self.is_periodic:
            return None
        return (self.width - 1) // 2

    def column_index(self, n: int) -> Optional[int]:
        if self.is_periodic:
            return n % self.width
        j = n - self.start
        return j if 0 <= j < self.width else None

    def column_number(self, j: int) -> int:
        return j if self.is_periodic else self.start + j

    def column_range(self, m: int) -> range:
        """Column indices defined on row ``m``"""
        if self.is_periodic or m < 0:
            return range(self.width)
        return range(m, self.width - m)

    def columns(self, m: int) -> List[int]:
        """Column numbers ``n`` defined on row ``m``"""
        return [self.column_number(j) for j in self.column_range(m)]

    def get(self, m: int, n: int) -> Optional[int]:
        """
        Entry ``S(m, n)``, or ``None`` where the wall does not know it. Rows
        below the terminal zero row of a periodic wall are zero.
        """
        if m > self.max_row:
            if self.terminal_zero_row is not None:
                return 0
            return None
        if m < -2:
            return None
        j = self.column_index(n)
        if j is None:
            return None
        return self.rows[m + 2][j]

    def __getitem__(self, position: Position) -> int:
        value = self.get(*position)
        if value is None:
            raise OutOfRange('Wall entry {} has not been computed'.format(position))
        return value

    def row(self, m: int) -> List[Optional[int]]:
        if not -2 <= m <= self.max_row:
            raise OutOfRange('Row {} is not in the wall (rows -2..{})'.format(m, self.max_row))
        return self.rows[m + 2]

    def owner(self, m: int, n: int) -> Optional[Window]:
        if not 0 <= m <= self.max_row:
            return None
        j = self.column_index(n)
        if j is None:
            return None
        index = self.owners[m][j]
        return None if index is None else self.windows[index]

    def append_row(self, values: List[Optional[int]]) -> None:
        """
        Adds the next row and records the windows it opens. A zero under a
        zero continues the window above it, a run of zeros under nonzero
        entries opens a new window as wide as the run.
        """
        if len(values) != self.width:
            raise ValueError('Row has {} columns, wall has {}'.format(len(values), self.width))
        m = self.max_row + 1
        self.rows.append(values)
        owners = [None] * self.width  # type: List[Optional[int]]
        self.owners.append(owners)
        if self.is_periodic and not any(values):
            self.terminal_zero_row = m
            return

        north = self.rows[m + 1]
        fresh = []
        for j, value in enumerate(values):
            if value != 0:
                continue
            if north[j] == 0:
                index = self.owners[m - 1][j]
                window = self.windows[index] if index is not None else None
                if window is None or m - window.m0 >= window.size:
                    raise InternalInconsistency(
                        'Zero at ({}, {}) continues no open window'.format(m, self.column_number(j)))
                owners[j] = index
            else:
                fresh.append(j)

        for run in self._runs(fresh):
            self._open_window(m, run, owners)

    def _runs(self, columns: List[int]) -> List[List[int]]:
        runs = []  # type: List[List[int]]
        for j in columns:
            if runs and runs[-1][-1] == j - 1:
                runs[-1].append(j)
            else:
                runs.append([j])
        if (self.is_periodic and len(runs) > 1 and
                runs[0][0] == 0 and runs[-1][-1] == self.width - 1):
            runs[0] = runs.pop() + runs[0]
        return runs

    def _open_window(self, m: int, run: List[int], owners: List[Optional[int]]) -> None:
        values = self.rows[m + 2]
        left, right = run[0] - 1, run[-1] + 1
        if self.is_periodic:
            left %= self.width
            right %= self.width
        lo = self.column_range(m)
        for j in (left, right):
            if j in lo and values[j] == 0:
                raise InternalInconsistency(
                    'Window opening at ({}, {}) touches another zero region'.format(
                        m, self.column_number(run[0])))
        truncated = not self.is_periodic and (left not in lo or right not in lo)
        self.windows.append(Window(m0=m, n0=self.column_number(run[0]), size=len(run),
                                   truncated=truncated))
        index = len(self.windows) - 1
        for j in run:
            owners[j] = index

    def frame_available(self, window: Window, letters: str = INNER_FRAMES) -> bool:
        return all(self.get(*window.frame_position(letter, k)) is not None
                   for letter in letters for k in range(window.size + 2))

    def finish(self) -> None:
        """Marks windows whose inner frame is not completely known"""
        for window in self.windows:
            if not window.truncated and not self.frame_available(window):
                window.truncated = True

    def complete_windows(self) -> List[Window]:
        return [window for window in self.windows if not window.truncated]

    def zero_cells(self) -> Iterator[Position]:
        last = self.max_row if self.terminal_zero_row is None else self.terminal_zero_row - 1
        for m in range(0, last + 1):
            row = self.rows[m + 2]
            for j in self.column_range(m):
                if row[j] == 0:
                    yield m, self.column_number(j)


def start_wall(seq, segment: Optional[Tuple[int, int]] = None) -> Wall:
    """
    Rows -2..0 of the wall of ``seq``. ``segment = (start, length)`` walls
    that run of terms; without it a periodic sequence gives a periodic wall
    and a finite one the wall of all its terms.
    """
    if segment is not None:
        start, length = segment
        if length < 1:
            raise ValueError('A segment needs at least one term')
        return Wall.segment(seq.domain, seq.terms(start, length), start)
    if seq.period is not None:
        return Wall.periodic(seq.domain, seq.terms(0, seq.period))
    if seq.first is not None and seq.last is not None:
        return Wall.segment(seq.domain, seq.terms(seq.first, seq.last - seq.first + 1), seq.first)
    raise ValueError('{} is infinite: give a segment to wall'.format(seq.describe()))
