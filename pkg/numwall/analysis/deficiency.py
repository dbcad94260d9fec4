"""
Deficiency: how many leading rows of a wall avoid windows of a given size,
and a search for periodic words that make that number as large as possible
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..algebra import Domain
from ..exceptions import EffortExhausted
from ..seqgen.sequences import finite_segment, periodic_word
from ..wall.frame import wall_frame
from ..wall.model import Wall

DEFAULT_MAX_PERIOD = 12
DEFAULT_MAX_NODES = 1000000


@dataclass
class DeficiencyReport:

    """
    Rows ``0 .. depth-1`` hold no window of size ``d`` or more. For periodic
    input ``period`` is the period and ``order`` the row at which the wall
    vanishes for good. ``exact`` is false when no violation was met before
    the last computed row, so ``depth`` is only a lower bound.
    """

    d: int
    depth: int
    period: Optional[int] = None
    order: Optional[int] = None
    exact: bool = True

    def __str__(self):
        text = 'depth={}'.format(self.depth)
        if self.period is not None:
            text += ' t={}'.format(self.period)
        if self.order is not None:
            text += ' r={}'.format(self.order)
        return text


def first_violation(wall: Wall, d: int) -> Optional[int]:
    """
    Top row of the first window of size ``d`` or more, counting the zero
    rows that end a periodic wall as one unbounded window
    """
    rows = [window.m0 for window in wall.windows if window.size >= d]
    if wall.terminal_zero_row is not None:
        rows.append(wall.terminal_zero_row)
    return min(rows, default=None)


def deficiency(wall: Wall, d: int) -> DeficiencyReport:
    if d < 1:
        raise ValueError('d must be at least 1')
    violation = first_violation(wall, d)
    period = wall.width if wall.is_periodic else None
    if violation is None:
        return DeficiencyReport(d=d, depth=wall.max_row + 1, period=period, exact=False)
    return DeficiencyReport(d=d, depth=violation, period=period, order=wall.terminal_zero_row)


def periodic_deficiency(word: Sequence[int], domain: Domain, d: int) -> DeficiencyReport:
    """Deficiency report of the periodic wall of ``word``, computed to its end"""
    wall = wall_frame(periodic_word(word, domain), len(word))
    return deficiency(wall, d)


def symmetric_words(word: Sequence[int], q: int) -> Iterator[Tuple[int, ...]]:
    """
    Rotations, reversals and nonzero multiples of ``word``: all of them have
    the same window pattern up to shifts and reflection
    """
    size = len(word)
    for scale in range(1, q):
        scaled = [value * scale % q for value in word]
        for candidate in (scaled, scaled[::-1]):
            for shift in range(size):
                yield tuple(candidate[shift:] + candidate[:shift])


def canonical_word(word: Sequence[int], q: int) -> Tuple[int, ...]:
    return min(symmetric_words(word, q))


def is_primitive(word: Sequence[int]) -> bool:
    size = len(word)
    return all(size % period or tuple(word[:period]) * (size // period) != tuple(word)
               for period in range(1, size))


@dataclass
class SearchResult:
    word: Tuple[int, ...]
    report: DeficiencyReport
    nodes: int


class _Search:

    def __init__(self, q: int, d: int, max_period: int, max_nodes: int):
        self.domain = Domain.prime_field(q)
        self.q = q
        self.d = d
        self.max_period = max_period
        self.max_nodes = max_nodes
        self.nodes = 0
        self.best_word = None  # type: Optional[Tuple[int, ...]]
        self.best_report = None  # type: Optional[DeficiencyReport]

    @property
    def best_depth(self) -> int:
        return -1 if self.best_report is None else self.best_report.depth

    def _visit(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise EffortExhausted(self.best_word, self.best_report, self.max_nodes)

    def _hopeless(self, prefix: List[int]) -> bool:
        """
        Every periodic completion contains the wall triangle of the prefix,
        so a wide enough zero run at row ``m`` caps the depth at ``m``
        """
        if len(prefix) < self.d:
            return False
        wall = wall_frame(finite_segment(prefix, self.domain), len(prefix))
        return any(window.size >= self.d and window.m0 <= self.best_depth
                   for window in wall.windows)

    def _complete(self, word: Tuple[int, ...]) -> None:
        if not is_primitive(word) or canonical_word(word, self.q) != word:
            return
        report = periodic_deficiency(word, self.domain, self.d)
        if report.depth > self.best_depth:
            self.best_word = word
            self.best_report = report

    def _extend(self, prefix: List[int], period: int) -> None:
        self._visit()
        if self._hopeless(prefix):
            return
        if len(prefix) == period:
            self._complete(tuple(prefix))
            return
        for value in range(self.q):
            prefix.append(value)
            self._extend(prefix, period)
            prefix.pop()

    def run(self) -> SearchResult:
        for period in range(1, self.max_period + 1):
            # the wall of a period t word vanishes by row t
            if period <= self.best_depth:
                continue
            self._extend([], period)
        return SearchResult(word=self.best_word, report=self.best_report, nodes=self.nodes)


def search_max_depth(q: int, d: int, max_period: int = DEFAULT_MAX_PERIOD,
                     max_nodes: int = DEFAULT_MAX_NODES) -> SearchResult:
    """
    Backtracking search over periodic words of period up to ``max_period``
    for the largest deficiency ``d`` depth. Words are only evaluated in
    their canonical form under rotation, reversal and scaling; among equally
    deep words the first found (shortest period, then smallest) wins.
    """
    if d < 1:
        raise ValueError('d must be at least 1')
    if max_period < 1:
        raise ValueError('max_period must be at least 1')
    return _Search(q, d, max_period, max_nodes).run()
