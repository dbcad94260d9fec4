"""
Window size statistics and how they compare with a random sequence
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml

from ..exceptions import TooSmallRegion
from ..wall.model import Wall
from .region import Region

CHI2_TABLE = Path(__file__).resolve().parent.parent / 'data' / 'chi2.yaml'
MIN_EXPECTED = 5


def _check_sizes(q: int, g: int) -> None:
    if q < 2 or g < 1:
        raise ValueError('Need q >= 2 and g >= 1')


def expected_window_density(q: int, g: int) -> Fraction:
    """
    The usually quoted window density of a random sequence over a field of
    ``q`` elements, ``(q-1) / ((q+1) q^(g+1))``. Walls of random sequences
    have ``q / (q-1)^2`` times fewer windows than this, see
    :func:`random_window_density`.
    """
    _check_sizes(q, g)
    return Fraction(q - 1, (q + 1) * q ** (g + 1))


def random_window_density(q: int, g: int) -> Fraction:
    """
    Mean number of size ``g`` windows per wall entry for a random sequence
    over a field of ``q`` elements: ``(q-1)^3 / ((q+1) q^(g+2))``. Summing
    ``g^2`` times this gives ``1/q``, the share of zero entries, which is the
    chance that a random Toeplitz determinant vanishes.
    """
    _check_sizes(q, g)
    return Fraction((q - 1) ** 3, (q + 1) * q ** (g + 2))


def random_tail_density(q: int, g: int) -> Fraction:
    """Density of windows of size ``g`` or more for a random sequence"""
    _check_sizes(q, g)
    return Fraction((q - 1) ** 2, (q + 1) * q ** (g + 1))


@dataclass
class WindowCensus:
    region: Region
    counts: Dict[int, int] = field(default_factory=dict)
    zero_cells: Dict[int, int] = field(default_factory=dict)
    total_entries: int = 0
    truncated: int = 0
    terminal_zero_rows: bool = False

    @property
    def windows(self) -> int:
        return sum(self.counts.values())

    def frequency(self, g: int) -> Fraction:
        if not self.total_entries:
            return Fraction(0)
        return Fraction(self.counts.get(g, 0), self.total_entries)

    def deviation(self, q: int, g: int) -> float:
        """Distance of the size ``g`` count from its expectation, in standard deviations"""
        expected = self.total_entries * random_window_density(q, g)
        if not expected:
            return 0.0
        return float(self.counts.get(g, 0) - expected) / math.sqrt(expected)


def window_census(wall: Wall, region: Region) -> WindowCensus:
    """
    Counts the windows of every size whose top left cell lies in
    ``region``. Windows clipped by the computed part of the wall are counted
    separately, their true size being unknown.
    """
    census = WindowCensus(region=region)
    census.total_entries = sum(1 for _ in region.cells(wall))
    counts = Counter()  # type: Counter
    zeros = Counter()  # type: Counter
    for window in wall.windows:
        if not region.contains(window.m0, window.n0):
            continue
        if window.truncated:
            census.truncated += 1
            continue
        counts[window.size] += 1
        zeros[window.size] += window.size * window.size
    census.counts = dict(sorted(counts.items()))
    census.zero_cells = dict(sorted(zeros.items()))
    terminal = wall.terminal_zero_row
    census.terminal_zero_rows = terminal is not None and terminal <= region.rows[1]
    return census


@dataclass
class ChiSquareResult:
    statistic: float
    degrees_of_freedom: int
    critical: float
    bins: List[Tuple[str, int, float]]

    @property
    def passed(self) -> bool:
        return self.statistic < self.critical


def load_quantiles(path: Optional[Path] = None) -> Dict[int, float]:
    with (path or CHI2_TABLE).open() as table:
        data = yaml.safe_load(table)
    return {int(df): float(value) for df, value in data['quantiles'].items()}


def chi_square_test(census: WindowCensus, q: int) -> ChiSquareResult:
    """
    Pearson's statistic of the window counts against the random-sequence
    densities. Sizes below G get a bin each, sizes G and over share one, G
    being the largest size whose shared bin still expects 5 windows. Passes
    below the 99% point of the distribution with G - 1 degrees of freedom.
    """
    total = census.total_entries
    top = 0
    while total * random_tail_density(q, top + 1) >= MIN_EXPECTED:
        top += 1
    if top < 2:
        raise TooSmallRegion('{} entries are too few for a chi-square test'.format(total))

    bins = []
    statistic = 0.0
    for g in range(1, top + 1):
        if g < top:
            label = str(g)
            observed = census.counts.get(g, 0)
            expected = total * random_window_density(q, g)
        else:
            label = '{}+'.format(g)
            observed = sum(count for size, count in census.counts.items() if size >= g)
            expected = total * random_tail_density(q, g)
        bins.append((label, observed, float(expected)))
        statistic += float((observed - expected) ** 2 / expected)

    degrees = top - 1
    quantiles = load_quantiles()
    critical = quantiles.get(degrees)
    if critical is None:
        raise ValueError('No chi-square quantile for {} degrees of freedom'.format(degrees))
    return ChiSquareResult(statistic=statistic, degrees_of_freedom=degrees, critical=critical, bins=bins)
