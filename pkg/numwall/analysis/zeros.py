"""
Where the zeros of a wall are, and how many of them there are
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from ..algebra import Domain
from ..seqgen.sequences import builtin_sequence
from ..wall.frame import wall_frame
from ..wall.model import Position, Wall
from .region import Region

KNIGHT_MOVES = frozenset((dm, dn) for dm in (-2, -1, 1, 2) for dn in (-2, -1, 1, 2)
                         if abs(dm) != abs(dn))


def two_adic_valuation(value: int) -> float:
    """Exponent of the largest power of 2 dividing ``value``; infinite for 0"""
    if value == 0:
        return math.inf
    return (value & -value).bit_length() - 1


def zero_cells(wall: Wall, region: Optional[Region] = None) -> Iterable[Position]:
    if region is None:
        return wall.zero_cells()
    return (cell for cell in region.cells(wall) if wall.get(*cell) == 0)


def zero_location_check(wall: Wall, region: Optional[Region] = None) -> List[Position]:
    """
    Zeros ``(m, n)``, ``m >= 0``, of a ternary Pagoda wall that break the
    rule "the power of 2 dividing m + 2 exceeds the one dividing n". The
    rule forbids zeros on odd rows and in column 0, among others.
    """
    return [(m, n) for m, n in zero_cells(wall, region)
            if two_adic_valuation(m + 2) <= two_adic_valuation(n)]


def zero_density(wall: Wall, region: Region) -> Fraction:
    cells = 0
    zeros = 0
    for m, n in region.cells(wall):
        cells += 1
        if wall.get(m, n) == 0:
            zeros += 1
    if not cells:
        raise ValueError('{} holds no computed wall entries'.format(region.describe()))
    return Fraction(zeros, cells)


def knight_spacing_violations(wall: Wall, region: Region) -> List[Tuple[Position, Position]]:
    """
    Pairs of zeros in ``region`` closer than two steps in both directions
    without being a knight's move apart
    """
    zeros = set(zero_cells(wall, region))
    violations = []
    for m, n in sorted(zeros):
        for dm in range(0, 3):
            for dn in range(-2, 3):
                if (dm, dn) <= (0, 0) or (dm, dn) in KNIGHT_MOVES:
                    continue
                if (m + dm, n + dn) in zeros:
                    violations.append(((m, n), (m + dm, n + dn)))
    return violations


@dataclass
class SurveyRow:
    prime: int
    rows: int
    windows: int
    largest: int

    @property
    def residue(self) -> int:
        return self.prime % 4

    @property
    def isolated_zeros_only(self) -> bool:
        return self.largest <= 1


def pagoda_survey(primes: Iterable[int], length: int, rows: int) -> List[SurveyRow]:
    """
    Largest window in the Pagoda wall modulo each prime, over the triangle
    of the first ``length`` terms down to row ``rows``
    """
    survey = []
    for prime in primes:
        seq = builtin_sequence('pagoda', Domain.prime_field(prime))
        wall = wall_frame(seq, rows, segment=(0, length))
        survey.append(SurveyRow(prime=prime, rows=wall.max_row, windows=len(wall.windows),
                                largest=max((window.size for window in wall.windows), default=0)))
    return survey
