"""
Empirical checks that a finite word avoids squares or cubes.

For a period ``l`` the positions ``j`` with ``w[j] == w[j + l]`` form runs;
a square of period ``l`` is a run of length at least ``l`` and a cube one of
length at least ``2 l``. Every such run contains a multiple of ``l``, so only
those checkpoints are examined and the run through each is measured by
block comparison in both directions.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

GALLOP_START = 8


@dataclass
class PowerReport:
    power: int
    length: int
    min_period: int
    occurrences: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def free(self) -> bool:
        return not self.occurrences

    @property
    def longest_period(self) -> int:
        return max((period for _, period in self.occurrences), default=0)


def _match_forward(word: Tuple, a: int, b: int, limit: int) -> int:
    """Largest k <= limit with word[a:a+k] == word[b:b+k]"""
    matched = 0
    step = GALLOP_START
    while matched < limit:
        size = min(step, limit - matched)
        if word[a + matched:a + matched + size] == word[b + matched:b + matched + size]:
            matched += size
            step *= 2
        elif size == 1:
            break
        else:
            step = size // 2
    return matched


def _match_backward(word: Tuple, a: int, b: int, limit: int) -> int:
    """Largest k <= limit with word[a-k:a] == word[b-k:b]"""
    matched = 0
    step = GALLOP_START
    while matched < limit:
        size = min(step, limit - matched)
        if word[a - matched - size:a - matched] == word[b - matched - size:b - matched]:
            matched += size
            step *= 2
        elif size == 1:
            break
        else:
            step = size // 2
    return matched


def power_free_check(seq: Sequence, power: int = 2, max_square_len: Optional[int] = None,
                     stop_at_first: bool = False) -> PowerReport:
    """
    Lists every occurrence ``(position, period)`` of a square (``power=2``)
    or cube (``power=3``) in ``seq``. With ``max_square_len`` only periods
    above that bound are reported.
    """
    if power not in (2, 3):
        raise ValueError('power must be 2 or 3, got {}'.format(power))
    word = tuple(seq)
    size = len(word)
    min_period = 1 if max_square_len is None else max_square_len + 1
    report = PowerReport(power=power, length=size, min_period=min_period)
    needed_factor = power - 1

    for period in range(min_period, size // power + 1):
        needed = needed_factor * period
        run_end = -1
        for checkpoint in range(0, size - period, period):
            if checkpoint < run_end:
                continue
            forward = _match_forward(word, checkpoint, checkpoint + period,
                                     size - period - checkpoint)
            if not forward:
                continue
            backward = _match_backward(word, checkpoint, checkpoint + period, checkpoint)
            run_start = checkpoint - backward
            run_end = checkpoint + forward
            if run_end - run_start < needed:
                continue
            for position in range(run_start, run_end - needed + 1):
                report.occurrences.append((position, period))
                if stop_at_first:
                    return report
    report.occurrences.sort()
    return report
