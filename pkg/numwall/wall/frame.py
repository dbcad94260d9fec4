"""
Number walls that get past zeros.

Where the Sylvester divisor ``S(m-2, n)`` is zero the cell sits below a
window. The row under the window (its south inner frame D) follows from the
product law

    A_k D_k = (-1)^(g k) B_k C_k

and the row under that (the south outer frame H) from the outer frame
relation

    Q E_k / A_k + (-1)^k P F_k / B_k = R H_k / D_k + (-1)^k T G_k / C_k

with the ratios P, Q, R, T of the four geometric inner frames and
PT / QR = (-1)^g. Over the integers the intermediate values are fractions;
every finished entry is integral again.
"""

from typing import List, Optional, Tuple

from ..algebra import Quotient
from ..exceptions import IncompleteFrame, InternalInconsistency
from ..seqgen.sequences import SequenceSpec
from .model import INNER_FRAMES, Wall, Window, start_wall
from .naive import DEFAULT_INTEGER_MAX_ROWS, clamp_rows, sylvester_entry

Ratios = Tuple[Quotient, Quotient, Quotient, Quotient]


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def frame_value(wall: Wall, window: Window, letter: str, k: int) -> int:
    value = wall.get(*window.frame_position(letter, k))
    if value is None:
        raise IncompleteFrame('Frame entry {}{} of the window at {} is not in the wall'.format(
            letter, k, window.origin))
    return value


def frame_values(wall: Wall, window: Window, letter: str) -> List[int]:
    return [frame_value(wall, window, letter, k) for k in range(window.size + 2)]


def window_ratios(wall: Wall, window: Window) -> Ratios:
    """
    ``(P, Q, R, T)``. P and Q come from the north and west frames, R from the
    top of the east frame and T from the south frame when it is known, from
    ``PT/QR = (-1)^g`` otherwise.
    """
    if window.ratios is not None:
        return window.ratios
    domain = wall.domain
    g = window.size
    p = domain.quotient(frame_value(wall, window, 'A', 1), frame_value(wall, window, 'A', 0))
    q = domain.quotient(frame_value(wall, window, 'B', 1), frame_value(wall, window, 'B', 0))
    r = domain.quotient(frame_value(wall, window, 'C', g + 1), frame_value(wall, window, 'C', g))
    d0 = wall.get(*window.frame_position('D', 0))
    d1 = wall.get(*window.frame_position('D', 1))
    if d0 is not None and d1 is not None:
        if d0 == 0:
            raise InternalInconsistency('South frame of the window at {} has a zero'.format(window.origin))
        t = domain.quotient(d1, d0)
    else:
        t = domain.quotient(_sign(g) * q * r, p)
    window.ratios = (p, q, r, t)
    return window.ratios


def south_entry(wall: Wall, window: Window, k: int) -> int:
    """D_k from the product law"""
    domain = wall.domain
    numerator = (_sign(window.size * k) * frame_value(wall, window, 'B', k) *
                 frame_value(wall, window, 'C', k))
    return domain.from_quotient(domain.quotient(numerator, frame_value(wall, window, 'A', k)))


def cross_entry(wall: Wall, window: Window, k: int, ratios: Optional[Ratios] = None) -> int:
    """H_k from the outer frame relation"""
    domain = wall.domain
    p, q, r, t = ratios or window_ratios(wall, window)
    sign = _sign(k)

    def value(letter: str) -> int:
        return frame_value(wall, window, letter, k)

    north = domain.quotient(q * value('E'), value('A'))
    west = domain.quotient(p * value('F'), value('B'))
    east = domain.quotient(t * value('G'), value('C'))
    inner = north + sign * west - sign * east
    return domain.from_quotient(domain.quotient(value('D') * inner, r))


def cross_window(wall: Wall, window: Window) -> List[int]:
    """``H_0 .. H_(g+1)``, the row below the south inner frame"""
    return [cross_entry(wall, window, k) for k in range(window.size + 2)]


def _window_entry(wall: Wall, m: int, j: int) -> int:
    index = wall.owners[m - 2][j]
    n = wall.column_number(j)
    if index is None:
        raise InternalInconsistency('Zero divisor for ({}, {}) lies in no window'.format(m, n))
    window = wall.windows[index]
    depth = m - window.m0
    if depth < window.size:
        return 0
    k = window.n0 + window.size - n
    if wall.is_periodic:
        k %= wall.width
    if window.truncated or not 1 <= k <= window.size:
        raise InternalInconsistency('Cell ({}, {}) needs the frame of the clipped window at {}'.format(
            m, n, window.origin))
    if depth == window.size:
        return south_entry(wall, window, k)
    if depth == window.size + 1:
        return cross_entry(wall, window, k)
    raise InternalInconsistency('Cell ({}, {}) is {} rows below the window at {}'.format(
        m, n, depth, window.origin))


def frame_row(wall: Wall, m: int) -> List[Optional[int]]:
    values = [None] * wall.width  # type: List[Optional[int]]
    for j in wall.column_range(m):
        value = sylvester_entry(wall, m, j)
        values[j] = _window_entry(wall, m, j) if value is None else value
    return values


def wall_frame(seq: SequenceSpec, max_row: int, segment: Optional[Tuple[int, int]] = None,
               integer_max_rows: int = DEFAULT_INTEGER_MAX_ROWS) -> Wall:
    """
    Rows 0..``max_row`` of the wall of ``seq``, every window recorded. Integer
    walls stop at ``integer_max_rows``, segment walls at the tip of their
    triangle and periodic walls at their first zero row.
    """
    wall = start_wall(seq, segment)
    max_row = clamp_rows(wall, max_row, integer_max_rows)
    for m in range(1, max_row + 1):
        if wall.terminal_zero_row is not None:
            break
        wall.append_row(frame_row(wall, m))
    wall.finish()
    return wall


def verify_window(wall: Wall, window: Window, outer: bool = True) -> bool:
    """
    Checks the frame theorems on one window: nonzero geometric inner frames,
    ``PT/QR = (-1)^g``, the product law and, with ``outer``, the outer frame
    relation. Raises :class:`InternalInconsistency` on the first failure.
    """
    domain = wall.domain
    g = window.size

    def same(left, right) -> bool:
        if domain.is_field:
            return (left - right) % domain.p == 0
        return left == right

    frames = {letter: frame_values(wall, window, letter) for letter in INNER_FRAMES}
    for letter, values in frames.items():
        if any(value == 0 for value in values):
            raise InternalInconsistency('{} frame of the window at {} has a zero'.format(
                letter, window.origin))
        ratio = domain.quotient(values[1], values[0])
        for k in range(1, g + 2):
            if not same(values[k], ratio * values[k - 1]):
                raise InternalInconsistency('{} frame of the window at {} is not geometric'.format(
                    letter, window.origin))

    a, b, c, d = (frames[letter] for letter in INNER_FRAMES)
    p = domain.quotient(a[1], a[0])
    q = domain.quotient(b[1], b[0])
    r = domain.quotient(c[1], c[0])
    t = domain.quotient(d[1], d[0])
    if not same(p * t, _sign(g) * q * r):
        raise InternalInconsistency('PT/QR is not (-1)^{} at the window at {}'.format(g, window.origin))
    for k in range(g + 2):
        if not same(a[k] * d[k], _sign(g * k) * b[k] * c[k]):
            raise InternalInconsistency('Product law fails at k={} for the window at {}'.format(
                k, window.origin))
    if outer:
        ratios = (p, q, r, t)
        for k in range(g + 2):
            if cross_entry(wall, window, k, ratios) != frame_value(wall, window, 'H', k):
                raise InternalInconsistency('Outer frame relation fails at k={} for the window at {}'.format(
                    k, window.origin))
    return True
