import random

import pytest
from numwall.algebra import Domain
from numwall.exceptions import InternalInconsistency, WallZeroDivision
from numwall.seqgen.sequences import builtin_sequence, periodic_word
from numwall.wall.frame import cross_window, frame_values, verify_window, wall_frame, window_ratios
from numwall.wall.naive import sylvester_defects, wall_naive
from numwall.wall.oracle import det_bareiss, hankel_oracle, toeplitz_matrix

from fixtures import GF2, GF3, GF7, ZZ


def row_text(wall, m):
    return ''.join('.' if value is None else str(value) for value in wall.row(m))


def assert_matches_oracle(wall, seq):
    for m in range(-2, wall.max_row + 1):
        for n in wall.columns(m):
            assert wall[m, n] == hankel_oracle(seq, m, n), (m, n)


def test_oracle():
    thue_morse = builtin_sequence('thue-morse')
    assert hankel_oracle(thue_morse, -2, 5) == 0
    assert hankel_oracle(thue_morse, -1, 5) == 1
    assert hankel_oracle(thue_morse, 1, 1) == 1
    ones = periodic_word([1], GF2)
    assert hankel_oracle(ones, 1, 3) == 0
    assert toeplitz_matrix([1, 2, 3], 2) == [[2, 3], [1, 2]]
    assert det_bareiss([[2, 3], [1, 2]]) == 1
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[1, 2], [2, 4]]) == 0
    assert det_bareiss([]) == 1
    with pytest.raises(ValueError):
        hankel_oracle(ones, -3, 0)


def test_naive_without_zeros():
    seq = builtin_sequence('libran', Domain.prime_field(1000003), seed=3)
    wall = wall_naive(seq, 6, segment=(0, 13))
    assert wall.max_row == 6
    assert wall.windows == []
    assert wall.rows == wall_frame(seq, 6, segment=(0, 13)).rows


def test_naive_periodic_shortcut():
    wall = wall_naive(periodic_word([1], GF2), 3)
    assert wall.terminal_zero_row == 1
    assert wall.max_row == 1
    geometric = wall_naive(periodic_word([1, 2, 4], GF7), 2)
    assert geometric.row(1) == [0, 0, 0]


def test_naive_stops_at_zero_divisor():
    with pytest.raises(WallZeroDivision) as error:
        wall_naive(builtin_sequence('rueppel'), 8, segment=(0, 32))
    assert (error.value.m, error.value.n) == (2, 2)


def test_rueppel_frame():
    seq = builtin_sequence('rueppel')
    wall = wall_frame(seq, 64, segment=(0, 48))
    assert wall.max_row == 23
    assert row_text(wall, 7) == '.......1111111110000000000000001000000000.......'
    assert row_text(wall, 15) == '...............111111111111111110...............'
    assert row_text(wall, 19) == '...................1111100000...................'
    complete = sorted((window.m0, window.n0, window.size) for window in wall.complete_windows())
    assert complete == [(0, 2, 1), (0, 4, 3), (0, 8, 7), (0, 16, 15), (4, 6, 1), (8, 10, 1),
                        (8, 12, 3), (12, 14, 1), (16, 18, 1), (16, 20, 3), (20, 22, 1)]
    truncated = sorted(window.origin for window in wall.windows if window.truncated)
    assert truncated == [(0, 32), (16, 24)]
    assert_matches_oracle(wall, seq)


def test_knight_frame():
    seq = builtin_sequence('knight')
    wall = wall_frame(seq, 8, segment=(-8, 17))
    assert row_text(wall, 0) == '11111011101011111'
    assert row_text(wall, 1) == '.000111011111000.'
    assert row_text(wall, 4) == '....110111101....'
    assert row_text(wall, 8) == '........0........'
    assert_matches_oracle(wall, seq)


def test_knight_frame_deep():
    seq = builtin_sequence('knight')
    assert_matches_oracle(wall_frame(seq, 24, segment=(-24, 49)), seq)


def test_pagoda_frame():
    seq = builtin_sequence('pagoda')
    wall = wall_frame(seq, 8, segment=(-8, 17))
    assert row_text(wall, 0) == '22112012201021122'
    assert row_text(wall, 2) == '..0210201201120..'
    assert row_text(wall, 6) == '......02102......'
    assert {window.size for window in wall.windows} == {1}
    assert_matches_oracle(wall, seq)


def test_pagoda_mod_83():
    seq = builtin_sequence('pagoda', Domain.prime_field(83))
    wall = wall_frame(seq, 110, segment=(0, 600))
    assert [wall[105, n] for n in range(185, 193)] == [43, 6, 48, 8, 24, 74, 66, 31]
    assert [n for n in wall.columns(104) if wall[104, n] == 0] == [164, 173, 245, 293, 315, 477, 489]
    assert [n for n in wall.columns(105) if wall[105, n] == 0] == [196]
    assert wall[105, 188] == hankel_oracle(seq, 105, 188)
    assert wall[105, 196] == hankel_oracle(seq, 105, 196) == 0
    # isolated zeros only, no size-3 window near (105, 188)
    assert wall.windows
    assert all(window.size == 1 for window in wall.windows)


def test_integer_frame():
    seq = builtin_sequence('pagoda', ZZ)
    wall = wall_frame(seq, 10, segment=(-12, 25))
    assert wall.max_row == 10
    assert wall.windows
    assert_matches_oracle(wall, seq)
    assert sylvester_defects(wall) == []


def test_integer_rows_are_capped():
    wall = wall_frame(builtin_sequence('pagoda', ZZ), 40, segment=(-50, 101), integer_max_rows=6)
    assert wall.max_row == 6


def test_libran_frame():
    seq = builtin_sequence('libran', GF3, seed=5)
    wall = wall_frame(seq, 20, segment=(0, 41))
    assert_matches_oracle(wall, seq)
    assert sylvester_defects(wall) == []


def test_periodic_frame():
    seq = periodic_word([1, 1, 1, 0, 1, 0], GF2)
    wall = wall_frame(seq, 8)
    assert wall.terminal_zero_row == 5
    assert wall.row(4) == [1, 1, 1, 1, 1, 1]
    assert_matches_oracle(wall, seq)


def test_frame_laws_hold_on_every_window():
    for name, modulus, segment in (('knight', 2, (-32, 65)), ('pagoda', 3, (-32, 65)),
                                   ('pagoda', None, (-12, 25))):
        domain = Domain.prime_field(modulus) if modulus else ZZ
        wall = wall_frame(builtin_sequence(name, domain), 40, segment=segment)
        outer = [window for window in wall.complete_windows() if wall.frame_available(window, 'ABCDEFGH')]
        assert outer, name
        for window in outer:
            assert verify_window(wall, window)


def test_window_ratios_and_cross():
    wall = wall_frame(builtin_sequence('pagoda'), 8, segment=(-8, 17))
    window = next(window for window in wall.complete_windows()
                  if wall.frame_available(window, 'ABCDEFGH'))
    p, q, r, t = window_ratios(wall, window)
    # PT/QR = (-1)^g
    assert (p * t + q * r) % 3 == 0
    assert cross_window(wall, window) == frame_values(wall, window, 'H')


def test_verify_window_detects_corruption():
    wall = wall_frame(builtin_sequence('pagoda'), 8, segment=(-8, 17))
    window = next(window for window in wall.complete_windows()
                  if wall.frame_available(window, 'ABCDEFGH'))
    m, n = window.frame_position('H', 1)
    j = wall.column_index(n)
    wall.rows[m + 2][j] = (wall.rows[m + 2][j] + 1) % 3
    window.ratios = None
    with pytest.raises(InternalInconsistency):
        verify_window(wall, window)
    assert verify_window(wall, window, outer=False)


def test_frame_laws_on_rueppel_windows():
    # one-sided: windows near the left edge of the triangle lack outer frames
    wall = wall_frame(builtin_sequence('rueppel'), 128, segment=(0, 300))
    framed = [window for window in wall.complete_windows() if wall.frame_available(window, 'ABCD')]
    assert framed
    assert max(window.size for window in framed) >= 3
    for window in framed:
        assert verify_window(wall, window, outer=wall.frame_available(window, 'ABCDEFGH'))


def test_window_ratios_reject_zero_south_frame():
    wall = wall_frame(builtin_sequence('pagoda'), 8, segment=(-8, 17))
    window = next(window for window in wall.complete_windows()
                  if wall.frame_available(window, 'ABCDEFGH'))
    m, n = window.frame_position('D', 0)
    wall.rows[m + 2][wall.column_index(n)] = 0
    window.ratios = None
    with pytest.raises(InternalInconsistency):
        window_ratios(wall, window)


@pytest.mark.slow
def test_random_periodic_walls_match_oracle():
    rng = random.Random(24)
    for _ in range(50):
        domain = Domain.prime_field(rng.choice([2, 3, 5, 7]))
        word = [rng.randrange(domain.p) for _ in range(rng.randint(1, 16))]
        seq = periodic_word(word, domain)
        assert_matches_oracle(wall_frame(seq, 24), seq)
    for _ in range(10):
        seq = periodic_word([rng.randint(-3, 3) for _ in range(rng.randint(1, 16))], ZZ)
        wall = wall_frame(seq, 12)
        assert_matches_oracle(wall, seq)
        assert sylvester_defects(wall) == []


@pytest.mark.slow
@pytest.mark.parametrize('prime,length,rows', [
    (3, 4096, 512),
    (7, 1024, 256),
    (11, 512, 128),
])
def test_pagoda_walls_have_isolated_zeros(prime, length, rows):
    seq = builtin_sequence('pagoda', Domain.prime_field(prime))
    wall = wall_frame(seq, rows, segment=(-(length // 2), length))
    assert wall.max_row == rows
    assert all(window.size == 1 for window in wall.windows)
