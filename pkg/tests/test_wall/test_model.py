import pytest
from numwall.exceptions import InternalInconsistency, OutOfRange
from numwall.seqgen.sequences import builtin_sequence, finite_segment, periodic_word
from numwall.wall.model import Wall, WallMode, Window, start_wall

from fixtures import GF2, GF3


def test_periodic_wall():
    wall = Wall.periodic(GF3, [1, 2, 4])
    assert wall.mode is WallMode.PERIODIC
    assert wall.is_periodic
    assert wall.max_row == 0
    assert wall.deepest_row is None
    assert wall.row(0) == [1, 2, 1]
    assert wall.row(-2) == [0, 0, 0]
    assert wall.row(-1) == [1, 1, 1]
    # columns repeat with the period
    assert wall.get(0, 4) == 2
    assert wall.get(0, -1) == 1
    assert wall[-1, 100] == 1
    assert wall.get(1, 0) is None
    assert wall.get(-3, 0) is None
    with pytest.raises(OutOfRange):
        wall[1, 0]
    with pytest.raises(OutOfRange):
        wall.row(1)


def test_segment_wall():
    wall = Wall.segment(GF2, [1, 0, 1, 1, 1], start=-2)
    assert wall.width == 5
    assert wall.deepest_row == 2
    assert wall.columns(0) == [-2, -1, 0, 1, 2]
    assert wall.columns(1) == [-1, 0, 1]
    assert wall.columns(2) == [0]
    assert wall.get(0, -3) is None
    assert wall.get(0, 3) is None
    assert wall[0, -1] == 0
    assert wall.column_number(0) == -2


def test_append_row_records_windows():
    wall = Wall.segment(GF2, [1, 1, 1, 0, 0, 1, 1, 1, 1])
    assert len(wall.windows) == 1
    assert wall.windows[0] == Window(m0=0, n0=3, size=2)
    assert wall.owner(0, 4) is wall.windows[0]
    assert wall.owner(0, 2) is None
    wall.append_row([None, 1, 1, 0, 0, 1, 1, 1, None])
    assert len(wall.windows) == 1
    wall.append_row([None, None, 1, 1, 1, 1, 1, None, None])
    wall.finish()
    assert not wall.windows[0].truncated
    assert list(wall.zero_cells()) == [(0, 3), (0, 4), (1, 3), (1, 4)]
    assert list(wall.windows[0].cells()) == [(0, 3), (0, 4), (1, 3), (1, 4)]


def test_append_row_rejects_non_square_zeros():
    wall = Wall.segment(GF2, [1, 1, 0, 1, 1, 1, 1])
    with pytest.raises(InternalInconsistency):
        wall.append_row([None, 1, 0, 0, 1, 1, None])


def test_append_row_checks_width():
    wall = Wall.segment(GF2, [1, 1, 0, 1, 1, 1, 1])
    wall.append_row([None, 1, 1, 1, 1, 1, None])
    with pytest.raises(ValueError):
        wall.append_row([1, 1])


def test_truncated_window():
    wall = Wall.segment(GF2, [0, 0, 1, 1, 1])
    assert wall.windows[0].truncated
    assert wall.complete_windows() == []


def test_periodic_window_wraps_around():
    wall = Wall.periodic(GF2, [0, 1, 1, 0])
    assert len(wall.windows) == 1
    window = wall.windows[0]
    assert (window.m0, window.n0, window.size) == (0, 3, 2)


def test_terminal_zero_row():
    wall = Wall.periodic(GF2, [1, 1])
    wall.append_row([0, 0])
    assert wall.terminal_zero_row == 1
    assert wall.get(5, 0) == 0
    assert wall.windows == []


def test_frame_positions():
    window = Window(m0=3, n0=5, size=2)
    assert window.origin == (3, 5)
    assert window.frame_position('A', 0) == (2, 4)
    assert window.frame_position('B', 3) == (5, 4)
    assert window.frame_position('C', 0) == (5, 7)
    assert window.frame_position('D', 3) == (5, 4)
    assert window.frame_position('H', 0) == (6, 7)
    with pytest.raises(ValueError):
        window.frame_position('X', 0)


def test_start_wall():
    assert start_wall(periodic_word([1, 1, 0], GF2)).is_periodic
    segment = start_wall(finite_segment([1, 0, 1], GF2, start=4))
    assert segment.columns(0) == [4, 5, 6]
    cut = start_wall(builtin_sequence('pagoda'), segment=(-2, 5))
    assert cut.row(0) == [1, 2, 2, 0, 1]
    with pytest.raises(ValueError):
        start_wall(builtin_sequence('pagoda'))
    with pytest.raises(ValueError):
        start_wall(builtin_sequence('pagoda'), segment=(0, 0))
