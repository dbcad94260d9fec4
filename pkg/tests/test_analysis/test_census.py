from fractions import Fraction

import pytest
from numwall.algebra import Domain
from numwall.analysis.census import (WindowCensus, chi_square_test, expected_window_density, load_quantiles,
                                     random_tail_density, random_window_density, window_census)
from numwall.analysis.region import Region
from numwall.exceptions import TooSmallRegion
from numwall.seqgen.sequences import builtin_sequence
from numwall.wall.frame import wall_frame


def test_expected_window_density():
    assert expected_window_density(2, 1) == Fraction(1, 12)
    assert expected_window_density(3, 1) == Fraction(1, 18)
    assert expected_window_density(2, 2) == Fraction(1, 24)
    with pytest.raises(ValueError):
        expected_window_density(1, 1)
    with pytest.raises(ValueError):
        expected_window_density(2, 0)
    with pytest.raises(ValueError):
        random_window_density(2, 0)


def test_random_window_density():
    assert random_window_density(2, 1) == Fraction(1, 24)
    assert random_window_density(2, 2) == Fraction(1, 48)
    assert random_window_density(3, 1) == Fraction(2, 27)
    assert random_tail_density(2, 1) == Fraction(1, 12)
    assert random_tail_density(3, 2) == Fraction(1, 27)
    assert sum(random_window_density(5, g) for g in range(3, 40)) < random_tail_density(5, 3)
    # quoted densities are q/(q-1)^2 times the measured ones
    assert expected_window_density(3, 4) == Fraction(3, 4) * random_window_density(3, 4)


@pytest.mark.parametrize('q', [2, 3, 4, 5, 7])
def test_zero_cells_fill_one_in_q(q):
    share = sum(g * g * random_window_density(q, g) for g in range(1, 120))
    assert share < Fraction(1, q)
    assert Fraction(1, q) - share < Fraction(1, 10 ** 9)
    # the quoted form leaves no room for nonzero entries at q = 2
    assert float(sum(g * g * expected_window_density(2, g) for g in range(1, 120))) == pytest.approx(1.0)


def test_rueppel_census():
    wall = wall_frame(builtin_sequence('rueppel'), 64, segment=(0, 48))
    census = window_census(wall, Region(rows=(0, 23)))
    assert census.counts == {1: 6, 3: 3, 7: 1, 15: 1}
    assert census.zero_cells == {1: 6, 3: 27, 7: 49, 15: 225}
    assert census.truncated == 2
    assert census.windows == 11
    assert census.total_entries == 600
    assert census.frequency(1) == Fraction(1, 100)
    assert not census.terminal_zero_rows
    narrow = window_census(wall, Region(rows=(4, 12), columns=(5, 12)))
    assert narrow.counts == {1: 2, 3: 1}


def test_rueppel_fails_chi_square():
    wall = wall_frame(builtin_sequence('rueppel'), 64, segment=(0, 48))
    result = chi_square_test(window_census(wall, Region(rows=(0, 23))), 2)
    assert result.degrees_of_freedom == 3
    assert result.bins[0] == ('1', 6, 25.0)
    assert result.bins[-1][0] == '4+'
    assert not result.passed


def test_chi_square_on_expected_counts():
    census = WindowCensus(region=Region(rows=(0, 10)), counts={1: 100, 2: 50, 3: 25, 4: 12, 5: 6, 6: 4, 9: 2},
                          total_entries=2400)
    result = chi_square_test(census, 2)
    assert result.degrees_of_freedom == 5
    assert [label for label, _, _ in result.bins] == ['1', '2', '3', '4', '5', '6+']
    assert result.bins[-1] == ('6+', 6, 6.25)
    assert result.statistic == pytest.approx(0.04)
    assert result.critical == 15.086
    assert result.passed
    assert census.deviation(2, 1) == 0.0


def test_chi_square_rejects_lopsided_counts():
    census = WindowCensus(region=Region(rows=(0, 10)), counts={1: 200}, total_entries=1200)
    assert not chi_square_test(census, 2).passed


def test_chi_square_needs_enough_entries():
    census = WindowCensus(region=Region(rows=(0, 3)), counts={1: 2}, total_entries=20)
    with pytest.raises(TooSmallRegion):
        chi_square_test(census, 2)


def test_quantile_table():
    quantiles = load_quantiles()
    assert quantiles[1] == 6.635
    assert all(quantiles[df] < quantiles[df + 1] for df in range(1, 7))


def deep_census(name, q, seed=1):
    sequence = builtin_sequence(name, Domain.prime_field(q), seed=seed)
    wall = wall_frame(sequence, 255, segment=(0, 1024))
    return window_census(wall, Region(rows=(0, 255)))


@pytest.mark.slow
@pytest.mark.parametrize('q', [2, 3])
def test_libran_window_counts(q):
    census = deep_census('libran', q)
    assert census.total_entries == 196864
    for g in range(1, 6):
        assert abs(census.deviation(q, g)) < 3, g
    assert chi_square_test(census, q).passed


@pytest.mark.slow
def test_thue_rook_passes_chi_square():
    result = chi_square_test(deep_census('thue-rook', 2), 2)
    assert result.degrees_of_freedom == 11
    assert result.passed


@pytest.mark.slow
def test_deep_rueppel_fails_chi_square():
    assert not chi_square_test(deep_census('rueppel', 2), 2).passed
