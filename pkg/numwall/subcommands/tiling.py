"""
The ``tiling`` command group: the 13-tile substitution tiling of the ternary
Pagoda wall
"""

import click
from clickclick import Action, OutputFormat, fatal_error, info, ok
from clickclick.console import print_table

from ..arguments import output_option, print_run_header, stacktrace_visible_option
from ..tiling.field import levels_for_radius
from ..tiling.tiles import load_tiles
from ..tiling.verify import (closure_audit, isolated_zero_audit, markov_zero_density,
                             symmetry_audit, transform_closure_audit, verify_tiling)

TILE_FILE_OPTION = click.option('--tiles', 'tile_file', type=click.Path(exists=True, dir_okay=False),
                                help='Tile table to use instead of the shipped one')


@click.group('tiling', context_settings=dict(help_option_names=['-h', '--help']))
def cmd_tiling():
    """
    The ternary Pagoda wall as a tiling by 13 tiles and its 16 point
    symmetries.
    """


@cmd_tiling.command('verify')
@click.option('--radius', type=click.IntRange(1), default=64, show_default=True,
              help='Compare entries within this taxicab distance of the origin S(-2, 0)')
@click.option('--levels', type=click.IntRange(0), help='Inflations of the seed (default: enough for the radius)')
@TILE_FILE_OPTION
@stacktrace_visible_option
@click.pass_context
def verify(ctx, radius, levels, tile_file):
    """Grow the tiling from its seed and compare it with the computed wall"""
    print_run_header(ctx)
    tiles = load_tiles(tile_file)
    if levels is None:
        levels = levels_for_radius(radius)
    with Action('Inflating the seed {} times and comparing radius {}..'.format(levels, radius)) as act:
        report = verify_tiling(radius, levels, tiles=tiles)
        if report.uncovered:
            act.warning('{} entries not covered'.format(len(report.uncovered)))
    seed = ', '.join('{}@{}'.format(placement, centre) for centre, placement in report.seed)
    info('Seed: {}'.format(seed))
    info('{} entries compared'.format(report.compared))
    click.echo('{} mismatches'.format(len(report.mismatches)))
    for (m, n), painted, expected in report.mismatches[:10]:
        click.echo('  ({}, {}): tiling {} wall {}'.format(m, n, painted, expected))
    if not report.passed:
        fatal_error('Tiling does not match the wall')
    ok('Tiling matches the wall')


@cmd_tiling.command('density')
@output_option
@TILE_FILE_OPTION
@stacktrace_visible_option
@click.pass_context
def density(ctx, output, tile_file):
    """Zero density of the wall from the tile frequencies"""
    print_run_header(ctx)
    result = markov_zero_density(load_tiles(tile_file))
    rows = [{'tile': tile, 'frequency': str(frequency)} for tile, frequency in result.frequencies.items()]
    with OutputFormat(output):
        print_table(['tile', 'frequency'], rows)
    click.echo('zero density {}'.format(result.density))


@cmd_tiling.command('audit')
@output_option
@click.option('--level', type=click.IntRange(0), default=6, show_default=True,
              help='Inflations for the cross-boundary zero check')
@TILE_FILE_OPTION
@stacktrace_visible_option
@click.pass_context
def audit(ctx, output, level, tile_file):
    """Closure, symmetry and isolated-zero audits of the tile table"""
    print_run_header(ctx)
    tiles = load_tiles(tile_file)
    closure = closure_audit(tiles)
    symmetry = symmetry_audit(tiles)
    group = transform_closure_audit()
    with Action('Checking zeros over {} inflations..'.format(level)):
        isolation = isolated_zero_audit(tiles, level=level)

    rows = [
        {'audit': 'transform group', 'passed': not group, 'detail': '{} bad products'.format(len(group))},
        {'audit': 'gene closure', 'passed': closure.passed,
         'detail': '{} references, {} unresolved'.format(closure.references, len(closure.unresolved))},
        {'audit': 'symmetry', 'passed': not symmetry,
         'detail': ' '.join('{}:{}'.format(tile, transform) for tile, transform in symmetry) or 'all hold'},
        {'audit': 'isolated zeros', 'passed': isolation.passed,
         'detail': 'failing tiles {}, boundary tiles {}, {} adjacent pairs'.format(
             isolation.failing_tiles, isolation.boundary_tiles, len(isolation.adjacent_pairs))},
    ]
    with OutputFormat(output):
        print_table(['audit', 'passed', 'detail'], rows)
    if not all(row['passed'] for row in rows):
        fatal_error('Audit failed')
