#!/usr/bin/env python3
import random

import click
from clickclick import Action, OutputFormat, fatal_error, info, ok, warning
from clickclick.console import print_table

from .algebra import Domain
from .analysis.census import chi_square_test, random_window_density, window_census
from .analysis.deficiency import deficiency, search_max_depth
from .analysis.region import Cone, Region, parse_range
from .analysis.zeros import (knight_spacing_violations, pagoda_survey, zero_density,
                             zero_location_check)
from .arguments import (DOMAIN, mod_option, out_option, output_option, output_path, print_run_header,
                        WALL_DUMP, resolve_sequence, rows_option, segment_option,
                        sequence_source_options, stacktrace_visible_option, start_option)
from .configuration import configuration
from .error_handling import HandleExceptions
from .exceptions import InvalidModulus
from .render import Palette, PaletteMode, render_wall
from .seqgen.powerfree import power_free_check
from .seqgen.sequences import BUILTIN_DEFAULTS, BUILTIN_DESCRIPTIONS
from .subcommands.config import cmd_config
from .subcommands.root import cli
from .subcommands.tiling import cmd_tiling
from .wall.dump import dump_wall, write_wall
from .wall.frame import wall_frame
from .wall.naive import wall_naive
from .wall.oracle import hankel_oracle

TITLES = {
    'g': 'Size',
    'count': 'Windows',
    'expected': 'Expected',
    'deviation': 'Sigma',
    'zero_cells': 'Zeros',
    'default_mod': 'Mod',
    'isolated': 'Isolated only',
}

STYLES = {
    True: {'fg': 'green'},
    False: {'fg': 'red'},
}

DEFAULT_SURVEY_PRIMES = '3,7,11,19,23,31,43,47,59,67,71,79,83'

ENGINES = {'frame': wall_frame, 'naive': wall_naive}


class RangeParamType(click.ParamType):
    name = 'range'

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_range(value)
        except ValueError:
            self.fail('"{}" is not a range like 0:511'.format(value), param, ctx)


RANGE = RangeParamType()


def format_terms(terms) -> str:
    if all(0 <= term <= 9 for term in terms):
        return ''.join(map(str, terms))
    return ','.join(map(str, terms))


def get_sequence(source: dict, mod):
    return resolve_sequence(source['builtin'], source['period'], source['spec_file'],
                            source['digits_file'], source['periodic_digits'], source['seed'], mod)


def pop_source(kwargs: dict) -> dict:
    return {key: kwargs.pop(key) for key in ('builtin', 'period', 'spec_file', 'digits_file',
                                             'periodic_digits', 'seed')}


def compute_wall(seq, rows: int, segment, start: int, engine: str = 'frame'):
    if segment is None and seq.period is None and (seq.first is None or seq.last is None):
        raise click.UsageError('{} is infinite, give --segment LENGTH'.format(seq.describe()))
    window = (start, segment) if segment is not None else None
    with Action('Computing rows 0..{} of the wall of {}..'.format(rows, seq.describe())):
        return ENGINES[engine](seq, rows, segment=window,
                               integer_max_rows=configuration.integer('wall.integer_max_rows'))


def write_output(out, data: bytes):
    if out is None:
        click.get_binary_stream('stdout').write(data)
        return
    path = output_path(out)
    with path.open('wb') as fd:
        fd.write(data)
    info('Wrote {}'.format(path))


@cli.command('seq')
@sequence_source_options
@mod_option
@start_option
@click.option('--count', type=click.IntRange(0), default=32, show_default=True, help='Number of terms')
@click.option('--list', 'list_builtins', is_flag=True, help='List the builtin sequences')
@output_option
@stacktrace_visible_option
@click.pass_context
def seq(ctx, mod, start, count, list_builtins, output, **kwargs):
    """Print terms of a sequence, or the catalogue of builtin sequences"""
    print_run_header(ctx)
    source = pop_source(kwargs)
    if list_builtins:
        rows = [{'name': name, 'default_mod': modulus, 'description': BUILTIN_DESCRIPTIONS.get(name, '')}
                for name, modulus in sorted(BUILTIN_DEFAULTS.items())]
        with OutputFormat(output):
            print_table(['name', 'default_mod', 'description'], rows, titles=TITLES)
        return
    sequence = get_sequence(source, mod)
    click.echo(format_terms(sequence.terms(start, count)))


@cli.command('wall')
@sequence_source_options
@mod_option
@rows_option
@segment_option
@start_option
@click.option('--engine', type=click.Choice(sorted(ENGINES)), default='frame', show_default=True,
              help='naive stops at the first zero divisor, frame crosses windows')
@click.option('--check', type=click.IntRange(0), default=0, metavar='N',
              help='Compare N random entries with their Hankel determinants')
@click.option('--check-seed', type=int, default=0, show_default=True, help='Seed of the --check positions')
@out_option
@stacktrace_visible_option
@click.pass_context
def wall(ctx, mod, rows, segment, start, engine, check, check_seed, out, **kwargs):
    """Compute a number wall and dump it"""
    print_run_header(ctx)
    sequence = get_sequence(pop_source(kwargs), mod)
    result = compute_wall(sequence, rows, segment, start, engine)
    info('{} windows, {} clipped'.format(len(result.windows), len(result.windows) - len(result.complete_windows())))
    if check:
        rng = random.Random(check_seed)
        mismatches = []
        with Action('Checking {} entries against Hankel determinants..'.format(check)) as act:
            for _ in range(check):
                m = rng.randint(0, result.max_row)
                n = rng.choice(result.columns(m))
                if result[m, n] != hankel_oracle(sequence, m, n):
                    mismatches.append((m, n))
                    act.error('({}, {})'.format(m, n))
        if mismatches:
            fatal_error('{} of {} entries differ from their determinants'.format(len(mismatches), check))
    if out is None:
        click.echo(dump_wall(result), nl=False)
    else:
        path = output_path(out)
        write_wall(result, path)
        info('Wrote {}'.format(path))


@cli.command('render')
@sequence_source_options
@mod_option
@rows_option
@segment_option
@start_option
@click.option('--wall', 'wall_file', type=WALL_DUMP, metavar='PATH',
              help='Render a wall dump instead of computing a wall')
@click.option('--palette', type=click.Choice([mode.value for mode in PaletteMode]), default='grey',
              show_default=True)
@click.option('--scale', type=click.IntRange(1), help='Pixels per entry (default: render.scale)')
@click.option('--quarter-turn', is_flag=True, help='Rotate the image by a quarter turn')
@out_option
@stacktrace_visible_option
@click.pass_context
def render(ctx, mod, rows, segment, start, wall_file, palette, scale, quarter_turn, out, **kwargs):
    """Draw a wall as a PPM image: 0 white, 1 black, other values grey or coloured"""
    print_run_header(ctx)
    source = pop_source(kwargs)
    if wall_file is not None:
        result = wall_file
    else:
        result = compute_wall(get_sequence(source, mod), rows, segment, start)
    scale = scale or configuration.integer('render.scale')
    image = render_wall(result, Palette(result.domain, PaletteMode(palette)), scale, quarter_turn)
    write_output(out, image)


@cli.command('census')
@sequence_source_options
@mod_option
@rows_option
@segment_option
@start_option
@click.option('--region-rows', type=RANGE, metavar='A:B', help='Rows to count windows in (default: all)')
@click.option('--region-columns', type=RANGE, metavar='A:B', help='Columns to count windows in')
@click.option('--chi2', is_flag=True, help='Test the counts against a random sequence at level 0.01')
@output_option
@stacktrace_visible_option
@click.pass_context
def census(ctx, mod, rows, segment, start, region_rows, region_columns, chi2, output, **kwargs):
    """Count windows by size and compare with the expected counts of a random sequence"""
    print_run_header(ctx)
    sequence = get_sequence(pop_source(kwargs), mod)
    if not sequence.domain.is_field:
        raise click.UsageError('Window statistics need a prime modulus')
    q = sequence.domain.p
    result = compute_wall(sequence, rows, segment, start)
    region = Region(rows=region_rows or (0, result.max_row), columns=region_columns)
    counted = window_census(result, region)
    table = [{'g': g, 'count': count, 'zero_cells': counted.zero_cells[g],
              'expected': round(float(counted.total_entries * random_window_density(q, g)), 2),
              'deviation': round(counted.deviation(q, g), 2)}
             for g, count in counted.counts.items()]
    with OutputFormat(output):
        print_table(['g', 'count', 'zero_cells', 'expected', 'deviation'], table, titles=TITLES)
    info('{} entries in {}, {} clipped windows left out'.format(
        counted.total_entries, region.describe(), counted.truncated))
    if counted.terminal_zero_rows:
        warning('The wall ends in zero rows inside the region')
    if chi2:
        test = chi_square_test(counted, q)
        click.echo('chi2={:.3f} df={} critical={}'.format(test.statistic, test.degrees_of_freedom, test.critical))
        if not test.passed:
            fatal_error('Window counts are unlikely for a random sequence')
        ok('Window counts look random')


@cli.command('deficiency')
@sequence_source_options
@mod_option
@rows_option
@segment_option
@start_option
@click.option('--d', 'd', type=click.IntRange(1), required=True, help='Window size that ends the run')
@stacktrace_visible_option
@click.pass_context
def deficiency_command(ctx, mod, rows, segment, start, d, **kwargs):
    """Number of leading wall rows without windows of size d or more"""
    print_run_header(ctx)
    sequence = get_sequence(pop_source(kwargs), mod)
    if sequence.period is not None and segment is None:
        rows = sequence.period
    report = deficiency(compute_wall(sequence, rows, segment, start), d)
    click.echo(str(report))
    if not report.exact:
        warning('No window of size {} before row {}: depth is a lower bound'.format(d, report.depth))


@cli.command('search')
@click.option('--mod', 'q', type=DOMAIN, default='2', show_default=True, help='Prime modulus')
@click.option('--d', 'd', type=click.IntRange(1), required=True, help='Window size to avoid')
@click.option('--max-period', type=click.IntRange(1), help='Longest period tried (default: search.max_period)')
@click.option('--max-nodes', type=click.IntRange(1), help='Node budget (default: search.max_nodes)')
@stacktrace_visible_option
@click.pass_context
def search(ctx, q, d, max_period, max_nodes):
    """Search the periodic words whose walls avoid size d windows for longest"""
    print_run_header(ctx)
    if not q.is_field:
        raise click.BadParameter('search needs a prime modulus', param_hint='--mod')
    max_period = max_period or configuration.integer('search.max_period')
    max_nodes = max_nodes or configuration.integer('search.max_nodes')
    with Action('Searching periods 1..{} mod {} for d={}..'.format(max_period, q, d)):
        result = search_max_depth(q.p, d, max_period=max_period, max_nodes=max_nodes)
    if result.word is None:
        fatal_error('No word found')
    click.echo('{} {}'.format(format_terms(result.word), result.report))
    info('{} nodes'.format(result.nodes))


@cli.command('zerocheck')
@sequence_source_options
@mod_option
@rows_option
@segment_option
@start_option
@click.option('--rule', type=click.Choice(['pagoda', 'knight', 'none']), default='pagoda', show_default=True,
              help='pagoda: 2-adic rule for the zeros of the ternary Pagoda wall; knight: zeros a knight move apart')
@click.option('--region-rows', type=RANGE, metavar='A:B', help='Rows to look at (default: all)')
@click.option('--cone', metavar='APEX:CENTRE', type=RANGE,
              help='Restrict to the cone |n - CENTRE| <= m - APEX')
@stacktrace_visible_option
@click.pass_context
def zerocheck(ctx, mod, rows, segment, start, rule, region_rows, cone, **kwargs):
    """Where the zeros of a wall lie, and their density"""
    print_run_header(ctx)
    sequence = get_sequence(pop_source(kwargs), mod)
    result = compute_wall(sequence, rows, segment, start)
    region_rows = region_rows or (0, result.max_row)
    if cone is not None:
        region = Cone(rows=region_rows, apex=cone[0], centre=cone[1])
    else:
        region = Region(rows=region_rows)
    if rule == 'pagoda':
        violations = zero_location_check(result, region)
    elif rule == 'knight':
        violations = knight_spacing_violations(result, region)
    else:
        violations = []
    density = zero_density(result, region)
    click.echo('zero density {} ({:.4f}) over {}'.format(density, float(density), region.describe()))
    click.echo('{} violations'.format(len(violations)))
    for violation in violations[:10]:
        click.echo('  {}'.format(violation))
    if violations:
        fatal_error('Zeros break the {} rule'.format(rule))


@cli.command('powerfree')
@sequence_source_options
@mod_option
@start_option
@click.option('--terms', type=click.IntRange(1), default=100000, show_default=True)
@click.option('--power', type=click.Choice(['2', '3']), default='2', show_default=True,
              help='2 looks for squares, 3 for cubes')
@click.option('--max-square-len', type=click.IntRange(0), help='Allow powers with periods up to this')
@stacktrace_visible_option
@click.pass_context
def powerfree(ctx, mod, start, terms, power, max_square_len, **kwargs):
    """Check a prefix of a sequence for squares or cubes"""
    print_run_header(ctx)
    sequence = get_sequence(pop_source(kwargs), mod)
    with Action('Reading {} terms..'.format(terms)):
        word = sequence.terms(start, terms)
    report = power_free_check(word, power=int(power), max_square_len=max_square_len)
    kind = 'square' if report.power == 2 else 'cube'
    if report.free:
        ok('No {} with period >= {} in {} terms'.format(kind, report.min_period, report.length))
        return
    click.echo('{} {}s, longest period {}'.format(len(report.occurrences), kind, report.longest_period))
    for position, period in report.occurrences[:10]:
        click.echo('  position {} period {}'.format(position, period))
    fatal_error('Not {}-free'.format(kind))


@cli.command('survey')
@click.option('--primes', default=DEFAULT_SURVEY_PRIMES, show_default=True, help='Comma separated primes')
@click.option('--length', type=click.IntRange(1), default=1024, show_default=True, help='Terms walled')
@rows_option
@output_option
@stacktrace_visible_option
@click.pass_context
def survey(ctx, primes, length, rows, output):
    """Largest window of the Pagoda wall modulo each prime"""
    print_run_header(ctx)
    try:
        domains = [Domain.parse(prime) for prime in primes.split(',')]
    except InvalidModulus as e:
        raise click.BadParameter(str(e), param_hint='--primes')
    with Action('Walling {} terms of Pagoda modulo {} primes..'.format(length, len(domains))):
        found = pagoda_survey([domain.p for domain in domains if domain.is_field], length, rows)
    table = [{'prime': row.prime, 'residue': row.residue, 'rows': row.rows, 'windows': row.windows,
              'largest': row.largest, 'isolated': row.isolated_zeros_only} for row in found]
    with OutputFormat(output):
        print_table(['prime', 'residue', 'rows', 'windows', 'largest', 'isolated'], table,
                    titles=TITLES, styles=STYLES)


cli.add_command(cmd_config)
cli.add_command(cmd_tiling)


def main():
    HandleExceptions(cli)()


if __name__ == "__main__":
    main()
