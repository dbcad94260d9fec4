"""
Functions, parameter types and decorators related to command line arguments
"""

# invalid-name is disabled to match the style of other click options
# pylint: disable=locally-disabled, invalid-name
import hashlib
import json
import os
from dataclasses import replace
from pathlib import Path
from typing import Optional

import click

import numwall
from .algebra import Domain
from .error_handling import HandleExceptions
from .exceptions import InvalidDigitsFile, InvalidModulus, InvalidSpecFile, InvalidWallDump, UnknownSequence
from .seqgen.sequences import (BUILTIN_DEFAULTS, D0LEC, SequenceSpec, builtin_sequence,
                               finite_segment, load_digits, parse_word, periodic_word)
from .seqgen.specfile import load_spec
from .wall.dump import dump_wall, load_wall
from .wall.model import Wall

OUTPUT_DIR_VARIABLE = 'NUMWALL_OUTPUT_DIR'


class DomainParamType(click.ParamType):
    name = 'modulus'

    def convert(self, value, param, ctx):
        if isinstance(value, Domain):
            return value
        try:
            return Domain.parse(value)
        except InvalidModulus as e:
            self.fail(str(e), param, ctx)


class WordParamType(click.ParamType):
    name = 'word'

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            word = parse_word(value)
        except ValueError:
            self.fail('"{}" is not a word of digits'.format(value), param, ctx)
        if not word:
            self.fail('the word must not be empty', param, ctx)
        return word


class SpecFileParamType(click.ParamType):
    name = 'spec_file'

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return load_spec(value)
        except FileNotFoundError:
            self.fail('"{}" not found'.format(value), param, ctx)
        except InvalidSpecFile as e:
            self.fail(str(e), param, ctx)


class DigitsFileParamType(click.ParamType):
    name = 'digits_file'

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return load_digits(value)
        except FileNotFoundError:
            self.fail('"{}" not found'.format(value), param, ctx)
        except InvalidDigitsFile as e:
            self.fail(str(e), param, ctx)


class WallDumpParamType(click.ParamType):
    name = 'wall_dump'

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return load_wall(value)
        except FileNotFoundError:
            self.fail('"{}" not found'.format(value), param, ctx)
        except InvalidWallDump as e:
            self.fail(str(e), param, ctx)


DOMAIN = DomainParamType()
WORD = WordParamType()
SPEC_FILE = SpecFileParamType()
DIGITS_FILE = DigitsFileParamType()
WALL_DUMP = WallDumpParamType()


def set_stacktrace_visible(ctx, param, value):  # pylint: disable=locally-disabled, unused-argument
    """
    Callback to define whether to display the stacktrace in case of an
    unhandled error.
    """
    HandleExceptions.stacktrace_visible = value


def sequence_source_options(function):
    """``--builtin``, ``--period``, ``--spec``, ``--digits`` and ``--seed``; exactly one source is allowed"""
    options = [
        click.option('--builtin', metavar='NAME',
                     help='Builtin sequence: {}'.format(', '.join(sorted(BUILTIN_DEFAULTS)))),
        click.option('--period', type=WORD, help='Periodic sequence given by one period, e.g. 111010'),
        click.option('--spec', 'spec_file', type=SPEC_FILE, metavar='PATH', help='D0LEC spec file'),
        click.option('--digits', 'digits_file', type=DIGITS_FILE, metavar='PATH', help='Raw digits file'),
        click.option('--periodic-digits', is_flag=True,
                     help='Read the digits file as one period instead of a finite segment'),
        click.option('--seed', type=int, default=1, show_default=True, help='Seed of the libran sequence'),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def resolve_sequence(builtin: Optional[str], period, spec_file, digits_file, periodic_digits: bool,
                     seed: int, mod: Optional[Domain]) -> SequenceSpec:
    """The one sequence the source options describe, in ``mod`` when given"""
    given = [name for name, value in (('--builtin', builtin), ('--period', period),
                                      ('--spec', spec_file), ('--digits', digits_file))
             if value is not None]
    if len(given) != 1:
        raise click.UsageError('Give exactly one sequence source (--builtin, --period, --spec or --digits), '
                               'got {}'.format(', '.join(given) or 'none'))
    if builtin is not None:
        try:
            return builtin_sequence(builtin, mod, seed=seed)
        except UnknownSequence as e:
            raise click.BadParameter(str(e), param_hint='--builtin')
    if spec_file is not None:
        if mod is not None and mod != spec_file.domain:
            spec_file = replace(spec_file, domain=mod)
        return D0LEC(spec=spec_file, name='spec')
    domain = mod or Domain.prime_field(2)
    if period is not None:
        return periodic_word(period, domain)
    if periodic_digits:
        return periodic_word(digits_file, domain)
    return finite_segment(digits_file, domain)


def output_path(path: str) -> Path:
    """``path``, under the default output directory when relative and one is set"""
    path = Path(path)
    directory = os.environ.get(OUTPUT_DIR_VARIABLE)
    if directory and not path.is_absolute():
        path = Path(directory) / path
        path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _canonical(value) -> str:
    if isinstance(value, Wall):
        return dump_wall(value)
    return repr(value)


def config_digest(params: dict) -> str:
    """SHA-256 of the canonical JSON form of the command parameters"""
    canonical = json.dumps(params, sort_keys=True, default=_canonical, separators=(',', ':'))
    return hashlib.sha256(canonical.encode()).hexdigest()


def print_run_header(ctx: click.Context):
    """The reproducibility line: version and digest of the command and its parameters"""
    params = dict(ctx.params, command=ctx.command_path)
    click.echo('numwall {} config={}'.format(numwall.__version__, config_digest(params)), err=True)


mod_option = click.option('--mod', type=DOMAIN, metavar='P|Z',
                          help='Prime modulus, or Z for the integers')

rows_option = click.option('--rows', type=click.IntRange(0), default=32, show_default=True,
                           help='Last wall row to compute')

segment_option = click.option('--segment', type=click.IntRange(1), metavar='LENGTH',
                              help='Wall a segment of LENGTH terms instead of the periodic wall')

start_option = click.option('--start', type=int, default=0, show_default=True,
                            help='Index of the first term of the segment')

out_option = click.option('--out', metavar='PATH',
                          help='Write to PATH instead of standard output')

output_option = click.option('-o', '--output',
                             type=click.Choice(['text', 'json', 'tsv']),
                             default='text',
                             help='Use alternative output format')

stacktrace_visible_option = click.option('--stacktrace-visible',
                                         is_flag=True,
                                         callback=set_stacktrace_visible,
                                         expose_value=False,
                                         help='Show stack trace instead of '
                                              'storing it')
