"""
numwall's root command with flags common to all sub-commands
"""

import click
from clickclick import AliasedGroup

import numwall

CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])


def print_version(ctx, param, value):
    """
    Prints the current numwall version.
    """
    assert param.name == "version"
    if not value or ctx.resilient_parsing:
        return

    click.echo("numwall {}".format(numwall.__version__))
    ctx.exit()


@click.group(cls=AliasedGroup, context_settings=CONTEXT_SETTINGS)
@click.option(
    "-V",
    "--version",
    is_flag=True,
    callback=print_version,
    expose_value=False,
    is_eager=True,
    help="Print the current version number and exit.",
)
def cli():
    """
    Number walls of integer and modular sequences: compute them past their
    zero windows, draw them, count their windows and check the ternary
    Pagoda tiling.

    Sub command can be added by using `cli.add_command(SUB_COMMAND_FUNCTION)`
    or using the `@cli.command()` decorator
    """
