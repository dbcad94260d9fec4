from typing import Optional

import click
from click.exceptions import BadArgumentUsage

from ..configuration import DEFAULTS, configuration
from ..exceptions import InvalidConfigKey


@click.command('config')
@click.argument('key')
@click.argument('value', required=False)
@click.option('--unset', is_flag=True, help='Remove KEY, going back to its default')
def cmd_config(key: str, value: Optional[str], unset: bool):
    """
    Get and set numwall options. Known keys and their defaults:
    wall.integer_max_rows (32), search.max_period (12),
    search.max_nodes (1000000), render.scale (1), sentry.endpoint.
    """
    try:
        if unset:
            configuration.pop(key, None)
        elif value is None:
            stored = configuration.get(key, DEFAULTS.get(key))
            if stored is None:
                raise click.exceptions.Exit(1)
            click.echo(stored)
        else:
            if key in DEFAULTS:
                try:
                    int(value)
                except ValueError:
                    raise BadArgumentUsage('{} takes an integer, got "{}"'.format(key, value))
            configuration[key] = value
    except InvalidConfigKey as e:
        raise BadArgumentUsage(str(e))
