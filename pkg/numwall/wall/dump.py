"""
Plain text wall dumps:

    #wall mod=3 mode=segment 2048 rows=512
    0 0 0 ...
    1 1 1 ...
    ...

one line per row from -2 down, ``.`` for cells outside a segment triangle.
A ``start=<s>`` token follows when a segment does not start at column 0.
"""

import re
from pathlib import Path
from typing import Union

from ..algebra import Domain
from ..exceptions import InternalInconsistency, InvalidModulus, InvalidWallDump
from .model import Wall, WallMode

HEADER = re.compile(r'^#wall mod=(?P<mod>\S+) mode=(?P<mode>periodic|segment) (?P<width>\d+) '
                    r'rows=(?P<rows>-?\d+)(?: start=(?P<start>-?\d+))?$')


def dump_wall(wall: Wall) -> str:
    header = '#wall mod={} mode={} {} rows={}'.format(wall.domain, wall.mode.value, wall.width, wall.max_row)
    if wall.start:
        header += ' start={}'.format(wall.start)
    lines = [header]
    for row in wall.rows:
        lines.append(' '.join('.' if value is None else str(value) for value in row))
    return '\n'.join(lines) + '\n'


def write_wall(wall: Wall, path: Union[str, Path]) -> None:
    with Path(path).open('w') as dump_file:
        dump_file.write(dump_wall(wall))


def _parse_row(line: str, wall: Wall, m: int, where: str):
    tokens = line.split()
    if len(tokens) != wall.width:
        raise InvalidWallDump(where, 'row {} has {} entries, expected {}'.format(m, len(tokens), wall.width))
    defined = set(wall.column_range(m))
    values = []
    for j, token in enumerate(tokens):
        if token == '.':
            if j in defined:
                raise InvalidWallDump(where, 'row {} is missing column {}'.format(m, wall.column_number(j)))
            values.append(None)
            continue
        if j not in defined:
            raise InvalidWallDump(where, 'row {} has a value outside the triangle'.format(m))
        try:
            value = int(token)
        except ValueError:
            raise InvalidWallDump(where, 'row {} has a bad entry {!r}'.format(m, token))
        if value != wall.domain.reduce(value):
            raise InvalidWallDump(where, '{} is not a canonical value mod {}'.format(value, wall.domain))
        values.append(value)
    return values


def read_wall(text: str, path: str = '<string>') -> Wall:
    """
    Rebuilds a wall from its dump, windows included. The windows are found
    again from the zero pattern, so a dump whose zeros are not square
    windows is rejected.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidWallDump(path, 'empty file')
    match = HEADER.match(lines[0].strip())
    if not match:
        raise InvalidWallDump(path, 'bad header {!r}'.format(lines[0]))
    try:
        domain = Domain.parse(match.group('mod'))
    except InvalidModulus as error:
        raise InvalidWallDump(path, str(error))
    mode = WallMode(match.group('mode'))
    width = int(match.group('width'))
    rows = int(match.group('rows'))
    start = int(match.group('start') or 0)
    if width < 1 or rows < 0:
        raise InvalidWallDump(path, 'a wall needs at least one column and row 0')
    if mode is WallMode.PERIODIC and start:
        raise InvalidWallDump(path, 'periodic walls have no start column')
    if len(lines) != rows + 4:
        raise InvalidWallDump(path, 'expected {} rows, found {}'.format(rows + 3, len(lines) - 1))

    wall = Wall(domain, mode, width, start)
    for m, expected in ((-2, 0), (-1, 1)):
        tokens = lines[m + 3].split()
        if tokens != [str(expected)] * width:
            raise InvalidWallDump(path, 'row {} must be all {}'.format(m, expected))
    for m in range(0, rows + 1):
        if wall.terminal_zero_row is not None:
            raise InvalidWallDump(path, 'rows follow the terminal zero row {}'.format(wall.terminal_zero_row))
        values = _parse_row(lines[m + 3], wall, m, '{}:{}'.format(path, m + 4))
        try:
            wall.append_row(values)
        except InternalInconsistency as error:
            raise InvalidWallDump(path, str(error))
    wall.finish()
    return wall


def load_wall(path: Union[str, Path]) -> Wall:
    path = Path(path)
    with path.open() as dump_file:
        return read_wall(dump_file.read(), str(path))
