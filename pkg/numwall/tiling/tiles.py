"""
Reading the tile table: per tile its gene (the four subtiles it inflates
into), its extn (the 13 wall entries it paints) and its symm (the
transforms fixing it)
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..exceptions import InvalidTileData
from .transforms import ALL_TRANSFORMS, DIAMOND, Transform, apply_transform

TILES_FILE = Path(__file__).resolve().parent.parent / 'data' / 'tiles.txt'

TILE_COUNT = 13
GENE_SLOTS = ('N', 'W', 'E', 'S')
# child centre offsets, in tile coordinates, of the gene slots
GENE_OFFSETS = {'N': (-2, 0), 'W': (0, -2), 'E': (0, 2), 'S': (2, 0)}

REFERENCE = re.compile(r'^(\d+)([A-Z]*)$')


@dataclass(frozen=True, order=True)
class Placement:
    tile: int
    transform: Transform = Transform()

    @classmethod
    def parse(cls, text: str) -> 'Placement':
        """``"7BJ"``, ``"1B"``, ``"12"``"""
        match = REFERENCE.match(text.strip().upper())
        if not match:
            raise ValueError('Bad tile reference {!r}'.format(text))
        return cls(int(match.group(1)), Transform.parse(match.group(2)))

    def __str__(self):
        return '{}{}'.format(self.tile, self.transform)


@dataclass(frozen=True)
class TileSpec:
    id: int
    gene: Tuple[Placement, Placement, Placement, Placement]
    extn: Tuple[int, ...]
    symm: Tuple[Transform, ...]

    def child(self, slot: str) -> Placement:
        return self.gene[GENE_SLOTS.index(slot)]

    def pattern(self, transform: Transform) -> Tuple[int, ...]:
        return apply_transform(self.extn, transform)

    @property
    def zeros(self) -> List[Tuple[int, int]]:
        return [offset for offset, value in zip(DIAMOND, self.extn) if value == 0]


class TileSet(dict):

    """Tiles by id"""

    def __missing__(self, key):
        raise KeyError('No tile {}'.format(key))

    @property
    def entry_counts(self) -> Tuple[int, int, int]:
        """Tiles, gene references and extn entries: 13, 52, 169 for a complete table"""
        return (len(self), sum(len(tile.gene) for tile in self.values()),
                sum(len(tile.extn) for tile in self.values()))


def _parse_gene(fields: List[str], path: str, tile: int) -> Tuple[Placement, ...]:
    slots = {}  # type: Dict[str, Placement]
    for item in fields:
        slot, sep, reference = item.partition('=')
        if not sep or slot not in GENE_SLOTS or slot in slots:
            raise InvalidTileData(path, 'tile {}: bad gene entry {!r}'.format(tile, item))
        try:
            slots[slot] = Placement.parse(reference)
        except ValueError as e:
            raise InvalidTileData(path, 'tile {}: {}'.format(tile, e))
    if len(slots) != len(GENE_SLOTS):
        raise InvalidTileData(path, 'tile {}: gene needs N, W, E and S'.format(tile))
    return tuple(slots[slot] for slot in GENE_SLOTS)


def _parse_extn(fields: List[str], path: str, tile: int) -> Tuple[int, ...]:
    widths = [len(field) for field in fields]
    if widths != [1, 3, 5, 3, 1] or not all(field.isdigit() for field in fields):
        raise InvalidTileData(path, 'tile {}: extn must be diamond rows of 1, 3, 5, 3, 1 digits'.format(tile))
    values = tuple(int(digit) for digit in ''.join(fields))
    if any(value > 2 for value in values):
        raise InvalidTileData(path, 'tile {}: extn entries are ternary'.format(tile))
    return values


def _parse_symm(fields: List[str], path: str, tile: int) -> Tuple[Transform, ...]:
    if fields == ['full']:
        return tuple(ALL_TRANSFORMS)
    try:
        return tuple(Transform.parse(code) for code in fields)
    except ValueError as e:
        raise InvalidTileData(path, 'tile {}: {}'.format(tile, e))


def parse_tiles(text: str, path: str = '<string>') -> TileSet:
    blocks = {}  # type: Dict[int, Dict[str, List[str]]]
    current = None  # type: Optional[int]
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        keyword, *fields = line.split()
        if keyword == 'tile':
            if len(fields) != 1 or not fields[0].isdigit():
                raise InvalidTileData(path, 'line {}: expected "tile <id>"'.format(number))
            current = int(fields[0])
            if current in blocks:
                raise InvalidTileData(path, 'line {}: tile {} defined twice'.format(number, current))
            blocks[current] = {}
        elif keyword in ('gene', 'extn', 'symm'):
            if current is None:
                raise InvalidTileData(path, 'line {}: {} before any tile'.format(number, keyword))
            blocks[current][keyword] = fields
        else:
            raise InvalidTileData(path, 'line {}: unknown keyword {!r}'.format(number, keyword))

    tiles = TileSet()
    for tile, block in sorted(blocks.items()):
        missing = {'gene', 'extn', 'symm'} - set(block)
        if missing:
            raise InvalidTileData(path, 'tile {} lacks {}'.format(tile, ', '.join(sorted(missing))))
        tiles[tile] = TileSpec(id=tile, gene=_parse_gene(block['gene'], path, tile),
                               extn=_parse_extn(block['extn'], path, tile),
                               symm=_parse_symm(block['symm'], path, tile))

    if tiles.entry_counts != (TILE_COUNT, 4 * TILE_COUNT, len(DIAMOND) * TILE_COUNT):
        raise InvalidTileData(path, 'expected {} tiles, found {} with {} gene references and {} extn entries'.format(
            TILE_COUNT, *tiles.entry_counts))
    if set(tiles) != set(range(1, TILE_COUNT + 1)):
        raise InvalidTileData(path, 'tile ids must be 1..{}'.format(TILE_COUNT))
    return tiles


def load_tiles(path: Union[str, Path, None] = None) -> TileSet:
    path = Path(path) if path is not None else TILES_FILE
    with path.open() as fd:
        return parse_tiles(fd.read(), str(path))
