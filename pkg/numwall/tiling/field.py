"""
Fields of placed tiles: inflation, painting and the seed the ternary Pagoda
tiling grows from.

Tiles live in tile coordinates ``(x, y) = (m + 2, n)``, so the tiling
origin, wall entry ``(-2, 0)``, is ``(0, 0)``. Tile centres have even
coordinates with ``x + y = 2 (mod 4)``; the four tiles around the origin form
the seed.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from ..exceptions import OverlapConflict, SeedNotStable
from ..wall.model import Position, Wall
from .tiles import GENE_OFFSETS, GENE_SLOTS, Placement, TileSet
from .transforms import ALL_TRANSFORMS, DIAMOND

Centre = Tuple[int, int]

ORIGIN_ROW = -2
SEED_CENTRES = ((-2, 0), (0, -2), (0, 2), (2, 0))


def to_wall(x: int, y: int) -> Position:
    return x + ORIGIN_ROW, y


def to_tile(m: int, n: int) -> Centre:
    return m - ORIGIN_ROW, n


@dataclass
class TileField:
    level: int = 0
    placements: Dict[Centre, Placement] = field(default_factory=dict)

    def __len__(self):
        return len(self.placements)

    def __iter__(self) -> Iterator[Tuple[Centre, Placement]]:
        return iter(sorted(self.placements.items()))

    def counts(self) -> Dict[int, int]:
        counts = {}  # type: Dict[int, int]
        for placement in self.placements.values():
            counts[placement.tile] = counts.get(placement.tile, 0) + 1
        return dict(sorted(counts.items()))


def children(centre: Centre, placement: Placement, tiles: TileSet) -> Iterator[Tuple[Centre, Placement]]:
    """
    The four placements replacing ``placement`` one level down: the gene of
    its tile moved and recoloured by its transform, centred around twice
    its centre
    """
    transform = placement.transform
    for slot, child in zip(GENE_SLOTS, tiles[placement.tile].gene):
        dx, dy = transform.move(GENE_OFFSETS[slot])
        yield ((2 * centre[0] + dx, 2 * centre[1] + dy),
               Placement(child.tile, transform @ child.transform))


def inflate(tile_field: TileField, tiles: TileSet) -> TileField:
    inflated = TileField(level=tile_field.level + 1)
    for centre, placement in tile_field:
        for child_centre, child in children(centre, placement, tiles):
            inflated.placements[child_centre] = child
    return inflated


def inflate_times(tile_field: TileField, tiles: TileSet, levels: int) -> TileField:
    for _ in range(levels):
        tile_field = inflate(tile_field, tiles)
    return tile_field


def painted_cells(centre: Centre, placement: Placement, tiles: TileSet) -> Iterator[Tuple[Position, int]]:
    pattern = tiles[placement.tile].pattern(placement.transform)
    for (dx, dy), value in zip(DIAMOND, pattern):
        yield to_wall(centre[0] + dx, centre[1] + dy), value


def paint(tile_field: TileField, tiles: TileSet) -> Dict[Position, int]:
    """
    Wall entries ``(m, n) -> value mod 3`` painted by the field. Neighbouring
    tiles share their boundary entries and must agree on them.
    """
    grid = {}  # type: Dict[Position, int]
    for centre, placement in tile_field:
        for position, value in painted_cells(centre, placement, tiles):
            existing = grid.setdefault(position, value)
            if existing != value:
                raise OverlapConflict(position, existing, value)
    return grid


def levels_for_radius(radius: int) -> int:
    """Inflations after which the seed covers the diamond of ``radius`` around the origin"""
    levels = 0
    while 4 * 2 ** levels < radius:
        levels += 1
    return levels


def _reproduces(centre: Centre, placement: Placement, tiles: TileSet) -> bool:
    """Whether one of the children of ``placement`` is itself, in the same place"""
    return any(child_centre == centre and child == placement
               for child_centre, child in children(centre, placement, tiles))


def _matches_wall(centre: Centre, placement: Placement, tiles: TileSet, wall: Wall) -> bool:
    for (m, n), value in painted_cells(centre, placement, tiles):
        if m < ORIGIN_ROW:
            continue
        if wall.get(m, n) != value:
            return False
    return True


def seed_candidates(tiles: TileSet, wall: Wall) -> Dict[Centre, List[Placement]]:
    """Per seed centre, the self-reproducing placements that agree with ``wall``"""
    candidates = {}
    for centre in SEED_CENTRES:
        candidates[centre] = sorted(
            placement
            for placement in (Placement(tile, transform) for tile in tiles for transform in ALL_TRANSFORMS)
            if _reproduces(centre, placement, tiles) and _matches_wall(centre, placement, tiles, wall))
    return candidates


def find_seed(tiles: TileSet, wall: Wall) -> TileField:
    """
    The four placements around the origin that reproduce themselves under
    inflation, match ``wall`` from row -2 down and agree with each
    other; the smallest such choice when several remain
    """
    candidates = seed_candidates(tiles, wall)
    for centre, found in candidates.items():
        if not found:
            raise SeedNotStable('No self-reproducing tile fits the wall at tile centre {}'.format(centre))
    for choice in itertools.product(*(candidates[centre] for centre in SEED_CENTRES)):
        seed = TileField(placements=dict(zip(SEED_CENTRES, choice)))
        try:
            paint(seed, tiles)
        except OverlapConflict:
            continue
        return seed
    raise SeedNotStable('The self-reproducing tiles around the origin never fit together')
