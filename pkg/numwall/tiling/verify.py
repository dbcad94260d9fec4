"""
Checks of the ternary Pagoda tiling against the wall it describes, and the
zero density that follows from its substitution matrix
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Set, Tuple

from sympy import Matrix, Rational, eye

from ..algebra import Domain
from ..exceptions import ReducibleAmbiguity
from ..seqgen.sequences import builtin_sequence
from ..wall.frame import wall_frame
from ..wall.model import Position, Wall
from .field import ORIGIN_ROW, TileField, find_seed, inflate_times, levels_for_radius, paint, to_wall
from .tiles import TileSet, load_tiles
from .transforms import ALL_TRANSFORMS, DIAMOND, Transform, apply_transform

WIDTH = 4
AUDIT_LEVEL = 6
# weight of a diamond entry: 1 inside, 1/2 on an edge (two tiles), 1/4 at a tip (four tiles)
ENTRY_WEIGHTS = tuple(Rational(1) if abs(dx) + abs(dy) <= 1 else
                      Rational(1, 2) if abs(dx) == abs(dy) else Rational(1, 4)
                      for dx, dy in DIAMOND)
WEIGHT_PER_TILE = sum(ENTRY_WEIGHTS)


def pagoda_wall(radius: int) -> Wall:
    """The ternary Pagoda wall far enough around the tiling origin to cover ``radius``"""
    seq = builtin_sequence('pagoda', Domain.prime_field(3))
    return wall_frame(seq, radius + ORIGIN_ROW, segment=(-2 * radius, 4 * radius + 1))


@dataclass
class ClosureReport:
    references: int
    unresolved: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.unresolved


def closure_audit(tiles: TileSet) -> ClosureReport:
    """Every gene reference names one of the tiles"""
    report = ClosureReport(references=0)
    for tile in tiles.values():
        for child in tile.gene:
            report.references += 1
            if child.tile not in tiles:
                report.unresolved.append((tile.id, str(child)))
    return report


def symmetry_audit(tiles: TileSet) -> List[Tuple[int, Transform]]:
    """Declared symmetries that do not fix their tile; empty when all hold"""
    return [(tile.id, transform) for tile in tiles.values() for transform in tile.symm
            if tile.pattern(transform) != tile.extn]


def transform_closure_audit() -> List[Tuple[Transform, Transform]]:
    """
    Pairs whose composition, applied to a generic diamond, differs from
    applying them one after the other
    """
    generic = tuple(index % 3 for index in range(len(DIAMOND)))
    return [(a, b) for a in ALL_TRANSFORMS for b in ALL_TRANSFORMS
            if apply_transform(apply_transform(generic, b), a) != apply_transform(generic, a @ b)]


@dataclass
class TilingReport:
    radius: int
    levels: int
    seed: TileField
    compared: int = 0
    mismatches: List[Tuple[Position, int, int]] = field(default_factory=list)
    uncovered: List[Position] = field(default_factory=list)
    closure: Optional[ClosureReport] = None
    symmetry: List[Tuple[int, Transform]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (not self.mismatches and not self.uncovered and not self.symmetry and
                (self.closure is None or self.closure.passed))


def verify_tiling(radius: int, levels: Optional[int] = None, tiles: Optional[TileSet] = None,
                  wall: Optional[Wall] = None) -> TilingReport:
    """
    Grows the tiling from its seed, paints it and compares every painted
    entry from row -2 down within taxicab distance ``radius`` of the origin
    with the ternary Pagoda wall
    """
    if radius < 1:
        raise ValueError('radius must be at least 1')
    tiles = tiles or load_tiles()
    wall = wall or pagoda_wall(radius)
    if levels is None:
        levels = levels_for_radius(radius)
    seed = find_seed(tiles, wall)
    painted = paint(inflate_times(seed, tiles, levels), tiles)

    report = TilingReport(radius=radius, levels=levels, seed=seed,
                          closure=closure_audit(tiles), symmetry=symmetry_audit(tiles))
    for x in range(-radius, radius + 1):
        span = radius - abs(x)
        for y in range(-span, span + 1):
            m, n = to_wall(x, y)
            if m < ORIGIN_ROW:
                continue
            expected = wall.get(m, n)
            if expected is None:
                continue
            value = painted.get((m, n))
            if value is None:
                report.uncovered.append((m, n))
                continue
            report.compared += 1
            if value != expected:
                report.mismatches.append(((m, n), value, expected))
    return report


def _adjacent(a: Position, b: Position) -> bool:
    return a != b and abs(a[0] - b[0]) <= 1 and abs(a[1] - b[1]) <= 1


@dataclass
class IsolationReport:
    failing_tiles: List[int]
    boundary_tiles: List[int]
    adjacent_pairs: List[Tuple[Position, Position]] = field(default_factory=list)
    misplaced_boundary_zeros: List[Position] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Neighbouring zeros only inside boundary tiles, which keep them above row -1"""
        return (set(self.failing_tiles) <= set(self.boundary_tiles) and
                not self.adjacent_pairs and not self.misplaced_boundary_zeros)


def isolated_zero_audit(tiles: Optional[TileSet] = None, level: int = AUDIT_LEVEL,
                        boundary_tiles: Iterable[int] = (1, 2)) -> IsolationReport:
    """
    Tiles with two neighbouring zeros in their own diamond, then the painted
    field ``level`` inflations out: zeros from row 0 on must be isolated
    across tile boundaries as well, and the ``boundary_tiles`` may only put
    their zeros above row -1
    """
    tiles = tiles or load_tiles()
    boundary = sorted(boundary_tiles)
    failing = [tile.id for tile in tiles.values()
               if any(_adjacent(a, b) for a in tile.zeros for b in tile.zeros)]
    report = IsolationReport(failing_tiles=failing, boundary_tiles=boundary)

    seed = find_seed(tiles, pagoda_wall(8))
    tile_field = inflate_times(seed, tiles, level)
    painted = paint(tile_field, tiles)
    zeros = {position for position, value in painted.items() if value == 0 and position[0] >= 0}
    for m, n in sorted(zeros):
        for neighbour in ((m, n + 1), (m + 1, n - 1), (m + 1, n), (m + 1, n + 1)):
            if neighbour in zeros:
                report.adjacent_pairs.append(((m, n), neighbour))

    for centre, placement in tile_field:
        if placement.tile not in boundary:
            continue
        pattern = tiles[placement.tile].pattern(placement.transform)
        for (dx, dy), value in zip(DIAMOND, pattern):
            position = to_wall(centre[0] + dx, centre[1] + dy)
            if value == 0 and position[0] > ORIGIN_ROW:
                report.misplaced_boundary_zeros.append(position)
    return report


def substitution_matrix(tiles: TileSet, ids: Optional[List[int]] = None) -> Matrix:
    """``M[i, j]``: how many of the four children of tile ``ids[j]`` are tile ``ids[i]``"""
    ids = ids or sorted(tiles)
    index = {tile: position for position, tile in enumerate(ids)}
    matrix = Matrix.zeros(len(ids), len(ids))
    for j, tile in enumerate(ids):
        for child in tiles[tile].gene:
            if child.tile not in index:
                raise ValueError('Tile {} has a child {} outside {}'.format(tile, child.tile, ids))
            matrix[index[child.tile], j] += 1
    return matrix


def closed_classes(matrix: Matrix) -> List[Set[int]]:
    """Communicating classes of the child relation that nothing leaves, as matrix indices"""
    size = matrix.shape[0]
    reach = []
    for start in range(size):
        seen = {start}
        stack = [start]
        while stack:
            j = stack.pop()
            for i in range(size):
                if matrix[i, j] and i not in seen:
                    seen.add(i)
                    stack.append(i)
        reach.append(seen)
    classes = []  # type: List[Set[int]]
    for start in range(size):
        members = {i for i in reach[start] if start in reach[i]}
        if reach[start] == members and members not in classes:
            classes.append(members)
    return classes


def zero_weight(tiles: TileSet, tile: int) -> Rational:
    """Zeros of the tile, counting shared entries by the share a tile owns"""
    return sum((weight for weight, value in zip(ENTRY_WEIGHTS, tiles[tile].extn) if value == 0), Rational(0))


@dataclass
class ZeroDensity:
    density: Fraction
    bulk: List[int]
    frequencies: Dict[int, Fraction]


def _fraction(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def markov_zero_density(tiles: Optional[TileSet] = None, ids: Optional[List[int]] = None) -> ZeroDensity:
    """
    Zero density of the tiled wall. The Perron vector of the substitution
    matrix on its bulk class, the closed class of tiles that are not all
    zero, gives the tile frequencies; each tile contributes its weighted
    zero count out of 8 weighted entries. Restricting to ``ids`` (a set
    closed under inflation) studies a sub-tiling.
    """
    tiles = tiles or load_tiles()
    ids = ids or sorted(tiles)
    matrix = substitution_matrix(tiles, ids)
    classes = closed_classes(matrix)
    bulk = [members for members in classes
            if not all(zero_weight(tiles, ids[i]) == WEIGHT_PER_TILE for i in members)]
    if not bulk:
        bulk = classes
    if len(bulk) != 1:
        raise ReducibleAmbiguity('Substitution matrix has {} candidate bulk classes: {}'.format(
            len(bulk), [sorted(ids[i] for i in members) for members in bulk]))

    members = sorted(bulk[0])
    block = matrix.extract(members, members)
    vectors = (block - WIDTH * eye(len(members))).nullspace()
    if len(vectors) != 1:
        raise ReducibleAmbiguity('Eigenvalue {} has {} eigenvectors on the bulk class'.format(WIDTH, len(vectors)))
    vector = vectors[0] / sum(vectors[0])
    frequencies = {ids[i]: vector[position] for position, i in enumerate(members)}
    density = sum((frequency * zero_weight(tiles, tile) for tile, frequency in frequencies.items()),
                  Rational(0)) / WEIGHT_PER_TILE
    return ZeroDensity(density=_fraction(density), bulk=sorted(frequencies),
                       frequencies={tile: _fraction(value) for tile, value in sorted(frequencies.items())})
