"""
The order 16 point group acting on tiles: a spatial part (A identity,
B reflection n -> -n, C reflection m -> -m, D half turn) times a colour part
(I identity, J negate odd rows, K negate odd columns, L negate where exactly
one of row and column is odd). Both parts are Klein four-groups, so a
transform is a pair of bit masks and composition is exclusive or.

Tile centres sit on even rows and columns, so parity relative to a tile
centre is the parity in the wall.
"""

from dataclasses import dataclass
from typing import List, Tuple

SPATIAL_CODES = 'ABCD'
COLOUR_CODES = 'IJKL'

# bit 1 reflects n (or, as colour, touches odd n); bit 2 reflects m (odd m)
_SPATIAL_BITS = {'A': 0, 'B': 1, 'C': 2, 'D': 3}
_COLOUR_BITS = {'I': 0, 'K': 1, 'J': 2, 'L': 3}
_SPATIAL_NAMES = {bits: code for code, bits in _SPATIAL_BITS.items()}
_COLOUR_NAMES = {bits: code for code, bits in _COLOUR_BITS.items()}

Offset = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Transform:
    spatial: int = 0
    colour: int = 0

    @classmethod
    def parse(cls, code: str) -> 'Transform':
        """``"BJ"``, ``"B"``, ``"J"`` or ``""``: missing parts are A and I"""
        spatial = colour = 0
        seen = set()
        for letter in code.upper():
            if letter in seen:
                raise ValueError('Repeated letter in transform code {!r}'.format(code))
            seen.add(letter)
            if letter in _SPATIAL_BITS and not seen & set(COLOUR_CODES):
                spatial = _SPATIAL_BITS[letter]
            elif letter in _COLOUR_BITS:
                colour = _COLOUR_BITS[letter]
            else:
                raise ValueError('Bad transform code {!r}'.format(code))
        if len(seen & set(SPATIAL_CODES)) > 1 or len(seen & set(COLOUR_CODES)) > 1:
            raise ValueError('Bad transform code {!r}'.format(code))
        return cls(spatial, colour)

    def __str__(self):
        return _SPATIAL_NAMES[self.spatial] + _COLOUR_NAMES[self.colour]

    def __repr__(self):
        return 'Transform({})'.format(self)

    def __matmul__(self, other: 'Transform') -> 'Transform':
        return compose_transforms(self, other)

    @property
    def is_identity(self) -> bool:
        return not self.spatial and not self.colour

    def move(self, offset: Offset) -> Offset:
        """Where the spatial part sends an offset from the tile centre"""
        dm, dn = offset
        if self.spatial & 2:
            dm = -dm
        if self.spatial & 1:
            dn = -dn
        return dm, dn

    def sign(self, m: int, n: int) -> int:
        """-1 where the colour part negates the entry at wall position (m, n)"""
        flips = 0
        if self.colour & 2 and m % 2:
            flips += 1
        if self.colour & 1 and n % 2:
            flips += 1
        return -1 if flips % 2 else 1


IDENTITY = Transform()
ALL_TRANSFORMS = [Transform(spatial, colour) for spatial in range(4) for colour in range(4)]  # type: List[Transform]


def compose_transforms(a: Transform, b: Transform) -> Transform:
    """``b`` followed by ``a``"""
    return Transform(a.spatial ^ b.spatial, a.colour ^ b.colour)


def inverse(transform: Transform) -> Transform:
    return transform


# the extn diamond, in printed order: rows of 1, 3, 5, 3, 1 entries
DIAMOND = [(dm, dn) for dm in range(-2, 3) for dn in range(-2, 3) if abs(dm) + abs(dn) <= 2]  # type: List[Offset]
DIAMOND_INDEX = {offset: index for index, offset in enumerate(DIAMOND)}


def apply_transform(pattern: Tuple[int, ...], transform: Transform, modulus: int = 3) -> Tuple[int, ...]:
    """
    The diamond ``pattern`` as painted under ``transform``: each entry moves
    with the spatial part, then the colour part negates it modulo
    ``modulus`` on odd rows or columns
    """
    if len(pattern) != len(DIAMOND):
        raise ValueError('A diamond pattern has {} entries'.format(len(DIAMOND)))
    result = [0] * len(DIAMOND)
    for index, offset in enumerate(DIAMOND):
        target = transform.move(offset)
        result[DIAMOND_INDEX[target]] = transform.sign(*target) * pattern[index] % modulus
    return tuple(result)
