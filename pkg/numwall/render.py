"""
Walls as binary PPM images, one square of ``scale`` pixels per entry with
row -2 at the top
"""

import colorsys
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from .algebra import Domain
from .wall.model import Wall

RGB = Tuple[int, int, int]

WHITE = (255, 255, 255)
BLACK = (0, 0, 0)
GREY = (128, 128, 128)
# outside the triangle a segment determines
BACKGROUND = (173, 216, 230)

RAINBOW = (
    WHITE, BLACK,
    (255, 0, 0),      # red
    (0, 255, 0),      # green
    (0, 0, 255),      # blue
    (255, 255, 0),    # yellow
    (0, 255, 255),    # cyan
    (255, 0, 255),    # magenta
    (255, 165, 0),    # orange
    (128, 0, 128),    # purple
    (165, 42, 42),    # brown
    (255, 192, 203),  # pink
    (128, 128, 0),    # olive
)


class PaletteMode(str, Enum):
    GREY = 'grey'
    RAINBOW = 'rainbow'


class Palette:

    """
    Colours of the values of one domain. Zero is white and one black in
    both modes; grey spreads the other residues over the grey levels,
    rainbow gives them fixed colours and falls back to evenly spaced hues
    past the table. Integer walls are drawn by sign.
    """

    def __init__(self, domain: Domain, mode: PaletteMode = PaletteMode.GREY):
        self.domain = domain
        self.mode = PaletteMode(mode)

    def colour(self, value: Optional[int]) -> RGB:
        if value is None:
            return BACKGROUND
        if value == 0:
            return WHITE
        if not self.domain.is_field:
            return BLACK if value > 0 else GREY
        p = self.domain.p
        if value == 1:
            return BLACK
        if self.mode is PaletteMode.GREY:
            level = round(255 * (value - 1) / (p - 1))
            return level, level, level
        if value < len(RAINBOW):
            return RAINBOW[value]
        red, green, blue = colorsys.hsv_to_rgb((value - len(RAINBOW)) / (p - len(RAINBOW)), 1.0, 0.8)
        return round(255 * red), round(255 * green), round(255 * blue)


def wall_pixels(wall: Wall, palette: Palette, scale: int = 1, quarter_turn: bool = False) -> np.ndarray:
    if scale < 1:
        raise ValueError('scale must be at least 1')
    rows = wall.max_row + 3
    pixels = np.empty((rows, wall.width, 3), dtype=np.uint8)
    pixels[:] = BACKGROUND
    for m in range(-2, wall.max_row + 1):
        row = wall.row(m)
        for j in wall.column_range(m):
            pixels[m + 2, j] = palette.colour(row[j])
    if scale > 1:
        pixels = pixels.repeat(scale, axis=0).repeat(scale, axis=1)
    if quarter_turn:
        pixels = np.rot90(pixels)
    return pixels


def render_wall(wall: Wall, palette: Optional[Palette] = None, scale: int = 1,
                quarter_turn: bool = False) -> bytes:
    """
    P6 image of ``wall``: ``(max_row + 3) * scale`` rows of
    ``width * scale`` pixels, or the other way round after a quarter turn
    """
    palette = palette or Palette(wall.domain)
    pixels = np.ascontiguousarray(wall_pixels(wall, palette, scale, quarter_turn))
    height, width = pixels.shape[:2]
    header = 'P6\n{} {}\n255\n'.format(width, height).encode('ascii')
    return header + pixels.tobytes()
