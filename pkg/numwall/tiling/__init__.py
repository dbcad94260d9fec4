"""
The ternary Pagoda wall as a substitution tiling by 13 tiles
"""

from .field import (TileField, find_seed, inflate, inflate_times, levels_for_radius,  # noqa: F401
                    paint)
from .tiles import Placement, TileSet, TileSpec, load_tiles, parse_tiles  # noqa: F401
from .transforms import (ALL_TRANSFORMS, DIAMOND, IDENTITY, Transform,  # noqa: F401
                         apply_transform, compose_transforms)
from .verify import (ClosureReport, IsolationReport, TilingReport, ZeroDensity,  # noqa: F401
                     closure_audit, isolated_zero_audit, markov_zero_density,
                     substitution_matrix, symmetry_audit, transform_closure_audit,
                     verify_tiling)
