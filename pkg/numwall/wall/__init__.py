from .dump import dump_wall, load_wall, read_wall, write_wall  # noqa: F401
from .frame import (cross_entry, cross_window, frame_values, south_entry,  # noqa: F401
                    verify_window, wall_frame, window_ratios)
from .model import Wall, WallMode, Window, start_wall  # noqa: F401
from .naive import sylvester_defects, wall_naive  # noqa: F401
from .oracle import hankel_oracle  # noqa: F401
