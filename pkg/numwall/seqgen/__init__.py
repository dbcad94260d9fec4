"""
Sequence generation: constant-width substitutions, closed forms and the
builtin catalogue
"""

from .closed_forms import knight, libran, pagoda, rook, rueppel, thue_morse  # noqa: F401
from .morphism import (D0LECSpec, Morphism, d0l_generate, d0lec_extend,  # noqa: F401
                       fixed_point, fixed_point_term)
from .powerfree import PowerReport, power_free_check  # noqa: F401
from .sequences import (BUILTIN_DEFAULTS, Builtin, D0LEC, FiniteSegment,  # noqa: F401
                        PeriodicWord, SequenceSpec, builtin_sequence, finite_segment,
                        load_digits, parse_digits, parse_word, periodic_word)
from .specfile import dump_spec, load_spec, parse_spec  # noqa: F401
