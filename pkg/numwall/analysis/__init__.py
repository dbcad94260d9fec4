from .census import (ChiSquareResult, WindowCensus, chi_square_test,  # noqa: F401
                     expected_window_density, random_tail_density, random_window_density,
                     window_census)
from .deficiency import (DeficiencyReport, SearchResult, canonical_word, deficiency,  # noqa: F401
                         periodic_deficiency, search_max_depth)
from .region import Cone, Region, parse_range  # noqa: F401
from .zeros import (knight_spacing_violations, pagoda_survey, two_adic_valuation,  # noqa: F401
                    zero_density, zero_location_check)
