from .census import DEFAULT_CENSUS, ROLFSEN, ROLFSEN_CENSUS, CensusRecord, load_census, save_census
from .rolfsen import is_alternating_knot, pd_code_string, rolfsen_census, rolfsen_names
