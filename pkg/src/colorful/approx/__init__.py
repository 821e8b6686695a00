"""Approximation algorithms for m-colorful choices."""

from .halving import half_dimreduce, half_linalg, sign_select, split_in_half
from .rebalance import ParameterFunctions, balanced_partition, check_feasible, epsilon_params, rebalance
from .representatives import Representatives, line_in_cone, replace_representative, representatives
from .two_color import achieved_bound, best_k, stated_bound, two_color
