from .group_model import MAX_EXHAUSTIVE_WORK, Decomposition, FiniteAbelianGroup, GroupFunction
from .homomorphisms import enumerate_homomorphisms, homomorphism_count
from .pexider import WeightedPexiderResult, check_weighted_pexider, first_violation, solve_pexider_unrestricted
