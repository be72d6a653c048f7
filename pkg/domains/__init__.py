from .domain_model import Box, Cone, Domain, Interval, WeightedImage
from .invariance import (
    InvarianceResult,
    SymmetricSubdomain,
    check_invariance,
    find_symmetric_subdomain,
    require_invariance,
    validate_alphas,
    weighted_image,
)
