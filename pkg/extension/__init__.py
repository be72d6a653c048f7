from .general_linear import (
    LinearExtension,
    default_radius,
    extend_general_linear,
    find_centers,
    patch_for,
    required_points,
    tabulate,
)
from .local_solve import local_solve, solve_patches
from .patch_model import ComponentSolution, GlobalSolution, LocalSolution, Patch, PatchTables
from .pexider import PexiderReport, verify_pexider
from .stitch import overlap_graph, stitch
