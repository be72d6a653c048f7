from .characterize import characterize, homogeneity_field
from .equation_model import AffineMap, EquationSpec, HomogeneityField, SolutionFamily
from .verify import DEFAULT_SEED, DEFAULT_TRIALS, VerificationReport, verify_affine_solution
