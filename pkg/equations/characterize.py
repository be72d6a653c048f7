import logging
from fractions import Fraction
from typing import Sequence

from domains.invariance import validate_alphas
from domains.rational import format_rational
from .equation_model import EquationSpec, HomogeneityField, SolutionFamily

logger = logging.getLogger(__name__)

NOT_REPRESENTABLE = (
    "non-zero linear parts with A(alpha_i x) = beta_i A(x) and alpha_i != beta_i are not "
    "representable as rational matrices; within this model only A = 0 remains"
)


# Solution family of f(sum alpha_i x_i) = sum beta_i f(x_i)
def characterize(spec: EquationSpec) -> SolutionFamily:
    """Classify the solutions f = A + b of an equation spec."""
    offset_free = spec.beta_sum == 1
    # A rational matrix is alpha-homogeneous for every rational alpha, so
    # A(alpha_i x) = beta_i A(x) reduces to (alpha_i - beta_i) A = 0
    linear_part_allowed = all(a == b for a, b in zip(spec.alphas, spec.betas))

    notes = []
    if linear_part_allowed:
        notes.append("any rational matrix A is admitted")
    else:
        notes.append(NOT_REPRESENTABLE)
    if offset_free:
        notes.append("sum beta_i = 1, so the offset b is arbitrary")
    else:
        notes.append(f"sum beta_i = {format_rational(spec.beta_sum)} != 1 forces b = 0 (u = u * sum beta_i)")

    family = SolutionFamily(
        linear_part_allowed=linear_part_allowed,
        offset_free=offset_free,
        forced_offset=None if offset_free else Fraction(0),
        homogeneity_constraints=list(zip(spec.alphas, spec.betas)),
        field_generators=list(spec.alphas),
        note="; ".join(notes),
    )
    logger.debug(f"📐 Characterized n={spec.n}: linear={linear_part_allowed}, offset_free={offset_free}")
    return family


def homogeneity_field(alphas: Sequence) -> HomogeneityField:
    """Homogeneity the linear part gets for free from the alpha coefficients."""
    generators = list(validate_alphas(alphas))
    factors = set()
    for a in generators:
        # A(x) = A(alpha (x / alpha)) = alpha A(x / alpha)
        factors.update((a, 1 / a))
        for b in generators:
            factors.update((a * b, a / b))
    statement = (
        "A is lambda-homogeneous for every lambda in Q("
        + ", ".join(format_rational(g) for g in generators)
        + ") = Q; with additivity, A is Q-linear"
    )
    return HomogeneityField(generators, sorted(factors), statement)
