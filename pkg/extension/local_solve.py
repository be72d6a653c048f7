import functools
import logging
from fractions import Fraction
from typing import List, Sequence

from domains.rational import format_point, format_vector, vec_add, vec_sub, vec_sum
from equations.equation_model import AffineMap
from errors import ConstantMismatchError, DomainError, InconsistencyError
from run_management.run_processor import parallel_map
from .patch_model import LocalSolution, Patch, PatchTables

logger = logging.getLogger(__name__)


def local_solve(patch: Patch, tables: PatchTables) -> LocalSolution:
    """Recover A_x and the constants of a Pexider solution around one patch.

    Works with the differences f~(z) = f(z + sum x_i) - f(sum x_i) and
    g~_i(z) = g_i(x_i + z) - g_i(x_i) on the axis steps z = +-h e_j. The
    differences must coincide, A_x is read off g~_1(h e_j) / h, and the
    affine shape is checked on every step and every available step pair.
    """
    if tables.n != patch.n:
        raise DomainError(f"Tables hold {tables.n} g functions but the patch has n={patch.n}")
    base_sum = patch.base_sum
    f_base = tables.f(base_sum)
    g_base = [tables.g(i, x) for i, x in enumerate(patch.base)]
    steps = patch.steps()

    f_tilde = {z: vec_sub(tables.f(vec_add(base_sum, z)), f_base) for z in steps}
    g_tilde = [{z: vec_sub(tables.g(i, vec_add(x, z)), g_base[i]) for z in steps} for i, x in enumerate(patch.base)]

    for z in steps:
        reference = g_tilde[0][z]
        for i in range(1, patch.n):
            if g_tilde[i][z] != reference:
                raise InconsistencyError(
                    f"g~_1 and g~_{i + 1} disagree on step ({format_point(z)})",
                    step=format_point(z),
                    factors=[1, i + 1],
                    values=[format_vector(reference), format_vector(g_tilde[i][z])],
                )
        if f_tilde[z] != reference:
            raise InconsistencyError(
                f"f~ and g~_1 disagree on step ({format_point(z)})",
                step=format_point(z),
                values=[format_vector(f_tilde[z]), format_vector(reference)],
            )

    h = patch.radius
    columns = [tuple(c / h for c in g_tilde[0][z]) for z in steps[::2]]
    rows = tuple(tuple(column[r] for column in columns) for r in range(len(f_base)))
    linear = AffineMap(rows, tuple(Fraction(0) for _ in rows))

    for z in steps:
        if linear.linear(z) != g_tilde[0][z]:
            raise InconsistencyError(
                f"Local data is not affine on step ({format_point(z)})",
                step=format_point(z),
                values=[format_vector(g_tilde[0][z]), format_vector(linear.linear(z))],
            )

    # f~(z1 + z2) = g~_1(z1) + g~_2(z2) wherever f is sampled at the double step
    for z1 in steps:
        for z2 in steps:
            point = vec_add(base_sum, vec_add(z1, z2))
            if not tables.has_f(point):
                continue
            lhs = vec_sub(tables.f(point), f_base)
            rhs = vec_add(g_tilde[0][z1], g_tilde[1][z2])
            if lhs != rhs:
                raise InconsistencyError(
                    f"Pexider identity fails on steps ({format_point(z1)}) and ({format_point(z2)})",
                    steps=[format_point(z1), format_point(z2)],
                    lhs=format_vector(lhs),
                    rhs=format_vector(rhs),
                )

    u_xi = tuple(vec_sub(g_base[i], linear.linear(x)) for i, x in enumerate(patch.base))
    u_x = vec_sub(f_base, linear.linear(base_sum))
    constant_sum = vec_sum(u_xi, len(u_x))
    if u_x != constant_sum:
        raise ConstantMismatchError(
            "u_x differs from the sum of the u_{x,i}: f(sum x_i) != sum g_i(x_i) at the patch base",
            base=[format_point(x) for x in patch.base],
            u_x=format_vector(u_x),
            sum_u_xi=format_vector(constant_sum),
        )
    return LocalSolution(rows, u_x, u_xi)


def _solve_with(tables: PatchTables, patch: Patch) -> LocalSolution:
    return local_solve(patch, tables)


def solve_patches(patches: Sequence[Patch], tables: PatchTables) -> List[LocalSolution]:
    """Run local_solve on every patch; patches are independent."""
    logger.info(f"🔄 Solving {len(patches)} patches")
    return parallel_map(functools.partial(_solve_with, tables), patches)
