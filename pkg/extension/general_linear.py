"""Extension of general linear equation solutions through the Pexider machinery.

With g_i(x) = beta_i f(x / alpha_i), a solution f of
f(sum alpha_i x_i) = sum beta_i f(x_i) on K turns into a Pexider solution
f(sum y_i) = sum g_i(y_i) on U = alpha_1 K x ... x alpha_n K. Patches are
centred at (alpha_1 p, ..., alpha_n p) for sample centres p in K, so every
probe of g_i lands on a pre-image p +- (h / alpha_i) e_j where f is sampled
exactly and no interpolation is needed.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from domains.domain_model import Box, Domain, Interval
from domains.invariance import require_invariance
from domains.rational import (
    Vector,
    format_point,
    format_rational,
    format_vector,
    is_infinite,
    unit_vector,
    vec_add,
    vec_scale,
)
from equations.equation_model import AffineMap, EquationSpec
from errors import (
    ConstantMismatchError,
    DomainError,
    InconsistencyError,
    ModelLimitError,
    OffsetContradictionError,
    PreconditionError,
    StitchError,
    TableError,
)
from .local_solve import solve_patches
from .patch_model import GlobalSolution, Patch, PatchTables
from .stitch import stitch

logger = logging.getLogger(__name__)

DEFAULT_RADIUS_FRACTION = Fraction(1, 8)


def _boundary_distance(domain: Domain, point: Vector):
    if isinstance(domain, Interval):
        return domain.distance_to_boundary(point[0])
    if isinstance(domain, Box):
        return domain.distance_to_boundary(point)
    raise PreconditionError("Cone domains need an explicit patch radius")


def default_radius(spec: EquationSpec, domain: Domain, centers: Sequence[Vector]) -> Fraction:
    """1/8 of the smallest distance from a probe centre to the boundary of K."""
    sigma = sum(spec.alphas, Fraction(0))
    smallest_alpha = min(abs(a) for a in spec.alphas)
    distances = []
    for p in centers:
        distances.append(_boundary_distance(domain, p))
        distances.append(_boundary_distance(domain, vec_scale(sigma, p)) / smallest_alpha)
    finite = [d for d in distances if not is_infinite(d)]
    if not finite:
        return DEFAULT_RADIUS_FRACTION
    return DEFAULT_RADIUS_FRACTION * smallest_alpha * min(finite)


def patch_for(spec: EquationSpec, center: Vector, radius: Fraction) -> Patch:
    return Patch(tuple(vec_scale(a, center) for a in spec.alphas), radius)


def required_points(spec: EquationSpec, domain: Domain, centers: Sequence[Vector], radius: Fraction) -> List[Vector]:
    """Every point of K at which f must be sampled for these centres and radius."""
    sigma = sum(spec.alphas, Fraction(0))
    points = set()
    for p in centers:
        p = tuple(Fraction(c) for c in p)
        if len(p) != domain.dim:
            raise DomainError(f"Centre ({format_point(p)}) has the wrong dimension")
        total = vec_scale(sigma, p)
        points.update((p, total))
        for j in range(domain.dim):
            for sign in (1, -1):
                points.add(vec_add(total, unit_vector(domain.dim, j, sign * radius)))
                for alpha in spec.alphas:
                    points.add(vec_add(p, unit_vector(domain.dim, j, sign * radius / alpha)))
    outside = sorted(point for point in points if not domain.contains(point))
    if outside:
        raise DomainError(
            f"Probe point ({format_point(outside[0])}) lies outside the domain; use a smaller radius",
            point=format_point(outside[0]),
            radius=format_rational(radius),
        )
    return sorted(points)


def tabulate(f: Callable[[Vector], Vector], points: Iterable[Vector]) -> Dict[Vector, Vector]:
    return {point: tuple(f(point)) for point in points}


def find_centers(spec: EquationSpec, domain: Domain, f_table: Mapping[Vector, Vector], radius: Fraction) -> List[Vector]:
    """Sample points around which every probe is present in the table."""
    centers = []
    for p in sorted(f_table):
        if not domain.contains(p):
            continue
        try:
            needed = required_points(spec, domain, [p], radius)
        except DomainError:
            continue
        if all(point in f_table for point in needed):
            centers.append(p)
    return centers


class LinearExtension:
    """f = A x + b recovered from samples, with the Pexider constants behind it."""

    def __init__(self, affine: AffineMap, u: Vector, u_i: Tuple[Vector, ...], solution: GlobalSolution, patches: List[Patch]):
        self.affine = affine
        self.u = u
        self.u_i = u_i
        self.solution = solution
        self.patches = patches

    def json_response_format(self) -> Dict:
        return {
            **self.affine.json_response_format(),
            "u": format_vector(self.u),
            "u_i": [format_vector(u) for u in self.u_i],
            "patches": len(self.patches),
            "radius": format_rational(self.patches[0].radius),
            "unique": self.solution.unique,
        }


def extend_general_linear(
    spec: EquationSpec,
    domain: Domain,
    f_table: Mapping[Vector, Vector],
    centers: Optional[Sequence[Vector]] = None,
    radius: Optional[Fraction] = None,
) -> LinearExtension:
    """Recover f = A + b on K from exact samples of a solution of the general linear equation."""
    require_invariance(domain, spec.alphas)
    f_table = {tuple(Fraction(c) for c in p): tuple(Fraction(c) for c in v) for p, v in f_table.items()}

    if centers is None:
        if radius is None:
            raise PreconditionError("Give patch centres or a radius to detect them from the samples")
        centers = find_centers(spec, domain, f_table, radius)
        if not centers:
            raise TableError("No sample point has all of its probes sampled", radius=format_rational(radius))
    centers = [tuple(Fraction(c) for c in p) for p in centers]
    if radius is None:
        radius = default_radius(spec, domain, centers)

    for point in required_points(spec, domain, centers, radius):
        if point not in f_table:
            raise TableError(f"f is not sampled at ({format_point(point)})", table="f", point=format_point(point))

    # g_i(y) = beta_i f(y / alpha_i) on alpha_i K
    g_tables = [
        {vec_scale(alpha, p): vec_scale(beta, v) for p, v in f_table.items()}
        for alpha, beta in zip(spec.alphas, spec.betas)
    ]
    tables = PatchTables(f_table, g_tables)
    patches = [patch_for(spec, p, radius) for p in centers]

    try:
        solutions = solve_patches(patches, tables)
    except ConstantMismatchError as exc:
        raise OffsetContradictionError(
            f"recovered u={','.join(exc.context['u_x'])} contradicts u = u * sum beta_i "
            f"(sum beta_i = {format_rational(spec.beta_sum)})",
            u=exc.context["u_x"],
            beta_sum=format_rational(spec.beta_sum),
        ) from exc

    solution = stitch(patches, solutions)
    if not solution.unique:
        raise StitchError(
            f"The patch cover splits into {len(solution.components)} components; sample a connected region",
            components=len(solution.components),
        )
    A, u, u_i = solution.A, solution.u, solution.u_i

    for i, beta in enumerate(spec.betas):
        if u_i[i] != vec_scale(beta, u):
            raise InconsistencyError(
                f"u_{i + 1} != beta_{i + 1} * u: the samples do not solve the equation",
                factor=i + 1,
                u_i=format_vector(u_i[i]),
                u=format_vector(u),
            )

    linear = AffineMap(A, tuple(Fraction(0) for _ in A))
    for i, (alpha, beta) in enumerate(zip(spec.alphas, spec.betas)):
        if not linear.is_homogeneous(alpha, beta):
            raise ModelLimitError(
                f"A(alpha_{i + 1} x) != beta_{i + 1} A(x): solution outside rational-matrix model",
                factor=i + 1,
            )

    if spec.beta_sum != 1 and any(c != 0 for c in u):
        raise OffsetContradictionError(
            f"recovered u={','.join(format_vector(u))} contradicts u = u * sum beta_i "
            f"(sum beta_i = {format_rational(spec.beta_sum)})",
            u=format_vector(u),
            beta_sum=format_rational(spec.beta_sum),
        )

    logger.info(f"✅ Extended f from {len(patches)} patches")
    return LinearExtension(AffineMap(A, u), u, u_i, solution, patches)
