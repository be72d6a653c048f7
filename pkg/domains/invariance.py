"""Domain-level decision procedures: weighted images, invariance, symmetric subdomains."""
import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple, Union

from errors import DomainError, InternalError, InvarianceError, PreconditionError
from .domain_model import Box, Cone, Domain, Interval, WeightedImage
from .rational import (
    NEG_INF,
    POS_INF,
    Vector,
    add_endpoints,
    format_rational,
    format_vector,
    is_infinite,
    parse_rational,
    scale_endpoint,
    vec_scale,
    vec_sum,
)

logger = logging.getLogger(__name__)

WITNESS_SEED = 20240601
WITNESS_SAMPLES = 256
# Grid tuples are capped so large n does not blow up 3**n
MAX_GRID_TUPLES = 729


def validate_alphas(alphas: Sequence) -> Tuple[Fraction, ...]:
    """Parse a coefficient list; it must be non-empty with no zero entry."""
    parsed = tuple(parse_rational(a) for a in alphas)
    if not parsed:
        raise DomainError("Coefficient list is empty")
    for index, alpha in enumerate(parsed):
        if alpha == 0:
            raise DomainError(f"Coefficient {index} is zero", index=index)
    return parsed


def split_alphas(alphas: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
    alpha_plus = sum((a for a in alphas if a > 0), Fraction(0))
    alpha_minus = sum((a for a in alphas if a < 0), Fraction(0))
    return alpha_plus, alpha_minus


def _image_side(side: Interval, alpha_plus: Fraction, alpha_minus: Fraction) -> Interval:
    lo = add_endpoints(scale_endpoint(alpha_plus, side.lo), scale_endpoint(alpha_minus, side.hi))
    hi = add_endpoints(scale_endpoint(alpha_plus, side.hi), scale_endpoint(alpha_minus, side.lo))
    return Interval(lo, hi)


def weighted_image(domain: Union[Interval, Box], alphas: Sequence) -> WeightedImage:
    """Exact image {sum alpha_i x_i : x_i in K}: (a+ lo + a- hi, a+ hi + a- lo) per side."""
    if isinstance(domain, Cone):
        raise DomainError("weighted_image does not take cones; use check_invariance")
    alphas = validate_alphas(alphas)
    alpha_plus, alpha_minus = split_alphas(alphas)
    if isinstance(domain, Interval):
        result = _image_side(domain, alpha_plus, alpha_minus)
    elif isinstance(domain, Box):
        result = Box(tuple(_image_side(side, alpha_plus, alpha_minus) for side in domain.sides))
    else:
        raise DomainError(f"Unsupported domain type {type(domain).__name__}")
    return WeightedImage(result, alpha_plus, alpha_minus, alphas)


def combine(alphas: Sequence[Fraction], points: Sequence[Vector]) -> Vector:
    return vec_sum((vec_scale(a, x) for a, x in zip(alphas, points)), len(points[0]))


class InvarianceResult:
    """Outcome of check_invariance, with a certificate either way."""

    def __init__(
        self,
        holds: bool,
        method: str,
        image: Optional[WeightedImage] = None,
        witness: Optional[Tuple[Vector, ...]] = None,
        witness_value: Optional[Vector] = None,
        stage: Optional[str] = None,
    ):
        self.holds = holds
        self.method = method
        self.image = image
        self.witness = witness
        self.witness_value = witness_value
        self.stage = stage

    def __bool__(self) -> bool:
        return self.holds

    def json_response_format(self) -> Dict:
        body = {"holds": self.holds, "method": self.method}
        if self.image is not None:
            body.update(self.image.json_response_format())
        if self.witness is not None:
            body["witness"] = [_format_point(x) for x in self.witness]
            body["witness_value"] = _format_point(self.witness_value)
            body["witness_stage"] = self.stage
        return body


def _format_point(point: Vector):
    # One-dimensional points print as plain rationals
    if len(point) == 1:
        return format_rational(point[0])
    return format_vector(point)


def _grid_tuples(domain: Union[Interval, Box], n: int):
    return itertools.islice(itertools.product(domain.grid_points(), repeat=n), MAX_GRID_TUPLES)


def _random_tuples(domain: Union[Interval, Box], n: int, seed: int):
    rng = random.Random(seed)
    for _ in range(WITNESS_SAMPLES):
        yield tuple(domain.sample_point(rng) for _ in range(n))


def _directed_eps(side: Interval, alphas: Sequence[Fraction], end: str) -> Fraction:
    """Step for value_near that puts the directed combination strictly past `end` of `side`.

    Work in the orientation where the violated end is an upper bound: a point near a
    finite end trails it by at most weight * spread * eps, and a point near an infinite
    end contributes weight / eps.
    """
    sign = 1 if end == "hi" else -1
    bound = sign * (side.hi if end == "hi" else side.lo)
    spread = side.hi - side.lo if side.bounded else Fraction(1)
    reach = Fraction(0)
    trail = Fraction(0)
    unbounded = Fraction(0)
    for alpha in alphas:
        weight = abs(alpha)
        toward_hi = sign * alpha > 0
        target = side.hi if toward_hi else side.lo
        orient = 1 if toward_hi else -1
        if is_infinite(target):
            anchor = side.lo if toward_hi else side.hi
            reach += weight * orient * (Fraction(0) if is_infinite(anchor) else anchor)
            unbounded += weight
        else:
            reach += weight * orient * target
            trail += weight * spread
    if unbounded == 0:
        eps = (reach - bound) / (2 * trail)
    else:
        eps = unbounded / (2 * max(bound - reach + trail, Fraction(1)))
    return min(eps, Fraction(1, 4))


def _directed_tuples(domain: Union[Interval, Box], alphas: Sequence[Fraction], image: WeightedImage):
    """Push every x_i toward the image endpoint that sticks out of the domain."""
    sides = domain.sides
    for axis, (side, image_side) in enumerate(zip(sides, image.result.sides)):
        if image_side.lo < side.lo:
            end = "lo"
        elif image_side.hi > side.hi:
            end = "hi"
        else:
            continue
        eps = _directed_eps(side, alphas, end)
        base = [s.midpoint() for s in sides]
        points = []
        for alpha in alphas:
            point = list(base)
            # Positive weights follow the violated end, negative weights the opposite one
            target = end if alpha > 0 else ("hi" if end == "lo" else "lo")
            point[axis] = side.value_near(target, eps)
            points.append(tuple(point))
        yield tuple(points)
        return


def _find_witness(domain: Union[Interval, Box], alphas: Sequence[Fraction], image: WeightedImage, seed: int):
    stages = (
        ("grid", _grid_tuples(domain, len(alphas))),
        ("random", _random_tuples(domain, len(alphas), seed)),
        ("directed", _directed_tuples(domain, alphas, image)),
    )
    for stage, candidates in stages:
        for points in candidates:
            value = combine(alphas, points)
            if not domain.contains(value):
                logger.debug(f"🔎 Invariance witness found at stage '{stage}'")
                return points, value, stage
    raise InternalError("Inclusion fails but no witness tuple was found", image=image.json_response_format())


def _cone_invariance(cone: Cone, alphas: Sequence[Fraction]) -> InvarianceResult:
    if all(alpha > 0 for alpha in alphas):
        # Convex cones satisfy alpha K = K + K = K for alpha > 0
        return InvarianceResult(True, "cone")
    centroid = cone.centroid()
    if cone.contains(vec_scale(Fraction(-1), centroid)):
        # An open cone holding both c and -c holds 0 in its interior, so it is the whole space
        return InvarianceResult(True, "whole-space")
    j = next(i for i, alpha in enumerate(alphas) if alpha < 0)
    rest = sum((alpha for i, alpha in enumerate(alphas) if i != j), Fraction(0))
    multiple = rest / -alphas[j] + 1 if rest > 0 else Fraction(1)
    points = tuple(vec_scale(multiple, centroid) if i == j else centroid for i in range(len(alphas)))
    value = combine(alphas, points)
    if cone.contains(value):
        raise InternalError("Cone witness construction landed inside the cone", index=j)
    return InvarianceResult(False, "cone", witness=points, witness_value=value, stage="directed")


def check_invariance(domain: Domain, alphas: Sequence, seed: int = WITNESS_SEED) -> InvarianceResult:
    """Decide sum alpha_i K within K; failures carry a re-verified witness tuple."""
    alphas = validate_alphas(alphas)
    if isinstance(domain, Cone):
        return _cone_invariance(domain, alphas)
    image = weighted_image(domain, alphas)
    if domain.includes(image.result):
        return InvarianceResult(True, "endpoint", image=image)
    points, value, stage = _find_witness(domain, alphas, image, seed)
    return InvarianceResult(False, "endpoint", image=image, witness=points, witness_value=value, stage=stage)


def require_invariance(domain: Domain, alphas: Sequence, seed: int = WITNESS_SEED) -> InvarianceResult:
    result = check_invariance(domain, alphas, seed)
    if not result.holds:
        raise InvarianceError(
            "The weighted sum of the domain leaves the domain",
            **result.json_response_format(),
        )
    return result


@dataclass(frozen=True)
class SymmetricSubdomain:
    interval: Interval
    alpha_plus: Fraction
    alpha_minus: Fraction
    branch: str
    edge_case: bool
    note: str

    def json_response_format(self) -> Dict:
        return {
            "subdomain": self.interval.json_response_format(),
            "alpha_plus": format_rational(self.alpha_plus),
            "alpha_minus": format_rational(self.alpha_minus),
            "branch": self.branch,
            "edge_case": self.edge_case,
            "note": self.note,
        }


def find_symmetric_subdomain(domain: Domain, alphas: Sequence) -> SymmetricSubdomain:
    """Shrink an invariant interval K to K' = K ∩ (-K) = (-c, c), invariant under |alpha|."""
    if isinstance(domain, Box) and domain.dim == 1:
        domain = domain.sides[0]
    if not isinstance(domain, Interval):
        raise PreconditionError(
            "Symmetric subdomains are only constructed on the real line; the multi-dimensional case is open",
            domain=domain.json_response_format(),
        )
    alphas = validate_alphas(alphas)
    abs_total = sum(abs(a) for a in alphas)
    if abs_total > 1:
        raise PreconditionError(
            "sum |alpha_i| exceeds 1; whether an invariant subdomain exists is open there",
            abs_sum=format_rational(abs_total),
        )
    require_invariance(domain, alphas)
    alpha_plus, alpha_minus = split_alphas(alphas)

    if alpha_minus == 0:
        result = SymmetricSubdomain(
            domain, alpha_plus, alpha_minus, "all-positive", False,
            "all coefficients are positive; K is already invariant under |alpha| and is returned unchanged",
        )
        return result

    edge_case = alpha_plus - alpha_minus == 1
    if not domain.bounded:
        if domain.lo != NEG_INF or domain.hi != POS_INF:
            raise InternalError("A half-line passed the mixed-sign invariance check")
        subdomain = Interval(NEG_INF, POS_INF)
        branch, note = "unbounded", "an unbounded invariant interval is the whole line"
    else:
        a, b = domain.lo, domain.hi
        lower_ok = (1 - alpha_plus) * a - alpha_minus * b <= 0
        upper_ok = (1 - alpha_plus) * b - alpha_minus * a >= 0
        if not (lower_ok and upper_ok):
            raise InternalError("Endpoint inequalities fail although the domain is invariant")
        if edge_case and a + b != 0:
            raise InternalError("alpha+ - alpha- = 1 but the interval is not symmetric")
        if not a < 0 < b:
            raise InternalError("The invariant interval does not contain 0", lo=format_rational(a), hi=format_rational(b))
        c = min(-a, b)
        subdomain = Interval(-c, c)
        branch = "mixed"
        note = "alpha+ - alpha- = 1 forces b = -a" if edge_case else "K' = K ∩ (-K)"

    if not domain.includes(subdomain):
        raise InternalError("Symmetric subdomain is not inside K")
    if not check_invariance(subdomain, [abs(a) for a in alphas]).holds:
        raise InternalError("Symmetric subdomain is not invariant under |alpha|")
    logger.info(f"✅ Symmetric subdomain ({branch}) found")
    return SymmetricSubdomain(subdomain, alpha_plus, alpha_minus, branch, edge_case, note)
