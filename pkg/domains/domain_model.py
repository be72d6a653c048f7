"""Domain value types: open intervals, open boxes and finitely generated cones."""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple, Union

from sympy import Eq, Matrix, Rational, S, symbols
from sympy.solvers.simplex import InfeasibleLPError, lpmax

from errors import DomainError
from .rational import (
    NEG_INF,
    POS_INF,
    Endpoint,
    Vector,
    format_endpoint,
    format_vector,
    is_infinite,
    parse_endpoint,
    vec_add,
    vec_scale,
    vec_sum,
)

# Interior positions tried first by witness and trial grids
GRID_POSITIONS = (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4))


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi); either end may be an infinity sentinel."""

    lo: Endpoint
    hi: Endpoint

    def __post_init__(self):
        object.__setattr__(self, "lo", parse_endpoint(self.lo))
        object.__setattr__(self, "hi", parse_endpoint(self.hi))
        if self.lo == POS_INF or self.hi == NEG_INF:
            raise DomainError(f"Interval ({format_endpoint(self.lo)}, {format_endpoint(self.hi)}) has a misplaced infinity")
        if not self.lo < self.hi:
            raise DomainError(
                f"Interval ({format_endpoint(self.lo)}, {format_endpoint(self.hi)}) is empty",
                lo=format_endpoint(self.lo),
                hi=format_endpoint(self.hi),
            )

    @property
    def dim(self) -> int:
        return 1

    @property
    def sides(self) -> Tuple["Interval", ...]:
        return (self,)

    @property
    def bounded(self) -> bool:
        return not (is_infinite(self.lo) or is_infinite(self.hi))

    def contains_value(self, x: Fraction) -> bool:
        return self.lo < x < self.hi

    def contains(self, point: Vector) -> bool:
        return len(point) == 1 and self.contains_value(point[0])

    def includes(self, other: "Interval") -> bool:
        # Open intervals: weak endpoint comparison decides inclusion
        return other.lo >= self.lo and other.hi <= self.hi

    def grid_values(self) -> List[Fraction]:
        if self.bounded:
            return [self.lo + t * (self.hi - self.lo) for t in GRID_POSITIONS]
        if not is_infinite(self.lo):
            return [self.lo + 1, self.lo + Fraction(1, 2), self.lo + 2]
        if not is_infinite(self.hi):
            return [self.hi - 1, self.hi - 2, self.hi - Fraction(1, 2)]
        return [Fraction(0), Fraction(-1), Fraction(1)]

    def midpoint(self) -> Fraction:
        return self.grid_values()[0]

    def sample_value(self, rng: random.Random) -> Fraction:
        if self.bounded:
            denominator = 2 ** rng.randint(2, 12)
            return self.lo + (self.hi - self.lo) * Fraction(rng.randint(1, denominator - 1), denominator)
        offset = Fraction(rng.randint(1, 2**12), 2 ** rng.randint(0, 8))
        if not is_infinite(self.lo):
            return self.lo + offset
        if not is_infinite(self.hi):
            return self.hi - offset
        return offset if rng.random() < 0.5 else -offset

    def value_near(self, end: str, eps: Fraction) -> Fraction:
        """A point of the interval within eps (relative) of the requested end."""
        if end == "lo":
            if is_infinite(self.lo):
                anchor = self.hi if not is_infinite(self.hi) else Fraction(0)
                return anchor - 1 / eps
            if is_infinite(self.hi):
                return self.lo + eps
            return self.lo + eps * (self.hi - self.lo)
        if is_infinite(self.hi):
            anchor = self.lo if not is_infinite(self.lo) else Fraction(0)
            return anchor + 1 / eps
        if is_infinite(self.lo):
            return self.hi - eps
        return self.hi - eps * (self.hi - self.lo)

    def distance_to_boundary(self, x: Fraction) -> Endpoint:
        return min(x - self.lo, self.hi - x)

    def sample_point(self, rng: random.Random) -> Vector:
        return (self.sample_value(rng),)

    def grid_points(self) -> List[Vector]:
        return [(v,) for v in self.grid_values()]

    def json_response_format(self) -> Dict:
        return {"type": "interval", "lo": format_endpoint(self.lo), "hi": format_endpoint(self.hi)}


@dataclass(frozen=True)
class Box:
    """Axis-aligned open box, the product of its open sides."""

    sides: Tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(self.sides))
        if not self.sides:
            raise DomainError("A box needs at least one side")
        if not all(isinstance(side, Interval) for side in self.sides):
            raise DomainError("Every side of a box must be an Interval")

    @property
    def dim(self) -> int:
        return len(self.sides)

    def contains(self, point: Vector) -> bool:
        return len(point) == self.dim and all(side.contains_value(x) for side, x in zip(self.sides, point))

    def includes(self, other: "Box") -> bool:
        return other.dim == self.dim and all(mine.includes(theirs) for mine, theirs in zip(self.sides, other.sides))

    def grid_points(self) -> List[Vector]:
        # Diagonal grid: the t-th grid value on every side at once
        columns = [side.grid_values() for side in self.sides]
        return [tuple(column[t] for column in columns) for t in range(len(GRID_POSITIONS))]

    def sample_point(self, rng: random.Random) -> Vector:
        return tuple(side.sample_value(rng) for side in self.sides)

    def distance_to_boundary(self, point: Vector) -> Endpoint:
        return min(side.distance_to_boundary(x) for side, x in zip(self.sides, point))

    def json_response_format(self) -> Dict:
        return {
            "type": "box",
            "sides": [{"lo": format_endpoint(s.lo), "hi": format_endpoint(s.hi)} for s in self.sides],
        }


@dataclass(frozen=True)
class Cone:
    """Cone generated by finitely many non-zero rational vectors (its interior when open)."""

    generators: Tuple[Vector, ...]
    open: bool = True

    def __post_init__(self):
        generators = tuple(tuple(Fraction(c) for c in g) for g in self.generators)
        object.__setattr__(self, "generators", generators)
        if not generators:
            raise DomainError("A cone needs at least one generator")
        dims = {len(g) for g in generators}
        if len(dims) != 1 or 0 in dims:
            raise DomainError("Cone generators must be non-empty vectors of one common dimension")
        for index, g in enumerate(generators):
            if all(c == 0 for c in g):
                raise DomainError(f"Cone generator {index} is the zero vector", generator=index)
        if self.open and self.rank < self.dim:
            raise DomainError(
                f"Open cone spanned by rank-{self.rank} generators in dimension {self.dim} is empty",
                rank=self.rank,
            )

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    @cached_property
    def rank(self) -> int:
        return Matrix([[Rational(c.numerator, c.denominator) for c in g] for g in self.generators]).rank()

    def centroid(self) -> Vector:
        return vec_sum(self.generators, self.dim)

    def positive_margin(self, point: Vector) -> Optional[Fraction]:
        """Optimum of max s s.t. G·lam = point, lam_i >= s, s <= 1 (exact simplex)."""
        lams = symbols(f"lam0:{len(self.generators)}")
        s = symbols("s")
        constraints = [s <= 1] + [lam >= s for lam in lams]
        for j in range(self.dim):
            row = sum(Rational(g[j].numerator, g[j].denominator) * lam for g, lam in zip(self.generators, lams))
            relation = Eq(row, Rational(point[j].numerator, point[j].denominator))
            # A zero row collapses to a constant truth value
            if relation is S.true:
                continue
            if relation is S.false:
                return None
            constraints.append(relation)
        try:
            optimum, _ = lpmax(s, constraints)
        except InfeasibleLPError:
            return None
        return Fraction(int(optimum.p), int(optimum.q))

    def contains(self, point: Vector) -> bool:
        if len(point) != self.dim:
            return False
        margin = self.positive_margin(tuple(Fraction(c) for c in point))
        if margin is None:
            return False
        return margin > 0 if self.open else margin >= 0

    def grid_points(self) -> List[Vector]:
        c = self.centroid()
        return [c, vec_scale(Fraction(1, 2), c), vec_scale(Fraction(2), c)]

    def sample_point(self, rng: random.Random) -> Vector:
        point = tuple(Fraction(0) for _ in range(self.dim))
        for g in self.generators:
            weight = Fraction(rng.randint(1, 2**10), 2 ** rng.randint(0, 6))
            point = vec_add(point, vec_scale(weight, g))
        return point

    def json_response_format(self) -> Dict:
        return {"type": "cone", "generators": [format_vector(g) for g in self.generators], "open": self.open}


Domain = Union[Interval, Box, Cone]


@dataclass(frozen=True)
class WeightedImage:
    """The exact set {sum alpha_i x_i : x_i in K} with the alpha split that produced it."""

    result: Union[Interval, Box]
    alpha_plus: Fraction
    alpha_minus: Fraction
    alphas: Tuple[Fraction, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.alphas and self.alpha_plus + self.alpha_minus != sum(self.alphas):
            raise DomainError("alpha_plus + alpha_minus must equal the coefficient sum")

    def json_response_format(self) -> Dict:
        return {
            "image": self.result.json_response_format(),
            "alpha_plus": format_endpoint(self.alpha_plus),
            "alpha_minus": format_endpoint(self.alpha_minus),
        }
