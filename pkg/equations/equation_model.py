"""Equation definitions, affine candidates and the solution-family descriptor."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from domains.rational import Vector, format_rational, format_vector, parse_rational, unit_vector, vec_add
from errors import DomainError

Matrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class EquationSpec:
    """f(sum alpha_i x_i) = sum beta_i f(x_i) with n >= 2 non-zero coefficients on each side."""

    alphas: Tuple[Fraction, ...]
    betas: Tuple[Fraction, ...]

    def __post_init__(self):
        alphas = tuple(parse_rational(a) for a in self.alphas)
        betas = tuple(parse_rational(b) for b in self.betas)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "betas", betas)
        if len(alphas) != len(betas):
            raise DomainError(f"{len(alphas)} alphas but {len(betas)} betas")
        if len(alphas) < 2:
            raise DomainError("An equation needs n >= 2 terms", n=len(alphas))
        for name, values in (("alphas", alphas), ("betas", betas)):
            for index, value in enumerate(values):
                if value == 0:
                    raise DomainError(f"{name}[{index}] is zero", field=name, index=index)

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def beta_sum(self) -> Fraction:
        return sum(self.betas, Fraction(0))

    def json_response_format(self) -> Dict:
        return {"alphas": format_vector(self.alphas), "betas": format_vector(self.betas)}


@dataclass(frozen=True)
class AffineMap:
    """x -> A x + b with an h x k rational matrix A."""

    A: Matrix
    b: Vector

    def __post_init__(self):
        rows = tuple(tuple(parse_rational(c) for c in row) for row in self.A)
        offset = tuple(parse_rational(c) for c in self.b)
        object.__setattr__(self, "A", rows)
        object.__setattr__(self, "b", offset)
        if not rows or not rows[0]:
            raise DomainError("Linear part must be a non-empty matrix")
        if any(len(row) != len(rows[0]) for row in rows):
            raise DomainError("Linear part rows have different lengths")
        if len(offset) != len(rows):
            raise DomainError(f"Offset has length {len(offset)} but the matrix has {len(rows)} rows")

    @classmethod
    def zero(cls, h: int, k: int) -> "AffineMap":
        return cls(tuple(tuple(Fraction(0) for _ in range(k)) for _ in range(h)), tuple(Fraction(0) for _ in range(h)))

    @property
    def h(self) -> int:
        return len(self.A)

    @property
    def k(self) -> int:
        return len(self.A[0])

    def linear(self, x: Sequence[Fraction]) -> Vector:
        if len(x) != self.k:
            raise DomainError(f"Point of dimension {len(x)} given to a map on Q^{self.k}")
        return tuple(sum((a * c for a, c in zip(row, x)), Fraction(0)) for row in self.A)

    def evaluate(self, x: Sequence[Fraction]) -> Vector:
        return vec_add(self.linear(x), self.b)

    def __call__(self, x: Sequence[Fraction]) -> Vector:
        return self.evaluate(x)

    @property
    def has_zero_linear_part(self) -> bool:
        return all(c == 0 for row in self.A for c in row)

    @property
    def has_zero_offset(self) -> bool:
        return all(c == 0 for c in self.b)

    def is_homogeneous(self, alpha: Fraction, beta: Fraction) -> bool:
        """A(alpha x) = beta A(x), checked on the standard basis."""
        for j in range(self.k):
            e = unit_vector(self.k, j)
            if self.linear(unit_vector(self.k, j, alpha)) != tuple(beta * c for c in self.linear(e)):
                return False
        return True

    def json_response_format(self) -> Dict:
        return {"A": [format_vector(row) for row in self.A], "b": format_vector(self.b)}


class SolutionFamily:
    """Shape of every solution f = A + b of an equation, within the rational-matrix model."""

    def __init__(
        self,
        linear_part_allowed: bool,
        offset_free: bool,
        forced_offset: Optional[Fraction],
        homogeneity_constraints: List[Tuple[Fraction, Fraction]],
        field_generators: List[Fraction],
        note: str,
    ):
        self.linear_part_allowed = linear_part_allowed
        self.offset_free = offset_free
        self.forced_offset = forced_offset
        self.homogeneity_constraints = homogeneity_constraints
        self.field_generators = field_generators
        self.note = note

    def admits(self, candidate: AffineMap) -> bool:
        """Whether the candidate has a shape this family allows."""
        if not candidate.has_zero_linear_part and not self.linear_part_allowed:
            return False
        if not candidate.has_zero_offset and not self.offset_free:
            return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, SolutionFamily):
            return NotImplemented
        return self.json_response_format() == other.json_response_format()

    def json_response_format(self) -> Dict:
        return {
            "linear_part_allowed": self.linear_part_allowed,
            "offset_free": self.offset_free,
            "forced_offset": None if self.forced_offset is None else format_rational(self.forced_offset),
            "homogeneity_constraints": [[format_rational(a), format_rational(b)] for a, b in self.homogeneity_constraints],
            "field_generators": [format_rational(g) for g in self.field_generators],
            "note": self.note,
        }


class HomogeneityField:
    """The field Q(alpha_1..alpha_n) over which the linear part is homogeneous."""

    def __init__(self, generators: List[Fraction], factors: List[Fraction], statement: str):
        self.generators = generators
        self.field = "Q"
        self.degree = 1
        self.factors = factors
        self.statement = statement

    def json_response_format(self) -> Dict:
        return {
            "generators": [format_rational(g) for g in self.generators],
            "field": self.field,
            "degree": self.degree,
            "derived_factors": [format_rational(f) for f in self.factors],
            "statement": self.statement,
        }
