"""Data carried through the local-solve / stitch pipeline."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from domains.rational import (
    Vector,
    format_point,
    format_rational,
    format_vector,
    parse_point,
    parse_rational,
    unit_vector,
    vec_sum,
)
from equations.equation_model import Matrix
from errors import DomainError, StitchError, TableError


@dataclass(frozen=True)
class Patch:
    """A point (x_1..x_n) of U with the axis step set of radius h around it."""

    base: Tuple[Vector, ...]
    radius: Fraction

    def __post_init__(self):
        base = tuple(tuple(Fraction(c) for c in x) for x in self.base)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "radius", parse_rational(self.radius))
        if len(base) < 2:
            raise DomainError("A patch base needs n >= 2 factors")
        if len({len(x) for x in base}) != 1 or not base[0]:
            raise DomainError("Patch base factors must share one positive dimension")
        if self.radius <= 0:
            raise DomainError("Patch radius must be positive", radius=format_rational(self.radius))

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def k(self) -> int:
        return len(self.base[0])

    @property
    def base_sum(self) -> Vector:
        return vec_sum(self.base, self.k)

    def steps(self) -> List[Vector]:
        """The 2k axis steps +h e_j, -h e_j."""
        steps = []
        for j in range(self.k):
            steps.append(unit_vector(self.k, j, self.radius))
            steps.append(unit_vector(self.k, j, -self.radius))
        return steps

    def overlaps(self, other: "Patch") -> bool:
        """Exact intersection of the closed supports base +- h, factor by factor."""
        if (self.n, self.k) != (other.n, other.k):
            return False
        reach = self.radius + other.radius
        return all(
            abs(a - b) <= reach
            for x, y in zip(self.base, other.base)
            for a, b in zip(x, y)
        )

    def json_response_format(self) -> Dict:
        return {"base": [format_vector(x) for x in self.base], "radius": format_rational(self.radius)}


class PatchTables:
    """Sampled values of f on U+ and of g_1..g_n on U_1..U_n."""

    def __init__(self, f_values: Mapping[Vector, Vector], g_values: Sequence[Mapping[Vector, Vector]]):
        self.f_values = dict(f_values)
        self.g_values = [dict(table) for table in g_values]

    @property
    def n(self) -> int:
        return len(self.g_values)

    def has_f(self, point: Vector) -> bool:
        return point in self.f_values

    def f(self, point: Vector) -> Vector:
        try:
            return self.f_values[point]
        except KeyError:
            raise TableError(f"f is not sampled at ({format_point(point)})", table="f", point=format_point(point))

    def g(self, i: int, point: Vector) -> Vector:
        try:
            return self.g_values[i][point]
        except (KeyError, IndexError):
            raise TableError(
                f"g_{i + 1} is not sampled at ({format_point(point)})",
                table=f"g_{i + 1}",
                point=format_point(point),
            )

    @classmethod
    def from_json(cls, data: Dict) -> "PatchTables":
        def load(table):
            return {parse_point(key): tuple(parse_rational(v) for v in value) for key, value in table.items()}

        return cls(load(data["f"]), [load(table) for table in data["g"]])

    def json_response_format(self) -> Dict:
        def dump(table):
            return {format_point(p): format_vector(v) for p, v in sorted(table.items())}

        return {"f": dump(self.f_values), "g": [dump(table) for table in self.g_values]}


@dataclass(frozen=True)
class LocalSolution:
    """A_x with the constants u_x = f(sum x_i) - A_x(sum x_i), u_{x,i} = g_i(x_i) - A_x(x_i)."""

    A: Matrix
    u_x: Vector
    u_xi: Tuple[Vector, ...]

    def __post_init__(self):
        if self.u_x != vec_sum(self.u_xi, len(self.u_x)):
            raise DomainError("u_x must equal the sum of the u_{x,i}")

    def json_response_format(self) -> Dict:
        return {
            "A": [format_vector(row) for row in self.A],
            "u_x": format_vector(self.u_x),
            "u_xi": [format_vector(u) for u in self.u_xi],
        }


@dataclass(frozen=True)
class ComponentSolution:
    """The extension (A, u, u_1..u_n) recovered on one connected component of patches."""

    A: Matrix
    u: Vector
    u_i: Tuple[Vector, ...]
    patch_indices: Tuple[int, ...] = field(compare=False)

    def json_response_format(self) -> Dict:
        return {
            "A": [format_vector(row) for row in self.A],
            "u": format_vector(self.u),
            "u_i": [format_vector(u) for u in self.u_i],
            "patches": list(self.patch_indices),
        }


@dataclass(frozen=True)
class GlobalSolution:
    components: Tuple[ComponentSolution, ...]

    @property
    def unique(self) -> bool:
        return len(self.components) == 1

    def _single(self) -> ComponentSolution:
        if not self.unique:
            raise StitchError(
                f"The patch cover has {len(self.components)} components; the extension is not unique",
                components=len(self.components),
            )
        return self.components[0]

    @property
    def A(self) -> Matrix:
        return self._single().A

    @property
    def u(self) -> Vector:
        return self._single().u

    @property
    def u_i(self) -> Tuple[Vector, ...]:
        return self._single().u_i

    def json_response_format(self) -> Dict:
        body: Dict = {"unique": self.unique, "components": len(self.components)}
        if self.unique:
            body.update({k: v for k, v in self.components[0].json_response_format().items() if k != "patches"})
        body["solutions"] = [c.json_response_format() for c in self.components]
        return body
