"""Problem-spec documents: pydantic schema, exact parsing and conversion to engine objects."""
import json
from contextlib import contextmanager
from fractions import Fraction
from typing import Annotated, Dict, List, Literal, Optional, Sequence, Tuple, Union, get_args

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PlainSerializer,
    PlainValidator,
    StrictInt,
    ValidationError,
    model_validator,
)

from domains.domain_model import Box, Cone, Domain, Interval
from domains.rational import (
    Endpoint,
    Vector,
    format_endpoint,
    format_point,
    format_rational,
    parse_endpoint,
    parse_point,
    parse_rational,
)
from equations.equation_model import AffineMap, EquationSpec
from errors import DomainError, SpecError
from finite_groups.group_model import FiniteAbelianGroup, GroupFunction

CommandName = Literal[
    "check-invariance",
    "characterize",
    "verify",
    "extend",
    "shrink",
    "enumerate-finite",
    "solve-finite",
    "weighted-check",
]
COMMANDS = get_args(CommandName)

# Top-level fields each command reads
COMMAND_FIELDS: Dict[str, Tuple[str, ...]] = {
    "check-invariance": ("domain", "equation"),
    "characterize": ("equation",),
    "verify": ("domain", "equation", "candidate"),
    "extend": ("domain", "equation", "functions"),
    "shrink": ("domain", "equation"),
    "enumerate-finite": ("group",),
    "solve-finite": ("group", "tables"),
    "weighted-check": ("group", "alphas", "tables"),
}


def _exact(parse):
    # pydantic only turns ValueError into a positional ValidationError
    def validate(value):
        try:
            return parse(value)
        except SpecError as exc:
            raise ValueError(exc.message) from exc

    return validate


def _point_literal(value):
    if isinstance(value, (list, tuple)):
        raise SpecError(f"'{value}' is not a point literal; write \"p1,p2\"", literal=str(value))
    return parse_point(value)


Rational = Annotated[Fraction, PlainValidator(_exact(parse_rational)), PlainSerializer(format_rational, return_type=str)]
EndpointValue = Annotated[Endpoint, PlainValidator(_exact(parse_endpoint)), PlainSerializer(format_endpoint, return_type=str)]
Point = Annotated[Vector, PlainValidator(_exact(_point_literal)), PlainSerializer(format_point, return_type=str)]
ElementValue = Union[StrictInt, List[StrictInt]]


class SpecModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)


class SideSpec(SpecModel):
    lo: EndpointValue
    hi: EndpointValue


class IntervalSpec(SideSpec):
    type: Literal["interval"]


class BoxSpec(SpecModel):
    type: Literal["box"]
    sides: List[SideSpec] = Field(min_length=1)


class ConeSpec(SpecModel):
    type: Literal["cone"]
    generators: List[List[Rational]] = Field(min_length=1)
    open: bool = True


DomainSpec = Annotated[Union[IntervalSpec, BoxSpec, ConeSpec], Field(discriminator="type")]


class EquationModel(SpecModel):
    alphas: List[Rational] = Field(min_length=1)
    # Omitted betas repeat the alphas
    betas: Optional[List[Rational]] = None


class CandidateSpec(SpecModel):
    A: List[List[Rational]] = Field(min_length=1)
    b: List[Rational]


class FunctionsSpec(SpecModel):
    f_table: Optional[Dict[str, List[Rational]]] = None
    f_closed_form: Optional[CandidateSpec] = None

    @model_validator(mode="after")
    def one_source(self):
        if (self.f_table is None) == (self.f_closed_form is None):
            raise ValueError("give exactly one of f_table and f_closed_form")
        return self


class GroupSpec(SpecModel):
    moduli: List[StrictInt] = Field(min_length=1)
    codomain_moduli: Optional[List[StrictInt]] = None


class TablesSpec(SpecModel):
    f: List[ElementValue]
    g: List[List[ElementValue]] = Field(min_length=2)


class ParamsSpec(SpecModel):
    trials: Optional[StrictInt] = Field(default=None, ge=1)
    seed: Optional[StrictInt] = None
    radius: Optional[Rational] = None
    centers: Optional[List[Point]] = None


class ProblemSpec(SpecModel):
    model_config = ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True, populate_by_name=True)

    schema_version: Optional[Literal["1"]] = Field(default=None, alias="schema")
    command: Optional[CommandName] = None
    domain: Optional[DomainSpec] = None
    equation: Optional[EquationModel] = None
    candidate: Optional[CandidateSpec] = None
    functions: Optional[FunctionsSpec] = None
    group: Optional[GroupSpec] = None
    alphas: Optional[List[StrictInt]] = None
    tables: Optional[TablesSpec] = None
    params: ParamsSpec = ParamsSpec()

    def require(self, command: str):
        """Raise SpecError unless every field the command reads is present."""
        if self.command is not None and self.command != command:
            raise SpecError(f"Spec is written for '{self.command}' but '{command}' was requested", path="command")
        for name in COMMAND_FIELDS[command]:
            if getattr(self, name) is None:
                raise SpecError(f"Command '{command}' needs the '{name}' field", path=name)


def _line_column(text: str, position: int) -> Tuple[int, int]:
    line = text.count("\n", 0, position) + 1
    column = position - (text.rfind("\n", 0, position) + 1) + 1
    return line, column


def _locate(text: str, loc: Sequence, value) -> Tuple[int, int]:
    """Best-effort position of the offending literal: follow the keys of the path, then find the value."""
    position = 0
    for part in loc:
        if isinstance(part, str):
            found = text.find(json.dumps(part), position)
            if found >= 0:
                position = found
    if isinstance(value, (str, int, float)) and not isinstance(value, bool):
        found = text.find(json.dumps(value), position)
        if found >= 0:
            position = found
    return _line_column(text, position)


def _format_path(loc: Sequence) -> str:
    path = ""
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}" if path else str(part)
    return path or "<root>"


def parse_spec(text: str) -> ProblemSpec:
    """Parse a JSON problem spec exactly; errors carry line, column and field path."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"Syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        ) from exc
    if not isinstance(data, dict):
        raise SpecError("A problem spec must be a JSON object", line=1, column=1)
    try:
        return ProblemSpec.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        path = _format_path(error["loc"])
        line, column = _locate(text, error["loc"], error.get("input"))
        raise SpecError(
            f"{path}: {error['msg']} (line {line}, column {column})",
            path=path,
            line=line,
            column=column,
        ) from exc


def render_spec(spec: ProblemSpec) -> str:
    return json.dumps(spec.model_dump(mode="json", by_alias=True, exclude_none=True), indent=2) + "\n"


@contextmanager
def _converting(path: str):
    # Value-type checks that pydantic cannot see still point at the spec field
    try:
        yield
    except DomainError as exc:
        raise SpecError(f"{path}: {exc.message}", path=path, **exc.context) from exc


def build_domain(spec: ProblemSpec) -> Domain:
    model = spec.domain
    with _converting("domain"):
        if isinstance(model, IntervalSpec):
            return Interval(model.lo, model.hi)
        if isinstance(model, BoxSpec):
            return Box(tuple(Interval(side.lo, side.hi) for side in model.sides))
        return Cone(tuple(tuple(g) for g in model.generators), model.open)


def build_equation(spec: ProblemSpec) -> EquationSpec:
    model = spec.equation
    betas = model.alphas if model.betas is None else model.betas
    with _converting("equation"):
        return EquationSpec(tuple(model.alphas), tuple(betas))


def _affine(model: CandidateSpec, path: str) -> AffineMap:
    with _converting(path):
        return AffineMap(tuple(tuple(row) for row in model.A), tuple(model.b))


def _on_domain(affine: AffineMap, domain: Optional[Domain], path: str) -> AffineMap:
    if domain is not None and affine.k != domain.dim:
        raise SpecError(
            f"{path}: acts on Q^{affine.k} but the domain lives in Q^{domain.dim}",
            path=path,
            map_dim=affine.k,
            domain_dim=domain.dim,
        )
    return affine


def build_candidate(spec: ProblemSpec, domain: Optional[Domain] = None) -> AffineMap:
    return _on_domain(_affine(spec.candidate, "candidate"), domain, "candidate")


def build_closed_form(spec: ProblemSpec, domain: Optional[Domain] = None) -> Optional[AffineMap]:
    if spec.functions.f_closed_form is None:
        return None
    path = "functions.f_closed_form"
    return _on_domain(_affine(spec.functions.f_closed_form, path), domain, path)


def build_f_table(spec: ProblemSpec) -> Optional[Dict[Vector, Vector]]:
    if spec.functions.f_table is None:
        return None
    table = {}
    for key, values in spec.functions.f_table.items():
        try:
            point = parse_point(key)
        except SpecError as exc:
            raise SpecError(f"functions.f_table: {exc.message}", path=f"functions.f_table.{key}") from exc
        table[point] = tuple(values)
    return table


def build_groups(spec: ProblemSpec) -> Tuple[FiniteAbelianGroup, FiniteAbelianGroup]:
    model = spec.group
    with _converting("group"):
        G = FiniteAbelianGroup(tuple(model.moduli))
        H = G if model.codomain_moduli is None else FiniteAbelianGroup(tuple(model.codomain_moduli))
    return G, H


def build_group_functions(
    spec: ProblemSpec, G: FiniteAbelianGroup, H: FiniteAbelianGroup
) -> Tuple[GroupFunction, List[GroupFunction]]:
    with _converting("tables.f"):
        f = GroupFunction(G, H, tuple(spec.tables.f))
    gs = []
    for i, table in enumerate(spec.tables.g):
        with _converting(f"tables.g[{i}]"):
            gs.append(GroupFunction(G, H, tuple(table)))
    return f, gs


def build_weights(spec: ProblemSpec) -> Tuple[int, ...]:
    """Integer weights of the weighted equation, one per g table."""
    weights = tuple(spec.alphas)
    if len(weights) != len(spec.tables.g):
        raise SpecError(
            f"alphas: {len(weights)} weights for {len(spec.tables.g)} g tables",
            path="alphas",
            weights=len(weights),
            tables=len(spec.tables.g),
        )
    for i, weight in enumerate(weights):
        if weight == 0:
            raise SpecError(f"alphas[{i}]: weights must be non-zero", path=f"alphas[{i}]")
    return weights
