"""Finite abelian groups Z_m1 x ... x Z_mr and exhaustive function tables on them."""
import itertools
from dataclasses import dataclass
from functools import cached_property, reduce
from operator import mul
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from errors import DomainError, InternalError, SizeGuardError

# Verdicts are proofs by exhaustion; larger searches are refused, never sampled
MAX_EXHAUSTIVE_WORK = 10**6

Element = Tuple[int, ...]


def guard(work: int, what: str):
    if work > MAX_EXHAUSTIVE_WORK:
        raise SizeGuardError(
            f"{what} needs {work} evaluations, above the exhaustive limit of {MAX_EXHAUSTIVE_WORK}",
            work=work,
            limit=MAX_EXHAUSTIVE_WORK,
        )


@dataclass(frozen=True)
class FiniteAbelianGroup:
    moduli: Tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(self.moduli)
        object.__setattr__(self, "moduli", moduli)
        if not moduli:
            raise DomainError("A group needs at least one cyclic factor")
        for m in moduli:
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                raise DomainError(f"Cyclic factor modulus {m!r} must be an integer >= 2", moduli=list(moduli))
        guard(self.order, "Listing the group elements")

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return reduce(mul, self.moduli, 1)

    @cached_property
    def elements(self) -> List[Element]:
        """Elements in lexicographic order; tables are indexed the same way."""
        return list(itertools.product(*(range(m) for m in self.moduli)))

    @cached_property
    def index(self) -> Dict[Element, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def zero(self) -> Element:
        return tuple(0 for _ in self.moduli)

    def generators(self) -> List[Element]:
        return [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def sub(self, a: Element, b: Element) -> Element:
        return tuple((x - y) % m for x, y, m in zip(a, b, self.moduli))

    def scale(self, c: int, a: Element) -> Element:
        return tuple((c * x) % m for x, m in zip(a, self.moduli))

    def total(self, elements: Sequence[Element]) -> Element:
        result = self.zero
        for e in elements:
            result = self.add(result, e)
        return result

    @cached_property
    def add_table(self) -> List[List[int]]:
        elements, index = self.elements, self.index
        return [[index[self.add(a, b)] for b in elements] for a in elements]

    def scale_indices(self, c: int) -> List[int]:
        return [self.index[self.scale(c, e)] for e in self.elements]

    def parse_element(self, value) -> Element:
        if isinstance(value, bool):
            raise DomainError(f"{value!r} is not a group element")
        parts = (value,) if isinstance(value, int) else tuple(value)
        if len(parts) != self.rank or any(isinstance(p, bool) or not isinstance(p, int) for p in parts):
            raise DomainError(f"{value!r} is not an element of Z{self.moduli}", value=str(value))
        if any(not 0 <= p < m for p, m in zip(parts, self.moduli)):
            raise DomainError(f"{value!r} is out of range for moduli {list(self.moduli)}", value=str(value))
        return tuple(parts)

    def format_element(self, e: Element):
        return e[0] if self.rank == 1 else list(e)

    def json_response_format(self) -> Dict:
        return {"moduli": list(self.moduli)}


@dataclass(frozen=True)
class GroupFunction:
    """Total value table of a map X -> Y, indexed in lexicographic element order."""

    domain: FiniteAbelianGroup
    codomain: FiniteAbelianGroup
    table: Tuple[Element, ...]

    def __post_init__(self):
        table = tuple(self.codomain.parse_element(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.domain.order:
            raise DomainError(
                f"Table has {len(table)} entries but the domain has {self.domain.order} elements",
                entries=len(table),
                order=self.domain.order,
            )

    @classmethod
    def from_callable(cls, domain: FiniteAbelianGroup, codomain: FiniteAbelianGroup, fn: Callable[[Element], Element]):
        return cls(domain, codomain, tuple(fn(x) for x in domain.elements))

    @classmethod
    def constant(cls, domain: FiniteAbelianGroup, codomain: FiniteAbelianGroup, value: Element):
        return cls(domain, codomain, tuple(value for _ in range(domain.order)))

    def __call__(self, x: Element) -> Element:
        return self.table[self.domain.index[x]]

    @cached_property
    def value_indices(self) -> List[int]:
        return [self.codomain.index[v] for v in self.table]

    def first_difference(self, other: "GroupFunction") -> Optional[Element]:
        for x, a, b in zip(self.domain.elements, self.table, other.table):
            if a != b:
                return x
        return None

    def homomorphism_defect(self) -> Optional[Tuple[Element, Element]]:
        """First (x, e) with f(x + e) != f(x) + f(e) over all elements x and generators e."""
        X, Y = self.domain, self.codomain
        if self(X.zero) != Y.zero:
            return X.zero, X.zero
        for e in X.generators():
            fe = self(e)
            for x in X.elements:
                if self(X.add(x, e)) != Y.add(self(x), fe):
                    return x, e
        return None

    def is_homomorphism(self) -> bool:
        # Checking every (element, generator) pair is equivalent to additivity on all pairs
        return self.homomorphism_defect() is None

    def json_response_format(self) -> List:
        return [self.codomain.format_element(v) for v in self.table]


@dataclass(frozen=True)
class Decomposition:
    """f = A + y and g_i = A + y_i with A a homomorphism and y = sum y_i."""

    A: GroupFunction
    y: Element
    y_i: Optional[Tuple[Element, ...]]

    def __post_init__(self):
        defect = self.A.homomorphism_defect()
        if defect is not None:
            raise InternalError("Decomposition part A is not a homomorphism", witness=[list(d) for d in defect])
        if self.y_i is not None and self.A.codomain.total(self.y_i) != self.y:
            raise InternalError("Decomposition constants do not satisfy y = sum y_i")

    def json_response_format(self) -> Dict:
        Y = self.A.codomain
        return {
            "A": self.A.json_response_format(),
            "y": Y.format_element(self.y),
            "y_i": None if self.y_i is None else [Y.format_element(v) for v in self.y_i],
        }
