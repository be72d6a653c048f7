"""Pexider equations over finite abelian groups, decided by exhaustion.

Unweighted: f(x_1 + ... + x_n) = g_1(x_1) + ... + g_n(x_n).
Weighted:   f(a_1 x_1 + ... + a_n x_n) = g_1(x_1) + ... + g_n(x_n), a_i integers.
"""
import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from errors import DomainError, InconsistencyError, InternalError
from run_management.run_processor import parallel_map
from .group_model import Decomposition, Element, FiniteAbelianGroup, GroupFunction, guard
from .homomorphisms import enumerate_homomorphisms

logger = logging.getLogger(__name__)

Violation = Tuple[Tuple[Element, ...], Element, Element]


def _check_functions(f: GroupFunction, gs: Sequence[GroupFunction]):
    if len(gs) < 2:
        raise DomainError(f"At least two g functions are needed, got {len(gs)}")
    for i, g in enumerate(gs, start=1):
        if g.domain != f.domain or g.codomain != f.codomain:
            raise DomainError(f"g_{i} does not share the domain and codomain of f", factor=i)


class _SliceScan:
    """Index tables for scanning one first-coordinate slice; plain lists so workers can unpickle them."""

    def __init__(self, X: FiniteAbelianGroup, Y: FiniteAbelianGroup, f: GroupFunction, gs: Sequence[GroupFunction], weights: Sequence[int]):
        self.order = X.order
        self.n = len(gs)
        self.add_x, self.add_y = X.add_table, Y.add_table
        self.scaled = [X.scale_indices(w) for w in weights]
        self.f_values = f.value_indices
        self.g_values = [g.value_indices for g in gs]
        self.zero_x, self.zero_y = X.index[X.zero], Y.index[Y.zero]

    def __call__(self, first: int) -> Optional[Tuple[Tuple[int, ...], int, int]]:
        add_x, add_y, scaled, g_values = self.add_x, self.add_y, self.scaled, self.g_values
        for rest in itertools.product(range(self.order), repeat=self.n - 1):
            indices = (first, *rest)
            s, r = self.zero_x, self.zero_y
            for i, xi in enumerate(indices):
                s = add_x[s][scaled[i][xi]]
                r = add_y[r][g_values[i][xi]]
            if self.f_values[s] != r:
                return indices, self.f_values[s], r
        return None


def first_violation(f: GroupFunction, gs: Sequence[GroupFunction], weights: Sequence[int]) -> Optional[Violation]:
    """Lexicographically smallest tuple on which the weighted equation fails, or None."""
    X, Y = f.domain, f.codomain
    n = len(gs)
    guard(X.order**n, "Checking the equation on every tuple")

    scan = _SliceScan(X, Y, f, gs, weights)

    # Slices by first coordinate keep lexicographic order across workers
    for hit in parallel_map(scan, range(X.order)):
        if hit is not None:
            indices, lhs, rhs = hit
            return tuple(X.elements[i] for i in indices), Y.elements[lhs], Y.elements[rhs]
    return None


def _violation_context(X: FiniteAbelianGroup, Y: FiniteAbelianGroup, violation: Violation) -> Dict:
    tuple_, lhs, rhs = violation
    return {
        "witness": [X.format_element(x) for x in tuple_],
        "lhs": Y.format_element(lhs),
        "rhs": Y.format_element(rhs),
    }


def solve_pexider_unrestricted(f: GroupFunction, gs: Sequence[GroupFunction]) -> Decomposition:
    """Decompose a solution as f = A + y, g_i = A + y_i with A a homomorphism and y = sum y_i."""
    _check_functions(f, gs)
    X, Y = f.domain, f.codomain

    violation = first_violation(f, gs, [1] * len(gs))
    if violation is not None:
        context = _violation_context(X, Y, violation)
        raise InconsistencyError(f"The Pexider equation fails at {tuple(context['witness'])}", **context)

    y_i = tuple(g(X.zero) for g in gs)
    y = Y.total(y_i)
    if f(X.zero) != y:
        raise InternalError("f(0) differs from the sum of g_i(0)", f0=Y.format_element(f(X.zero)))

    f_tilde = GroupFunction.from_callable(X, Y, lambda x: Y.sub(f(x), y))
    for i, (g, c) in enumerate(zip(gs, y_i), start=1):
        g_tilde = GroupFunction.from_callable(X, Y, lambda x, g=g, c=c: Y.sub(g(x), c))
        x = f_tilde.first_difference(g_tilde)
        if x is not None:
            raise InternalError(f"f - y and g_{i} - y_{i} differ", factor=i, witness=X.format_element(x))

    defect = f_tilde.homomorphism_defect()
    if defect is not None:
        raise InternalError("f - y is not additive", witness=[X.format_element(x) for x in defect])

    logger.info(f"✅ Decomposed a {len(gs)}-term Pexider solution on Z{X.moduli}")
    return Decomposition(f_tilde, y, y_i)


class WeightedPexiderResult:
    def __init__(
        self,
        alphas: Tuple[int, ...],
        equation_holds: bool,
        violation: Optional[Violation],
        decomposition: Optional[Decomposition],
        candidates_checked: int,
        homomorphisms: int,
        g_side: Optional[List[bool]],
        domain: FiniteAbelianGroup,
        codomain: FiniteAbelianGroup,
    ):
        self.alphas = alphas
        self.equation_holds = equation_holds
        self.violation = violation
        self.decomposition = decomposition
        self.candidates_checked = candidates_checked
        self.homomorphisms = homomorphisms
        self.g_side = g_side
        self.domain = domain
        self.codomain = codomain

    def json_response_format(self) -> Dict:
        result = {
            "alphas": list(self.alphas),
            "equation_holds": self.equation_holds,
            "witness": None,
            "decomposition": "NONE" if self.decomposition is None else self.decomposition.json_response_format(),
            "candidates_checked": self.candidates_checked,
            "homomorphisms": self.homomorphisms,
            "g_side": self.g_side,
        }
        if self.violation is not None:
            result["witness"] = _violation_context(self.domain, self.codomain, self.violation)
        return result


def check_weighted_pexider(alphas: Sequence[int], f: GroupFunction, gs: Sequence[GroupFunction]) -> WeightedPexiderResult:
    """Decide the weighted equation exhaustively and search every f = A + y decomposition."""
    _check_functions(f, gs)
    alphas = tuple(alphas)
    if len(alphas) != len(gs):
        raise DomainError(f"{len(alphas)} weights for {len(gs)} g functions")
    for a in alphas:
        if isinstance(a, bool) or not isinstance(a, int) or a == 0:
            raise DomainError(f"Weight {a!r} must be a non-zero integer")
    X, Y = f.domain, f.codomain

    violation = first_violation(f, gs, alphas)
    homs = enumerate_homomorphisms(X, Y)
    guard(len(homs) * Y.order * X.order, "Searching homomorphism-plus-offset decompositions")

    # Only the f-side f = A + y decides the verdict
    candidates = 0
    found = None
    for A in homs:
        for y in Y.elements:
            candidates += 1
            if all(fx == Y.add(ax, y) for fx, ax in zip(f.table, A.table)):
                found = (A, y)
                break
        if found:
            break
    logger.debug(f"🔍 Checked {candidates} decomposition candidates")

    decomposition, g_side = None, None
    if found:
        A, y = found
        y_i = tuple(g(X.zero) for g in gs)
        decomposition = Decomposition(A, y, y_i if Y.total(y_i) == y else None)
        g_side = [
            all(g(x) == Y.add(A(X.scale(a, x)), c) for x in X.elements) for g, a, c in zip(gs, alphas, y_i)
        ]

    return WeightedPexiderResult(
        alphas=alphas,
        equation_holds=violation is None,
        violation=violation,
        decomposition=decomposition,
        candidates_checked=candidates,
        homomorphisms=len(homs),
        g_side=g_side,
        domain=X,
        codomain=Y,
    )
