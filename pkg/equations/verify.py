import functools
import logging
import random
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from domains.domain_model import Domain
from domains.invariance import combine, require_invariance
from domains.rational import Vector, format_vector, vec_add, vec_scale
from errors import DomainError
from run_management.run_processor import parallel_map
from .equation_model import AffineMap, EquationSpec

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240601
DEFAULT_TRIALS = 1000


class VerificationReport:
    """Exact trial-by-trial verdict for a candidate solution."""

    def __init__(
        self,
        passed: bool,
        trials: int,
        seed: int,
        violations: int = 0,
        first_violation: Optional[Tuple[int, Tuple[Vector, ...]]] = None,
        lhs: Optional[Vector] = None,
        rhs: Optional[Vector] = None,
    ):
        self.passed = passed
        self.trials = trials
        self.seed = seed
        self.violations = violations
        self.first_violation = first_violation
        self.lhs = lhs
        self.rhs = rhs

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def json_response_format(self) -> Dict:
        body = {"verdict": self.verdict, "trials": self.trials, "seed": self.seed, "violations": self.violations}
        if self.first_violation is not None:
            index, points = self.first_violation
            body["first_violation"] = {"trial": index, "tuple": [format_vector(x) for x in points]}
            body["lhs"] = format_vector(self.lhs)
            body["rhs"] = format_vector(self.rhs)
        return body


def evaluate_sides(spec: EquationSpec, candidate: AffineMap, points: Tuple[Vector, ...]) -> Tuple[Vector, Vector]:
    lhs = candidate(combine(spec.alphas, points))
    rhs = tuple(Fraction(0) for _ in range(candidate.h))
    for beta, x in zip(spec.betas, points):
        rhs = vec_add(rhs, vec_scale(beta, candidate(x)))
    return lhs, rhs


def draw_tuples(domain: Domain, n: int, trials: int, seed: int) -> List[Tuple[Vector, ...]]:
    rng = random.Random(seed)
    return [tuple(domain.sample_point(rng) for _ in range(n)) for _ in range(trials)]


def verify_affine_solution(
    spec: EquationSpec,
    domain: Domain,
    candidate: AffineMap,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Check f(sum alpha_i x_i) = sum beta_i f(x_i) exactly on seeded random tuples."""
    if trials < 1:
        raise DomainError("trials must be a positive integer", trials=trials)
    require_invariance(domain, spec.alphas)
    if candidate.k != domain.dim:
        raise DomainError(
            f"Candidate acts on Q^{candidate.k} but the domain lives in Q^{domain.dim}",
            candidate_dim=candidate.k,
            domain_dim=domain.dim,
        )

    # Tuples are drawn serially so the stream depends on the seed alone
    tuples = draw_tuples(domain, spec.n, trials, seed)

    results = parallel_map(functools.partial(evaluate_sides, spec, candidate), tuples)
    failed = [index for index, (lhs, rhs) in enumerate(results) if lhs != rhs]
    if not failed:
        logger.info(f"✅ Candidate passed {trials} exact trials")
        return VerificationReport(True, trials, seed)

    first = failed[0]
    lhs, rhs = results[first]
    logger.info(f"❌ Candidate failed {len(failed)} of {trials} trials, first at trial {first}")
    return VerificationReport(False, trials, seed, len(failed), (first, tuples[first]), lhs, rhs)
