import logging
import time
from typing import Callable, Dict, Optional

from commands import (
    characterize,
    check_invariance,
    enumerate_finite,
    extend,
    shrink,
    solve_finite,
    verify,
    weighted_check,
)
from equations.verify import DEFAULT_SEED
from errors import SpecError
from .report_model import Report
from .spec_model import ProblemSpec

logger = logging.getLogger(__name__)

Handler = Callable[[ProblemSpec, int], Report]

# Command name -> handler, one module per command
HANDLERS: Dict[str, Handler] = {
    "check-invariance": check_invariance.handle,
    "characterize": characterize.handle,
    "verify": verify.handle,
    "extend": extend.handle,
    "shrink": shrink.handle,
    "enumerate-finite": enumerate_finite.handle,
    "solve-finite": solve_finite.handle,
    "weighted-check": weighted_check.handle,
}


def resolve_seed(spec: ProblemSpec, seed: Optional[int] = None) -> int:
    """CLI seed, then the spec's params.seed, then the default."""
    if seed is not None:
        return seed
    if spec.params.seed is not None:
        return spec.params.seed
    return DEFAULT_SEED


def run(spec: ProblemSpec, command: Optional[str] = None, seed: Optional[int] = None) -> Report:
    """Run one command on a parsed spec and return its report."""
    command = command or spec.command
    if command is None:
        raise SpecError("No command given on the command line or in the spec", path="command")
    if command not in HANDLERS:
        raise SpecError(f"Unknown command '{command}'", path="command")
    spec.require(command)

    seed = resolve_seed(spec, seed)
    logger.info(f"🔄 Running {command} (seed {seed})")
    start = time.perf_counter()
    report = HANDLERS[command](spec, seed)
    report.finish(time.perf_counter() - start)
    logger.info(f"✅ {command} finished: {report.verdict.value}")
    return report
