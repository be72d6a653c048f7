from equations.characterize import characterize
from equations.verify import DEFAULT_TRIALS, verify_affine_solution
from run_management.report_model import Report, Verdict
from run_management.spec_model import ProblemSpec, build_candidate, build_domain, build_equation


def handle(spec: ProblemSpec, seed: int) -> Report:
    """Exact randomized check of a candidate f = A x + b."""
    domain = build_domain(spec)
    equation = build_equation(spec)
    candidate = build_candidate(spec, domain)
    trials = spec.params.trials or DEFAULT_TRIALS

    verification = verify_affine_solution(equation, domain, candidate, trials, seed)
    family = characterize(equation)
    return Report(
        "verify",
        Verdict.PASS if verification.passed else Verdict.FAIL,
        {
            "candidate": candidate.json_response_format(),
            **verification.json_response_format(),
            "admitted_by_family": family.admits(candidate),
        },
        seed,
    )
