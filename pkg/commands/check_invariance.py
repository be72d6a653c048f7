from domains.invariance import check_invariance
from domains.rational import format_vector
from run_management.report_model import Report, Verdict
from run_management.spec_model import ProblemSpec, build_domain, build_equation


def handle(spec: ProblemSpec, seed: int) -> Report:
    """Decide sum alpha_i K ⊆ K, with the image or a witness tuple as certificate."""
    domain = build_domain(spec)
    equation = build_equation(spec)
    result = check_invariance(domain, equation.alphas, seed)
    return Report(
        "check-invariance",
        Verdict.HOLDS if result.holds else Verdict.FAILS,
        {
            "domain": domain.json_response_format(),
            "alphas": format_vector(equation.alphas),
            **result.json_response_format(),
        },
        seed,
    )
