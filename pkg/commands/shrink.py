from domains.invariance import find_symmetric_subdomain
from run_management.report_model import Report, Verdict
from run_management.spec_model import ProblemSpec, build_domain, build_equation


def handle(spec: ProblemSpec, seed: int) -> Report:
    domain = build_domain(spec)
    equation = build_equation(spec)
    subdomain = find_symmetric_subdomain(domain, equation.alphas)
    return Report(
        "shrink",
        Verdict.COMPUTED,
        {"domain": domain.json_response_format(), **subdomain.json_response_format()},
        seed,
    )
