from equations.characterize import characterize, homogeneity_field
from run_management.report_model import Report, Verdict
from run_management.spec_model import ProblemSpec, build_equation


def handle(spec: ProblemSpec, seed: int) -> Report:
    equation = build_equation(spec)
    family = characterize(equation)
    field = homogeneity_field(equation.alphas)
    return Report(
        "characterize",
        Verdict.COMPUTED,
        {
            "equation": equation.json_response_format(),
            "family": family.json_response_format(),
            "homogeneity": field.json_response_format(),
        },
        seed,
    )
