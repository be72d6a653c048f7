from finite_groups.pexider import check_weighted_pexider
from run_management.report_model import Report, Verdict
from run_management.spec_model import ProblemSpec, build_group_functions, build_groups, build_weights


def handle(spec: ProblemSpec, seed: int) -> Report:
    G, H = build_groups(spec)
    f, gs = build_group_functions(spec, G, H)
    result = check_weighted_pexider(build_weights(spec), f, gs)

    if not result.equation_holds:
        verdict = Verdict.FAILS
    elif result.decomposition is None:
        verdict = Verdict.NONE
    else:
        verdict = Verdict.DECOMPOSABLE
    return Report("weighted-check", verdict, result.json_response_format(), seed)
