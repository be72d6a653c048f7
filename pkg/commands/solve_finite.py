from finite_groups.pexider import solve_pexider_unrestricted
from run_management.report_model import Report, Verdict
from run_management.spec_model import ProblemSpec, build_group_functions, build_groups


def handle(spec: ProblemSpec, seed: int) -> Report:
    """Decompose an unweighted Pexider solution over a finite abelian group."""
    G, H = build_groups(spec)
    f, gs = build_group_functions(spec, G, H)
    decomposition = solve_pexider_unrestricted(f, gs)
    return Report(
        "solve-finite",
        Verdict.DECOMPOSABLE,
        {"domain": G.json_response_format(), "codomain": H.json_response_format(), **decomposition.json_response_format()},
        seed,
    )
