from finite_groups.homomorphisms import enumerate_homomorphisms, homomorphism_count
from run_management.report_model import Report, Verdict
from run_management.spec_model import ProblemSpec, build_groups


def handle(spec: ProblemSpec, seed: int) -> Report:
    G, H = build_groups(spec)
    homomorphisms = enumerate_homomorphisms(G, H)
    return Report(
        "enumerate-finite",
        Verdict.COMPUTED,
        {
            "domain": G.json_response_format(),
            "codomain": H.json_response_format(),
            "count": len(homomorphisms),
            "closed_form_count": homomorphism_count(G, H),
            "homomorphisms": [phi.json_response_format() for phi in homomorphisms],
        },
        seed,
    )
