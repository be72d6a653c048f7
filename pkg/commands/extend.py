import logging

from errors import SpecError
from extension.general_linear import default_radius, extend_general_linear, required_points, tabulate
from run_management.report_model import Report, Verdict
from run_management.spec_model import ProblemSpec, build_closed_form, build_domain, build_equation, build_f_table

logger = logging.getLogger(__name__)


def handle(spec: ProblemSpec, seed: int) -> Report:
    """Recover f = A x + b from exact samples, or from a closed form sampled where the engine probes."""
    domain = build_domain(spec)
    equation = build_equation(spec)
    centers = spec.params.centers
    radius = spec.params.radius

    closed_form = build_closed_form(spec, domain)
    if closed_form is not None:
        if not centers:
            raise SpecError("Extending a closed form needs params.centers", path="params.centers")
        if radius is None:
            radius = default_radius(equation, domain, centers)
        f_table = tabulate(closed_form, required_points(equation, domain, centers, radius))
        logger.info(f"📋 Sampled the closed form at {len(f_table)} points")
    else:
        if not centers and radius is None:
            raise SpecError("Extending a table needs params.centers or params.radius", path="params")
        f_table = build_f_table(spec)

    extension = extend_general_linear(equation, domain, f_table, centers or None, radius)
    return Report("extend", Verdict.COMPUTED, extension.json_response_format(), seed)
