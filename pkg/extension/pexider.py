from typing import Dict, List, Sequence, Tuple

from domains.rational import Vector, format_point, format_vector, vec_add, vec_sum
from errors import DomainError
from .patch_model import PatchTables


class PexiderReport:
    def __init__(self, checked: int, violations: List[Tuple[int, Tuple[Vector, ...], Vector, Vector]]):
        self.checked = checked
        self.violations = violations

    @property
    def passed(self) -> bool:
        return not self.violations

    def json_response_format(self) -> Dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "checked": self.checked,
            "violations": [
                {
                    "index": index,
                    "tuple": [format_point(x) for x in points],
                    "lhs": format_vector(lhs),
                    "rhs": format_vector(rhs),
                }
                for index, points, lhs, rhs in self.violations
            ],
        }


def verify_pexider(tables: PatchTables, sample_tuples: Sequence[Sequence[Vector]]) -> PexiderReport:
    """Check f(sum x_i) = sum g_i(x_i) exactly on every supplied tuple."""
    violations = []
    for index, points in enumerate(sample_tuples):
        points = tuple(tuple(x) for x in points)
        if len(points) != tables.n:
            raise DomainError(f"Tuple {index} has {len(points)} entries, expected {tables.n}", index=index)
        lhs = tables.f(vec_sum(points, len(points[0])))
        rhs = tables.g(0, points[0])
        for i in range(1, tables.n):
            rhs = vec_add(rhs, tables.g(i, points[i]))
        if lhs != rhs:
            violations.append((index, points, lhs, rhs))
    return PexiderReport(len(sample_tuples), violations)
