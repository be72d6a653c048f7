import itertools
import logging
from typing import List, Sequence

import networkx as nx

from domains.rational import format_point, format_vector, vec_add, vec_sub, vec_sum
from equations.equation_model import AffineMap, Matrix
from errors import DomainError, StitchError
from .patch_model import ComponentSolution, GlobalSolution, LocalSolution, Patch

logger = logging.getLogger(__name__)


def overlap_graph(patches: Sequence[Patch]) -> nx.Graph:
    """Patches are nodes; an edge joins two patches whose supports intersect."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(patches)))
    for i, j in itertools.combinations(range(len(patches)), 2):
        if patches[i].overlaps(patches[j]):
            graph.add_edge(i, j)
    return graph


def _linear(A: Matrix):
    return AffineMap(A, tuple(0 for _ in A)).linear


def _check_edge(x: int, y: int, patches: Sequence[Patch], solutions: Sequence[LocalSolution]):
    if solutions[x].A != solutions[y].A:
        raise StitchError(
            f"Overlapping patches {x} and {y} recovered different linear parts",
            edge=[x, y],
            A_x=[format_vector(row) for row in solutions[x].A],
            A_y=[format_vector(row) for row in solutions[y].A],
        )
    linear = _linear(solutions[x].A)
    for i, (x_i, y_i) in enumerate(zip(patches[x].base, patches[y].base)):
        # Local constants g_i(x_i) = u_{x,i} + A x_i, then u_{x,i} - u_{y,i} + A(y_i - x_i) = 0
        local_x = vec_add(solutions[x].u_xi[i], linear(x_i))
        local_y = vec_add(solutions[y].u_xi[i], linear(y_i))
        residual = vec_add(vec_sub(local_x, local_y), linear(vec_sub(y_i, x_i)))
        if any(c != 0 for c in residual):
            raise StitchError(
                f"Constants of patches {x} and {y} cannot be reconciled for factor {i + 1}",
                edge=[x, y],
                factor=i + 1,
                residual=format_vector(residual),
            )


def stitch(patches: Sequence[Patch], solutions: Sequence[LocalSolution]) -> GlobalSolution:
    """Chain local solutions across the overlap graph into one extension per component."""
    if len(patches) != len(solutions):
        raise DomainError(f"{len(patches)} patches but {len(solutions)} local solutions")
    if not patches:
        raise DomainError("Nothing to stitch")
    graph = overlap_graph(patches)

    components: List[ComponentSolution] = []
    for nodes in nx.connected_components(graph):
        root = min(nodes)
        for x, y in sorted(tuple(sorted(edge)) for edge in graph.subgraph(nodes).edges()):
            _check_edge(x, y, patches, solutions)

        A = solutions[root].A
        u_i = solutions[root].u_xi
        u = vec_sum(u_i, len(solutions[root].u_x))
        for parent, child in nx.bfs_edges(graph, root):
            if solutions[child].u_xi != u_i or solutions[child].u_x != u:
                raise StitchError(
                    f"Patch {child} disagrees with the constants carried from patch {root}",
                    edge=[parent, child],
                    patch=format_point(patches[child].base_sum),
                )
        components.append(ComponentSolution(A, u, u_i, tuple(sorted(nodes))))

    # Canonical order: by the smallest patch base, so input order does not matter
    components.sort(key=lambda c: min(patches[v].base for v in c.patch_indices))
    logger.info(f"✅ Stitched {len(patches)} patches into {len(components)} component(s)")
    return GlobalSolution(tuple(components))
