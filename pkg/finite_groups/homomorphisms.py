import itertools
import logging
from math import gcd
from typing import List

from errors import InternalError
from .group_model import Element, FiniteAbelianGroup, GroupFunction, guard

logger = logging.getLogger(__name__)


def homomorphism_count(G: FiniteAbelianGroup, H: FiniteAbelianGroup) -> int:
    """|Hom(G, H)| = prod gcd(m_i, n_j) for cyclic products."""
    count = 1
    for m in G.moduli:
        for n in H.moduli:
            count *= gcd(m, n)
    return count


def _generator_images(m: int, H: FiniteAbelianGroup) -> List[Element]:
    """Elements h of H with m h = 0: coordinate j runs over the multiples of n_j / gcd(m, n_j)."""
    axes = []
    for n in H.moduli:
        step = n // gcd(m, n)
        axes.append(range(0, n, step))
    return list(itertools.product(*axes))


def enumerate_homomorphisms(G: FiniteAbelianGroup, H: FiniteAbelianGroup) -> List[GroupFunction]:
    """Every homomorphism G -> H, chosen by generator images and verified exhaustively."""
    guard(G.order * H.order, "Enumerating homomorphisms")
    count = homomorphism_count(G, H)
    guard(count * G.order * G.rank, "Tabulating and verifying every homomorphism")

    choices = [_generator_images(m, H) for m in G.moduli]
    homomorphisms = []
    for images in itertools.product(*choices):
        table = tuple(H.total([H.scale(c, image) for c, image in zip(x, images)]) for x in G.elements)
        phi = GroupFunction(G, H, table)
        defect = phi.homomorphism_defect()
        if defect is not None:
            raise InternalError("Generated map is not additive", witness=[list(d) for d in defect])
        homomorphisms.append(phi)

    if len(homomorphisms) != count:
        raise InternalError(f"Enumerated {len(homomorphisms)} homomorphisms, expected {count}")
    logger.debug(f"🔢 {count} homomorphisms Z{G.moduli} -> Z{H.moduli}")
    return homomorphisms
