from fractions import Fraction
from math import gcd

from hypothesis import strategies as st

from domains.domain_model import Interval
from domains.rational import NEG_INF, POS_INF
from extension.patch_model import Patch
from finite_groups.group_model import FiniteAbelianGroup


def rationals(min_value=-8, max_value=8, max_denominator=32):
    return st.fractions(min_value=Fraction(min_value), max_value=Fraction(max_value), max_denominator=max_denominator)


def nonzero_rationals(min_value=-4, max_value=4, max_denominator=16):
    return rationals(min_value, max_value, max_denominator).filter(lambda q: q != 0)


def coefficient_lists(min_size=2, max_size=4, bound=3):
    return st.lists(nonzero_rationals(-bound, bound), min_size=min_size, max_size=max_size)


@st.composite
def intervals(draw, allow_infinite=True):
    lo = draw(rationals())
    hi = lo + draw(rationals(Fraction(1, 16), 8))
    kind = draw(st.sampled_from(["bounded", "bounded", "left", "right", "line"])) if allow_infinite else "bounded"
    if kind == "left":
        return Interval(NEG_INF, hi)
    if kind == "right":
        return Interval(lo, POS_INF)
    if kind == "line":
        return Interval(NEG_INF, POS_INF)
    return Interval(lo, hi)


@st.composite
def matrices(draw, h, k):
    return tuple(tuple(draw(rationals(-5, 5, 8)) for _ in range(k)) for _ in range(h))


@st.composite
def vectors(draw, dim):
    return tuple(draw(rationals(-5, 5, 8)) for _ in range(dim))


@st.composite
def patch_covers(draw, n, k):
    """Connected covers of 3-10 patches: each new patch is a short axis shift of an earlier one."""
    radius = Fraction(1, draw(st.sampled_from([4, 8, 16])))
    base = tuple(draw(vectors(k)) for _ in range(n))
    patches = [Patch(base, radius)]
    count = draw(st.integers(3, 10))
    while len(patches) < count:
        parent = patches[draw(st.integers(0, len(patches) - 1))]
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, k - 1))
        shift = draw(st.sampled_from([radius, -radius, radius / 2, 2 * radius, -2 * radius]))
        moved = [list(x) for x in parent.base]
        moved[i][j] += shift
        patches.append(Patch(tuple(tuple(x) for x in moved), radius))
    return patches


@st.composite
def finite_groups(draw, max_order=32, max_rank=2):
    first = draw(st.integers(2, max_order))
    moduli = [first]
    if max_rank > 1 and max_order // first >= 2 and draw(st.booleans()):
        moduli.append(draw(st.integers(2, max_order // first)))
    return FiniteAbelianGroup(tuple(moduli))


@st.composite
def homomorphism_images(draw, G, H):
    """Generator images h_j with m_j h_j = 0, built from the closed form n / gcd(m, n)."""
    images = []
    for m in G.moduli:
        images.append(tuple(draw(st.integers(0, gcd(m, n) - 1)) * (n // gcd(m, n)) for n in H.moduli))
    return images
