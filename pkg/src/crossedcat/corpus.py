"""The shipped corpus: small categories, tuples, and Hopf data.

These are the objects every fixture and example command is built from:
bicharacter data on cyclic groups, a pullback over the symmetric group,
a nine-simple extension, tuples pulled back from abelianizations, and
the two standard Hopf structures used by the group-indexed suite.
"""

from fractions import Fraction

from .categories import pointlike_category
from .cocycles import RibbonTuple, canonical_twist
from .constructions import canonical_extension, pullback
from .cyclotomic import CycloNum, one, zero, zeta
from .groups import (
    GroupHom,
    abelianization,
    cyclic,
    product_of_cyclics,
    quaternion8,
    symmetric3,
)
from .hopf import group_algebra_hopf, sweedler_algebra


def bicharacter_tuple(n, exponent=1):
    """The standard tuple on Z/n: trivial associator, c(j,k) = ζ^(e·j·k)."""
    u = one()
    grp = cyclic(n)
    c = [[zeta(n, exponent * j * k) for k in range(n)] for j in range(n)]
    t = RibbonTuple(grp, [[[u] * n for _ in range(n)] for _ in range(n)],
                    [u] * n, c)
    return t.with_twist(canonical_twist(t))


def bicharacter_category(n, exponent=1):
    return pointlike_category(bicharacter_tuple(n, exponent))


def signed_s3_category():
    """The pullback of the order-two bicharacter data along the sign map."""
    grp = symmetric3()
    sign = GroupHom(grp, cyclic(2),
                    [0 if grp.element_order(x) in (1, 3) else 1
                     for x in grp.elements()])
    return pullback(bicharacter_category(2), sign)


def extension_category():
    """Nine simples over Z/3, three per degree, from the canonical extension."""
    ext, witnesses = canonical_extension(bicharacter_category(3))
    if witnesses:
        raise RuntimeError(f"extension corpus broken: {witnesses[0]}")
    return ext


def _pulled_back_tuple(base, hom):
    src = hom.source
    n = src.order
    a = [[[base.a[hom(x)][hom(y)][hom(z)] for z in range(n)]
          for y in range(n)] for x in range(n)]
    b = [base.b[hom(x)] for x in range(n)]
    c = [[base.c[hom(x)][hom(y)] for y in range(n)] for x in range(n)]
    theta = None if base.theta is None else [base.theta[hom(x)]
                                             for x in range(n)]
    return RibbonTuple(src, a, b, c, theta)


def s3_abelianized_tuple():
    """The order-two bicharacter data seen through the sign of a permutation."""
    grp = symmetric3()
    quotient, hom = abelianization(grp)
    base = bicharacter_tuple(2)
    relabel = GroupHom(grp, base.group,
                       [0 if hom(x) == quotient.unit else 1
                        for x in grp.elements()])
    return _pulled_back_tuple(base, relabel)


def klein_bicharacter_tuple():
    """A product bicharacter on Z/2 x Z/2 with canonical twist."""
    grp = product_of_cyclics([2, 2])
    bits = [(i >> 1 & 1, i & 1) for i in range(4)]
    u = one()
    c = [[zeta(2, bits[x][0] * bits[y][0] + bits[x][1] * bits[y][1])
          for y in range(4)] for x in range(4)]
    t = RibbonTuple(grp, [[[u] * 4 for _ in range(4)] for _ in range(4)],
                    [u] * 4, c)
    return t.with_twist(canonical_twist(t))


def q8_abelianized_tuple():
    """A Klein-group bicharacter pulled back over the quaternion group."""
    grp = quaternion8()
    quotient, hom = abelianization(grp)
    base = klein_bicharacter_tuple()
    match = _match_tables(quotient, base.group)
    relabel = GroupHom(grp, base.group, [match[hom(x)]
                                         for x in grp.elements()])
    return _pulled_back_tuple(base, relabel)


def _match_tables(source, target):
    """An isomorphism between two four-element groups of exponent two."""
    if source.order != target.order:
        raise ValueError("the groups have different orders")
    images = [None] * source.order
    images[source.unit] = target.unit
    generators = [x for x in source.elements() if x != source.unit]
    free = [y for y in target.elements() if y != target.unit]
    images[generators[0]] = free[0]
    images[generators[1]] = free[1]
    images[generators[2]] = target.times(free[0], free[1])
    for a in source.elements():
        for b in source.elements():
            if target.times(images[a], images[b]) != images[source.times(a, b)]:
                raise ValueError("no isomorphism with the chosen matching")
    return images


def half_sum_r_matrix(dimension):
    """The symmetric R supported on the first two basis vectors."""
    half = CycloNum.from_rational(Fraction(1, 2))
    r = [[zero() for _ in range(dimension)] for _ in range(dimension)]
    r[0][0] = half
    r[0][1] = half
    r[1][0] = half
    r[1][1] = -half
    return r


def hopf_corpus():
    """Name -> (data, r, ribbon) for the shipped Hopf structures."""
    kz2 = group_algebra_hopf(cyclic(2))
    h4 = sweedler_algebra()
    return {
        "kz2": (kz2, half_sum_r_matrix(2), kz2.basis(0)),
        "sweedler": (h4, half_sum_r_matrix(4), h4.basis(0)),
    }


def category_corpus():
    """Name -> category for every shipped category fixture."""
    return {
        "cat_z2": bicharacter_category(2),
        "cat_z3": bicharacter_category(3),
        "cat_z4": bicharacter_category(4),
        "cat_z5": bicharacter_category(5, 2),
        "cat_z6": bicharacter_category(6),
        "cat_s3_signed": signed_s3_category(),
        "cat_ext3": extension_category(),
    }


def tuple_corpus():
    """Name -> tuple for every shipped tuple fixture."""
    trivial = RibbonTuple.trivial(cyclic(2))
    return {
        "ones": trivial,
        "tuple_z2": bicharacter_tuple(2),
        "tuple_z3": bicharacter_tuple(3),
        "tuple_z4": bicharacter_tuple(4),
        "tuple_z5": bicharacter_tuple(5, 2),
        "tuple_z6": bicharacter_tuple(6),
        "tuple_s3_abelianized": s3_abelianized_tuple(),
        "tuple_q8_abelianized": q8_abelianized_tuple(),
    }
