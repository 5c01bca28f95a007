"""Structure-constant tuple verification, coboundaries, twists, mirrors."""

import itertools
import random
from fractions import Fraction

import pytest

from crossedcat.cocycles import (
    RibbonTuple,
    TwoCochain,
    canonical_twist,
    coboundary,
    derived_identities,
    enumerate_bicharacter_tuples,
    tuple_mirror,
    tuple_product,
    verify_associator,
    verify_braiding,
    verify_tuple,
    verify_twist,
)
from crossedcat.cyclotomic import one, zeta
from crossedcat.groups import cyclic, product_of_cyclics, symmetric3


def bicharacter_tuple(n, order=None):
    """c_{j,k} = zeta^{jk} on Z/n with the diagonal twist."""
    order = order or n
    g = cyclic(n)
    u = one()
    c = [[zeta(order, j * k) for k in range(n)] for j in range(n)]
    t = RibbonTuple(
        g,
        [[[u] * n for _ in range(n)] for _ in range(n)],
        [u] * n,
        c,
    )
    return t.with_twist(canonical_twist(t))


def random_cochain(group, order, rng):
    """A conjugation-invariant cochain with root-of-unity values."""
    n = group.order
    eta = [[None] * n for _ in range(n)]
    for alpha, beta in itertools.product(group.elements(), repeat=2):
        if eta[alpha][beta] is not None:
            continue
        value = zeta(order, rng.randrange(order))
        for delta in group.elements():
            eta[group.conj(delta, alpha)][group.conj(delta, beta)] = value
    return TwoCochain(group, eta)


def test_trivial_tuple_passes_everything():
    for g in (cyclic(1), cyclic(4), symmetric3()):
        t = RibbonTuple.trivial(g)
        report = verify_tuple(t)
        assert all(not v for v in report.values()), report


def test_bicharacter_tuple_on_z3_passes():
    t = bicharacter_tuple(3)
    assert not verify_associator(t)
    assert not verify_braiding(t)
    assert not verify_twist(t)


def test_twist_from_squared_exponents():
    t = bicharacter_tuple(3)
    assert t.theta == [zeta(3, j * j) for j in range(3)]


def test_single_bad_associator_entry_is_caught():
    g = cyclic(3)
    t = RibbonTuple.trivial(g)
    t.a[1][0][2] = zeta(3)
    bad = verify_associator(t)
    assert bad
    assert any(rule == "coherence" for rule, _ in bad)


def test_non_multiplicative_braiding_is_caught():
    g = cyclic(3)
    u = one()
    c = [[zeta(3, j + k) for k in range(3)] for j in range(3)]
    t = RibbonTuple(g, [[[u] * 3 for _ in range(3)] for _ in range(3)], [u] * 3, c)
    bad = verify_braiding(t)
    assert any(rule == "braiding-right-expansion" for rule, _ in bad)


def test_wrong_twist_is_caught():
    t = bicharacter_tuple(3)
    broken = t.with_twist([zeta(3, j) for j in range(3)])
    assert verify_twist(broken)


def test_zero_entry_rejected():
    g = cyclic(2)
    u = one()
    with pytest.raises(ValueError):
        RibbonTuple(g, [[[u] * 2] * 2] * 2, [u, u - u], [[u] * 2] * 2)


def test_coboundary_of_trivial_and_symmetric_cochains():
    g = cyclic(4)
    t = coboundary(TwoCochain(g, [[one()] * 4 for _ in range(4)]))
    assert all(t.a[x][y][z] == 1 for x in range(4) for y in range(4) for z in range(4))
    assert all(t.c[x][y] == 1 for x in range(4) for y in range(4))
    # symmetric cochain: braiding cancels, associator generally does not
    eta = [[zeta(8, (j * k) % 8) for k in range(4)] for j in range(4)]
    t2 = coboundary(TwoCochain(g, eta))
    assert all(t2.c[x][y] == 1 for x in range(4) for y in range(4))


def test_coboundaries_verify_on_random_cochains():
    rng = random.Random(7)
    groups = [cyclic(2), cyclic(4), cyclic(5), product_of_cyclics([2, 2]),
              symmetric3(), product_of_cyclics([2, 4])]
    checked = 0
    while checked < 100:
        g = groups[checked % len(groups)]
        t = coboundary(random_cochain(g, 12, rng))
        assert not verify_associator(t), (g.spec, checked)
        assert not verify_braiding(t), (g.spec, checked)
        checked += 1


def test_non_invariant_cochain_rejected_with_location():
    s3 = symmetric3()
    eta = [[one()] * 6 for _ in range(6)]
    eta[1][2] = zeta(3)
    with pytest.raises(ValueError) as err:
        TwoCochain(s3, eta)
    assert "conjugation" in str(err.value)
    # the unchecked constructor defers the failure to coboundary
    loose = TwoCochain(s3, eta, require_invariant=False)
    with pytest.raises(ValueError):
        coboundary(loose)


def test_derived_identities_trivial_associator():
    g = cyclic(3)
    u = one()
    b = [zeta(4)] * 3
    t = RibbonTuple(g, [[[u] * 3 for _ in range(3)] for _ in range(3)], b,
                    [[u] * 3 for _ in range(3)])
    bad, d = derived_identities(t)
    assert not bad
    assert d == [zeta(4, -1)] * 3


def test_derived_identities_on_coboundaries():
    rng = random.Random(3)
    for g in (cyclic(4), symmetric3()):
        for _ in range(5):
            t = coboundary(random_cochain(g, 12, rng))
            bad, d = derived_identities(t)
            assert not bad
            assert len(d) == g.order


def test_canonical_twist_with_sign_character():
    g = cyclic(2)
    u = one()
    c = [[u, u], [u, -u]]
    t = RibbonTuple(g, [[[u] * 2 for _ in range(2)] for _ in range(2)], [u] * 2, c)
    assert canonical_twist(t) == [u, -u]
    assert canonical_twist(t, [1, -1]) == [u, u]
    with pytest.raises(ValueError):
        canonical_twist(t, [1, 2])
    with pytest.raises(ValueError):
        canonical_twist(t, [1, 1, 1])


def test_canonical_twist_lemma_on_coboundaries():
    # the braiding diagonal always solves the twist identities
    rng = random.Random(11)
    for g in (cyclic(3), cyclic(6), product_of_cyclics([2, 2]), symmetric3()):
        for _ in range(4):
            t = coboundary(random_cochain(g, 12, rng))
            assert not verify_twist(t.with_twist(canonical_twist(t)))


def test_two_twists_differ_by_sign_character():
    g = cyclic(6)
    t = bicharacter_tuple(6)
    other = t.with_twist(canonical_twist(t, [(-1) ** j for j in range(6)]))
    assert not verify_twist(other)
    ratio = [other.theta[j] / t.theta[j] for j in range(6)]
    for x, y in itertools.product(range(6), repeat=2):
        assert ratio[g.times(x, y)] == ratio[x] * ratio[y]
    assert all(r * r == 1 for r in ratio)


def test_tuple_product_unit_and_closure():
    t = bicharacter_tuple(3)
    unit = RibbonTuple.trivial(cyclic(3))
    assert tuple_product(t, unit) == t
    square = tuple_product(t, t)
    assert not verify_associator(square)
    assert not verify_braiding(square)
    assert not verify_twist(square)
    with pytest.raises(ValueError):
        tuple_product(t, RibbonTuple.trivial(cyclic(4)))


def test_mirror_is_involution_and_verifies():
    rng = random.Random(19)
    for g in (cyclic(6), symmetric3()):
        t = coboundary(random_cochain(g, 12, rng))
        t = t.with_twist(canonical_twist(t))
        m = tuple_mirror(t)
        assert not verify_associator(m)
        assert not verify_braiding(m)
        assert not verify_twist(m)
        assert tuple_mirror(m) == t


def test_mirror_of_bicharacter_negates_exponents():
    t = bicharacter_tuple(3)
    m = tuple_mirror(t)
    assert m.c == [[zeta(3, -j * k) for k in range(3)] for j in range(3)]
    assert m.theta == [zeta(3, -j * j) for j in range(3)]


def test_braiding_conjugation_follows_from_the_rest():
    # On every sample where the associator checks and both expansion laws
    # hold, the conjugation invariance of c holds as well.
    rng = random.Random(23)
    for g in (cyclic(4), symmetric3(), product_of_cyclics([2, 2])):
        for _ in range(10):
            t = coboundary(random_cochain(g, 12, rng))
            assert not verify_associator(t)
            bad = verify_braiding(t)
            expansions = [w for w in bad if w[0] != "braiding-conjugation"]
            conjugation = [w for w in bad if w[0] == "braiding-conjugation"]
            if not expansions:
                assert not conjugation


def test_bicharacter_enumeration_counts():
    assert len(enumerate_bicharacter_tuples(cyclic(1), 1)) == 1
    assert len(enumerate_bicharacter_tuples(cyclic(2), 2)) == 2
    assert len(enumerate_bicharacter_tuples(cyclic(3), 3)) == 3
    assert len(enumerate_bicharacter_tuples(cyclic(4), 4)) == 4
    assert len(enumerate_bicharacter_tuples(product_of_cyclics([2, 2]), 2)) == 16
    with pytest.raises(ValueError):
        enumerate_bicharacter_tuples(symmetric3(), 6)


def test_enumerated_tuples_all_verify():
    for group, order in [(cyclic(2), 2), (cyclic(3), 3), (cyclic(4), 4),
                         (product_of_cyclics([2, 2]), 4)]:
        tuples = enumerate_bicharacter_tuples(group, order)
        for t in tuples:
            report = verify_tuple(t)
            assert all(not v for v in report.values())


def test_tuple_rejects_oversized_group():
    with pytest.raises(ValueError):
        RibbonTuple.trivial(cyclic(65))
    big = cyclic(65)
    u = one()
    n = big.order
    t = RibbonTuple(
        big,
        [[[u] * n for _ in range(n)] for _ in range(n)],
        [u] * n,
        [[u] * n for _ in range(n)],
        [u] * n,
        order_limit=70,
    )
    assert t.group.order == 65
