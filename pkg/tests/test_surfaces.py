import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossedcat.categories import pointlike_category
from crossedcat.cocycles import RibbonTuple, canonical_twist
from crossedcat.constructions import canonical_extension, pullback
from crossedcat.cyclotomic import one, zero, zeta
from crossedcat.groups import GroupHom, cyclic, product_of_cyclics, symmetric3
from crossedcat.surfaces import (
    CrossedAlgebra,
    SurfaceSpec,
    block_dimension,
    closed_surface_value,
    crossed_algebra,
    verify_crossed_algebra,
    verify_splitting,
)


def bicharacter_category(n, exponent=1):
    g = cyclic(n)
    u = one()
    c = [[zeta(n, exponent * j * k) for k in range(n)] for j in range(n)]
    t = RibbonTuple(g, [[[u] * n for _ in range(n)] for _ in range(n)], [u] * n, c)
    return pointlike_category(t.with_twist(canonical_twist(t)))


def signed_s3_category():
    g = symmetric3()
    sign = GroupHom(g, cyclic(2),
                    [0 if g.element_order(x) in (1, 3) else 1 for x in g.elements()])
    return pullback(bicharacter_category(2), sign)


def extension_category():
    ext, witnesses = canonical_extension(bicharacter_category(3))
    assert witnesses == []
    return ext


Z3 = bicharacter_category(3)
Z5 = bicharacter_category(5, 2)
S3 = signed_s3_category()
EXT3 = extension_category()
CORPUS = [Z3, Z5, S3, EXT3]


def group_algebra(group):
    """The group algebra with its standard pairing and trivial action."""
    n = group.order

    def e(i):
        return [one() if k == i else zero() for k in range(n)]

    elements = list(group.elements())
    mult = [[e(group.times(i, j)) for j in elements] for i in elements]
    eta = [[one() if group.times(i, j) == group.unit else zero() for j in elements]
           for i in elements]
    action = {a: [e(i) for i in elements] for a in elements}
    return CrossedAlgebra(group, elements, mult, e(group.unit), eta, action)


def fixed_simple_count(category, alpha, beta):
    return sum(1 for i in category.simples_of_degree(alpha)
               if category.action[beta][i] == i)


def commuting_pairs(group):
    return [(a, b) for a in group.elements() for b in group.elements()
            if group.times(a, b) == group.times(b, a)]


def permuted_tables(algebra, perm):
    """Relabel the basis of a crossed algebra along a permutation."""
    n = algebra.size

    def push(vec):
        out = [zero() for _ in range(n)]
        for i, c in enumerate(vec):
            out[perm[i]] = c
        return out

    grading = [None] * n
    mult = [[None] * n for _ in range(n)]
    eta = [[None] * n for _ in range(n)]
    for i in range(n):
        grading[perm[i]] = algebra.grading[i]
        for j in range(n):
            mult[perm[i]][perm[j]] = push(algebra.mult[i][j])
            eta[perm[i]][perm[j]] = algebra.eta[i][j]
    action = {}
    for a in algebra.group.elements():
        row = [None] * n
        for i in range(n):
            row[perm[i]] = push(algebra.action[a][i])
        action[a] = row
    return CrossedAlgebra(algebra.group, grading, mult, push(algebra.unit),
                          eta, action)


def test_color_tables_pass_verification():
    for category in CORPUS:
        algebra = crossed_algebra(category)
        assert verify_crossed_algebra(algebra) == []


def test_pairing_matches_duality():
    for n, exponent in [(3, 1), (5, 2)]:
        category = bicharacter_category(n, exponent)
        algebra = crossed_algebra(category)
        for j in range(n):
            for k in range(n):
                expected = one() if (j + k) % n == 0 else zero()
                assert algebra.eta[j][k] == expected
    algebra = crossed_algebra(EXT3)
    for i in range(algebra.size):
        partners = [j for j in range(algebra.size)
                    if not algebra.eta[i][j].is_zero()]
        assert partners == [EXT3.dual[i]]
        assert EXT3.grading[partners[0]] == EXT3.group.inv[EXT3.grading[i]]


def test_group_algebras_over_abelian_groups_pass():
    for group in [cyclic(2), cyclic(6), product_of_cyclics([2, 2])]:
        assert verify_crossed_algebra(group_algebra(group)) == []


def test_group_algebra_with_trivial_action_fails_on_nonabelian_group():
    witnesses = verify_crossed_algebra(group_algebra(symmetric3()))
    rules = {rule for rule, _ in witnesses}
    assert "crossed-commutation" in rules
    assert "action-grading" in rules


def test_single_pairing_mutation_is_caught():
    algebra = crossed_algebra(Z3)
    eta = [row[:] for row in algebra.eta]
    eta[1][2] = zero()
    mutated = CrossedAlgebra(algebra.group, algebra.grading, algebra.mult,
                             algebra.unit, eta, algebra.action)
    rules = {rule for rule, _ in verify_crossed_algebra(mutated)}
    assert "pairing-block" in rules
    assert "pairing-symmetry" in rules


def test_scaled_self_pairing_breaks_invariance():
    algebra = group_algebra(cyclic(2))
    eta = [row[:] for row in algebra.eta]
    eta[1][1] = zeta(3, 1)
    mutated = CrossedAlgebra(algebra.group, algebra.grading, algebra.mult,
                             algebra.unit, eta, algebra.action)
    rules = {rule for rule, _ in verify_crossed_algebra(mutated)}
    assert "pairing-invariance" in rules


def test_trivial_group_gives_the_scalar_line():
    category = bicharacter_category(1)
    algebra = crossed_algebra(category)
    assert algebra.size == 1
    assert verify_crossed_algebra(algebra) == []
    assert algebra.mult[0][0] == algebra.unit


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(6))))
def test_basis_relabeling_preserves_validity(perm):
    relabeled = permuted_tables(group_algebra(cyclic(6)), perm)
    assert verify_crossed_algebra(relabeled) == []


def test_sphere_count_is_one():
    for category in CORPUS:
        assert closed_surface_value(category, 0, [], []) == 1


def test_torus_count_is_the_fixed_simple_count():
    for category in CORPUS:
        grp = category.group
        for alpha, beta in commuting_pairs(grp):
            value = closed_surface_value(category, 1, [alpha], [beta])
            assert value == fixed_simple_count(category, alpha, beta)
    for alpha, beta in commuting_pairs(S3.group):
        assert closed_surface_value(S3, 1, [alpha], [beta]) == 1
    grp = EXT3.group
    for alpha in grp.elements():
        for beta in grp.elements():
            assert closed_surface_value(EXT3, 1, [alpha], [beta]) == 3


def test_torus_with_unit_beta_counts_all_simples_of_the_degree():
    for category in CORPUS:
        grp = category.group
        for alpha in grp.elements():
            value = closed_surface_value(category, 1, [alpha], [grp.unit])
            assert value == len(category.simples_of_degree(alpha))


def test_torus_over_noncommuting_images_is_rejected():
    grp = S3.group
    noncommuting = [(a, b) for a in grp.elements() for b in grp.elements()
                    if grp.times(a, b) != grp.times(b, a)]
    assert noncommuting
    for alpha, beta in noncommuting[:3]:
        with pytest.raises(ValueError):
            closed_surface_value(S3, 1, [alpha], [beta])


def test_marked_torus_counts():
    grp = Z3.group
    surface = SurfaceSpec(grp, 1, [1], [2], marks=[(1, 0, 0)])
    assert block_dimension(Z3, surface) == 1

    surface = SurfaceSpec(grp, 1, [2], [0], marks=[(1, 1, 1), (1, 2, 2)])
    assert block_dimension(Z3, surface) == 1
    surface = SurfaceSpec(grp, 1, [2], [0], marks=[(1, 1, 1), (-1, 1, 1)])
    assert block_dimension(Z3, surface) == 1

    neutral = EXT3.simples_of_degree(EXT3.group.unit)
    extra = [s for s in neutral if s != EXT3.unit][0]
    for alpha in EXT3.group.elements():
        surface = SurfaceSpec(EXT3.group, 1, [alpha], [EXT3.group.unit],
                              marks=[(1, EXT3.group.unit, extra)])
        assert block_dimension(EXT3, surface) == 0


def test_marked_torus_over_noncommuting_handles():
    grp = S3.group
    swaps = [x for x in grp.elements() if grp.element_order(x) == 2]
    alpha, beta = swaps[0], swaps[1]
    assert grp.times(alpha, beta) != grp.times(beta, alpha)
    for sign in (1, -1):
        comm = grp.commutator(alpha, beta)
        label = grp.inv[comm] if sign == 1 else comm
        color = S3.simples_of_degree(label)[0]
        surface = SurfaceSpec(grp, 1, [alpha], [beta], marks=[(sign, label, color)])
        assert block_dimension(S3, surface) == 1


def test_one_marked_torus_reindexings_agree():
    for category in [S3, EXT3, Z3]:
        grp = category.group
        for alpha in grp.elements():
            for beta in grp.elements():
                for sign in (1, -1):
                    comm = grp.commutator(alpha, beta)
                    label = grp.inv[comm] if sign == 1 else comm
                    for color in category.simples_of_degree(label):
                        mark = (sign, label, color)
                        direct = block_dimension(
                            category,
                            SurfaceSpec(grp, 1, [alpha], [beta], [mark]))
                        moved = block_dimension(
                            category,
                            SurfaceSpec(grp, 1, [grp.conj(alpha, beta)],
                                        [grp.inv[alpha]], [mark]))
                        prefix = color if sign == 1 else category.dual[color]
                        swept = 0
                        for k in category.simples_of_degree(beta):
                            word = [prefix, category.action[alpha][k],
                                    category.dual[k]]
                            if category.tensor_many(word) == category.unit:
                                swept += 1
                        assert direct == moved == swept


def test_counts_survive_global_conjugation():
    grp = S3.group
    swaps = [x for x in grp.elements() if grp.element_order(x) == 2]
    alpha, beta = swaps[0], swaps[1]
    comm = grp.commutator(alpha, beta)
    label = grp.inv[comm]
    color = S3.simples_of_degree(label)[0]
    marked = SurfaceSpec(grp, 1, [alpha], [beta], [(1, label, color)])
    genus2 = SurfaceSpec(grp, 2, [alpha, beta], [beta, alpha])
    for surface, category in [(marked, S3), (genus2, S3)]:
        reference = block_dimension(category, surface)
        for delta in grp.elements():
            moved = SurfaceSpec(
                grp, surface.genus,
                [grp.conj(delta, a) for a in surface.alphas],
                [grp.conj(delta, b) for b in surface.betas],
                [(sign, grp.conj(delta, mu), category.action[delta][c])
                 for sign, mu, c in surface.marks])
            assert block_dimension(category, moved) == reference

    grp = EXT3.group
    surface = SurfaceSpec(grp, 2, [1, 2], [2, 1], [(1, 0, 0), (-1, 0, 0)])
    reference = block_dimension(EXT3, surface)
    for delta in grp.elements():
        moved = SurfaceSpec(grp, 2,
                            [grp.conj(delta, a) for a in surface.alphas],
                            [grp.conj(delta, b) for b in surface.betas],
                            [(sign, grp.conj(delta, mu), EXT3.action[delta][c])
                             for sign, mu, c in surface.marks])
        assert block_dimension(EXT3, moved) == reference


def test_higher_genus_counts():
    for category in [Z3, Z5]:
        grp = category.group
        for a1 in grp.elements():
            for b1 in grp.elements():
                assert closed_surface_value(category, 2, [a1, 0], [b1, 0]) == 1
    grp = S3.group
    swaps = [x for x in grp.elements() if grp.element_order(x) == 2]
    alpha, beta = swaps[0], swaps[1]
    assert closed_surface_value(S3, 2, [alpha, beta], [beta, alpha]) == 1
    grp = EXT3.group
    assert closed_surface_value(EXT3, 2, [1, 2], [1, 2]) == 9
    assert closed_surface_value(EXT3, 3, [0, 1, 2], [2, 2, 0]) == 27


def test_splitting_agrees_for_pointlike_words():
    for n in range(2, 7):
        category = bicharacter_category(n)
        grp = category.group
        for v in range(n):
            alpha = category.grading[v]
            for w in category.simples_of_degree(grp.inv[alpha]):
                report = verify_splitting(category, alpha, [v], [w])
                assert report["equal"]
                assert report["direct"] == report["through_simples"] == 1
        for v in range(n):
            for u in range(n):
                alpha = grp.times(category.grading[v], category.grading[u])
                for w in category.simples_of_degree(grp.inv[alpha]):
                    report = verify_splitting(category, alpha, [v, u], [w])
                    assert report["equal"]


def test_splitting_agrees_on_extension_words():
    grp = EXT3.group
    for s in range(len(EXT3.grading)):
        alpha = EXT3.grading[s]
        report = verify_splitting(EXT3, alpha, [s], [EXT3.dual[s]])
        assert report["equal"] and report["direct"] == 1
        for t in range(0, len(EXT3.grading), 2):
            total = grp.times(alpha, EXT3.grading[t])
            right = [EXT3.dual[t], EXT3.dual[s]]
            report = verify_splitting(EXT3, total, [s, t], right)
            assert report["equal"] and report["direct"] == 1
            for other in EXT3.simples_of_degree(grp.inv[total]):
                report = verify_splitting(EXT3, total, [s, t], [other])
                assert report["equal"]


def test_splitting_for_the_unit_word():
    for category in [Z3, EXT3]:
        report = verify_splitting(category, category.group.unit,
                                  [category.unit], [category.unit])
        assert report == {"direct": 1, "through_simples": 1, "equal": True}


def test_splitting_rejects_mismatched_degrees():
    with pytest.raises(ValueError):
        verify_splitting(Z3, 2, [1], [2])
    with pytest.raises(ValueError):
        verify_splitting(Z3, 1, [1], [1])


def test_surface_data_validation():
    grp = Z3.group
    with pytest.raises(ValueError):
        SurfaceSpec(grp, -1)
    with pytest.raises(ValueError):
        SurfaceSpec(grp, 2, [1], [1, 2])
    with pytest.raises(ValueError):
        SurfaceSpec(grp, 0, marks=[(2, 0, 0)])
    with pytest.raises(ValueError):
        SurfaceSpec(grp, 0, marks=[(1, 1, 1)])
    surface = SurfaceSpec(grp, 0, marks=[(1, 1, 1), (-1, 1, 1)])
    assert block_dimension(Z3, surface) == 1
    with pytest.raises(ValueError):
        block_dimension(Z3, SurfaceSpec(grp, 0, marks=[(1, 1, 2), (-1, 1, 2)]))
    with pytest.raises(ValueError):
        block_dimension(Z3, SurfaceSpec(cyclic(3), 0))


def test_crossed_algebra_needs_a_strict_category():
    class Loose:
        strict = False

    with pytest.raises(ValueError):
        crossed_algebra(Loose())
