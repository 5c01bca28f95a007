"""Tests for the group-indexed Hopf structures and their verifiers."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crossedcat.cyclotomic import CycloNum, one, zero, zeta
from crossedcat.groups import cyclic, symmetric3
from crossedcat.hopf import (
    HopfAlgebraData,
    PiCoalgebraData,
    RMatrixFamily,
    build_A_pi,
    build_R_theta_from_ribbon,
    drinfeld_element,
    group_algebra_hopf,
    group_likes,
    hopf_quasitriangular_witnesses,
    hopf_ribbon_witnesses,
    mirror_coalgebra,
    neutral_component,
    ribbon_elements,
    sweedler_algebra,
    verify_crossed,
    verify_hopf,
    verify_pi_coalgebra,
    verify_quasitriangular,
    verify_ribbon,
    verify_spherical,
)

HALF = CycloNum.from_rational(Fraction(1, 2))

KZ2 = group_algebra_hopf(cyclic(2))
H4 = sweedler_algebra()


def half_sum_r(dimension):
    """The symmetric R supported on the first two basis vectors."""
    r = [[zero() for _ in range(dimension)] for _ in range(dimension)]
    r[0][0] = HALF
    r[0][1] = HALF
    r[1][0] = HALF
    r[1][1] = -HALF
    return r


def unit_r(hopf):
    n = hopf.dimension
    return [[hopf.unit[i] * hopf.unit[j] for j in range(n)] for i in range(n)]


def conjugation_setup(hopf):
    group, members = group_likes(hopf)
    action = {}
    for a in group.elements():
        left = hopf.basis(members[a])
        right = hopf.basis(members[group.inv[a]])
        action[a] = [hopf.multiply(hopf.multiply(left, hopf.basis(i)), right)
                     for i in range(hopf.dimension)]
    return group, action


def permuted_hopf(hopf, perm):
    """Relabel the basis; an isomorphic copy of the same structure."""
    n = hopf.dimension
    inverse = [0] * n
    for new, old in enumerate(perm):
        inverse[old] = new

    def move_vec(v):
        out = [zero()] * n
        for i, c in enumerate(v):
            out[inverse[i]] = c
        return out

    def move_mat(m):
        out = [[zero()] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[inverse[i]][inverse[j]] = m[i][j]
        return out

    mult = [[None] * n for _ in range(n)]
    comult = [None] * n
    counit = [None] * n
    antipode = [None] * n
    for i in range(n):
        comult[inverse[i]] = move_mat(hopf.comult[i])
        counit[inverse[i]] = hopf.counit[i]
        antipode[inverse[i]] = move_vec(hopf.antipode[i])
        for j in range(n):
            mult[inverse[i]][inverse[j]] = move_vec(hopf.mult[i][j])
    return HopfAlgebraData(mult, move_vec(hopf.unit), comult, counit, antipode)


def test_group_algebras_pass_the_classical_axioms():
    for group in (cyclic(1), cyclic(2), cyclic(6), symmetric3()):
        assert verify_hopf(group_algebra_hopf(group)) == []


def test_sweedler_algebra_passes():
    assert verify_hopf(H4) == []


def test_classical_verifier_catches_a_broken_antipode():
    broken = sweedler_algebra()
    broken.antipode[2] = broken.basis(2)
    bad = verify_hopf(broken)
    assert bad != []
    rules = {rule for rule, _ in bad}
    assert "antipode-law" in rules or "antipode-antihom" in rules


@given(st.permutations(range(6)))
def test_basis_relabeling_preserves_the_axioms(perm):
    assert verify_hopf(permuted_hopf(group_algebra_hopf(cyclic(6)), perm)) == []


def test_half_sum_r_matrix_is_quasitriangular():
    assert hopf_quasitriangular_witnesses(KZ2, half_sum_r(2)) == []
    assert hopf_quasitriangular_witnesses(H4, half_sum_r(4)) == []


def test_skewed_r_matrix_is_refused():
    r = [[zero(), zero()], [zero(), zero()]]
    r[0][1] = one()
    bad = hopf_quasitriangular_witnesses(KZ2, r)
    assert any(rule.startswith("r-comultiplication") for rule, _ in bad)


def test_ribbon_search_finds_the_group_part():
    found = ribbon_elements(KZ2, half_sum_r(2))
    assert found == [KZ2.basis(0), KZ2.basis(1)]
    assert ribbon_elements(H4, half_sum_r(4)) == [H4.basis(0)]
    assert ribbon_elements(KZ2, unit_r(KZ2)) == [KZ2.basis(0), KZ2.basis(1)]


def test_group_likes_of_group_algebras():
    for group in (cyclic(5), symmetric3()):
        hopf = group_algebra_hopf(group)
        found, members = group_likes(hopf)
        assert members == list(range(group.order))
        assert found.mul == group.mul


def test_group_likes_of_the_sweedler_algebra():
    found, members = group_likes(H4)
    assert found.order == 2
    assert members == [0, 1]


def test_group_likes_needs_a_pointed_basis():
    tilted = group_algebra_hopf(cyclic(2))
    tilted.unit = [one(), one()]
    with pytest.raises(ValueError):
        group_likes(tilted)


def test_trivial_group_spread_reduces_to_the_classical_case():
    group = cyclic(1)
    action = {0: [H4.basis(i) for i in range(4)]}
    for variant in ("plain", "bar"):
        data = build_A_pi(H4, group, action, variant)
        assert verify_crossed(data) == []
        assert neutral_component(data) == H4


def test_conjugation_spread_passes_all_verifiers():
    for hopf in (KZ2, H4):
        group, action = conjugation_setup(hopf)
        for variant in ("plain", "bar"):
            data = build_A_pi(hopf, group, action, variant)
            assert verify_pi_coalgebra(data) == []
            assert verify_crossed(data) == []
            assert verify_hopf(neutral_component(data)) == []
            assert neutral_component(data) == hopf


def test_bar_and_plain_differ_when_the_action_is_nontrivial():
    group, action = conjugation_setup(H4)
    plain = build_A_pi(H4, group, action, "plain")
    bar = build_A_pi(H4, group, action, "bar")
    assert plain != bar
    assert plain.comult[(0, 1)] != bar.comult[(0, 1)]


def test_unit_swapping_action_is_refused():
    group = cyclic(2)
    action = {
        0: [KZ2.basis(0), KZ2.basis(1)],
        1: [KZ2.basis(1), KZ2.basis(0)],
    }
    with pytest.raises(ValueError, match="invalid action"):
        build_A_pi(KZ2, group, action)


def test_non_composing_action_is_refused():
    group = cyclic(2)
    two = CycloNum.from_rational(Fraction(2))
    scaled = [H4.basis(0), H4.basis(1),
              [two * c for c in H4.basis(2)],
              [two * c for c in H4.basis(3)]]
    action = {0: [H4.basis(i) for i in range(4)], 1: scaled}
    with pytest.raises(ValueError, match="composition"):
        build_A_pi(H4, group, action)


def test_mutated_unit_comultiplication_is_caught():
    group, action = conjugation_setup(KZ2)
    data = build_A_pi(KZ2, group, action)
    comult = dict(data.comult)
    table = [row_matrix for row_matrix in comult[(0, 1)]]
    table[0] = [[one(), zero()], [zero(), one()]]
    comult[(0, 1)] = table
    mutated = PiCoalgebraData(group, data.dims, data.mult, data.units,
                              comult, data.counit, data.antipode,
                              data.crossing)
    bad = verify_pi_coalgebra(mutated)
    assert any(rule == "comultiplication-unit" for rule, _ in bad)


def test_ribbon_spreads_pass_the_family_verifiers():
    cases = [
        (KZ2, half_sum_r(2), KZ2.basis(0)),
        (KZ2, half_sum_r(2), KZ2.basis(1)),
        (KZ2, unit_r(KZ2), KZ2.basis(0)),
        (H4, half_sum_r(4), H4.basis(0)),
    ]
    for hopf, r, v in cases:
        for variant in ("plain", "bar"):
            data, family, twist = build_R_theta_from_ribbon(hopf, r, v, variant)
            assert verify_crossed(data) == []
            assert verify_quasitriangular(data, family) == []
            assert verify_ribbon(data, family, twist) == []


def test_scaling_one_r_entry_breaks_the_coherence():
    data, family, _ = build_R_theta_from_ribbon(KZ2, half_sum_r(2),
                                                KZ2.basis(0))
    values = dict(family.values)
    scale = zeta(3, 1)
    values[(1, 1)] = [[scale * c for c in row] for row in values[(1, 1)]]
    bad = verify_quasitriangular(data, RMatrixFamily(data, values))
    assert any(rule.startswith("r-comultiplication") for rule, _ in bad)


def test_building_from_non_ribbon_input_is_refused():
    r = [[zero(), zero()], [zero(), one()]]
    with pytest.raises(ValueError, match="not a ribbon structure"):
        build_R_theta_from_ribbon(KZ2, r, KZ2.basis(0))
    with pytest.raises(ValueError, match="not a ribbon structure"):
        build_R_theta_from_ribbon(KZ2, half_sum_r(2), [zero(), zero()])


def test_neutral_component_of_a_spread_is_classical_ribbon():
    data, family, twist = build_R_theta_from_ribbon(H4, half_sum_r(4),
                                                    H4.basis(0))
    neutral = neutral_component(data)
    assert verify_hopf(neutral) == []
    assert hopf_quasitriangular_witnesses(neutral, family.values[(0, 0)]) == []
    assert hopf_ribbon_witnesses(neutral, family.values[(0, 0)],
                                 twist.values[0]) == []


def test_mirror_is_an_involution():
    data, family, twist = build_R_theta_from_ribbon(H4, half_sum_r(4),
                                                    H4.basis(0))
    once, family_once, twist_once = mirror_coalgebra(data, family, twist)
    assert verify_crossed(once) == []
    assert verify_quasitriangular(once, family_once) == []
    assert verify_ribbon(once, family_once, twist_once) == []
    twice, family_twice, twist_twice = mirror_coalgebra(once, family_once,
                                                        twist_once)
    assert twice == data
    assert family_twice == family
    assert twist_twice == twist


def test_mirror_swaps_the_two_spreads():
    for hopf in (KZ2, H4):
        group, action = conjugation_setup(hopf)
        plain = build_A_pi(hopf, group, action, "plain")
        bar = build_A_pi(hopf, group, action, "bar")
        assert mirror_coalgebra(plain) == bar
        assert mirror_coalgebra(bar) == plain


def test_mirror_matches_the_bar_spread_at_the_ribbon_level():
    # Both corpus R-matrices are their own flip-inverses and the ribbon
    # elements square to the unit, so the companion structure equals the
    # original and the mirror of the plain spread is exactly the bar one.
    for hopf, r, v in ((KZ2, half_sum_r(2), KZ2.basis(0)),
                       (KZ2, half_sum_r(2), KZ2.basis(1)),
                       (H4, half_sum_r(4), H4.basis(0))):
        plain = build_R_theta_from_ribbon(hopf, r, v, "plain")
        bar = build_R_theta_from_ribbon(hopf, r, v, "bar")
        mirrored, family, twist = mirror_coalgebra(*plain)
        assert mirrored == bar[0]
        assert family == bar[1]
        assert twist == bar[2]


def test_involutory_spread_takes_unit_weights():
    group, action = conjugation_setup(KZ2)
    data = build_A_pi(KZ2, group, action)
    weights = {a: data.units[a] for a in group.elements()}
    report = verify_spherical(data, weights)
    assert report["failures"] == []
    assert "partial" in report["trace_scope"]


def test_twist_times_drinfeld_element_is_a_spherical_weight():
    data, family, twist = build_R_theta_from_ribbon(KZ2, half_sum_r(2),
                                                    KZ2.basis(0))
    weights = {a: data.multiply(a, twist.values[a],
                                drinfeld_element(data, family, a))
               for a in data.group.elements()}
    report = verify_spherical(data, weights)
    assert report["failures"] == []


def test_broken_weight_grouplikeness_is_caught():
    group, action = conjugation_setup(KZ2)
    data = build_A_pi(KZ2, group, action)
    weights = {0: data.units[0], 1: data.basis(1, 1)}
    report = verify_spherical(data, weights)
    assert any(rule == "w-comultiplication"
               for rule, _ in report["failures"])


def test_verifier_caps_are_enforced():
    group = cyclic(9)
    action = {a: [KZ2.basis(i) for i in range(2)] for a in group.elements()}
    data = build_A_pi(KZ2, group, action)
    with pytest.raises(ValueError, match="cap"):
        verify_pi_coalgebra(data)
    assert verify_crossed(data, cap=9) == []
