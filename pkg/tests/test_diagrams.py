"""Sliced diagrams: evaluation, moves, walks, component rewrites."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossedcat.categories import categorical_dim, pointlike_category
from crossedcat.cocycles import RibbonTuple, canonical_twist
from crossedcat.constructions import canonical_extension, pullback
from crossedcat.cyclotomic import one, zeta
from crossedcat.diagrams import (
    DOWN,
    UP,
    ColoredPiTangle,
    DiagramError,
    PiLabeling,
    SlicedDiagram,
    apply_reidemeister,
    assemble,
    closure_trace,
    component_data,
    disjoint_union,
    evaluate_F,
    merged_slices,
    recolor_component,
    transform_double,
    transform_reverse_dual,
    validate_labeling,
)
from crossedcat.groups import GroupHom, cyclic, symmetric3


def bicharacter_category(n, exponent=1):
    g = cyclic(n)
    u = one()
    c = [[zeta(n, exponent * j * k) for k in range(n)] for j in range(n)]
    t = RibbonTuple(g, [[[u] * n for _ in range(n)] for _ in range(n)],
                    [u] * n, c)
    return pointlike_category(t.with_twist(canonical_twist(t)))


def signed_s3_category():
    """Six simples graded by the symmetric group, braid values +-1.

    Pulling the order-two bicharacter category back along the sign
    homomorphism keeps the scalars nontrivial while the group acts by
    honest conjugation, so both aspects of a crossing get exercised.
    """
    g = symmetric3()
    sign = GroupHom(g, cyclic(2),
                    [0 if g.element_order(x) in (1, 3) else 1
                     for x in g.elements()])
    return pullback(bicharacter_category(2), sign)


def extension_category():
    ext, witnesses = canonical_extension(bicharacter_category(3))
    assert witnesses == []
    return ext


def unknot(category, s, framing=0):
    g = category.grading[s]
    slices = [("cup", 0, "ud", g, s)]
    sign = 1 if framing >= 0 else -1
    slices += [("kink", 0, sign)] * abs(framing)
    slices.append(("cap", 0, "ud"))
    return ColoredPiTangle(category, (), slices)


def two_braid_closure(category, s, t, crossings):
    """Close a two-strand braid of the given number of + crossings."""
    gs, gt = category.grading[s], category.grading[t]
    slices = [("cup", 0, "ud", gs, s), ("cup", 1, "ud", gt, t)]
    slices += [("cross", 0, 1)] * crossings
    slices += [("cap", 1, "ud"), ("cap", 0, "ud")]
    return ColoredPiTangle(category, (), slices)


def hopf(category, s, t):
    return two_braid_closure(category, s, t, 2)


def trefoil(category, s, t):
    return two_braid_closure(category, s, t, 3)


def corpus():
    return [bicharacter_category(3), bicharacter_category(5, 2),
            signed_s3_category(), extension_category()]


# -- basic evaluation -----------------------------------------------------


def test_empty_diagram_evaluates_to_one():
    C = bicharacter_category(3)
    t = ColoredPiTangle(C, (), [])
    assert t.is_closed()
    assert evaluate_F(t).is_one()


def test_unknot_loop_is_the_categorical_dimension():
    for C in corpus():
        for s in C.simples():
            assert evaluate_F(unknot(C, s)) == categorical_dim(C, s)


def test_framed_unknot_picks_up_the_twist():
    C = bicharacter_category(3)
    for j in C.simples():
        assert categorical_dim(C, j).is_one()
        assert evaluate_F(unknot(C, j, framing=1)) == zeta(3, j * j)
        assert evaluate_F(unknot(C, j, framing=-1)) == zeta(3, -j * j)
    for C in corpus():
        for s in C.simples():
            expect = C.twist[s] * categorical_dim(C, s)
            assert evaluate_F(unknot(C, s, framing=1)) == expect


def test_hopf_link_value_on_cyclic_groups():
    for n, e in [(3, 1), (5, 1), (5, 2)]:
        C = bicharacter_category(n, e)
        for j in C.simples():
            for k in C.simples():
                assert evaluate_F(hopf(C, j, k)) == zeta(n, 2 * e * j * k)


def test_hopf_link_with_noncommuting_labels_is_refused():
    C = signed_s3_category()
    g = C.group
    transpositions = [x for x in g.elements() if g.element_order(x) == 2]
    a, b = transpositions[0], transpositions[1]
    assert g.times(a, b) != g.times(b, a)
    gs = [("cup", 0, "ud", a, a), ("cup", 1, "ud", b, b),
          ("cross", 0, 1), ("cross", 0, 1),
          ("cap", 1, "ud"), ("cap", 0, "ud")]
    with pytest.raises(DiagramError, match="mismatched"):
        ColoredPiTangle(C, (), gs)
    report = validate_labeling(C, (), gs)
    assert report["problems"]
    assert report["problems"][0][0] == 4
    # the same shape with one label (and hence commuting arcs) is fine
    assert evaluate_F(hopf(C, a, a)) is not None


def test_closure_trace_of_identity_and_of_stacked_coupons():
    C = bicharacter_category(3)
    s = 2
    g = C.grading[s]
    strand = ColoredPiTangle(C, ((UP, g, s),), [])
    assert evaluate_F(closure_trace(strand)) == categorical_dim(C, s)
    x, y = zeta(3, 1), zeta(3, 2) + one()
    stacked = ColoredPiTangle(C, ((UP, g, s),), [
        ("coupon", 0, 1, 1, x, ((UP, g, s),)),
        ("coupon", 0, 1, 1, y, ((UP, g, s),)),
    ])
    assert evaluate_F(closure_trace(stacked)) == \
        x * y * categorical_dim(C, s)
    with pytest.raises(DiagramError, match="one strand"):
        closure_trace(hopf(C, 1, 1))


def test_snake_words_straighten_to_the_identity():
    for C in corpus():
        for s in C.simples():
            g = C.grading[s]
            entry = (UP, g, s)
            right = ColoredPiTangle(C, (entry,), [
                ("cup", 1, "du", g, s), ("cap", 0, "ud")])
            left = ColoredPiTangle(C, (entry,), [
                ("cup", 0, "ud", g, s), ("cap", 1, "du")])
            assert evaluate_F(right).is_one()
            assert evaluate_F(left).is_one()
            assert right.target() == (entry,)
            assert left.target() == (entry,)


def test_double_dual_pivot_scalars_are_mutually_inverse():
    for C in corpus():
        for s in C.simples():
            sd = C.dual[s]
            forward = C.bval[sd] * C.twist[s] * C.braid[s][sd] * C.dval[s]
            backward = C.dval[sd] * C.bval[s] \
                * C.braid[sd][s].inv() * C.twist[s].inv()
            assert (forward * backward).is_one()


def test_reversed_cup_and_cap_match_their_expansions():
    for C in corpus():
        for s in C.simples():
            g = C.grading[s]
            atom = ColoredPiTangle(C, (), [("cup", 0, "du", g, s)])
            word = ColoredPiTangle(C, (), [
                ("cup", 0, "ud", g, s), ("cross", 0, -1), ("kink", 1, -1)])
            assert atom.target() == word.target()
            assert evaluate_F(atom) == evaluate_F(word)
            pair = ((UP, g, s), (DOWN, g, s))
            atom = ColoredPiTangle(C, pair, [("cap", 0, "ud")])
            word = ColoredPiTangle(C, pair, [
                ("kink", 0, 1), ("cross", 0, 1), ("cap", 0, "du")])
            assert atom.target() == word.target() == ()
            assert evaluate_F(atom) == evaluate_F(word)


def test_coupon_between_unequal_objects_is_refused():
    C = bicharacter_category(3)
    g = C.grading[1]
    with pytest.raises(DiagramError, match="coupon"):
        ColoredPiTangle(C, ((UP, g, 1),),
                        [("coupon", 0, 1, 1, one(), ((UP, C.grading[2], 2),))])


# -- moves ----------------------------------------------------------------


def sample_diagram(category):
    s = next(t for t in category.simples() if t != category.unit)
    return unknot(category, s, framing=2)


def test_kink_and_crossing_pairs_cancel_exactly():
    for C in corpus():
        t = sample_diagram(C)
        value = evaluate_F(t)
        for level in range(1, len(t.slices)):
            grown = apply_reidemeister(t, "R1+", (level, 0))
            assert evaluate_F(grown) == value
            assert apply_reidemeister(grown, "R1-cancel",
                                      (level,)).slices == t.slices
        wide = hopf(C, 1 % len(C.grading), C.unit)
        value = evaluate_F(wide)
        for level in range(2, 5):
            for sign in (1, -1):
                grown = apply_reidemeister(wide, "R2", (level, 0, sign))
                assert evaluate_F(grown) == value
                assert apply_reidemeister(grown, "R2-cancel",
                                          (level,)).slices == wide.slices


def test_braid_slide_preserves_value_and_boundary():
    for C in corpus():
        simples = [s for s in C.simples()][:3]
        while len(simples) < 3:
            simples.append(C.unit)
        state = tuple((UP, C.grading[s], s) for s in simples)
        for sign in (1, -1):
            word = [("cross", 0, sign), ("cross", 1, sign),
                    ("cross", 0, sign)]
            t = ColoredPiTangle(C, state, word)
            moved = apply_reidemeister(t, "R3", (0, "left"))
            assert moved.slices == (("cross", 1, sign), ("cross", 0, sign),
                                    ("cross", 1, sign))
            assert moved.target() == t.target()
            assert evaluate_F(moved) == evaluate_F(t)
            back = apply_reidemeister(moved, "R3", (0, "right"))
            assert back.slices == t.slices


def test_distant_slices_commute():
    C = bicharacter_category(3)
    g = C.grading[1]
    g2 = C.grading[2]
    state = ((UP, g, 1), (UP, g, 1))
    t = ColoredPiTangle(C, state, [("cup", 0, "ud", g2, 2), ("kink", 3, 1)])
    slid = apply_reidemeister(t, "slide", (0,))
    assert slid.slices == (("kink", 1, 1), ("cup", 0, "ud", g2, 2))
    assert evaluate_F(slid) == evaluate_F(t)
    assert slid.target() == t.target()
    again = apply_reidemeister(slid, "slide", (0,))
    assert again.slices == t.slices
    clash = ColoredPiTangle(C, state, [("cross", 0, 1), ("kink", 1, 1)])
    with pytest.raises(DiagramError, match="overlap"):
        apply_reidemeister(clash, "slide", (0,))


def test_moves_reject_malformed_sites():
    C = bicharacter_category(3)
    t = sample_diagram(C)
    with pytest.raises(DiagramError, match="kink pair"):
        apply_reidemeister(t, "R1-cancel", (0,))
    with pytest.raises(DiagramError, match="crossing pair"):
        apply_reidemeister(t, "R2-cancel", (1,))
    with pytest.raises(DiagramError, match="no room"):
        apply_reidemeister(t, "R3", (3, "left"))
    with pytest.raises(DiagramError, match="unknown move"):
        apply_reidemeister(t, "flype", (0,))


_RANDOM_CORPUS = [bicharacter_category(3), signed_s3_category()]


@st.composite
def braid_situations(draw):
    pick = draw(st.integers(min_value=0, max_value=1))
    colors = draw(st.lists(st.integers(min_value=0), min_size=3, max_size=3))
    word = draw(st.lists(
        st.tuples(st.integers(min_value=0, max_value=1),
                  st.sampled_from([1, -1])),
        max_size=6))
    kinks = draw(st.lists(
        st.tuples(st.integers(min_value=0, max_value=2),
                  st.sampled_from([1, -1])),
        max_size=3))
    move = draw(st.sampled_from(["R1+", "R1-", "R2"]))
    level = draw(st.integers(min_value=0, max_value=9))
    pos = draw(st.integers(min_value=0, max_value=2 if move != "R2" else 1))
    sign = draw(st.sampled_from([1, -1]))
    return pick, colors, word, kinks, move, level, pos, sign


@settings(max_examples=120, deadline=None)
@given(braid_situations())
def test_random_insertions_never_change_the_value(case):
    pick, colors, word, kinks, move, level, pos, sign = case
    C = _RANDOM_CORPUS[pick]
    n = len(C.grading)
    state = tuple((UP, C.grading[s % n], s % n) for s in colors)
    slices = [("cross", p, sg) for p, sg in word]
    slices += [("kink", p, sg) for p, sg in kinks]
    t = ColoredPiTangle(C, state, slices)
    level = level % (len(slices) + 1)
    site = (level, pos, sign) if move == "R2" else (level, pos)
    moved = apply_reidemeister(t, move, site)
    assert evaluate_F(moved) == evaluate_F(t)
    assert moved.source() == t.source()
    assert moved.target() == t.target()


# -- component walks ------------------------------------------------------


def test_walk_data_on_a_framed_unknot():
    C = signed_s3_category()
    g = C.group
    for x in g.elements():
        t = unknot(C, x, framing=1)
        comps = component_data(t)
        assert len(comps) == 1
        comp = comps[0]
        assert comp["circle"]
        assert comp["meridian"] == x
        assert comp["writhe"] == 1
        assert comp["longitude"] == x
        assert comp["cups"] == [(0, g.unit)]


def test_walk_data_on_the_hopf_link():
    C = bicharacter_category(5)
    t = hopf(C, 2, 3)
    comps = component_data(t)
    assert len(comps) == 2
    assert [c["meridian"] for c in comps] == [2, 3]
    assert [c["writhe"] for c in comps] == [0, 0]
    # each circle passes under the other exactly once
    assert [c["longitude"] for c in comps] == [3, 2]


def test_walk_longitude_commutes_with_meridian_on_the_trefoil():
    C = signed_s3_category()
    g = C.group
    pairs = []
    for x in g.elements():
        for y in g.elements():
            if not validate_labeling(C, (), trefoil_word(C, x, y))["problems"]:
                pairs.append((x, y))
    assert any(x != y for x, y in pairs)
    for x, y in pairs:
        t = trefoil(C, x, y)
        comps = component_data(t)
        assert len(comps) == 1
        comp = comps[0]
        assert comp["circle"]
        assert comp["writhe"] == 3
        m = comp["meridian"]
        assert m in (x, y)
        ell = comp["longitude"]
        assert g.times(ell, m) == g.times(m, ell)


def test_walk_keeps_open_chains_apart():
    C = bicharacter_category(3)
    g = C.grading[1]
    t = ColoredPiTangle(C, ((UP, g, 1), (DOWN, g, 1)),
                        [("kink", 0, 1), ("kink", 1, -1)])
    comps = component_data(t)
    assert len(comps) == 2
    assert all(not c["circle"] for c in comps)
    assert all(c["longitude"] is None for c in comps)


def test_validate_labeling_reports_walk_data():
    C = bicharacter_category(3)
    t = unknot(C, 1, framing=1)
    report = validate_labeling(C, (), t.slices)
    assert report["problems"] == []
    assert report["components"] == 1
    assert report["longitudes"] == {0: 1}
    assert report["writhes"] == {0: 1}


# -- component rewrites ---------------------------------------------------


def test_disjoint_union_multiplies_values():
    C = bicharacter_category(3)
    a = unknot(C, 1, framing=1)
    b = unknot(C, 2, framing=-1)
    both = disjoint_union(a, b)
    assert evaluate_F(both) == evaluate_F(a) * evaluate_F(b)
    assert len(component_data(both)) == 2
    with pytest.raises(DiagramError, match="closed"):
        disjoint_union(a, ColoredPiTangle(C, ((UP, C.grading[1], 1),), []))


def test_recoloring_a_circle_matches_a_fresh_build():
    C = bicharacter_category(5, 2)
    t = hopf(C, 2, 3)
    for new in C.simples():
        redone = recolor_component(t, 1, new)
        assert evaluate_F(redone) == evaluate_F(hopf(C, 2, new))
    with pytest.raises(DiagramError, match="recolored"):
        recolor_component(
            ColoredPiTangle(C, ((UP, C.grading[1], 1),), []), 0, 1)


def test_reverse_dual_keeps_the_value():
    for C in corpus():
        for s in C.simples():
            for framing in (-2, -1, 0, 1, 2):
                t = unknot(C, s, framing)
                r = transform_reverse_dual(t, 0)
                assert evaluate_F(r) == evaluate_F(t)
                assert r.slices[0][2] == "du"
                assert r.slices[0][4] == C.dual[s]
                assert transform_reverse_dual(r, 0).slices == t.slices
    C = bicharacter_category(3)
    for j in C.simples():
        for k in C.simples():
            t = hopf(C, j, k)
            for comp in (0, 1):
                assert evaluate_F(transform_reverse_dual(t, comp)) == \
                    evaluate_F(t)


def trefoil_word(category, x, y):
    slices = [("cup", 0, "ud", category.grading[x], x),
              ("cup", 1, "ud", category.grading[y], y)]
    slices += [("cross", 0, 1)] * 3
    slices += [("cap", 1, "ud"), ("cap", 0, "ud")]
    return slices


def test_reverse_dual_on_a_conjugating_circle():
    C = signed_s3_category()
    g = C.group
    pairs = [(x, y) for x in g.elements() for y in g.elements()
             if x != y and not validate_labeling(
                 C, (), trefoil_word(C, x, y))["problems"]]
    assert pairs
    for x, y in pairs[:3]:
        t = trefoil(C, x, y)
        assert evaluate_F(transform_reverse_dual(t, 0)) == evaluate_F(t)


def test_doubling_an_unknot_respects_the_twist_product():
    C = bicharacter_category(3)
    for s1 in C.simples():
        for s2 in C.simples():
            target = C.tensor[s1][s2]
            for framing in (-2, -1, 0, 1, 2):
                t = unknot(C, target, framing)
                doubled = transform_double(t, 0, (s1, s2))
                assert evaluate_F(doubled) == evaluate_F(t)
                assert len(component_data(doubled)) == 2


def test_doubling_a_hopf_component_splits_the_linking():
    C = bicharacter_category(5)
    t = hopf(C, 3, 4)
    doubled = transform_double(t, 0, (1, 2))
    assert evaluate_F(doubled) == evaluate_F(t)
    assert len(component_data(doubled)) == 3
    with pytest.raises(DiagramError, match="multiply"):
        transform_double(t, 0, (1, 1))


def test_doubling_refuses_a_factorization_the_loop_moves():
    C = signed_s3_category()
    g = C.group
    delta = next(x for x in g.elements() if g.element_order(x) == 3)
    swap = next(x for x in g.elements() if g.element_order(x) == 2)
    assert g.conj(delta, swap) != swap
    t = hopf(C, g.unit, delta)
    assert C.tensor[swap][swap] == g.unit
    with pytest.raises(DiagramError, match="mismatched"):
        transform_double(t, 0, (swap, swap))
    # the unit factorization survives: the loop holonomy fixes the unit
    ok = transform_double(t, 0, (g.unit, g.unit))
    assert evaluate_F(ok) == evaluate_F(t)


def test_relabeling_by_a_global_conjugation_keeps_the_value():
    for C in [signed_s3_category(), extension_category()]:
        g = C.group
        s = 1 % len(C.grading)
        for t in [hopf(C, s, s), unknot(C, 2 % len(C.grading), 1)]:
            for beta in g.elements():
                moved = []
                for sl in t.slices:
                    if sl[0] == "cup":
                        s = C.action[beta][sl[4]]
                        moved.append(("cup", sl[1], sl[2],
                                      C.grading[s], s))
                    else:
                        moved.append(sl)
                relabeled = ColoredPiTangle(C, (), moved)
                assert evaluate_F(relabeled) == evaluate_F(t)


# -- bare diagrams and labelings ------------------------------------------


def test_diagram_and_labeling_round_trip():
    C = bicharacter_category(3)
    t = hopf(C, 1, 2)
    bare = t.diagram()
    labels = t.labeling()
    assert isinstance(bare, SlicedDiagram)
    assert isinstance(labels, PiLabeling)
    assert bare.is_closed()
    rebuilt = assemble(C, bare, labels)
    assert rebuilt.slices == t.slices
    assert evaluate_F(rebuilt) == evaluate_F(t)
    with pytest.raises(DiagramError, match="no label"):
        merged_slices(bare, PiLabeling())


def test_structural_misfits_always_raise():
    C = bicharacter_category(3)
    with pytest.raises(DiagramError, match="does not fit"):
        ColoredPiTangle(C, (), [("cross", 0, 1)])
    with pytest.raises(DiagramError, match="unknown event"):
        ColoredPiTangle(C, (), [("twirl", 0, 1)])
    with pytest.raises(DiagramError, match="orientation"):
        ColoredPiTangle(C, (), [("cup", 0, "uu", 0, 0)])
    with pytest.raises(DiagramError, match="not a simple"):
        ColoredPiTangle(C, ((UP, 0, 1),), [])
    with pytest.raises(DiagramError, match="width"):
        SlicedDiagram([("cap", 0, "ud")], 1)
