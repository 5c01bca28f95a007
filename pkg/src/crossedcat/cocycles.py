"""Structure-constant tuples over a finite group.

A tuple (a, b, c, theta) of nonzero scalars indexed by group elements —
a three-argument associator table, a one-argument duality table, a
two-argument braiding table, and a one-argument twist table — encodes a
braided graded category with one object per group element.  This module
verifies the defining identities of such tuples, derives the companion
duality constants, builds tuples as coboundaries of two-cochains,
constructs twists from the braiding diagonal, and implements the
pointwise product and the mirror involution.

Verifiers return witness lists (one entry per failing identity
instance) rather than booleans, so callers can report or shrink
counterexamples.
"""

import itertools
from fractions import Fraction

from .cyclotomic import CycloNum, one, zeta
from .groups import FiniteGroup, GroupHom, all_characters

# Verifier loops are quartic in the group order; refuse silly inputs.
DEFAULT_ORDER_LIMIT = 64


def _as_value(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNum.from_rational(Fraction(x))
    raise TypeError(f"table entry {x!r} is not a scalar")


def _table1(group, values, what):
    vals = [_as_value(v) for v in values]
    if len(vals) != group.order:
        raise ValueError(f"{what} table needs {group.order} entries, got {len(vals)}")
    for i, v in enumerate(vals):
        if v.is_zero():
            raise ValueError(f"{what} table has zero entry at {i}")
    return vals


def _table2(group, values, what):
    rows = [list(row) for row in values]
    if len(rows) != group.order or any(len(r) != group.order for r in rows):
        raise ValueError(f"{what} table must be {group.order}x{group.order}")
    return [_table1(group, row, what) for row in rows]


def _table3(group, values, what):
    blocks = [list(b) for b in values]
    if len(blocks) != group.order:
        raise ValueError(f"{what} table must be cubic of side {group.order}")
    return [_table2(group, b, what) for b in blocks]


class RibbonTuple:
    """Scalar tables (a, b, c, theta) indexed by elements of a finite group.

    ``theta`` may be None for tuples whose twist has not been chosen yet;
    such tuples support every operation except twist verification.
    """

    __slots__ = ("group", "a", "b", "c", "theta")

    def __init__(self, group: FiniteGroup, a, b, c, theta=None, *,
                 order_limit: int = DEFAULT_ORDER_LIMIT):
        if group.order > order_limit:
            raise ValueError(
                f"group order {group.order} exceeds the verification limit "
                f"{order_limit}; identity checks are quartic in the order"
            )
        self.group = group
        self.a = _table3(group, a, "associator")
        self.b = _table1(group, b, "duality")
        self.c = _table2(group, c, "braiding")
        self.theta = None if theta is None else _table1(group, theta, "twist")

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "RibbonTuple":
        n = group.order
        u = one()
        return cls(
            group,
            [[[u] * n for _ in range(n)] for _ in range(n)],
            [u] * n,
            [[u] * n for _ in range(n)],
            [u] * n,
        )

    def with_twist(self, theta) -> "RibbonTuple":
        return RibbonTuple(self.group, self.a, self.b, self.c, theta)

    def __eq__(self, other):
        if not isinstance(other, RibbonTuple):
            return NotImplemented
        return (self.group == other.group and self.a == other.a
                and self.b == other.b and self.c == other.c
                and self.theta == other.theta)

    __hash__ = None


def verify_associator(t: RibbonTuple) -> list:
    """Check the four-index coherence law and conjugation invariance of a, b.

    Returns a witness list; each entry is a (rule-name, indices) pair
    identifying one failed identity instance.
    """
    g, a = t.group, t.a
    times, conj = g.times, g.conj
    bad = []
    for alpha, beta, gamma, delta in itertools.product(g.elements(), repeat=4):
        lhs = a[times(alpha, beta)][gamma][delta] * a[alpha][beta][times(gamma, delta)]
        rhs = (a[alpha][beta][gamma] * a[alpha][times(beta, gamma)][delta]
               * a[beta][gamma][delta])
        if lhs != rhs:
            bad.append(("coherence", (alpha, beta, gamma, delta)))
    for delta, alpha, beta, gamma in itertools.product(g.elements(), repeat=4):
        if a[conj(delta, alpha)][conj(delta, beta)][conj(delta, gamma)] != a[alpha][beta][gamma]:
            bad.append(("associator-conjugation", (delta, alpha, beta, gamma)))
    for delta, alpha in itertools.product(g.elements(), repeat=2):
        if t.b[conj(delta, alpha)] != t.b[alpha]:
            bad.append(("duality-conjugation", (delta, alpha)))
    return bad


def verify_braiding(t: RibbonTuple) -> list:
    """Check conjugation invariance of c and both product-expansion laws."""
    g, a, c = t.group, t.a, t.c
    times, conj = g.times, g.conj
    bad = []
    for delta, alpha, beta in itertools.product(g.elements(), repeat=3):
        if c[conj(delta, alpha)][conj(delta, beta)] != c[alpha][beta]:
            bad.append(("braiding-conjugation", (delta, alpha, beta)))
    for alpha, beta, gamma in itertools.product(g.elements(), repeat=3):
        # braiding past a product in the second slot
        lhs = c[alpha][times(beta, gamma)]
        rhs = (c[alpha][beta] * c[alpha][gamma]
               * a[alpha][beta][gamma].inv()
               * a[conj(alpha, beta)][alpha][gamma]
               * a[beta][gamma][alpha].inv())
        if lhs != rhs:
            bad.append(("braiding-right-expansion", (alpha, beta, gamma)))
    for beta, delta, gamma in itertools.product(g.elements(), repeat=3):
        # braiding of a product in the first slot
        lhs = c[times(beta, delta)][gamma]
        rhs = (c[beta][gamma] * c[delta][gamma]
               * a[conj(beta, delta)][beta][gamma]
               * a[delta][gamma][beta].inv()
               * a[conj(delta, gamma)][delta][beta])
        if lhs != rhs:
            bad.append(("braiding-left-expansion", (beta, delta, gamma)))
    return bad


def verify_twist(t: RibbonTuple) -> list:
    """Check twist multiplicativity, inverse symmetry, and conjugation invariance."""
    if t.theta is None:
        raise ValueError("tuple has no twist table to verify")
    g, c, theta = t.group, t.c, t.theta
    times = g.times
    bad = []
    for alpha, beta in itertools.product(g.elements(), repeat=2):
        if theta[times(alpha, beta)] != c[alpha][beta] * c[beta][alpha] * theta[alpha] * theta[beta]:
            bad.append(("twist-multiplicativity", (alpha, beta)))
        if theta[times(alpha, beta)] != theta[times(beta, alpha)]:
            bad.append(("twist-conjugation", (alpha, beta)))
    for alpha in g.elements():
        if theta[g.inv[alpha]] != theta[alpha]:
            bad.append(("twist-inverse-symmetry", (alpha,)))
    return bad


def verify_tuple(t: RibbonTuple) -> dict:
    """All verifier witness lists keyed by stage name."""
    report = {
        "associator": verify_associator(t),
        "braiding": verify_braiding(t),
    }
    if t.theta is not None:
        report["twist"] = verify_twist(t)
    return report


def derived_identities(t: RibbonTuple):
    """Unit-slot normalization and the two routes to the duality constants.

    Returns ``(witnesses, d)`` where ``d[alpha]`` is the evaluation
    constant of the cap pairing the dual object against ``alpha``,
    computed from the first route; a witness is recorded whenever the
    second route disagrees, or the middle-unit associator entry fails
    to be 1.
    """
    g, a, b = t.group, t.a, t.b
    u = g.unit
    bad = []
    d = []
    for alpha in g.elements():
        if a[u][alpha][u] != 1:
            bad.append(("unit-associator", (alpha,)))
        ainv = g.inv[alpha]
        first = b[alpha].inv() * (a[alpha][ainv][alpha] * a[alpha][u][u] * a[u][u][alpha]).inv()
        second = b[alpha].inv() * a[ainv][alpha][ainv] * a[ainv][u][u] * a[u][u][ainv]
        if first != second:
            bad.append(("duality-consistency", (alpha,)))
        d.append(first)
    return bad, d


def _normalize_sign_character(group: FiniteGroup, chi) -> list:
    if isinstance(chi, GroupHom):
        if chi.source != group:
            raise ValueError("character defined on the wrong group")
        if any(chi.target.element_order(v) > 2 for v in chi.images):
            raise ValueError("character image contains an element of order > 2")
        # identify the order-<=2 image elements with +-1
        values = [1 if v == chi.target.unit else -1 for v in chi.images]
    else:
        values = list(chi)
        if len(values) != group.order:
            raise ValueError(f"need {group.order} character values")
        if any(v not in (1, -1) for v in values):
            raise ValueError("character values must be 1 or -1")
        for x, y in itertools.product(group.elements(), repeat=2):
            if values[group.times(x, y)] != values[x] * values[y]:
                raise ValueError(f"sign table is not multiplicative at ({x},{y})")
    return values


def canonical_twist(t: RibbonTuple, chi=None) -> list:
    """Twist table built from the braiding diagonal, times a sign character.

    ``chi`` may be a GroupHom into a group of exponent 2, a sequence of
    +-1 values indexed by group elements, or None for the trivial
    character.  For a verified (a, c) pair the result always passes
    verify_twist.
    """
    g = t.group
    if chi is None:
        signs = [1] * g.order
    else:
        signs = _normalize_sign_character(g, chi)
    return [t.c[alpha][alpha] * signs[alpha] for alpha in g.elements()]


class TwoCochain:
    """A two-argument table of nonzero scalars, conjugation invariant."""

    __slots__ = ("group", "eta")

    def __init__(self, group: FiniteGroup, eta, *, require_invariant: bool = True):
        self.group = group
        self.eta = _table2(group, eta, "cochain")
        if require_invariant:
            witness = self._invariance_witness()
            if witness is not None:
                delta, alpha, beta = witness
                raise ValueError(
                    "cochain is not conjugation invariant: conjugating "
                    f"({alpha},{beta}) by {delta} changes the value"
                )

    def _invariance_witness(self):
        g = self.group
        for delta, alpha, beta in itertools.product(g.elements(), repeat=3):
            if self.eta[g.conj(delta, alpha)][g.conj(delta, beta)] != self.eta[alpha][beta]:
                return delta, alpha, beta
        return None


def coboundary(eta: TwoCochain) -> RibbonTuple:
    """The tuple whose associator and braiding bound the given cochain.

    b is the constant 1 table and the twist is left unset.  The output
    passes verify_associator and verify_braiding by construction (and
    the tests re-verify).
    """
    if eta._invariance_witness() is not None:
        delta, alpha, beta = eta._invariance_witness()
        raise ValueError(
            f"cochain is not conjugation invariant at delta={delta}, "
            f"alpha={alpha}, beta={beta}"
        )
    g, h = eta.group, eta.eta
    times = g.times
    a = [[[h[x][y] * h[times(x, y)][z] * h[x][times(y, z)].inv() * h[y][z].inv()
           for z in g.elements()] for y in g.elements()] for x in g.elements()]
    c = [[h[x][y] * h[y][x].inv() for y in g.elements()] for x in g.elements()]
    return RibbonTuple(g, a, [one()] * g.order, c, None)


def tuple_product(t1: RibbonTuple, t2: RibbonTuple) -> RibbonTuple:
    """Pointwise product of two tuples over the same group."""
    if t1.group != t2.group:
        raise ValueError("tuples live over different groups")
    g = t1.group
    a = [[[t1.a[x][y][z] * t2.a[x][y][z] for z in g.elements()]
          for y in g.elements()] for x in g.elements()]
    b = [t1.b[x] * t2.b[x] for x in g.elements()]
    c = [[t1.c[x][y] * t2.c[x][y] for y in g.elements()] for x in g.elements()]
    theta = None
    if t1.theta is not None and t2.theta is not None:
        theta = [t1.theta[x] * t2.theta[x] for x in g.elements()]
    return RibbonTuple(g, a, b, c, theta)


def tuple_mirror(t: RibbonTuple) -> RibbonTuple:
    """The mirror tuple; applying it twice gives back the original."""
    g = t.group
    inv = g.inv
    a = [[[t.a[g.conj(inv[y], inv[x])][inv[y]][inv[z]]
           for z in g.elements()] for y in g.elements()] for x in g.elements()]
    b = [t.b[inv[x]] for x in g.elements()]
    c = [[t.c[inv[y]][inv[x]].inv() for y in g.elements()] for x in g.elements()]
    theta = None if t.theta is None else [t.theta[x].inv() for x in g.elements()]
    return RibbonTuple(g, a, b, c, theta)


def enumerate_bicharacter_tuples(group: FiniteGroup, order: int) -> list:
    """All tuples with trivial associator whose braiding is a bicharacter.

    Braidings are the maps multiplicative in each slot with values among
    the roots of unity of the given order; the twist is the braiding
    diagonal.  The group must be abelian.  Results come in a fixed
    deterministic order.
    """
    if not group.is_abelian():
        raise ValueError("bicharacter enumeration needs an abelian group")
    n = group.order
    characters = all_characters(group, order)  # exponent vectors, sorted
    gens, words = group.generating_words()

    # A bicharacter is a homomorphism from the group into its character
    # group; enumerate generator images and extend along words.
    results = []
    seen = []
    char_index = {v: i for i, v in enumerate(characters)}

    for images in itertools.product(range(len(characters)), repeat=len(gens)):
        assignment = [None] * n
        ok = True
        for elem in group.elements():
            vec = tuple([0] * n)
            for gen_idx, exp in words[elem]:
                step = characters[images[gen_idx]]
                if exp < 0:
                    step = tuple((-e) % order for e in step)
                vec = tuple((a + b) % order for a, b in zip(vec, step))
            if vec not in char_index:
                ok = False
                break
            assignment[elem] = vec
        if not ok:
            continue
        for x, y in itertools.product(group.elements(), repeat=2):
            merged = tuple((a + b) % order
                           for a, b in zip(assignment[x], assignment[y]))
            if merged != assignment[group.times(x, y)]:
                ok = False
                break
        if not ok:
            continue
        exponents = tuple(tuple(assignment[x][y] for y in group.elements())
                          for x in group.elements())
        if exponents not in seen:
            seen.append(exponents)
    seen.sort()
    u = one()
    for exponents in seen:
        c = [[zeta(order, exponents[x][y]) for y in group.elements()]
             for x in group.elements()]
        t = RibbonTuple(
            group,
            [[[u] * n for _ in range(n)] for _ in range(n)],
            [u] * n,
            c,
            None,
        )
        results.append(t.with_twist(canonical_twist(t)))
    return results
