"""Thin graded ribbon categories with exact scalar structure constants.

A ThinCategory has finitely many simple objects, a grading by a finite
group, a group action permuting the simples, a tensor product sending a
pair of simples to a simple or to zero, and scalar braiding / twist /
duality constants.  Everything a diagram evaluator needs — traces,
dimensions, the color algebra, canonical colors, and the modular data
(S-matrix, rank, twist sums) — is computed here exactly.
"""

import itertools
from fractions import Fraction

from .cyclotomic import (
    CycloNum,
    SquareRootUnavailable,
    matrix_is_invertible,
    one,
    sqrt_rational,
    zero,
)
from .cocycles import RibbonTuple, derived_identities, verify_tuple
from .groups import FiniteGroup


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


class ThinCategory:
    """Simple objects with grading, action, tensor, and scalar constants.

    ``tensor[s][t]`` is a simple index or None (the zero object).
    ``action[alpha][s]`` is the simple the group element alpha sends s to.
    ``braid``, ``twist``, ``bval``, ``dval`` hold the scalar values of the
    braiding, twist, and the two duality morphisms.  All structural
    identities are checked at construction time.
    """

    __slots__ = ("group", "grading", "unit", "dual", "action", "tensor",
                 "braid", "twist", "bval", "dval", "strict", "names", "order")

    def __init__(self, group: FiniteGroup, grading, unit, dual, action,
                 tensor, braid, twist, bval, dval, strict, names=None):
        self.group = group
        self.grading = list(grading)
        n = len(self.grading)
        self.unit = unit
        self.dual = list(dual)
        self.action = [list(row) for row in action]
        self.tensor = [list(row) for row in tensor]
        self.braid = [list(row) for row in braid]
        self.twist = list(twist)
        self.bval = list(bval)
        self.dval = list(dval)
        self.strict = bool(strict)
        self.names = list(names) if names else [f"s{i}" for i in range(n)]
        self._validate()
        self.order = self._scalar_order()

    # -- structure ------------------------------------------------------

    def simples(self):
        return range(len(self.grading))

    def simples_of_degree(self, alpha):
        return [s for s in self.simples() if self.grading[s] == alpha]

    def tensor_many(self, seq):
        """Tensor product of a sequence of simples; None if it hits zero."""
        acc = self.unit
        for s in seq:
            if acc is None:
                return None
            acc = self.tensor[acc][s]
        return acc

    def _scalar_order(self) -> int:
        order = 1
        for value in itertools.chain(
                (x for row in self.braid for x in row),
                self.twist, self.bval, self.dval):
            order = _lcm(order, value.order)
        return order

    def _validate(self):
        g = self.group
        n = len(self.grading)
        if n == 0:
            raise ValueError("a category needs at least one simple")

        def name(s):
            return self.names[s] if self.names else str(s)

        if not (0 <= self.unit < n) or self.grading[self.unit] != g.unit:
            raise ValueError("unit simple missing or not neutrally graded")
        if sorted(self.dual) != list(range(n)):
            raise ValueError("dual table is not a permutation")
        for s in range(n):
            if self.dual[self.dual[s]] != s:
                raise ValueError(f"dual is not an involution at {name(s)}")
            if self.grading[self.dual[s]] != g.inv[self.grading[s]]:
                raise ValueError(f"dual of {name(s)} has wrong degree")

        if len(self.action) != g.order:
            raise ValueError("action table needs one row per group element")
        for alpha in g.elements():
            row = self.action[alpha]
            if sorted(row) != list(range(n)):
                raise ValueError(f"action of {alpha} is not a permutation")
            for s in range(n):
                if self.grading[row[s]] != g.conj(alpha, self.grading[s]):
                    raise ValueError(
                        f"action of {alpha} breaks the grading at {name(s)}")
        for s in range(n):
            if self.action[g.unit][s] != s:
                raise ValueError("the neutral element must act as identity")
        for alpha, beta in itertools.product(g.elements(), repeat=2):
            for s in range(n):
                if self.action[alpha][self.action[beta][s]] != \
                        self.action[g.times(alpha, beta)][s]:
                    raise ValueError(
                        f"action is not a group action at ({alpha},{beta})")

        for s, t in itertools.product(range(n), repeat=2):
            st = self.tensor[s][t]
            if st is not None and \
                    self.grading[st] != g.times(self.grading[s], self.grading[t]):
                raise ValueError(
                    f"tensor {name(s)}*{name(t)} breaks the grading")
        for s in range(n):
            if self.tensor[s][self.unit] != s or self.tensor[self.unit][s] != s:
                raise ValueError(f"unit does not act as tensor unit on {name(s)}")
        for s, t, w in itertools.product(range(n), repeat=3):
            left = self.tensor[s][t]
            left = None if left is None else self.tensor[left][w]
            right = self.tensor[t][w]
            right = None if right is None else self.tensor[s][right]
            if left != right:
                raise ValueError(
                    f"tensor is not associative at ({name(s)},{name(t)},{name(w)})")
        for alpha in g.elements():
            act = self.action[alpha]
            if act[self.unit] != self.unit:
                raise ValueError("action must fix the unit simple")
            for s in range(n):
                if act[self.dual[s]] != self.dual[act[s]]:
                    raise ValueError(
                        f"action of {alpha} does not commute with duals")
                for t in range(n):
                    st = self.tensor[s][t]
                    if (None if st is None else act[st]) != \
                            self.tensor[act[s]][act[t]]:
                        raise ValueError(
                            f"action of {alpha} does not respect the tensor")

        # the twist is an invertible morphism s -> (degree of s acting on s),
        # so that simple must be s itself
        for s in range(n):
            if self.action[self.grading[s]][s] != s:
                raise ValueError(
                    f"{name(s)} is not fixed by the action of its own degree")

        # braiding compatibility of the tensor: the braiding maps s*t onto
        # (s acting on t)*s, which must be the same simple when nonzero
        for s, t in itertools.product(range(n), repeat=2):
            st = self.tensor[s][t]
            if st is not None and \
                    self.tensor[self.action[self.grading[s]][t]][s] != st:
                raise ValueError(
                    f"braiding cannot map {name(s)}*{name(t)} onto its twist-side form")

        shapes = [(self.twist, "twist"), (self.bval, "pairing-birth"),
                  (self.dval, "pairing-death")]
        for table, what in shapes:
            if len(table) != n:
                raise ValueError(f"{what} table has wrong length")
            for s, value in enumerate(table):
                if not isinstance(value, CycloNum) or value.is_zero():
                    raise ValueError(f"{what} constant at {name(s)} must be nonzero")
        if len(self.braid) != n or any(len(r) != n for r in self.braid):
            raise ValueError("braiding table must be square")
        for s, t in itertools.product(range(n), repeat=2):
            value = self.braid[s][t]
            if not isinstance(value, CycloNum) or value.is_zero():
                raise ValueError(f"braiding constant at ({name(s)},{name(t)}) must be nonzero")

        # the group action preserves all scalar constants
        for alpha in g.elements():
            act = self.action[alpha]
            for s in range(n):
                if self.twist[act[s]] != self.twist[s] or \
                        self.bval[act[s]] != self.bval[s] or \
                        self.dval[act[s]] != self.dval[s]:
                    raise ValueError(
                        f"action of {alpha} changes a twist/duality constant")
                for t in range(n):
                    if self.braid[act[s]][act[t]] != self.braid[s][t]:
                        raise ValueError(
                            f"action of {alpha} changes the braiding at ({name(s)},{name(t)})")

        if self.strict:
            for s in range(n):
                if self.tensor[s][self.dual[s]] != self.unit or \
                        self.tensor[self.dual[s]][s] != self.unit:
                    raise ValueError(
                        f"strict category needs {name(s)} tensor its dual = unit")
                if not (self.bval[s] * self.dval[s]).is_one():
                    raise ValueError(
                        f"strict duality constants at {name(s)} must be inverse")
                if self.braid[s][self.unit] != 1 or self.braid[self.unit][s] != 1:
                    raise ValueError(
                        f"strict braiding with the unit at {name(s)} must be 1")


def pointlike_category(t: RibbonTuple) -> ThinCategory:
    """One simple per group element, constants straight from the tuple.

    The tuple must pass all verifiers (including the twist).  The
    category is strict exactly when the associator table is constant 1;
    only strict categories support diagram evaluation downstream.
    """
    report = verify_tuple(t)
    failures = {k: v for k, v in report.items() if v}
    if t.theta is None:
        raise ValueError("tuple needs a twist table to build a category")
    if failures:
        lines = "; ".join(
            f"{stage}: {len(wits)} failing instances, first {wits[0]}"
            for stage, wits in failures.items())
        raise ValueError(f"tuple fails verification ({lines})")
    g = t.group
    n = g.order
    strict = all(t.a[x][y][z].is_one()
                 for x in range(n) for y in range(n) for z in range(n))
    _, d = derived_identities(t)
    names = [f"V[{g.names[x]}]" if g.names else f"V{x}" for x in range(n)]
    return ThinCategory(
        group=g,
        grading=list(g.elements()),
        unit=g.unit,
        dual=list(g.inv),
        action=[[g.conj(alpha, x) for x in g.elements()] for alpha in g.elements()],
        tensor=[[g.times(x, y) for y in g.elements()] for x in g.elements()],
        braid=[row[:] for row in t.c],
        twist=list(t.theta),
        bval=list(t.b),
        dval=d,
        strict=strict,
        names=names,
    )


def categorical_dim(category: ThinCategory, s: int) -> CycloNum:
    """Trace of the identity: the loop value of an unknot colored by s."""
    if not category.strict:
        raise ValueError("dimensions need a strict category")
    ss = category.action[category.grading[s]][s]  # equals s structurally
    return (category.dval[ss] * category.braid[ss][category.dual[s]]
            * category.twist[s] * category.bval[s])


def trace_of(category: ThinCategory, s: int, scalar: CycloNum) -> CycloNum:
    """Trace of the endomorphism scalar*id of the simple s."""
    return scalar * categorical_dim(category, s)


def crossed_invariance_suite(category: ThinCategory) -> list:
    """Scalar-level checks of the braiding/twist axioms on all simples.

    Covers the Yang-Baxter identity, the twist product rule, the
    dual-twist identity, and preservation of braiding and twist by the
    group action.  Returns a witness list of (rule, indices) pairs.
    """
    if not category.strict:
        raise ValueError("the invariance suite needs a strict category")
    C = category
    g = C.group
    bad = []
    for s, t, w in itertools.product(C.simples(), repeat=3):
        if C.tensor_many([s, t, w]) is None:
            continue
        phi_s = C.action[C.grading[s]]
        phi_t = C.action[C.grading[t]]
        lhs = C.braid[phi_s[t]][phi_s[w]] * C.braid[s][w] * C.braid[s][t]
        rhs = C.braid[s][t] * C.braid[s][phi_t[w]] * C.braid[t][w]
        if lhs != rhs:
            bad.append(("yang-baxter", (s, t, w)))
    for s, t in itertools.product(C.simples(), repeat=2):
        st = C.tensor[s][t]
        if st is None:
            continue
        phi_s = C.action[C.grading[s]]
        lhs = C.twist[st]
        rhs = C.braid[phi_s[t]][s] * C.braid[s][t] * C.twist[s] * C.twist[t]
        if lhs != rhs:
            bad.append(("twist-product", (s, t)))
    for s in C.simples():
        if C.twist[s] != C.twist[C.action[C.grading[s]][C.dual[s]]]:
            bad.append(("dual-twist", (s,)))
    for alpha in g.elements():
        act = C.action[alpha]
        for s, t in itertools.product(C.simples(), repeat=2):
            if C.braid[act[s]][act[t]] != C.braid[s][t]:
                bad.append(("action-braiding", (alpha, s, t)))
        for s in C.simples():
            if C.twist[act[s]] != C.twist[s]:
                bad.append(("action-twist", (alpha, s)))
    return bad


class ColorAlgebra:
    """The free module on the simples with tensor-induced multiplication.

    Elements are coefficient lists indexed by simples.  The grading,
    the group action, the star involution, and the dimension functional
    all come from the underlying category.
    """

    __slots__ = ("category",)

    def __init__(self, category: ThinCategory):
        self.category = category

    def zero_element(self):
        return [zero() for _ in self.category.simples()]

    def basis_element(self, s: int):
        e = self.zero_element()
        e[s] = one()
        return e

    def unit_element(self):
        return self.basis_element(self.category.unit)

    def multiply(self, x, y):
        C = self.category
        out = self.zero_element()
        for s, cs in enumerate(x):
            if cs.is_zero():
                continue
            for t, ct in enumerate(y):
                if ct.is_zero():
                    continue
                st = C.tensor[s][t]
                if st is not None:
                    out[st] = out[st] + cs * ct
        return out

    def star(self, x):
        C = self.category
        out = self.zero_element()
        for s, cs in enumerate(x):
            out[C.dual[s]] = cs
        return out

    def act(self, alpha, x):
        C = self.category
        out = self.zero_element()
        for s, cs in enumerate(x):
            out[C.action[alpha][s]] = cs
        return out

    def dim_functional(self, x) -> CycloNum:
        C = self.category
        total = zero()
        for s, cs in enumerate(x):
            if not cs.is_zero():
                total = total + cs * categorical_dim(C, s)
        return total

    def degree_component(self, alpha, x):
        C = self.category
        out = self.zero_element()
        for s, cs in enumerate(x):
            if C.grading[s] == alpha:
                out[s] = cs
        return out


def verlinde_algebra(category: ThinCategory) -> ColorAlgebra:
    return ColorAlgebra(category)


def canonical_color(category: ThinCategory, alpha) -> list:
    """Dimension-weighted sum of the simples of one degree.

    Zero when the degree carries no simples at all; downstream this is
    exactly what makes surgery invariants vanish on such degrees.
    """
    algebra = ColorAlgebra(category)
    out = algebra.zero_element()
    for s in category.simples_of_degree(alpha):
        out[s] = categorical_dim(category, s)
    return out


class ModularData:
    """S-matrix over the neutral simples, rank, and the twist sums."""

    __slots__ = ("category", "neutral", "s_matrix", "rank", "delta_plus",
                 "delta_minus", "counts")

    def __init__(self, category, neutral, s_matrix, rank, delta_plus,
                 delta_minus, counts):
        self.category = category
        self.neutral = neutral
        self.s_matrix = s_matrix
        self.rank = rank
        self.delta_plus = delta_plus
        self.delta_minus = delta_minus
        self.counts = counts


def modular_data(category: ThinCategory, rank_sign: str = "+",
                 order: int = None) -> ModularData:
    """S-matrix, rank D with D^2 = sum of squared dimensions, twist sums.

    The sign of D is the caller's choice; "+" picks the square root that
    is positive under the principal complex embedding.  ``order`` widens
    the cyclotomic field the rank is searched in (the category's own
    scalar order is always included).  Verifies S invertibility and the
    product identity Delta_+ * Delta_- = D^2.
    """
    if rank_sign not in ("+", "-"):
        raise ValueError("rank sign must be '+' or '-'")
    if not category.strict:
        raise ValueError("modular data needs a strict category")
    C = category
    neutral = C.simples_of_degree(C.group.unit)
    dims = {i: categorical_dim(C, i) for i in neutral}
    s_matrix = []
    for i in neutral:
        row = []
        for j in neutral:
            if C.tensor[i][j] is None:
                row.append(zero())
            else:
                row.append(C.braid[i][j] * C.braid[j][i] * dims[i] * dims[j])
        s_matrix.append(row)
    if not matrix_is_invertible([row[:] for row in s_matrix]):
        printed = "; ".join(
            "[" + ", ".join(str(v) for v in row) + "]" for row in s_matrix)
        raise ValueError(f"category is not modular: S = {printed} is singular")
    d_squared = zero()
    delta_plus = zero()
    delta_minus = zero()
    for i in neutral:
        sq = dims[i] * dims[i]
        d_squared = d_squared + sq
        delta_plus = delta_plus + C.twist[i] * sq
        delta_minus = delta_minus + C.twist[i].inv() * sq
    if not d_squared.is_rational():
        raise ValueError(
            "the squared rank is not rational; this build only extracts "
            "square roots of rationals — enlarge the cyclotomic order after "
            "rationalizing the category constants"
        )
    field_order = category.order if order is None else _lcm(category.order, order)
    try:
        rank = sqrt_rational(d_squared.as_rational(), field_order)
    except SquareRootUnavailable as err:
        raise SquareRootUnavailable(
            f"no rank in the working cyclotomic field: {err}") from err
    if rank_sign == "-":
        rank = -rank
    assert delta_plus * delta_minus == d_squared
    counts = {alpha: len(C.simples_of_degree(alpha))
              for alpha in C.group.elements()}
    return ModularData(C, neutral, s_matrix, rank, delta_plus, delta_minus,
                       counts)
