"""Surface block counts and the graded trace-pairing algebra.

A closed oriented surface with marked points, together with images of
the loop generators in the grading group, determines a block of simple
colorings: one simple per handle, constrained so that the tensor word
built from the marks and the handles collapses to the unit object.  For
thin categories every morphism space is at most a line, so the block is
measured by a plain count.

The degree-zero-genus shadow of the same structure is an algebra on the
simple colors: graded by the group, carrying an inner product that
pairs each simple with its dual and a group action by automorphisms.
This module materialises that algebra as explicit tables, checks the
axiom list on a finite basis, and evaluates the surface counts.
"""

import itertools

from .categories import ColorAlgebra, ThinCategory
from .cyclotomic import CycloNum, matrix_is_invertible, one, zero
from .groups import FiniteGroup


class CrossedAlgebra:
    """A graded algebra with pairing and action, held as basis tables.

    ``grading[i]`` is the group degree of the i-th basis vector,
    ``mult[i][j]`` the coefficient list of the product e_i e_j,
    ``unit`` a coefficient list, ``eta[i][j]`` a scalar, and
    ``action[alpha][i]`` the coefficient list of the automorphism for
    alpha applied to e_i.  Instances come from a category via
    crossed_algebra or are written down directly (a group algebra with
    its standard pairing, say); verify_crossed_algebra judges them.
    """

    def __init__(self, group: FiniteGroup, grading, mult, unit, eta, action):
        self.group = group
        self.grading = list(grading)
        self.size = len(self.grading)
        self.mult = mult
        self.unit = list(unit)
        self.eta = eta
        self.action = action
        if len(self.unit) != self.size:
            raise ValueError("unit vector length does not match the basis")
        if len(self.mult) != self.size or len(self.eta) != self.size:
            raise ValueError("table sizes do not match the basis")
        for alpha in self.group.elements():
            if len(self.action[alpha]) != self.size:
                raise ValueError("action table size does not match the basis")

    def basis_vector(self, i: int) -> list[CycloNum]:
        out = [zero() for _ in range(self.size)]
        out[i] = one()
        return out

    def multiply(self, x, y) -> list[CycloNum]:
        out = [zero() for _ in range(self.size)]
        for i, ci in enumerate(x):
            if ci.is_zero():
                continue
            for j, cj in enumerate(y):
                if cj.is_zero():
                    continue
                for k, ck in enumerate(self.mult[i][j]):
                    if not ck.is_zero():
                        out[k] = out[k] + ci * cj * ck
        return out

    def act(self, alpha: int, x) -> list[CycloNum]:
        out = [zero() for _ in range(self.size)]
        for i, ci in enumerate(x):
            if ci.is_zero():
                continue
            for k, ck in enumerate(self.action[alpha][i]):
                if not ck.is_zero():
                    out[k] = out[k] + ci * ck
        return out

    def pair(self, x, y) -> CycloNum:
        total = zero()
        for i, ci in enumerate(x):
            if ci.is_zero():
                continue
            for j, cj in enumerate(y):
                if not cj.is_zero():
                    total = total + ci * cj * self.eta[i][j]
        return total

    def __repr__(self) -> str:
        return f"CrossedAlgebra(dim={self.size}, group order {self.group.order})"


def crossed_algebra(category: ThinCategory) -> CrossedAlgebra:
    """Tables of the color algebra of a category with its trace pairing.

    The pairing of two simple colors is one exactly when the second is
    the dual of the first, so the bases of opposite degrees are dual to
    each other; that is the nondegeneracy of the pairing, block by
    block.  The product, unit, and action are those of the color
    algebra.
    """
    if not category.strict:
        raise ValueError("crossed-algebra tables need a strict category")
    colors = ColorAlgebra(category)
    n = len(category.grading)
    mult = [
        [colors.multiply(colors.basis_element(i), colors.basis_element(j)) for j in range(n)]
        for i in range(n)
    ]
    eta = [
        [one() if j == category.dual[i] else zero() for j in range(n)]
        for i in range(n)
    ]
    action = {
        alpha: [colors.act(alpha, colors.basis_element(i)) for i in range(n)]
        for alpha in category.group.elements()
    }
    return CrossedAlgebra(
        category.group, category.grading, mult, colors.unit_element(), eta, action
    )


def _support_ok(algebra: CrossedAlgebra, vec, degree: int) -> bool:
    return all(
        c.is_zero() for k, c in enumerate(vec) if algebra.grading[k] != degree
    )


def verify_crossed_algebra(algebra: CrossedAlgebra):
    """Check the graded algebra, pairing, action, and trace axioms.

    Returns a witness list of (rule, context) pairs; an empty list is a
    pass.  The rules cover unit and product grading, associativity,
    pairing symmetry / degree support / blockwise nondegeneracy /
    multiplication invariance, the action being a homomorphism to
    pairing-preserving algebra automorphisms that conjugate the
    grading, triviality of each automorphism on its own degree together
    with the crossed commutation rule, and for every pair of group
    elements the equality of the two traces attached to each basis
    vector of the commutator degree.
    """
    grp = algebra.group
    n = algebra.size
    grading = algebra.grading
    bad = []

    def basis(i):
        return algebra.basis_vector(i)

    if not _support_ok(algebra, algebra.unit, grp.unit):
        bad.append(("unit-degree", ()))
    for i in range(n):
        e = basis(i)
        if algebra.multiply(algebra.unit, e) != e or algebra.multiply(e, algebra.unit) != e:
            bad.append(("unit-law", (i,)))

    for i in range(n):
        for j in range(n):
            if not _support_ok(algebra, algebra.mult[i][j], grp.times(grading[i], grading[j])):
                bad.append(("product-grading", (i, j)))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = algebra.multiply(algebra.mult[i][j], basis(k))
                right = algebra.multiply(basis(i), algebra.mult[j][k])
                if left != right:
                    bad.append(("associativity", (i, j, k)))

    for i in range(n):
        for j in range(n):
            if algebra.eta[i][j] != algebra.eta[j][i]:
                bad.append(("pairing-symmetry", (i, j)))
            if not algebra.eta[i][j].is_zero():
                if grp.times(grading[i], grading[j]) != grp.unit:
                    bad.append(("pairing-degree", (i, j)))
    for alpha in grp.elements():
        rows = [i for i in range(n) if grading[i] == alpha]
        cols = [j for j in range(n) if grading[j] == grp.inv[alpha]]
        if not rows and not cols:
            continue
        block = [[algebra.eta[i][j] for j in cols] for i in rows]
        if len(rows) != len(cols) or not matrix_is_invertible(block):
            bad.append(("pairing-block", (alpha,)))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = algebra.pair(algebra.mult[i][j], basis(k))
                right = algebra.pair(basis(i), algebra.mult[j][k])
                if left != right:
                    bad.append(("pairing-invariance", (i, j, k)))

    for i in range(n):
        if algebra.action[grp.unit][i] != basis(i):
            bad.append(("action-identity", (i,)))
    for alpha in grp.elements():
        if algebra.act(alpha, algebra.unit) != algebra.unit:
            bad.append(("action-unit", (alpha,)))
        for i in range(n):
            target = grp.conj(alpha, grading[i])
            if not _support_ok(algebra, algebra.action[alpha][i], target):
                bad.append(("action-grading", (alpha, i)))
            for j in range(n):
                image = algebra.act(alpha, algebra.mult[i][j])
                split = algebra.multiply(algebra.action[alpha][i], algebra.action[alpha][j])
                if image != split:
                    bad.append(("action-automorphism", (alpha, i, j)))
                if algebra.pair(algebra.action[alpha][i], algebra.action[alpha][j]) != algebra.eta[i][j]:
                    bad.append(("action-pairing", (alpha, i, j)))
        for beta in grp.elements():
            composite = grp.times(alpha, beta)
            for i in range(n):
                if algebra.act(alpha, algebra.action[beta][i]) != algebra.action[composite][i]:
                    bad.append(("action-composition", (alpha, beta, i)))

    for i in range(n):
        if algebra.action[grading[i]][i] != basis(i):
            bad.append(("own-degree-fixed", (i,)))
        for j in range(n):
            twisted = algebra.multiply(algebra.action[grading[i]][j], basis(i))
            straight = algebra.mult[i][j]
            if twisted != straight:
                bad.append(("crossed-commutation", (i, j)))

    for alpha in grp.elements():
        for beta in grp.elements():
            degree = grp.commutator(alpha, beta)
            left_basis = [i for i in range(n) if grading[i] == alpha]
            right_basis = [j for j in range(n) if grading[j] == beta]
            for c in range(n):
                if grading[c] != degree:
                    continue
                first = zero()
                for i in left_basis:
                    image = algebra.multiply(basis(c), algebra.action[beta][i])
                    first = first + image[i]
                second = zero()
                for j in right_basis:
                    image = algebra.act(grp.inv[alpha], algebra.mult[c][j])
                    second = second + image[j]
                if first != second:
                    bad.append(("trace-identity", (alpha, beta, c)))

    return bad


class SurfaceSpec:
    """A genus with handle images and signed, colored marked points.

    ``alphas`` and ``betas`` give the images of the handle loops, one
    pair per handle.  ``marks`` is a sequence of (sign, label, color)
    triples: the sign is +1 or -1, the label is the group element read
    along a small loop around the point, and the color names a simple
    of that degree.  The product of the signed labels followed by the
    handle commutators must be the group unit — that is the defining
    relation of the punctured surface group — otherwise the data
    describes no homomorphism at all and construction fails.
    """

    def __init__(self, group: FiniteGroup, genus: int, alphas=(), betas=(), marks=()):
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        if len(alphas) != genus or len(betas) != genus:
            raise ValueError("need exactly one alpha and one beta per handle")
        self.group = group
        self.genus = genus
        self.alphas = tuple(alphas)
        self.betas = tuple(betas)
        self.marks = tuple((int(sign), label, color) for sign, label, color in marks)
        for sign, _, _ in self.marks:
            if sign not in (1, -1):
                raise ValueError("mark signs must be +1 or -1")
        total = group.unit
        for sign, label, _ in self.marks:
            total = group.times(total, group.power(label, sign))
        for a, b in zip(self.alphas, self.betas):
            total = group.times(total, group.commutator(a, b))
        if total != group.unit:
            raise ValueError("the boundary relation of the marked surface fails")

    def __repr__(self) -> str:
        return (
            f"SurfaceSpec(genus={self.genus}, marks={len(self.marks)}, "
            f"group order {self.group.order})"
        )


def block_dimension(category: ThinCategory, surface: SurfaceSpec) -> int:
    """Count the handle colorings whose tensor word is the unit object.

    The word starts with the marked colors (dualised where the sign is
    negative); each handle then contributes a chosen simple of the
    alpha degree tensored with the dual of its beta-action image.  In a
    thin category each admissible word spans a line and every other
    word contributes nothing, so the block dimension is the number of
    choices whose word multiplies out to the unit simple.
    """
    if surface.group is not category.group:
        raise ValueError("the surface data lives over a different group")
    prefix = []
    for sign, label, color in surface.marks:
        if category.grading[color] != label:
            raise ValueError(
                f"mark color {color} does not sit in degree {label}"
            )
        prefix.append(color if sign == 1 else category.dual[color])
    pools = [category.simples_of_degree(a) for a in surface.alphas]
    count = 0
    for picks in itertools.product(*pools):
        word = list(prefix)
        for beta, simple in zip(surface.betas, picks):
            word.append(simple)
            word.append(category.dual[category.action[beta][simple]])
        if category.tensor_many(word) == category.unit:
            count += 1
    return count


def closed_surface_value(category: ThinCategory, genus: int, alphas, betas) -> int:
    """The invariant of a closed surface: a block count with no marks."""
    surface = SurfaceSpec(category.group, genus, alphas, betas)
    return block_dimension(category, surface)


def verify_splitting(category: ThinCategory, alpha: int, left, right):
    """Compare a direct unit-space count with its split form.

    ``left`` and ``right`` are tensor words of simples whose total
    degrees are alpha and its inverse.  The direct count asks whether
    the concatenated word collapses to the unit; the split form sums
    over the simples of degree alpha, pairing the left word against
    each simple's dual and the simple against the right word.  The two
    counts agree in any of these categories; the returned dict reports
    both and their equality.
    """
    grp = category.group

    def total_degree(word):
        out = grp.unit
        for s in word:
            out = grp.times(out, category.grading[s])
        return out

    if total_degree(left) != alpha or total_degree(right) != grp.inv[alpha]:
        raise ValueError("the words must carry degrees alpha and alpha inverse")
    joined = list(left) + list(right)
    direct = 1 if category.tensor_many(joined) == category.unit else 0
    through = 0
    for simple in category.simples_of_degree(alpha):
        first = category.tensor_many(list(left) + [category.dual[simple]])
        second = category.tensor_many([simple] + list(right))
        if first == category.unit and second == category.unit:
            through += 1
    return {"direct": direct, "through_simples": through, "equal": direct == through}
