"""Invariants of closed 3-manifolds from framed labeled link diagrams.

A closed diagram whose circle components carry group labels describes a
framed link together with a homomorphism from its complement's
fundamental group; surgery along the link turns this into a closed
oriented 3-manifold carrying a flat structure, provided the homomorphism
kills every framed longitude.  That is the "special" condition checked
by check_special: only then do the labels descend to the surgered
manifold.

The invariant combines three ingredients computed here: the signature of
the linking matrix (framings on the diagonal, linking numbers off it),
a global normalization built from the modular data, and the evaluation
of the diagram after each surgery component's color has been replaced by
the dimension-weighted sum of all simples sitting over its meridian
label.  Components listed in ``omega`` are exempt from the recoloring
and ride along as an embedded colored graph inside the manifold.
"""

from fractions import Fraction
from itertools import product

from .categories import categorical_dim, modular_data
from .cyclotomic import one, zero
from .diagrams import ColoredPiTangle, DiagramError, component_data, evaluate_F


class SurgeryError(ValueError):
    pass


class SurgeryPresentation:
    """A closed labeled diagram marked up for surgery.

    All components not listed in ``omega`` are surgery components and
    must be circles; their writhes are the framings.  ``omega``
    components keep the colors they were given and may contain coupons.
    """

    def __init__(self, category, slices, omega=()):
        self.category = category
        self.tangle = ColoredPiTangle(category, (), slices)
        if not self.tangle.is_closed():
            raise SurgeryError("a surgery presentation must be a closed diagram")
        self.components = component_data(self.tangle)
        self.omega = frozenset(omega)
        for i in self.omega:
            if not 0 <= i < len(self.components):
                raise SurgeryError(f"no component {i} to keep as a graph")
        for i in self.surgery_indices():
            if not self.components[i]["circle"]:
                raise SurgeryError(
                    f"surgery component {i} is an open chain; "
                    "only circles can be surgered")

    def surgery_indices(self):
        return tuple(i for i in range(len(self.components))
                     if i not in self.omega)

    def framings(self):
        return {i: self.components[i]["writhe"]
                for i in self.surgery_indices()}

    def __repr__(self):
        return (f"SurgeryPresentation({len(self.surgery_indices())} surgery"
                f" + {len(self.omega)} kept components)")


def check_special(presentation):
    """Which surgery components have a nontrivial framed longitude?

    Returns the longitude image per surgery component and the list of
    failing components.  Only a presentation with no failures describes
    a labeling of the surgered manifold.
    """
    unit = presentation.category.group.unit
    longitudes = {}
    failures = []
    for i in presentation.surgery_indices():
        ell = presentation.components[i]["longitude"]
        longitudes[i] = ell
        if ell != unit:
            failures.append(i)
    return {"longitudes": longitudes, "failures": failures}


def linking_matrix(presentation):
    """Framings on the diagonal, linking numbers elsewhere.

    The linking number of two circles is the signed count of crossings
    where the first passes under the second; the walk records exactly
    those, so no halving is needed.  Crossings with ``omega`` components
    do not enter the matrix.
    """
    comps = presentation.components
    owner = {}
    for i, comp in enumerate(comps):
        for slot in comp["slots"]:
            owner[slot] = i
    rows = presentation.surgery_indices()
    place = {i: r for r, i in enumerate(rows)}
    matrix = [[0] * len(rows) for _ in rows]
    for i in rows:
        matrix[place[i]][place[i]] = comps[i]["writhe"]
        for at, over_pos, eta in comps[i]["passes"]:
            j = owner[(at, over_pos)]
            if j != i and j in place:
                matrix[place[i]][place[j]] += eta
    for r in range(len(rows)):
        for c in range(r):
            if matrix[r][c] != matrix[c][r]:
                raise SurgeryError("linking matrix came out asymmetric; "
                                   "the walk is inconsistent")
    return matrix


def _inertia(matrix):
    """(positives, negatives, nullity) of a symmetric rational matrix.

    Congruence diagonalization: split off one diagonal entry at a time,
    fixing a zero corner either by swapping in a nonzero diagonal entry
    or by folding a nonzero off-diagonal one into it.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    plus = minus = null = 0
    while m:
        n = len(m)
        if m[0][0] == 0:
            k = next((j for j in range(1, n) if m[j][j] != 0), None)
            if k is not None:
                m[0], m[k] = m[k], m[0]
                for row in m:
                    row[0], row[k] = row[k], row[0]
            else:
                k = next((j for j in range(1, n) if m[0][j] != 0), None)
                if k is None:
                    null += 1
                    m = [row[1:] for row in m[1:]]
                    continue
                # both diagonal entries vanish, so folding row and
                # column k into the corner leaves 2*m[0][k] != 0 there
                for j in range(n):
                    m[0][j] += m[k][j]
                for row in m:
                    row[0] += row[k]
        a = m[0][0]
        if a > 0:
            plus += 1
        else:
            minus += 1
        m = [[m[i][j] - m[i][0] * m[0][j] / a for j in range(1, n)]
             for i in range(1, n)]
    return plus, minus, null


def signature_of_linking(presentation):
    """Signature data of the linking matrix, exactly over the rationals.

    "b1" is the nullity; for the surgered manifold it is the first
    Betti number.
    """
    matrix = linking_matrix(presentation)
    plus, minus, null = _inertia(matrix)
    return {"sigma": plus - minus, "sigma_plus": plus, "sigma_minus": minus,
            "b1": null, "matrix": matrix}


def canonical_coloring(presentation):
    """Expand each surgery component into its canonical color.

    The canonical color of a label is the dimension-weighted formal sum
    of all simples graded by it, so the expansion is a list of
    (weight, recolored tangle) pairs, one per choice of simple on each
    surgery component.  Cup colors away from the base are moved by the
    walk conjugator.  A choice whose loop conjugation fails to return
    the simple to itself closes up along a zero morphism: such terms
    are dropped.  Requires a special presentation.
    """
    report = check_special(presentation)
    if report["failures"]:
        raise SurgeryError(
            f"components {report['failures']} have nontrivial framed "
            "longitudes; the labels do not descend to the surgered manifold")
    cat = presentation.category
    rows = presentation.surgery_indices()
    choices = [cat.simples_of_degree(presentation.components[i]["meridian"])
               for i in rows]
    terms = []
    for picks in product(*choices):
        weight = one()
        for s in picks:
            weight = weight * categorical_dim(cat, s)
        slices = list(presentation.tangle.slices)
        for i, s in zip(rows, picks):
            for cup, conj in presentation.components[i]["cups"]:
                moved = cat.action[conj][s]
                old = slices[cup]
                slices[cup] = ("cup", old[1], old[2], cat.grading[moved], moved)
        try:
            terms.append((weight, ColoredPiTangle(cat, (), slices)))
        except DiagramError:
            continue
    return terms


def canonical_f(presentation):
    """Evaluate the diagram summed over the canonical coloring."""
    total = zero()
    for weight, tangle in canonical_coloring(presentation):
        total = total + weight * evaluate_F(tangle)
    return total


def _power(x, k):
    if k < 0:
        return x.inv() ** (-k)
    return x ** k


class TauResult:
    """An invariant value along with the bookkeeping that produced it."""

    def __init__(self, value, f_value, sigma, sigma_plus, sigma_minus,
                 b1, n_components, rank, delta_plus, delta_minus,
                 tau_prime, category):
        self.value = value
        self.f_value = f_value
        self.sigma = sigma
        self.sigma_plus = sigma_plus
        self.sigma_minus = sigma_minus
        self.b1 = b1
        self.n_components = n_components
        self.rank = rank
        self.delta_plus = delta_plus
        self.delta_minus = delta_minus
        self.tau_prime = tau_prime
        self.category = category

    def __repr__(self):
        return f"TauResult({self.value!r})"


def tau(presentation, rank_sign="+", order=None):
    """The closed-manifold invariant of a special surgery presentation.

    value = delta_minus^sigma * rank^(-sigma - n - 1) * F(canonical)

    where n counts surgery components and sigma is the linking-matrix
    signature.  ``rank_sign`` picks the square root used as the rank and
    ``order`` widens the cyclotomic field when the rank needs it.  The
    result also carries tau_prime, the normalization
    delta_minus^(-sigma_minus) * delta_plus^(-sigma_plus) * F, which
    does not depend on the choice of rank.
    """
    cat = presentation.category
    md = modular_data(cat, rank_sign=rank_sign, order=order)
    data = signature_of_linking(presentation)
    n = len(presentation.surgery_indices())
    f = canonical_f(presentation)
    sigma = data["sigma"]
    value = (_power(md.delta_minus, sigma)
             * _power(md.rank, -sigma - n - 1) * f)
    prime = (_power(md.delta_minus, -data["sigma_minus"])
             * _power(md.delta_plus, -data["sigma_plus"]) * f)
    assert prime == _power(md.rank, data["b1"] + 1) * value
    return TauResult(value, f, sigma, data["sigma_plus"],
                     data["sigma_minus"], data["b1"], n, md.rank,
                     md.delta_plus, md.delta_minus, prime, cat)


def kirby_stabilize(presentation, sign=1):
    """Add a distant unknot with framing +1 or -1, labeled by the unit.

    Surgery on the new component gives the same manifold back, so the
    invariant is unchanged; the new component sorts after all existing
    ones and kept-graph indices stay valid.
    """
    if sign not in (1, -1):
        raise SurgeryError(f"stabilization sign must be +1 or -1, got {sign}")
    cat = presentation.category
    unit = cat.group.unit
    color = cat.simples_of_degree(unit)[0]
    slices = list(presentation.tangle.slices)
    slices += [("cup", 0, "ud", unit, color), ("kink", 0, sign),
               ("cap", 0, "ud")]
    return SurgeryPresentation(cat, slices, presentation.omega)


def fenn_rourke(presentation, level, pos, count=1, direction="-"):
    """Blow up a bundle of parallel strands.

    At the chosen level, the ``count`` strands starting at ``pos``
    receive a full twist (left-hand for direction "-", right-hand for
    "+"), each strand's framing changes by one accordingly, and a new
    circle with the opposite-signed framing is added encircling the
    bundle.  Its label is forced by the special condition: the ordered
    product of the bundle labels, each raised to its strand direction.
    The surgered manifold and its labeling are untouched, so the
    invariant is unchanged.

    The inserted pattern restores the running state exactly, which is
    why slices above the insertion need no rewriting.
    """
    if direction not in ("-", "+"):
        raise SurgeryError(f"unknown twist direction {direction!r}")
    if count < 1:
        raise SurgeryError("the twist needs at least one strand")
    tl = presentation.tangle
    if not 0 <= level < len(tl.levels):
        raise SurgeryError(f"no level {level} in this diagram")
    state = tl.levels[level]
    if pos < 0 or pos + count > len(state):
        raise SurgeryError(
            f"no bundle of {count} strands at position {pos} of level {level}")
    cat = presentation.category
    grp = cat.group
    m = grp.unit
    for d, g, _ in state[pos:pos + count]:
        m = grp.times(m, grp.power(g, d))
    simples = cat.simples_of_degree(m)
    if not simples:
        raise SurgeryError(
            "no simple object carries the encircling label; "
            "the blown-up diagram cannot be colored")
    sgn = -1 if direction == "-" else 1
    right = pos + count
    word = [("cup", right, "ud", m, simples[0]), ("kink", right, sgn)]
    # sweep the fresh leg leftward across the bundle; for the left-hand
    # move it passes under every strand, for the right-hand move over
    word += [("cross", j, -sgn) for j in range(right - 1, pos - 1, -1)]
    word += [("kink", q, sgn) for q in range(pos + 1, right + 1)]
    for _ in range(count):
        word += [("cross", q, sgn) for q in range(pos + 1, right)]
    # and sweep it back on the other side of the bundle
    word += [("cross", j, -sgn) for j in range(pos, right)]
    word += [("cap", right, "ud")]
    slices = list(tl.slices)
    slices[level:level] = word
    rebuilt = SurgeryPresentation(cat, slices)
    if presentation.omega:
        located = {}
        for j, comp in enumerate(rebuilt.components):
            for slot in comp["slots"]:
                located[slot] = j
        omega = set()
        for i in presentation.omega:
            k, q = min(presentation.components[i]["slots"])
            if k > level:
                k += len(word)
            omega.add(located[(k, q)])
        rebuilt = SurgeryPresentation(cat, slices, omega)
    return rebuilt


def connected_sum(first, second):
    """Stack two presentations; the result presents the connected sum.

    The invariant of the sum is the rank times the product of the two
    invariants.
    """
    if first.category is not second.category:
        raise SurgeryError(
            "connected sum needs both presentations over one category")
    slices = list(first.tangle.slices) + list(second.tangle.slices)
    shift = len(first.components)
    omega = set(first.omega) | {i + shift for i in second.omega}
    return SurgeryPresentation(first.category, slices, omega)


def builtin_presentation(category, name, alpha=None, framing=None):
    """Named starting points.

    "S3"     -- the empty diagram.
    "S1xS2"  -- a 0-framed unknot labeled ``alpha`` (default: the unit).
    "lens"   -- a ``framing``-framed unknot labeled ``alpha``; refused
                unless the label's order divides the framing, since
                otherwise the framed longitude survives.
    """
    grp = category.group
    if name == "S3":
        return SurgeryPresentation(category, [])
    if name not in ("S1xS2", "lens"):
        raise SurgeryError(f"unknown builtin presentation {name!r}")
    if alpha is None:
        alpha = grp.unit
    if name == "S1xS2":
        framing = 0
    elif framing is None:
        raise SurgeryError("a lens presentation needs a framing")
    simples = category.simples_of_degree(alpha)
    if not simples:
        raise SurgeryError(f"no simple object carries the label {alpha}")
    slices = [("cup", 0, "ud", alpha, simples[0])]
    slices += [("kink", 0, 1 if framing >= 0 else -1)] * abs(framing)
    slices += [("cap", 0, "ud")]
    built = SurgeryPresentation(category, slices)
    if check_special(built)["failures"]:
        raise SurgeryError(
            f"label {alpha} with framing {framing} is not special: "
            "the framed longitude does not vanish")
    return built
