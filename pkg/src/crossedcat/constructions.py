"""Category-level constructions: pullbacks, pushforwards, products, mirrors,
transfers to a bigger group, and canonical extensions by characters.

Everything consumes and produces ThinCategory except the transfer, whose
unit object is not simple; it gets its own TransferCategory type with
explicit objects (degree, coset support, coordinate labels).
"""

import itertools
import math

from .categories import ThinCategory, crossed_invariance_suite
from .groups import FiniteGroup, GroupHom, character_group


# -- pullback / pushforward / products / mirror ---------------------------


def pullback(category: ThinCategory, q: GroupHom) -> ThinCategory:
    """Reindex a category along a group homomorphism into its group.

    The component over alpha' is the component over q(alpha'); a base
    simple reappears once for every preimage degree.
    """
    if q.target != category.group:
        raise ValueError("homomorphism must land in the category's group")
    C = category
    new_group = q.source
    pairs = []
    index = {}
    for a in new_group.elements():
        for s in C.simples_of_degree(q(a)):
            index[(a, s)] = len(pairs)
            pairs.append((a, s))

    def at(a, s):
        return index[(a, s)]

    grading = [a for a, _ in pairs]
    unit = at(new_group.unit, C.unit)
    dual = [at(new_group.inv[a], C.dual[s]) for a, s in pairs]
    action = [[at(new_group.conj(b, a), C.action[q(b)][s]) for a, s in pairs]
              for b in new_group.elements()]
    tensor = []
    for a, s in pairs:
        row = []
        for b, t in pairs:
            st = C.tensor[s][t]
            row.append(None if st is None else at(new_group.times(a, b), st))
        tensor.append(row)
    braid = [[C.braid[s][t] for _, t in pairs] for _, s in pairs]
    names = [f"({new_group.names[a]}|{C.names[s]})" for a, s in pairs]
    return ThinCategory(
        new_group, grading, unit, dual, action, tensor, braid,
        [C.twist[s] for _, s in pairs],
        [C.bval[s] for _, s in pairs],
        [C.dval[s] for _, s in pairs],
        C.strict, names,
    )


def pushforward(category: ThinCategory, q: GroupHom) -> ThinCategory:
    """Coarsen the grading along a surjection whose kernel acts trivially."""
    if q.source != category.group:
        raise ValueError("homomorphism must start at the category's group")
    if not q.is_surjective():
        raise ValueError("pushforward needs a surjective homomorphism")
    C = category
    for k in q.kernel():
        if any(C.action[k][s] != s for s in C.simples()):
            witness = next(s for s in C.simples() if C.action[k][s] != s)
            raise ValueError(
                f"kernel element {k} acts nontrivially "
                f"(moves {C.names[witness]}); pushforward undefined")
    target = q.target
    preimage = {}
    for a in C.group.elements():
        preimage.setdefault(q(a), a)
    action = [[C.action[preimage[alpha]][s] for s in C.simples()]
              for alpha in target.elements()]
    return ThinCategory(
        target, [q(g) for g in C.grading], C.unit, C.dual, action,
        C.tensor, C.braid, C.twist, C.bval, C.dval, C.strict, C.names,
    )


class ProductResult:
    """Outcome of a direct or tensor product of several categories."""

    __slots__ = ("mode", "category", "end_unit_rank", "object_counts")

    def __init__(self, mode, category, end_unit_rank, object_counts):
        self.mode = mode
        self.category = category
        self.end_unit_rank = end_unit_rank
        self.object_counts = object_counts


def product_and_tensor(categories, mode: str) -> ProductResult:
    """Families of same-degree simples, combined coordinatewise.

    In tensor mode the morphism spaces multiply and the result is again
    a thin category.  In direct mode the unit's endomorphism algebra is
    a product of copies of the ground field, so for two or more factors
    no thin category is produced — only the object bookkeeping.
    """
    if mode not in ("direct", "tensor"):
        raise ValueError("mode must be 'direct' or 'tensor'")
    categories = list(categories)
    if not categories:
        raise ValueError("need at least one category")
    group = categories[0].group
    if any(C.group != group for C in categories):
        raise ValueError("all factors must share one group")
    k = len(categories)

    families = []
    index = {}
    for alpha in group.elements():
        per_factor = [C.simples_of_degree(alpha) for C in categories]
        for combo in itertools.product(*per_factor):
            index[combo] = len(families)
            families.append((alpha, combo))
    object_counts = {alpha: sum(1 for a, _ in families if a == alpha)
                     for alpha in group.elements()}

    if mode == "direct":
        category = categories[0] if k == 1 else None
        return ProductResult("direct", category, k, object_counts)

    grading = [alpha for alpha, _ in families]
    unit = index[tuple(C.unit for C in categories)]
    dual = [index[tuple(C.dual[s] for C, s in zip(categories, combo))]
            for _, combo in families]
    action = []
    for beta in group.elements():
        action.append([
            index[tuple(C.action[beta][s] for C, s in zip(categories, combo))]
            for _, combo in families])
    tensor = []
    for _, combo in families:
        row = []
        for _, other in families:
            parts = [C.tensor[s][t]
                     for C, s, t in zip(categories, combo, other)]
            row.append(None if any(p is None for p in parts)
                       else index[tuple(parts)])
        tensor.append(row)

    def prod(values):
        acc = values[0]
        for v in values[1:]:
            acc = acc * v
        return acc

    braid = [[prod([C.braid[s][t] for C, s, t in zip(categories, combo, other)])
              for _, other in families] for _, combo in families]
    twist = [prod([C.twist[s] for C, s in zip(categories, combo)])
             for _, combo in families]
    bval = [prod([C.bval[s] for C, s in zip(categories, combo)])
            for _, combo in families]
    dval = [prod([C.dval[s] for C, s in zip(categories, combo)])
            for _, combo in families]
    names = ["(" + ",".join(C.names[s] for C, s in zip(categories, combo)) + ")"
             for _, combo in families]
    strict = all(C.strict for C in categories)
    category = ThinCategory(group, grading, unit, dual, action, tensor,
                            braid, twist, bval, dval, strict, names)
    return ProductResult("tensor", category, 1, object_counts)


def mirror_category(category: ThinCategory) -> ThinCategory:
    """Invert degrees, braiding, and twist; applying twice gives back C."""
    if not category.strict:
        raise ValueError("mirroring is implemented for strict categories")
    C = category
    g = C.group
    grading = [g.inv[C.grading[s]] for s in C.simples()]
    # the new tensor of s (new degree a) and t (new degree b) is
    # (phi_{b^{-1}} s) tensor t, with b^{-1} = old degree of t
    tensor = [[C.tensor[C.action[C.grading[t]][s]][t] for t in C.simples()]
              for s in C.simples()]
    dual = [C.action[grading[s]][C.dual[s]] for s in C.simples()]
    braid = [[C.braid[t][s].inv() for t in C.simples()] for s in C.simples()]
    twist = [C.twist[C.action[grading[s]][s]].inv() for s in C.simples()]
    return ThinCategory(
        g, grading, C.unit, dual, C.action, tensor, braid, twist,
        list(C.bval), list(C.dval), True, C.names,
    )


# -- transfer -------------------------------------------------------------


class TransferObject:
    """Degree in the big group, coset support, and one base simple per coset."""

    __slots__ = ("alpha", "support", "labels")

    def __init__(self, alpha, support, labels):
        self.alpha = alpha
        self.support = tuple(support)
        self.labels = tuple(labels)
        if len(self.support) != len(self.labels):
            raise ValueError("one label per supported coset")

    def label_at(self, i):
        return self.labels[self.support.index(i)]

    def __eq__(self, other):
        if not isinstance(other, TransferObject):
            return NotImplemented
        return (self.alpha, self.support, self.labels) == \
            (other.alpha, other.support, other.labels)

    def __hash__(self):
        return hash((self.alpha, self.support, self.labels))

    def __repr__(self):
        return f"TransferObject({self.alpha}, {self.support}, {self.labels})"


class TransferCategory:
    """A category over a bigger group built from coset-indexed coordinates.

    Objects carry a subset of the cosets on which the conjugated degree
    falls back into the subgroup; morphisms are coordinatewise, so the
    unit object's endomorphism algebra has rank equal to the subgroup
    index and the result is never thin for a proper subgroup.
    """

    __slots__ = ("base", "pi", "embedding", "reps", "coset_of", "coset_count",
                 "_image_to_g")

    def __init__(self, base: ThinCategory, pi: FiniteGroup,
                 embedding: GroupHom, reps):
        if embedding.source != base.group or embedding.target != pi:
            raise ValueError("embedding must map the base group into the big group")
        if len(set(embedding.images)) != base.group.order:
            raise ValueError("embedding must be injective")
        for s, t in itertools.product(base.simples(), repeat=2):
            if base.tensor[s][t] is None:
                raise ValueError(
                    "transfer needs a base with total tensor product "
                    f"({base.names[s]} tensor {base.names[t]} is zero)")
        self.base = base
        self.pi = pi
        self.embedding = embedding
        self._image_to_g = {embedding(g): g for g in base.group.elements()}
        cosets = {}
        for x in pi.elements():
            members = frozenset(pi.times(embedding(g), x)
                                for g in base.group.elements())
            cosets.setdefault(members, []).append(x)
        reps = list(reps)
        if len(reps) != len(cosets):
            raise ValueError(
                f"need {len(cosets)} coset representatives, got {len(reps)}")
        seen = set()
        self.coset_of = [None] * pi.order
        for i, w in enumerate(reps):
            members = next(m for m in cosets if w in m)
            if members in seen:
                raise ValueError(f"representatives {reps} repeat a coset")
            seen.add(members)
            for x in members:
                self.coset_of[x] = i
        self.reps = reps
        self.coset_count = len(reps)

    # -- structure ---------------------------------------------------

    def local_degree(self, i: int, alpha) -> int:
        """The base-group degree seen at coset i, or None outside N(alpha)."""
        conj = self.pi.conj(self.reps[i], alpha)
        g = self._image_to_g.get(conj)
        return g

    def supported_cosets(self, alpha):
        return [i for i in range(self.coset_count)
                if self.local_degree(i, alpha) is not None]

    def unit_object(self) -> TransferObject:
        return TransferObject(self.pi.unit, range(self.coset_count),
                              [self.base.unit] * self.coset_count)

    def validate_object(self, obj: TransferObject):
        allowed = self.supported_cosets(obj.alpha)
        for i, s in zip(obj.support, obj.labels):
            if i not in allowed:
                raise ValueError(f"coset {i} not supported at degree {obj.alpha}")
            want = self.local_degree(i, obj.alpha)
            if self.base.grading[s] != want:
                raise ValueError(
                    f"label {self.base.names[s]} at coset {i} has degree "
                    f"{self.base.grading[s]}, expected {want}")

    def dual(self, obj: TransferObject) -> TransferObject:
        return TransferObject(self.pi.inv[obj.alpha], obj.support,
                              [self.base.dual[s] for s in obj.labels])

    def tensor(self, u: TransferObject, v: TransferObject) -> TransferObject:
        support = [i for i in u.support if i in v.support]
        labels = [self.base.tensor[u.label_at(i)][v.label_at(i)]
                  for i in support]
        return TransferObject(self.pi.times(u.alpha, v.alpha), support, labels)

    def coset_action(self, alpha, i: int) -> int:
        """The left action of the big group on cosets: i goes to i*alpha^{-1}."""
        return self.coset_of[self.pi.times(self.reps[i], self.pi.inv[alpha])]

    def steering_element(self, alpha, j: int) -> int:
        """The subgroup element omega_{alpha(j)} * alpha * omega_j^{-1}."""
        moved = self.coset_action(alpha, j)
        value = self.pi.times(self.pi.times(self.reps[moved], alpha),
                              self.pi.inv[self.reps[j]])
        return self._image_to_g[value]

    def act(self, alpha, v: TransferObject) -> TransferObject:
        new_alpha = self.pi.conj(alpha, v.alpha)
        moved = sorted(
            ((self.coset_action(alpha, j), j) for j in v.support))
        support = [i for i, _ in moved]
        labels = [self.base.action[self.steering_element(alpha, j)][v.label_at(j)]
                  for _, j in moved]
        return TransferObject(new_alpha, support, labels)

    # -- scalar data -------------------------------------------------

    def braid_coords(self, u: TransferObject, v: TransferObject) -> dict:
        return {i: self.base.braid[u.label_at(i)][v.label_at(i)]
                for i in u.support if i in v.support}

    def twist_coords(self, u: TransferObject) -> dict:
        return {i: self.base.twist[u.label_at(i)] for i in u.support}

    def hom_rank(self, u: TransferObject, v: TransferObject) -> int:
        return sum(1 for i in u.support
                   if i in v.support and u.label_at(i) == v.label_at(i))

    def end_unit_rank(self) -> int:
        return self.hom_rank(self.unit_object(), self.unit_object())

    # -- verification ------------------------------------------------

    def enumerate_objects(self, max_support: int):
        for alpha in self.pi.elements():
            allowed = self.supported_cosets(alpha)
            for size in range(min(max_support, len(allowed)) + 1):
                for support in itertools.combinations(allowed, size):
                    pools = [self.base.simples_of_degree(
                        self.local_degree(i, alpha)) for i in support]
                    for labels in itertools.product(*pools):
                        yield TransferObject(alpha, support, labels)

    def axiom_report(self, max_support: int = 2) -> list:
        """Witness list from directly checking the axioms on small supports."""
        bad = []
        pi = self.pi
        objs = list(self.enumerate_objects(max_support))
        for obj in objs:
            self.validate_object(obj)
            star = self.dual(obj)
            self.validate_object(star)
            if star.support != obj.support:
                bad.append(("dual-support", obj))
            if self.dual(star) != obj:
                bad.append(("dual-involution", obj))
            for alpha in pi.elements():
                self.validate_object(self.act(alpha, obj))
            if self.act(pi.unit, obj) != obj:
                bad.append(("unit-action", obj))
        unit = self.unit_object()
        if self.end_unit_rank() != self.coset_count:
            bad.append(("unit-endomorphism-rank", self.end_unit_rank()))
        small = [o for o in objs if len(o.support) <= 1]
        for alpha, beta in itertools.product(pi.elements(), repeat=2):
            for obj in objs:
                if self.act(alpha, self.act(beta, obj)) != \
                        self.act(pi.times(alpha, beta), obj):
                    bad.append(("action-composition", (alpha, beta, obj)))
                    break
        for u, v in itertools.product(objs, repeat=2):
            uv = self.tensor(u, v)
            self.validate_object(uv)
            if uv.support != tuple(i for i in u.support if i in v.support):
                bad.append(("tensor-support", (u, v)))
            if self.tensor(u, unit).alpha != u.alpha or \
                    self.hom_rank(self.tensor(u, unit), u) != len(u.support):
                bad.append(("tensor-unit", u))
            # braiding target: u tensor v maps onto (u acting on v) tensor u
            target = self.tensor(self.act(u.alpha, v), u)
            if uv.support != target.support or any(
                    uv.label_at(i) != target.label_at(i)
                    for i in uv.support):
                bad.append(("braiding-target", (u, v)))
            before = self.braid_coords(u, v)
            for alpha in pi.elements():
                after = self.braid_coords(self.act(alpha, u),
                                          self.act(alpha, v))
                moved = {self.coset_action(alpha, i): val
                         for i, val in before.items()}
                if after != moved:
                    bad.append(("action-braiding", (alpha, u, v)))
            # twist product rule, coordinatewise
            lhs = self.twist_coords(uv)
            cross1 = self.braid_coords(self.act(u.alpha, v), u)
            cross2 = self.braid_coords(u, v)
            tu = self.twist_coords(u)
            tv = self.twist_coords(v)
            for i in uv.support:
                if lhs[i] != cross1[i] * cross2[i] * tu[i] * tv[i]:
                    bad.append(("twist-product", (u, v, i)))
        for u, v, w in itertools.product(small, repeat=3):
            uvw = self.tensor(self.tensor(u, v), w)
            if not uvw.support:
                continue
            av = self.act(u.alpha, v)
            aw = self.act(u.alpha, w)
            vw = self.act(v.alpha, w)
            for i in uvw.support:
                lhs = (self.braid_coords(av, aw)[i]
                       * self.braid_coords(u, w)[i]
                       * self.braid_coords(u, v)[i])
                rhs = (self.braid_coords(u, v)[i]
                       * self.braid_coords(u, vw)[i]
                       * self.braid_coords(v, w)[i])
                if lhs != rhs:
                    bad.append(("yang-baxter", (u, v, w, i)))
        return bad


def standard_coset_representatives(pi: FiniteGroup, embedding: GroupHom):
    """Smallest element of each right coset, with the subgroup itself first."""
    images = {embedding(g) for g in embedding.source.elements()}
    seen = set()
    reps = []
    for x in pi.elements():
        members = frozenset(pi.times(h, x) for h in images)
        if members not in seen:
            seen.add(members)
            reps.append(x)
    reps.sort(key=lambda x: (x not in images, x))
    return reps


def transfer(base: ThinCategory, pi: FiniteGroup, embedding: GroupHom,
             reps=None) -> TransferCategory:
    if reps is None:
        reps = standard_coset_representatives(pi, embedding)
    return TransferCategory(base, pi, embedding, reps)


# -- canonical extension ------------------------------------------------


def _require_pointlike_abelian(category: ThinCategory):
    if not category.group.is_abelian():
        raise ValueError("this construction needs an abelian grading group")
    for alpha in category.group.elements():
        if len(category.simples_of_degree(alpha)) != 1:
            raise ValueError(
                "this construction needs exactly one simple per degree")


def aut0_pointlike(category: ThinCategory, order: int = None):
    """The character group acting on a pointlike abelian category.

    Returns (group, vectors, order): the character group as a
    FiniteGroup, the value-exponent vector of each character, and the
    root-of-unity order the values live in (defaulting to the group
    exponent, which captures every character).
    """
    _require_pointlike_abelian(category)
    g = category.group
    if order is None:
        order = 1
        for a in g.elements():
            o = g.element_order(a)
            order = order * o // math.gcd(order, o)
    chars, vectors = character_group(g, order)
    return chars, vectors, order


def canonical_extension(category: ThinCategory, characters=None):
    """Regrade a pointlike abelian category by a group of its characters.

    Simples of the result are (base simple, character) pairs; the
    character contributes its value at the partner's degree to the
    braiding and its value at the object's own degree to the twist.
    Returns (category, witness list from the scalar axiom suite).
    """
    from .cyclotomic import zeta

    _require_pointlike_abelian(category)
    if not category.strict:
        raise ValueError("canonical extension needs a strict base")
    C = category
    g = C.group
    if characters is None:
        characters = aut0_pointlike(C)
    chars, vectors, order = characters
    # sanity: the character tables must really be homomorphisms on g,
    # and the family itself must multiply the way its group says
    for vec in vectors:
        if len(vec) != g.order:
            raise ValueError("character vector has wrong length")
        for x, y in itertools.product(g.elements(), repeat=2):
            if (vec[x] + vec[y] - vec[g.times(x, y)]) % order:
                raise ValueError(f"character table {vec} is not multiplicative")
    if any(v % order for v in vectors[chars.unit]):
        raise ValueError("the unit character must be trivial")
    for chi, psi in itertools.product(chars.elements(), repeat=2):
        prod = vectors[chars.times(chi, psi)]
        if any((vectors[chi][x] + vectors[psi][x] - prod[x]) % order
               for x in g.elements()):
            raise ValueError("character family does not multiply consistently")

    simple_of_degree = {alpha: C.simples_of_degree(alpha)[0]
                        for alpha in g.elements()}
    pairs = []
    index = {}
    for chi in chars.elements():
        for s in C.simples():
            index[(s, chi)] = len(pairs)
            pairs.append((s, chi))

    def at(s, chi):
        return index[(s, chi)]

    def value(chi, s):
        """chi evaluated on the degree of the base simple s."""
        return zeta(order, vectors[chi][C.grading[s]])

    grading = [chi for _, chi in pairs]
    unit = at(C.unit, chars.unit)
    dual = [at(C.dual[s], chars.inv[chi]) for s, chi in pairs]
    # characters act trivially on objects (and the group is abelian), so
    # the crossed action is the identity permutation for every character
    action = [[index[(s, chi)] for s, chi in pairs] for _ in chars.elements()]
    tensor = [[at(C.tensor[s][t], chars.times(chi, psi))
               for t, psi in pairs] for s, chi in pairs]
    braid = [[value(chi, t) * C.braid[s][t] for t, _ in pairs]
             for s, chi in pairs]
    twist = [value(chi, s) * C.twist[s] for s, chi in pairs]
    bval = [C.bval[s] for s, _ in pairs]
    dval = [C.dval[s] for s, _ in pairs]
    names = [f"({C.names[s]};{chars.names[chi]})" for s, chi in pairs]
    result = ThinCategory(chars, grading, unit, dual, action, tensor, braid,
                          twist, bval, dval, True, names)
    return result, crossed_invariance_suite(result)
