"""Finite groups as validated multiplication tables, plus homomorphisms.

A FiniteGroup is nothing but a Cayley table that has been checked to satisfy
the group laws.  Elements are their indices (0-based).  There is no
presentation solving anywhere; free groups appear only as the sources of
FreeHom, which evaluates words of named generators.
"""

from __future__ import annotations

import itertools


class GroupValidationError(ValueError):
    """A multiplication table failed the group laws."""


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    __slots__ = ("order", "mul", "inv", "unit", "names", "spec")

    def __init__(self, table, names=None, spec=None):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise GroupValidationError("empty multiplication table")
        for i, row in enumerate(table):
            if len(row) != n:
                raise GroupValidationError(f"row {i} has length {len(row)} != {n}")
            for j, v in enumerate(row):
                if not (0 <= v < n):
                    raise GroupValidationError(f"entry ({i},{j}) = {v} out of range")
        unit = None
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                unit = e
                break
        if unit is None:
            raise GroupValidationError("no two-sided unit element")
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == unit and table[b][a] == unit:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupValidationError(f"element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise GroupValidationError(
                            f"associativity fails at triple ({a},{b},{c})"
                        )
        # Conjugation by any element permutes the group; with the laws above
        # this is automatic, but it is cheap to state and the downstream
        # modules rely on it.
        for d in range(n):
            image = {table[table[d][a]][inv[d]] for a in range(n)}
            assert len(image) == n
        self.order = n
        self.mul = table
        self.inv = tuple(inv)
        self.unit = unit
        self.names = tuple(names) if names is not None else tuple(
            str(i) for i in range(n)
        )
        self.spec = spec

    # -- basic operations -------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def product_of(self, seq) -> int:
        acc = self.unit
        for x in seq:
            acc = self.mul[acc][x]
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        acc = self.unit
        for _ in range(k):
            acc = self.mul[acc][a]
        return acc

    def conj(self, d: int, a: int) -> int:
        """d a d^-1."""
        return self.mul[self.mul[d][a]][self.inv[d]]

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        return self.mul[self.mul[a][b]][self.mul[self.inv[a]][self.inv[b]]]

    def element_order(self, a: int) -> int:
        k, acc = 1, a
        while acc != self.unit:
            acc = self.mul[acc][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(
            self.mul[a][b] == self.mul[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.mul == other.mul

    def __hash__(self):
        return hash(self.mul)

    def __repr__(self):
        label = self.spec or f"order-{self.order} table"
        return f"FiniteGroup({label})"

    # -- structure helpers -------------------------------------------------

    def generating_words(self):
        """A generating set and, per element, a word in those generators.

        Returns (gens, words) where words[x] is a list of (gen_index, +-1)
        pairs whose ordered product is x.  Greedy: repeatedly adjoin the
        smallest element outside the current span.
        """
        gens: list[int] = []
        words: dict[int, list[tuple[int, int]]] = {self.unit: []}
        while len(words) < self.order:
            g = min(x for x in range(self.order) if x not in words)
            gens.append(g)
            frontier = list(words)
            while frontier:
                next_frontier = []
                for x in frontier:
                    for gi, elem in enumerate(gens):
                        for sign, e in ((1, elem), (-1, self.inv[elem])):
                            y = self.mul[x][e]
                            if y not in words:
                                words[y] = words[x] + [(gi, sign)]
                                next_frontier.append(y)
                frontier = next_frontier
        return gens, words

    def subgroup_closure(self, seed) -> frozenset[int]:
        out = {self.unit}
        frontier = set(seed) - out
        out |= frontier
        while frontier:
            new = set()
            for x in out:
                for y in frontier:
                    for z in (self.mul[x][y], self.mul[y][x], self.inv[y]):
                        if z not in out and z not in new:
                            new.add(z)
            out |= new
            frontier = new
        return frozenset(out)


def cyclic(n: int) -> FiniteGroup:
    """Z/n with i*j = (i+j) mod n."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, spec=f"cyclic:{n}")


def product_of_cyclics(factors) -> FiniteGroup:
    """Direct product Z/n1 x Z/n2 x ... with tuple addition."""
    factors = list(factors)
    if not factors or any(n < 1 for n in factors):
        raise ValueError(f"bad factor list {factors}")
    elems = list(itertools.product(*(range(n) for n in factors)))
    index = {e: i for i, e in enumerate(elems)}
    table = [
        [
            index[tuple((a + b) % n for a, b, n in zip(ea, eb, factors))]
            for eb in elems
        ]
        for ea in elems
    ]
    names = ["(" + ",".join(map(str, e)) + ")" for e in elems]
    return FiniteGroup(table, names=names, spec="product:" + "x".join(map(str, factors)))


def parse_group_spec(spec) -> FiniteGroup:
    """Build a group from `cyclic:<n>`, `product:<n1>x<n2>...`, or a table."""
    if isinstance(spec, str):
        kind, _, rest = spec.partition(":")
        if kind == "cyclic":
            return cyclic(int(rest))
        if kind == "product":
            return product_of_cyclics(int(p) for p in rest.split("x"))
        raise GroupValidationError(f"unknown group spec {spec!r}")
    return FiniteGroup(spec)


def symmetric3() -> FiniteGroup:
    """The symmetric group on 3 letters, elements in lexicographic order."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # composition: (p*q)(x) = p(q(x))
    table = [
        [index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms
    ]
    names = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, names=names)


def quaternion8() -> FiniteGroup:
    """The quaternion group {1,-1,i,-i,j,-j,k,-k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # represent x as (sign, axis) with axis in {1,i,j,k} = 0..3
    def decode(t):
        return (1 - 2 * (t % 2), t // 2)

    def encode(sign, axis):
        return axis * 2 + (0 if sign == 1 else 1)

    axis_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }
    table = []
    for a in range(8):
        sa, xa = decode(a)
        row = []
        for b in range(8):
            sb, xb = decode(b)
            sm, xm = axis_mul[(xa, xb)]
            row.append(encode(sa * sb * sm, xm))
        table.append(row)
    return FiniteGroup(table, names=names)


class GroupHom:
    """A homomorphism between finite groups, stored as a full element map."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images):
        images = tuple(images)
        if len(images) != source.order:
            raise GroupValidationError(
                f"need {source.order} images, got {len(images)}"
            )
        for a in range(source.order):
            for b in range(source.order):
                if target.mul[images[a]][images[b]] != images[source.mul[a][b]]:
                    raise GroupValidationError(
                        f"not a homomorphism: fails at pair ({a},{b})"
                    )
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, a: int) -> int:
        return self.images[a]

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def kernel(self) -> frozenset[int]:
        return frozenset(
            a for a in self.source.elements() if self.images[a] == self.target.unit
        )

    @classmethod
    def identity(cls, group: FiniteGroup) -> "GroupHom":
        return cls(group, group, range(group.order))


class FreeHom:
    """A homomorphism from a free group on named generators to a FiniteGroup."""

    __slots__ = ("gen_names", "target", "images")

    def __init__(self, gen_names, target: FiniteGroup, images):
        self.gen_names = tuple(gen_names)
        if len(set(self.gen_names)) != len(self.gen_names):
            raise ValueError("duplicate generator names")
        self.target = target
        images = dict(images)
        missing = set(self.gen_names) - set(images)
        if missing:
            raise ValueError(f"no image for generators {sorted(missing)}")
        self.images = {name: images[name] for name in self.gen_names}

    def evaluate_word(self, word) -> int:
        """Product of generator images along a word.

        The word is either a whitespace-separated string of generator names
        (prefix `-` for the inverse) or an iterable of (name, exponent)
        pairs.
        """
        if isinstance(word, str):
            tokens = []
            for tok in word.split():
                if tok.startswith("-"):
                    tokens.append((tok[1:], -1))
                else:
                    tokens.append((tok, 1))
            word = tokens
        acc = self.target.unit
        for name, exp in word:
            if name not in self.images:
                raise KeyError(f"unknown generator {name!r}")
            acc = self.target.mul[acc][self.target.power(self.images[name], exp)]
        return acc


# -- characters of abelian groups ----------------------------------------


def all_characters(group: FiniteGroup, order: int) -> list[tuple[int, ...]]:
    """All homomorphisms group -> mu_order, as exponent vectors.

    The k-th entry of a vector is e with character(k) = zeta_order^e.  The
    group need not come with factor structure; generators are found
    greedily.  Result is sorted, trivial character first.
    """
    if not group.is_abelian():
        raise ValueError("characters are enumerated for abelian groups only")
    gens, words = group.generating_words()
    options = []
    for g in gens:
        m = group.element_order(g)
        allowed = sorted(e for e in range(order) if (e * m) % order == 0)
        options.append(allowed)
    seen = set()
    out = []
    for choice in itertools.product(*options):
        vec = [0] * group.order
        for x in range(group.order):
            e = 0
            for gi, sign in words[x]:
                e += sign * choice[gi]
            vec[x] = e % order
        vec = tuple(vec)
        if vec in seen:
            continue
        ok = all(
            (vec[a] + vec[b]) % order == vec[group.mul[a][b]]
            for a in range(group.order)
            for b in range(group.order)
        )
        if ok:
            seen.add(vec)
            out.append(vec)
    return sorted(out)


def character_group(group: FiniteGroup, order: int):
    """The characters of an abelian group as a FiniteGroup (pointwise product).

    Returns (char_group, vectors) with vectors[i] the exponent table of
    element i.
    """
    vectors = all_characters(group, order)
    index = {v: i for i, v in enumerate(vectors)}
    table = [
        [
            index[tuple((x + y) % order for x, y in zip(u, v))]
            for v in vectors
        ]
        for u in vectors
    ]
    names = ["chi" + str(i) for i in range(len(vectors))]
    return FiniteGroup(table, names=names), vectors


def abelianization(group: FiniteGroup):
    """The quotient by the commutator subgroup, with the projection map.

    Returns (quotient, GroupHom group -> quotient).
    """
    derived = group.subgroup_closure(
        group.commutator(a, b)
        for a in group.elements()
        for b in group.elements()
    )
    cosets: list[frozenset[int]] = []
    coset_of = [None] * group.order
    for a in group.elements():
        if coset_of[a] is None:
            coset = frozenset(group.mul[a][h] for h in derived)
            idx = len(cosets)
            cosets.append(coset)
            for x in coset:
                coset_of[x] = idx
    reps = [min(c) for c in cosets]
    table = [
        [coset_of[group.mul[reps[i]][reps[j]]] for j in range(len(cosets))]
        for i in range(len(cosets))
    ]
    quotient = FiniteGroup(table)
    return quotient, GroupHom(group, quotient, coset_of)
