"""Sliced tangle diagrams with group labels and simple colors.

A diagram is a word of elementary slices read bottom to top: crossings,
framing curls (kinks), cups, caps, and coupons.  The strand state at
each height is a list of (direction, group label, simple) triples;
evaluation folds one exact scalar per slice.  Labels live on segments,
so a move rewrites slices locally and the labels above the site are
recomputed by the same propagation that built them in the first place.

Slice encoding (positions are 0-based from the left):
    ("cross", pos, sign)                sign +1: left strand passes over
    ("kink", pos, sign)                 curl of the given writhe sign
    ("cup", pos, orient, g, s)          orient "ud": left leg runs up
    ("cap", pos, orient)                orient names the incoming pair
    ("coupon", pos, m, n, value, outs)  m inputs, n outputs, scalar value

A state entry (d, g, s) describes one strand crossing the level: d is
+1 for upward and -1 for downward travel, g the group label of the arc
read along its own orientation, s the simple coloring it.  A downward
strand contributes the dual of its color to the boundary object.
"""


from .cyclotomic import one


class DiagramError(ValueError):
    pass


UP = 1
DOWN = -1


def _effective(category, entry):
    """The object a strand contributes to the boundary at this level."""
    d, _, s = entry
    return s if d == UP else category.dual[s]


def _act_entry(category, delta, entry):
    d, g, s = entry
    return (d, category.group.conj(delta, g), category.action[delta][s])


def _consumed(sl):
    kind = sl[0]
    if kind == "coupon":
        return sl[2]
    try:
        return {"cross": 2, "kink": 1, "cup": 0, "cap": 2}[kind]
    except KeyError:
        raise DiagramError(f"unknown event {kind!r}") from None


def _produced(sl):
    kind = sl[0]
    if kind == "coupon":
        return sl[3]
    try:
        return {"cross": 2, "kink": 1, "cup": 2, "cap": 0}[kind]
    except KeyError:
        raise DiagramError(f"unknown event {kind!r}") from None


def _transition(category, state, sl, problems=None, index=None):
    """Apply one slice to a state list; return (new state, scalar factor).

    With ``problems`` a list, label mismatches are recorded there and
    recovered from instead of raised, so one pass can report everything
    wrong with a bad labeling.  Structural misfits (a slice that does
    not fit the width, a malformed tuple) always raise.
    """
    C = category
    grp = C.group

    def complain(msg):
        if problems is None:
            raise DiagramError(f"slice {index}: {msg}")
        problems.append((index, msg))

    kind, pos = sl[0], sl[1]
    n = len(state)
    if pos < 0 or pos + _consumed(sl) > n:
        raise DiagramError(
            f"slice {index}: {kind} at position {pos} does not fit a "
            f"state of width {n}")
    out = list(state)
    scalar = one()

    if kind == "cross":
        sign = sl[2]
        a, b = state[pos], state[pos + 1]
        ea, eb = _effective(C, a), _effective(C, b)
        if sign == 1:
            delta = C.grading[ea]
            out[pos], out[pos + 1] = _act_entry(C, delta, b), a
            scalar = C.braid[ea][eb]
        elif sign == -1:
            delta = grp.inv[C.grading[eb]]
            out[pos], out[pos + 1] = b, _act_entry(C, delta, a)
            scalar = C.braid[eb][C.action[delta][ea]].inv()
        else:
            raise DiagramError(f"slice {index}: crossing sign must be +-1")
    elif kind == "kink":
        sign = sl[2]
        if sign not in (1, -1):
            raise DiagramError(f"slice {index}: kink sign must be +-1")
        e = _effective(C, state[pos])
        scalar = C.twist[e] if sign == 1 else C.twist[e].inv()
    elif kind == "cup":
        orient, g, s = sl[2], sl[3], sl[4]
        if not 0 <= s < len(C.grading):
            raise DiagramError(f"slice {index}: no simple numbered {s}")
        if C.grading[s] != g:
            complain(f"cup color {C.names[s]} does not sit in the "
                     f"component of its label {g}")
        if orient == "ud":
            out[pos:pos] = [(UP, g, s), (DOWN, g, s)]
            scalar = C.bval[s]
        elif orient == "du":
            out[pos:pos] = [(DOWN, g, s), (UP, g, s)]
            scalar = C.bval[s] * C.braid[C.dual[s]][s].inv() \
                * C.twist[s].inv()
        else:
            raise DiagramError(f"slice {index}: cup orientation {orient!r}")
    elif kind == "cap":
        orient = sl[2]
        if orient not in ("du", "ud"):
            raise DiagramError(f"slice {index}: cap orientation {orient!r}")
        a, b = state[pos], state[pos + 1]
        want = (DOWN, UP) if orient == "du" else (UP, DOWN)
        if (a[0], b[0]) != want:
            complain(f"cap expects directions {want}, found "
                     f"({a[0]}, {b[0]})")
        if (a[1], a[2]) != (b[1], b[2]):
            complain(f"cap joins mismatched arcs ({a[1]}, {C.names[a[2]]}) "
                     f"and ({b[1]}, {C.names[b[2]]})")
        s = a[2]
        if orient == "du":
            scalar = C.dval[s]
        else:
            scalar = C.twist[s] * C.braid[s][C.dual[s]] * C.dval[s]
        del out[pos:pos + 2]
    elif kind == "coupon":
        m, n_out, value, outs = sl[2], sl[3], sl[4], sl[5]
        if len(outs) != n_out:
            raise DiagramError(f"slice {index}: coupon promises {n_out} "
                               f"outputs but carries {len(outs)}")
        for d, g, s in outs:
            if d not in (UP, DOWN) or not 0 <= s < len(C.grading) \
                    or C.grading[s] != g:
                complain(f"coupon output ({d}, {g}, {s}) is malformed")
        ins = state[pos:pos + m]
        p_in = C.tensor_many([_effective(C, e) for e in ins])
        p_out = C.tensor_many([_effective(C, e) for e in outs])
        if p_in is None or p_out is None or p_in != p_out:
            complain("coupon input and output objects differ or vanish")
        scalar = value
        out[pos:pos + m] = [tuple(e) for e in outs]
    else:
        raise DiagramError(f"slice {index}: unknown event {kind!r}")
    return out, scalar


class SlicedDiagram:
    """The bare slice word: events, positions, orientations, no labels.

    Cup slices drop their label fields and coupons their value and
    outputs; a PiLabeling supplies those when the diagram is dressed.
    """

    __slots__ = ("slices", "n_inputs")

    def __init__(self, slices, n_inputs=0):
        self.slices = tuple(tuple(sl) for sl in slices)
        self.n_inputs = n_inputs
        self.width_profile()

    def width_profile(self):
        """Strand counts at every level; raises when a slice misfits."""
        widths = [self.n_inputs]
        w = self.n_inputs
        for i, sl in enumerate(self.slices):
            if sl[1] < 0 or sl[1] + _consumed(sl) > w:
                raise DiagramError(
                    f"slice {i} ({sl[0]}) does not fit width {w}")
            w += _produced(sl) - _consumed(sl)
            widths.append(w)
        return widths

    def is_closed(self):
        return self.n_inputs == 0 and self.width_profile()[-1] == 0

    def __eq__(self, other):
        return isinstance(other, SlicedDiagram) and \
            self.slices == other.slices and self.n_inputs == other.n_inputs

    def __repr__(self):
        return f"SlicedDiagram({list(self.slices)}, {self.n_inputs})"


class PiLabeling:
    """Label data to dress a SlicedDiagram: boundary triples for the
    inputs, (label, color) per cup slice, (value, outputs) per coupon."""

    __slots__ = ("inputs", "cups", "coupons")

    def __init__(self, inputs=(), cups=None, coupons=None):
        self.inputs = tuple(tuple(e) for e in inputs)
        self.cups = dict(cups or {})
        self.coupons = dict(coupons or {})

    def __eq__(self, other):
        return isinstance(other, PiLabeling) and \
            self.inputs == other.inputs and self.cups == other.cups and \
            self.coupons == other.coupons

    def __repr__(self):
        return (f"PiLabeling({list(self.inputs)}, {self.cups}, "
                f"{self.coupons})")


def merged_slices(diagram, labeling):
    """Zip a bare diagram with a labeling into full slice tuples."""
    merged = []
    for i, sl in enumerate(diagram.slices):
        if sl[0] == "cup":
            if i not in labeling.cups:
                raise DiagramError(f"no label for the cup at slice {i}")
            g, s = labeling.cups[i]
            merged.append(("cup", sl[1], sl[2], g, s))
        elif sl[0] == "coupon":
            if i not in labeling.coupons:
                raise DiagramError(f"no filling for the coupon at slice {i}")
            value, outs = labeling.coupons[i]
            merged.append(("coupon", sl[1], sl[2], sl[3], value,
                           tuple(tuple(e) for e in outs)))
        else:
            merged.append(sl)
    return merged


class ColoredPiTangle:
    """A sliced diagram with labels propagated through every level.

    ``levels[k]`` is the strand state just below slice k, so levels[0]
    is the source boundary and levels[-1] the target.  Construction
    checks every slice; a label clash (a cap closing mismatched arcs, a
    coupon between unequal objects) raises DiagramError.
    """

    __slots__ = ("category", "slices", "levels", "slice_scalars")

    def __init__(self, category, input_state, slices):
        if not category.strict:
            raise DiagramError("tangle evaluation needs a strict category")
        state = []
        for entry in input_state:
            d, g, s = entry
            if d not in (UP, DOWN):
                raise DiagramError(f"strand direction {d!r}")
            if not 0 <= s < len(category.grading) \
                    or category.grading[s] != g:
                raise DiagramError(
                    f"input color {s} is not a simple labeled {g}")
            state.append((d, g, s))
        self.category = category
        self.slices = tuple(tuple(sl) for sl in slices)
        levels = [tuple(state)]
        scalars = []
        for i, sl in enumerate(self.slices):
            state, scalar = _transition(category, state, sl, index=i)
            levels.append(tuple(state))
            scalars.append(scalar)
        self.levels = tuple(levels)
        self.slice_scalars = tuple(scalars)

    def source(self):
        return self.levels[0]

    def target(self):
        return self.levels[-1]

    def is_closed(self):
        return not self.levels[0] and not self.levels[-1]

    def diagram(self):
        """Forget the labels, keeping the underlying sliced diagram."""
        stripped = []
        for sl in self.slices:
            if sl[0] == "cup":
                stripped.append(sl[:3])
            elif sl[0] == "coupon":
                stripped.append(sl[:4])
            else:
                stripped.append(sl)
        return SlicedDiagram(stripped, len(self.levels[0]))

    def labeling(self):
        """The label data, sufficient to redress ``diagram()``."""
        cups = {}
        coupons = {}
        for i, sl in enumerate(self.slices):
            if sl[0] == "cup":
                cups[i] = (sl[3], sl[4])
            elif sl[0] == "coupon":
                coupons[i] = (sl[4], sl[5])
        return PiLabeling(self.levels[0], cups, coupons)


def assemble(category, diagram, labeling):
    """Dress a bare diagram with a labeling and propagate strictly."""
    return ColoredPiTangle(category, labeling.inputs,
                           merged_slices(diagram, labeling))


def evaluate_F(tangle):
    """The scalar of the tangle: the product of all slice weights.

    For a closed diagram this is the isotopy invariant itself; for an
    open one it is the coefficient of the canonical morphism between
    the boundary objects.  The empty diagram gives 1.
    """
    total = one()
    for x in tangle.slice_scalars:
        total = total * x
    return total


def validate_labeling(category, input_state, slices):
    """Check a labeled diagram without giving up at the first problem.

    Label clashes are collected as (slice index, message) pairs instead
    of raised.  For a clean diagram the report also carries the circle
    component count, their label holonomies ("longitudes"), and their
    writhes, keyed by component index.
    """
    problems = []
    state = list(input_state)
    for i, sl in enumerate(slices):
        state, _ = _transition(category, state, sl, problems=problems,
                               index=i)
    report = {"problems": problems}
    if not problems:
        tangle = ColoredPiTangle(category, input_state, slices)
        comps = component_data(tangle)
        report["components"] = len(comps)
        report["longitudes"] = {i: c["longitude"]
                                for i, c in enumerate(comps) if c["circle"]}
        report["writhes"] = {i: c["writhe"]
                             for i, c in enumerate(comps) if c["circle"]}
    return report


# -- walking the strands --------------------------------------------------


def _forward_pos(sl, p):
    """Where the strand at position p below the slice emerges above it,
    or None when it ends inside (cap legs, coupon inputs)."""
    kind, pos = sl[0], sl[1]
    if kind == "cross":
        if p == pos:
            return pos + 1
        if p == pos + 1:
            return pos
        return p
    if kind == "kink":
        return p
    if kind == "cup":
        return p + 2 if p >= pos else p
    if kind == "cap":
        if p in (pos, pos + 1):
            return None
        return p - 2 if p > pos + 1 else p
    if kind == "coupon":
        m, n = sl[2], sl[3]
        if pos <= p < pos + m:
            return None
        return p + n - m if p >= pos + m else p
    raise DiagramError(f"unknown event {kind!r}")


def _backward_pos(sl, p):
    """Which position below the slice feeds position p above it, or
    None when the strand is born inside (cup legs, coupon outputs)."""
    kind, pos = sl[0], sl[1]
    if kind == "cross":
        if p == pos:
            return pos + 1
        if p == pos + 1:
            return pos
        return p
    if kind == "kink":
        return p
    if kind == "cup":
        if p in (pos, pos + 1):
            return None
        return p - 2 if p > pos + 1 else p
    if kind == "cap":
        return p + 2 if p >= pos else p
    if kind == "coupon":
        m, n = sl[2], sl[3]
        if pos <= p < pos + n:
            return None
        return p + m - n if p >= pos + n else p
    raise DiagramError(f"unknown event {kind!r}")


def _passage_record(tangle, k, below_pos):
    """What the walker picks up passing straight through slice k with
    its strand at below_pos: an under-pass or kink record, else None."""
    sl = tangle.slices[k]
    if sl[0] == "kink":
        if below_pos != sl[1]:
            return None
        g = tangle.levels[k][sl[1]][1]
        return ("kink", k, g, sl[2])
    if sl[0] != "cross":
        return None
    pos, sign = sl[1], sl[2]
    under = pos + 1 if sign == 1 else pos
    if below_pos != under:
        return None
    over = pos if under == pos + 1 else pos + 1
    d_over, g_over, _ = tangle.levels[k][over]
    d_under = tangle.levels[k][under][0]
    return ("under", k, g_over, sign * d_over * d_under, over)


def _step(tangle, slot):
    """Advance one segment along the arc orientation.

    Returns (next slot, passage record, end reason); exactly one of
    the slot and the reason is None.
    """
    k, p = slot
    d = tangle.levels[k][p][0]
    if d == UP:
        if k == len(tangle.slices):
            return None, None, "top"
        sl = tangle.slices[k]
        if sl[0] == "cap" and p in (sl[1], sl[1] + 1):
            return (k, sl[1] + 1 if p == sl[1] else sl[1]), None, None
        if sl[0] == "coupon" and sl[1] <= p < sl[1] + sl[2]:
            return None, None, "coupon"
        return ((k + 1, _forward_pos(sl, p)),
                _passage_record(tangle, k, p), None)
    if k == 0:
        return None, None, "bottom"
    sl = tangle.slices[k - 1]
    if sl[0] == "cup" and p in (sl[1], sl[1] + 1):
        return (k, sl[1] + 1 if p == sl[1] else sl[1]), None, None
    if sl[0] == "coupon" and sl[1] <= p < sl[1] + sl[3]:
        return None, None, "coupon"
    q = _backward_pos(sl, p)
    return (k - 1, q), _passage_record(tangle, k - 1, q), None


def _step_back(tangle, slot):
    """One segment against the arc orientation, or None at a chain end."""
    k, p = slot
    d = tangle.levels[k][p][0]
    if d == DOWN:
        if k == len(tangle.slices):
            return None
        sl = tangle.slices[k]
        if sl[0] == "cap" and p in (sl[1], sl[1] + 1):
            return (k, sl[1] + 1 if p == sl[1] else sl[1])
        if sl[0] == "coupon" and sl[1] <= p < sl[1] + sl[2]:
            return None
        return (k + 1, _forward_pos(sl, p))
    if k == 0:
        return None
    sl = tangle.slices[k - 1]
    if sl[0] == "cup" and p in (sl[1], sl[1] + 1):
        return (k, sl[1] + 1 if p == sl[1] else sl[1])
    if sl[0] == "coupon" and sl[1] <= p < sl[1] + sl[3]:
        return None
    return (k - 1, _backward_pos(sl, p))


def _above_cup(tangle, slot):
    """The cup slice index when this slot is the upward leg directly
    above a cup, else None."""
    k, p = slot
    if k == 0 or tangle.levels[k][p][0] != UP:
        return None
    below = tangle.slices[k - 1]
    if below[0] == "cup" and p in (below[1], below[1] + 1):
        return k - 1
    return None


def component_data(tangle):
    """Trace every strand component of the diagram.

    Each record holds the ordered segment "slots", a "circle" flag, and
    for circles: "meridian" (the label at the base cup), "longitude"
    (the holonomy collected along the walk: under-passed labels and
    kink labels, signed), "writhe" (self-crossing and kink signs),
    "passes" (every under-crossing as (slice, over position, sign), the
    raw material for linking numbers), and "cups" as (slice index,
    conjugator) pairs -- the color at each cup is the base color moved
    by its conjugator, which is how a circle gets recolored wholesale.
    Components are ordered by lowest slot.
    """
    grp = tangle.category.group
    seen = set()
    comps = []
    for k, level in enumerate(tangle.levels):
        for p in range(len(level)):
            if (k, p) in seen:
                continue
            # rewind to the true start, stopping if we loop (a circle)
            start = (k, p)
            trail = {start}
            while True:
                prev = _step_back(tangle, start)
                if prev is None or prev in trail:
                    break
                trail.add(prev)
                start = prev
            slots = []
            slot = start
            circle = False
            while True:
                slots.append(slot)
                seen.add(slot)
                nxt, _, _ = _step(tangle, slot)
                if nxt is None:
                    break
                if nxt == start:
                    circle = True
                    break
                slot = nxt
            comps.append({"slots": slots, "circle": circle})

    for comp in comps:
        if not comp["circle"]:
            comp["cups"] = []
            comp["meridian"] = None
            comp["longitude"] = None
            comp["writhe"] = None
            comp["passes"] = None
            continue
        slots = comp["slots"]
        base = next((i for i, slot in enumerate(slots)
                     if _above_cup(tangle, slot) is not None), None)
        if base is None:
            raise DiagramError("a circle component has no cup")
        slots = slots[base:] + slots[:base]
        comp["slots"] = slots
        slot_set = set(slots)
        k0, p0 = slots[0]
        comp["meridian"] = tangle.levels[k0][p0][1]
        cups = [(_above_cup(tangle, slots[0]), grp.unit)]
        longitude = grp.unit
        writhe = 0
        conj = grp.unit
        passes = []
        for idx, slot in enumerate(slots):
            if idx > 0:
                cup = _above_cup(tangle, slot)
                if cup is not None:
                    cups.append((cup, conj))
            _, rec, _ = _step(tangle, slot)
            if rec is None:
                continue
            if rec[0] == "kink":
                _, _, g_self, sign = rec
                longitude = grp.times(grp.power(g_self, sign), longitude)
                writhe += sign
            else:
                _, at, g_over, eta, over_pos = rec
                longitude = grp.times(grp.power(g_over, eta), longitude)
                conj = grp.times(grp.power(g_over, eta), conj)
                passes.append((at, over_pos, eta))
                if (at, over_pos) in slot_set:
                    writhe += eta
        comp["cups"] = cups
        comp["longitude"] = longitude
        comp["writhe"] = writhe
        comp["passes"] = passes
    comps.sort(key=lambda c: min(c["slots"]))
    return comps


# -- local moves ----------------------------------------------------------


def _shifted(sl, delta):
    return (sl[0], sl[1] + delta) + tuple(sl[2:])


def apply_reidemeister(tangle, move, site):
    """Rewrite the diagram by one local move and repropagate the labels.

    Moves and their sites:
        "R1+", "R1-"   (level, pos)        insert a canceling kink pair
        "R1-cancel"    (level,)            delete such a pair
        "R2"           (level, pos, sign)  insert a canceling crossing pair
        "R2-cancel"    (level,)            delete such a pair
        "R3"           (level, hand)       slide a strand over a crossing
        "slide"        (level,)            commute two distant slices

    The site must match the expected local pattern exactly, otherwise
    DiagramError.  The rewritten diagram evaluates to the same scalar;
    that is the content of the move, not an assumption of this code.
    """
    slices = list(tangle.slices)

    def window(level, span):
        if not 0 <= level <= len(slices) - span:
            raise DiagramError(f"no room for {move} at level {level}")
        return level

    if move in ("R1+", "R1-"):
        lv, pos = site
        window(lv, 0)
        sign = 1 if move == "R1+" else -1
        slices[lv:lv] = [("kink", pos, sign), ("kink", pos, -sign)]
    elif move == "R1-cancel":
        lv = window(site[0], 2)
        a, b = slices[lv], slices[lv + 1]
        if not (a[0] == b[0] == "kink" and a[1] == b[1] and a[2] == -b[2]):
            raise DiagramError(f"slices {lv},{lv + 1} are not a canceling "
                               "kink pair")
        del slices[lv:lv + 2]
    elif move == "R2":
        lv, pos, sign = site
        window(lv, 0)
        if sign not in (1, -1):
            raise DiagramError("crossing sign must be +-1")
        slices[lv:lv] = [("cross", pos, sign), ("cross", pos, -sign)]
    elif move == "R2-cancel":
        lv = window(site[0], 2)
        a, b = slices[lv], slices[lv + 1]
        if not (a[0] == b[0] == "cross" and a[1] == b[1] and a[2] == -b[2]):
            raise DiagramError(f"slices {lv},{lv + 1} are not a canceling "
                               "crossing pair")
        del slices[lv:lv + 2]
    elif move == "R3":
        lv, hand = site
        window(lv, 3)
        a, b, c = slices[lv:lv + 3]
        if not all(sl[0] == "cross" for sl in (a, b, c)) \
                or not a[2] == b[2] == c[2]:
            raise DiagramError(f"slices {lv}..{lv + 2} are not three "
                               "crossings of one sign")
        sign = a[2]
        if hand == "left":
            p = a[1]
            if b[1] != p + 1 or c[1] != p:
                raise DiagramError("a left slide wants crossing positions "
                                   "p, p+1, p")
            repl = [("cross", p + 1, sign), ("cross", p, sign),
                    ("cross", p + 1, sign)]
        elif hand == "right":
            p = b[1]
            if a[1] != p + 1 or c[1] != p + 1:
                raise DiagramError("a right slide wants crossing positions "
                                   "p+1, p, p+1")
            repl = [("cross", p, sign), ("cross", p + 1, sign),
                    ("cross", p, sign)]
        else:
            raise DiagramError(f"hand must be 'left' or 'right', not "
                               f"{hand!r}")
        slices[lv:lv + 3] = repl
    elif move == "slide":
        lv = window(site[0], 2)
        x, y = slices[lv], slices[lv + 1]
        dx = _produced(x) - _consumed(x)
        dy = _produced(y) - _consumed(y)
        if y[1] > x[1] + _produced(x) - 1 \
                and y[1] - dx > x[1] + _consumed(x) - 1:
            slices[lv:lv + 2] = [_shifted(y, -dx), x]
        elif y[1] + _consumed(y) - 1 < x[1]:
            slices[lv:lv + 2] = [y, _shifted(x, dy)]
        else:
            raise DiagramError(f"slices {lv},{lv + 1} overlap; nothing to "
                               "slide")
    else:
        raise DiagramError(f"unknown move {move!r}")
    return ColoredPiTangle(tangle.category, tangle.levels[0], slices)


# -- closures and component rewrites --------------------------------------


def closure_trace(tangle):
    """Close a one-in one-out tangle into a loop around its right side.

    The endpoints must carry the same upward triple.  For the identity
    strand this computes the categorical dimension of its color.
    """
    if len(tangle.levels[0]) != 1 or len(tangle.levels[-1]) != 1:
        raise DiagramError("closure needs exactly one strand at each end")
    entry = tangle.levels[0][0]
    if tangle.levels[-1][0] != entry:
        raise DiagramError("closure needs equal source and target")
    d, g, s = entry
    if d != UP:
        raise DiagramError("closure expects an upward strand")
    slices = [("cup", 0, "ud", g, s)] + list(tangle.slices) \
        + [("cap", 0, "ud")]
    return ColoredPiTangle(tangle.category, (), slices)


def disjoint_union(left, right):
    """Stack two closed diagrams one after the other."""
    if not left.is_closed() or not right.is_closed():
        raise DiagramError("disjoint union is defined for closed diagrams")
    if left.category is not right.category:
        raise DiagramError("disjoint union needs one common category")
    return ColoredPiTangle(left.category, (),
                           list(left.slices) + list(right.slices))


def recolor_component(tangle, component, color):
    """Rewrite the cups of a circle component for a new base color.

    The color at each cup is the new color moved by the conjugator the
    walk accumulated there, so the rewritten labels propagate the same
    way the old ones did.  An incompatible color (one the loop's
    holonomy does not fix) surfaces as a cap clash in the rebuild.
    """
    comp = component_data(tangle)[component]
    if not comp["circle"]:
        raise DiagramError("only circle components can be recolored")
    C = tangle.category
    slices = list(tangle.slices)
    for idx, conj in comp["cups"]:
        sl = slices[idx]
        s = C.action[conj][color]
        slices[idx] = ("cup", sl[1], sl[2], C.grading[s], s)
    return ColoredPiTangle(tangle.category, tangle.levels[0], slices)


def transform_reverse_dual(tangle, component):
    """Reverse a circle component and dualize its color.

    Every cup and cap of the component flips its orientation word; the
    cups get the inverse label and the dual color.  The evaluation does
    not change -- a property the tests exercise, not an assumption here.
    """
    comp = component_data(tangle)[component]
    if not comp["circle"]:
        raise DiagramError("only circle components can be reversed")
    slot_set = set(comp["slots"])
    C = tangle.category
    flip = {"ud": "du", "du": "ud"}
    slices = []
    for i, sl in enumerate(tangle.slices):
        if sl[0] == "cup" and (i + 1, sl[1]) in slot_set:
            slices.append(("cup", sl[1], flip[sl[2]],
                           C.group.inv[sl[3]], C.dual[sl[4]]))
        elif sl[0] == "cap" and (i, sl[1]) in slot_set:
            slices.append(("cap", sl[1], flip[sl[2]]))
        else:
            slices.append(sl)
    return ColoredPiTangle(tangle.category, tangle.levels[0], slices)


def transform_double(tangle, component, colors):
    """Replace a circle component by two parallel copies.

    The pair of colors must tensor to the component's base color.  Each
    crossing involving the component becomes a block of crossings, each
    kink a kink pair followed by the interchange crossings of the
    twist-product law, each cup and cap a nested pair.  A factorization
    the loop cannot carry (the copies fail to close up) raises
    DiagramError from the rebuild.
    """
    comp = component_data(tangle)[component]
    if not comp["circle"]:
        raise DiagramError("only circle components can be doubled")
    C = tangle.category
    s_left, s_right = colors
    base_cup, _ = comp["cups"][0]
    base_color = tangle.slices[base_cup][4]
    if C.tensor[s_left][s_right] != base_color:
        raise DiagramError(
            f"colors {C.names[s_left]} and {C.names[s_right]} do not "
            f"multiply to the component color {C.names[base_color]}")
    cup_conj = dict(comp["cups"])
    widths = [1] * len(tangle.levels[0])
    slices = []
    for i, sl in enumerate(tangle.slices):
        kind, pos = sl[0], sl[1]
        here = sum(widths[:pos])
        if kind == "cross":
            sign = sl[2]
            w_l, w_r = widths[pos], widths[pos + 1]
            if sign == 1:
                for a in range(w_l - 1, -1, -1):
                    for b in range(w_r):
                        slices.append(("cross", here + a + b, 1))
            else:
                for a in range(w_l):
                    for b in range(w_r - 1, -1, -1):
                        slices.append(("cross", here + a + b, -1))
            widths[pos], widths[pos + 1] = w_r, w_l
        elif kind == "kink":
            sign = sl[2]
            if widths[pos] == 1:
                slices.append(("kink", here, sign))
            else:
                slices.extend([("kink", here, sign),
                               ("kink", here + 1, sign),
                               ("cross", here, sign),
                               ("cross", here, sign)])
        elif kind == "cup":
            orient = sl[2]
            if i in cup_conj:
                act = C.action[cup_conj[i]]
                a_l, a_r = act[s_left], act[s_right]
                g_l, g_r = C.grading[a_l], C.grading[a_r]
                if orient == "ud":
                    slices.extend([("cup", here, "ud", g_l, a_l),
                                   ("cup", here + 1, "ud", g_r, a_r)])
                else:
                    slices.extend([("cup", here, "du", g_r, a_r),
                                   ("cup", here + 1, "du", g_l, a_l)])
                widths[pos:pos] = [2, 2]
            else:
                slices.append(("cup", here, orient, sl[3], sl[4]))
                widths[pos:pos] = [1, 1]
        elif kind == "cap":
            orient = sl[2]
            if widths[pos] == 2:
                slices.extend([("cap", here + 1, orient),
                               ("cap", here, orient)])
            else:
                slices.append(("cap", here, orient))
            del widths[pos:pos + 2]
        else:
            m, n = sl[2], sl[3]
            if any(widths[pos + r] != 1 for r in range(m)):
                raise DiagramError(
                    "cannot push a doubled strand through a coupon")
            slices.append(("coupon", here, m, n, sl[4], sl[5]))
            widths[pos:pos + m] = [1] * n
    return ColoredPiTangle(tangle.category, tangle.levels[0], slices)
