"""File formats: TOML for category and tuple data, JSON for the rest.

Scalars travel as exact expressions like ``1/2``, ``z8^3`` or
``2*z12 - z12^3``: a sum of rational multiples of roots of unity.  The
writers are canonical — fixed key order, fixed spacing — so parsing a
file and saving it again reproduces it byte for byte; that property is
what makes reports diffable.
"""

import json
import re
from fractions import Fraction

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - 3.10 fallback
    import tomli as tomllib

from .categories import ThinCategory
from .cocycles import RibbonTuple
from .cyclotomic import CycloNum, zero, zeta
from .groups import FiniteGroup, parse_group_spec, quaternion8, symmetric3
from .hopf import HopfAlgebraData


class FormatError(ValueError):
    """A file that parses but does not describe what it claims to."""


# -- scalars --------------------------------------------------------------


def render_scalar(x):
    """The canonical string of an exact cyclotomic value."""
    if x.is_zero():
        return "0"
    terms = []
    for k, q in enumerate(x.coeffs):
        if not q:
            continue
        if k == 0:
            terms.append(str(q))
            continue
        root = f"z{x.order}" + (f"^{k}" if k != 1 else "")
        if q == 1:
            terms.append(root)
        elif q == -1:
            terms.append("-" + root)
        else:
            terms.append(f"{q}*{root}")
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


_TERM = re.compile(r"^([+-]?)(\d+(?:/\d+)?)?(?:\*?z(\d+)(?:\^(\d+))?)?$")


def parse_scalar(text):
    """Read a sum of rational multiples of roots of unity."""
    if not isinstance(text, str):
        raise FormatError(f"expected a scalar string, got {text!r}")
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise FormatError("empty scalar")
    pieces = re.findall(r"[+-]?[^+-]+", cleaned)
    if "".join(pieces) != cleaned:
        raise FormatError(f"cannot read the scalar {text!r}")
    total = zero()
    for piece in pieces:
        match = _TERM.match(piece)
        if not match or (match.group(2) is None and match.group(3) is None):
            raise FormatError(f"bad term {piece!r} in scalar {text!r}")
        sign, rational, order, power = match.groups()
        try:
            q = Fraction(rational) if rational is not None else Fraction(1)
        except ZeroDivisionError:
            raise FormatError(f"zero denominator in term {piece!r}") from None
        if sign == "-":
            q = -q
        if order is None:
            value = CycloNum.from_rational(q)
        else:
            k = int(power) if power is not None else 1
            value = zeta(int(order), k) * q
        total = total + value
    return total


def _render_table(value, depth):
    if depth == 0:
        return render_scalar(value)
    return [_render_table(v, depth - 1) for v in value]


def _parse_table(value, depth):
    if depth == 0:
        return parse_scalar(value)
    if not isinstance(value, list):
        raise FormatError(f"expected a nested list, got {value!r}")
    return [_parse_table(v, depth - 1) for v in value]


# -- groups ---------------------------------------------------------------

_NAMED_GROUPS = {"s3": symmetric3, "q8": quaternion8}


def group_from_string(text):
    """A group from ``cyclic:<n>``, ``product:<n1>x<n2>...``, s3, or q8."""
    if text in _NAMED_GROUPS:
        return _NAMED_GROUPS[text]()
    return parse_group_spec(text)


def group_to_data(group):
    if group.spec is not None:
        return {"spec": group.spec}
    data = {"table": [list(row) for row in group.mul]}
    if group.names is not None:
        data["names"] = list(group.names)
    return data


def group_from_data(data):
    if "spec" in data:
        return group_from_string(data["spec"])
    if "table" not in data:
        raise FormatError("a group needs either a spec or a table")
    return FiniteGroup(data["table"], names=data.get("names"))


# -- a small canonical TOML writer ---------------------------------------


def _toml_scalar(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        escaped = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    raise FormatError(f"cannot write {value!r} to TOML")


def _toml_inline(value):
    if isinstance(value, list):
        return "[" + ", ".join(_toml_inline(v) for v in value) + "]"
    return _toml_scalar(value)


def _toml_assignment(key, value):
    if isinstance(value, list) and value and isinstance(value[0], list):
        lines = [f"{key} = ["]
        for row in value:
            lines.append("    " + _toml_inline(row) + ",")
        lines.append("]")
        return "\n".join(lines)
    return f"{key} = {_toml_inline(value)}"


def render_toml(sections):
    """Write (header, mapping) pairs; a None header means top level."""
    chunks = []
    for header, mapping in sections:
        lines = [] if header is None else [f"[{header}]"]
        for key, value in mapping.items():
            lines.append(_toml_assignment(key, value))
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + "\n"


# -- categories -----------------------------------------------------------


def save_category(category, name):
    tensor = [[-1 if v is None else v for v in row] for row in category.tensor]
    sections = [
        (None, {"kind": "category", "name": name}),
        ("group", group_to_data(category.group)),
        ("simples", {
            "names": list(category.names),
            "grading": list(category.grading),
            "unit": category.unit,
            "dual": list(category.dual),
            "strict": category.strict,
        }),
        ("tables", {
            "action": [list(row) for row in category.action],
            "tensor": tensor,
            "braid": _render_table(category.braid, 2),
            "twist": _render_table(category.twist, 1),
            "bval": _render_table(category.bval, 1),
            "dval": _render_table(category.dval, 1),
        }),
    ]
    return render_toml(sections)


def category_from_data(data):
    for section in ("group", "simples", "tables"):
        if section not in data:
            raise FormatError(f"category file lacks the [{section}] section")
    group = group_from_data(data["group"])
    simples = data["simples"]
    tables = data["tables"]
    tensor = [[None if v == -1 else v for v in row]
              for row in tables["tensor"]]
    return ThinCategory(
        group,
        simples["grading"],
        simples["unit"],
        simples["dual"],
        tables["action"],
        tensor,
        _parse_table(tables["braid"], 2),
        _parse_table(tables["twist"], 1),
        _parse_table(tables["bval"], 1),
        _parse_table(tables["dval"], 1),
        simples["strict"],
        names=simples.get("names"),
    )


# -- ribbon tuples --------------------------------------------------------


def save_tuple(t, name):
    tables = {
        "a": _render_table(t.a, 3),
        "b": _render_table(t.b, 1),
        "c": _render_table(t.c, 2),
    }
    if t.theta is not None:
        tables["theta"] = _render_table(t.theta, 1)
    sections = [
        (None, {"kind": "tuple", "name": name}),
        ("group", group_to_data(t.group)),
        ("tables", tables),
    ]
    return render_toml(sections)


def tuple_from_data(data):
    for section in ("group", "tables"):
        if section not in data:
            raise FormatError(f"tuple file lacks the [{section}] section")
    group = group_from_data(data["group"])
    tables = data["tables"]
    theta = tables.get("theta")
    return RibbonTuple(
        group,
        _parse_table(tables["a"], 3),
        _parse_table(tables["b"], 1),
        _parse_table(tables["c"], 2),
        None if theta is None else _parse_table(theta, 1),
    )


# -- diagrams and surgeries ----------------------------------------------


def _slice_to_json(sl):
    if sl[0] == "coupon":
        kind, pos, m, n, value, outs = sl
        return [kind, pos, m, n, render_scalar(value),
                [list(e) for e in outs]]
    return list(sl)


def _slice_from_json(raw):
    if not isinstance(raw, list) or not raw or not isinstance(raw[0], str):
        raise FormatError(f"malformed slice {raw!r}")
    if raw[0] == "coupon":
        if len(raw) != 6:
            raise FormatError(f"coupon slice needs 6 fields, got {raw!r}")
        kind, pos, m, n, value, outs = raw
        return (kind, pos, m, n, parse_scalar(value),
                tuple(tuple(e) for e in outs))
    return tuple(raw)


def _dump_json(data):
    return json.dumps(data, indent=2) + "\n"


def save_diagram(name, inputs, slices):
    return _dump_json({
        "kind": "diagram",
        "name": name,
        "inputs": [list(e) for e in inputs],
        "slices": [_slice_to_json(sl) for sl in slices],
    })


def diagram_from_data(data):
    inputs = tuple(tuple(e) for e in data.get("inputs", []))
    slices = [_slice_from_json(raw) for raw in data.get("slices", [])]
    return inputs, slices


def save_surgery(name, slices, omega=()):
    return _dump_json({
        "kind": "surgery",
        "name": name,
        "slices": [_slice_to_json(sl) for sl in slices],
        "omega": sorted(omega),
    })


def surgery_from_data(data):
    slices = [_slice_from_json(raw) for raw in data.get("slices", [])]
    return slices, tuple(data.get("omega", []))


# -- Hopf data ------------------------------------------------------------


def _sparse_vector(vec):
    return [[i, render_scalar(c)] for i, c in enumerate(vec)
            if not c.is_zero()]


def _sparse_matrix(matrix):
    return [[i, j, render_scalar(c)]
            for i, row in enumerate(matrix)
            for j, c in enumerate(row) if not c.is_zero()]


def _vector_from_sparse(entries, n):
    out = [zero() for _ in range(n)]
    for i, text in entries:
        out[i] = parse_scalar(text)
    return out


def _matrix_from_sparse(entries, rows, cols):
    out = [[zero() for _ in range(cols)] for _ in range(rows)]
    for i, j, text in entries:
        out[i][j] = parse_scalar(text)
    return out


def save_hopf(hopf, name, r=None, ribbon=None):
    n = hopf.dimension
    mult = [[i, j, k, render_scalar(c)]
            for i in range(n) for j in range(n)
            for k, c in enumerate(hopf.mult[i][j]) if not c.is_zero()]
    comult = [[i, p, q, render_scalar(c)]
              for i in range(n)
              for p, row in enumerate(hopf.comult[i])
              for q, c in enumerate(row) if not c.is_zero()]
    antipode = [[i, k, render_scalar(c)]
                for i in range(n)
                for k, c in enumerate(hopf.antipode[i]) if not c.is_zero()]
    data = {
        "kind": "hopf",
        "name": name,
        "dimension": n,
        "mult": mult,
        "unit": _sparse_vector(hopf.unit),
        "comult": comult,
        "counit": _sparse_vector(hopf.counit),
        "antipode": antipode,
    }
    if r is not None:
        data["r"] = _sparse_matrix(r)
    if ribbon is not None:
        data["ribbon"] = _sparse_vector(ribbon)
    return _dump_json(data)


def hopf_from_data(data):
    """Returns (HopfAlgebraData, r-or-None, ribbon-or-None)."""
    if "dimension" not in data:
        raise FormatError("hopf file lacks the dimension")
    n = data["dimension"]
    mult = [[[zero() for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i, j, k, text in data.get("mult", []):
        mult[i][j][k] = parse_scalar(text)
    comult = [[[zero() for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i, p, q, text in data.get("comult", []):
        comult[i][p][q] = parse_scalar(text)
    antipode = [[zero() for _ in range(n)] for _ in range(n)]
    for i, k, text in data.get("antipode", []):
        antipode[i][k] = parse_scalar(text)
    hopf = HopfAlgebraData(
        mult,
        _vector_from_sparse(data.get("unit", []), n),
        comult,
        _vector_from_sparse(data.get("counit", []), n),
        antipode,
    )
    r = None
    if "r" in data:
        r = _matrix_from_sparse(data["r"], n, n)
    ribbon = None
    if "ribbon" in data:
        ribbon = _vector_from_sparse(data["ribbon"], n)
    return hopf, r, ribbon


# -- file-level dispatch --------------------------------------------------


def parse_file(path):
    """Raw parse: (kind, name, data dict).  Parse errors keep line info."""
    with open(path, "rb") as handle:
        raw = handle.read()
    if path.endswith(".toml"):
        data = tomllib.loads(raw.decode("utf-8"))
    else:
        data = json.loads(raw.decode("utf-8"))
    if not isinstance(data, dict) or "kind" not in data:
        raise FormatError(f"{path}: no kind field")
    return data["kind"], data.get("name", ""), data


_LOADERS = {
    "category": category_from_data,
    "tuple": tuple_from_data,
    "diagram": diagram_from_data,
    "surgery": surgery_from_data,
    "hopf": hopf_from_data,
}


def load_file(path, expect=None):
    """Parse and build: (kind, name, object).

    ``expect`` names the kind the caller needs; a mismatch is an error
    that mentions both.
    """
    kind, name, data = parse_file(path)
    if kind not in _LOADERS:
        raise FormatError(f"{path}: unknown kind {kind!r}")
    if expect is not None and kind != expect:
        raise FormatError(f"{path}: expected a {expect} file, found {kind}")
    return kind, name, _LOADERS[kind](data)


def save_file(kind, name, payload):
    """Render any loaded payload back to its canonical text."""
    if kind == "category":
        return save_category(payload, name)
    if kind == "tuple":
        return save_tuple(payload, name)
    if kind == "diagram":
        inputs, slices = payload
        return save_diagram(name, inputs, slices)
    if kind == "surgery":
        slices, omega = payload
        return save_surgery(name, slices, omega)
    if kind == "hopf":
        hopf, r, ribbon = payload
        return save_hopf(hopf, name, r, ribbon)
    raise FormatError(f"unknown kind {kind!r}")
