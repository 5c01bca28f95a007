"""Command-line front end: loaders, verifiers, invariants, reports.

Every subcommand produces a RunReport carrying exact result values,
pass/fail check tables, and the seed it ran under; the process exits 0
exactly when every check passed.  Reports serialize to JSON and can be
reloaded for diffing (the timing field is ignored by comparisons).
"""

import argparse
import json
import random
import sys
import time

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - 3.10 fallback
    import tomli as tomllib

from . import corpus, formats
from .categories import (
    canonical_color,
    crossed_invariance_suite,
    verlinde_algebra,
)
from .cocycles import verify_tuple
from .constructions import canonical_extension, transfer
from .cyclotomic import SquareRootUnavailable
from .diagrams import ColoredPiTangle, DiagramError, evaluate_F
from .groups import GroupHom, GroupValidationError
from .hopf import (
    build_A_pi,
    build_R_theta_from_ribbon,
    group_likes,
    hopf_quasitriangular_witnesses,
    hopf_ribbon_witnesses,
    mirror_coalgebra,
    verify_crossed,
    verify_hopf,
    verify_quasitriangular,
    verify_ribbon,
)
from .surfaces import SurfaceSpec, block_dimension, crossed_algebra, \
    verify_crossed_algebra
from .surgery import (
    SurgeryError,
    SurgeryPresentation,
    check_special,
    fenn_rourke,
    canonical_f,
    kirby_stabilize,
    tau,
)


class RunReport:
    """What one command did: inputs, exact results, check table, seed."""

    def __init__(self, command, inputs=(), category="", seed=None):
        self.command = command
        self.inputs = list(inputs)
        self.category = category
        self.seed = seed
        self.results = []
        self.checks = []
        self.timing = None

    def add_result(self, label, value):
        self.results.append((label, value))

    def add_check(self, name, passed, detail=""):
        self.checks.append((name, bool(passed), detail))

    def ok(self):
        return all(passed for _, passed, _ in self.checks)

    def to_json(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "category": self.category,
            "seed": self.seed,
            "results": [[label, value] for label, value in self.results],
            "checks": [[name, passed, detail]
                       for name, passed, detail in self.checks],
            "timing": self.timing,
        }

    @classmethod
    def from_json(cls, data):
        report = cls(data["command"], data["inputs"], data["category"],
                     data["seed"])
        report.results = [tuple(r) for r in data["results"]]
        report.checks = [(n, bool(p), d) for n, p, d in data["checks"]]
        report.timing = data.get("timing")
        return report

    def __eq__(self, other):
        if not isinstance(other, RunReport):
            return NotImplemented
        return (self.command == other.command and self.inputs == other.inputs
                and self.category == other.category and self.seed == other.seed
                and self.results == other.results
                and self.checks == other.checks)

    def render(self):
        lines = [f"command: {self.command}"]
        if self.inputs:
            lines.append("inputs: " + ", ".join(self.inputs))
        if self.category:
            lines.append(f"category: {self.category}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        if self.results:
            lines.append("results:")
            for label, value in self.results:
                lines.append(f"  {label} = {value}")
        if self.checks:
            lines.append("checks:")
            for name, passed, detail in self.checks:
                mark = "pass" if passed else "FAIL"
                suffix = f"  ({detail})" if detail and not passed else ""
                lines.append(f"  [{mark}] {name}{suffix}")
        lines.append("status: " + ("ok" if self.ok() else "FAILED"))
        if self.timing is not None:
            lines.append(f"timing: {self.timing:.3f}s")
        return "\n".join(lines)


class CommandError(Exception):
    """A semantic failure that should become a failed check, not a crash."""


def _load(report, path, expect):
    try:
        kind, name, payload = formats.load_file(path, expect=expect)
    except FileNotFoundError:
        raise CommandError(f"{path}: no such file")
    except tomllib.TOMLDecodeError as err:
        raise CommandError(f"{path}: TOML parse error: {err}")
    except json.JSONDecodeError as err:
        raise CommandError(
            f"{path}: JSON parse error at line {err.lineno}, "
            f"column {err.colno}: {err.msg}")
    except (formats.FormatError, GroupValidationError, ValueError) as err:
        raise CommandError(f"{path}: {err}")
    report.inputs.append(path)
    return name, payload


def _load_category(report, path):
    name, category = _load(report, path, "category")
    report.category = name
    return category


def _witness_check(report, name, witnesses):
    detail = "" if not witnesses else \
        f"{len(witnesses)} witness(es), first: {witnesses[0]}"
    report.add_check(name, not witnesses, detail)


def _csv_ints(text):
    if not text:
        return []
    return [int(p) for p in text.split(",")]


# -- subcommands ----------------------------------------------------------


def _cmd_verify_cocycle(args, report):
    _, t = _load(report, args.file, "tuple")
    stages = verify_tuple(t)
    for stage, witnesses in stages.items():
        _witness_check(report, stage, witnesses)
    if t.theta is None:
        report.add_check("twist", True, "no twist table in the file")


def _cmd_verify_category(args, report):
    category = _load_category(report, args.file)
    report.add_result("simples", str(len(category.grading)))
    report.add_result("group order", str(category.group.order))
    report.add_check("structure", True, "construction-time identities hold")
    _witness_check(report, "invariance suite",
                   crossed_invariance_suite(category))


def _cmd_eval_link(args, report):
    category = _load_category(report, args.category)
    _, (inputs, slices) = _load(report, args.diagram, "diagram")
    try:
        tangle = ColoredPiTangle(category, inputs, slices)
    except DiagramError as err:
        raise CommandError(str(err))
    report.add_check("diagram closed", tangle.is_closed())
    report.add_result("F", formats.render_scalar(evaluate_F(tangle)))


def _surgery_from_args(report, category, path):
    _, (slices, omega) = _load(report, path, "surgery")
    try:
        presentation = SurgeryPresentation(category, slices, omega)
    except (DiagramError, SurgeryError) as err:
        raise CommandError(str(err))
    special = check_special(presentation)
    _witness_check(report, "special", special["failures"])
    if special["failures"]:
        raise CommandError("the presentation is not special")
    return presentation


def _cmd_tau(args, report):
    category = _load_category(report, args.category)
    presentation = _surgery_from_args(report, category, args.surgery)
    try:
        result = tau(presentation, rank_sign=args.dsign,
                     order=args.cyclotomic_order)
    except SquareRootUnavailable as err:
        raise CommandError(f"{err}; pass --cyclotomic-order")
    report.add_result("tau", formats.render_scalar(result.value))
    report.add_result("tau_prime", formats.render_scalar(result.tau_prime))
    report.add_result("rank", formats.render_scalar(result.rank))
    report.add_result("sigma", str(result.sigma))
    report.add_result("b1", str(result.b1))


def _fenn_rourke_sites(presentation, max_width=3):
    sites = []
    for level, state in enumerate(presentation.tangle.levels):
        for count in range(1, max_width + 1):
            for pos in range(len(state) - count + 1):
                sites.append((level, pos, count))
    return sites


def _cmd_kirby_test(args, report):
    category = _load_category(report, args.category)
    presentation = _surgery_from_args(report, category, args.surgery)
    try:
        base = tau(presentation, rank_sign=args.dsign,
                   order=args.cyclotomic_order)
    except SquareRootUnavailable as err:
        raise CommandError(f"{err}; pass --cyclotomic-order")
    report.add_result("tau", formats.render_scalar(base.value))
    rng = random.Random(args.seed)
    current = presentation
    for step in range(args.moves):
        f_before = canonical_f(current)
        blown = None
        if rng.random() < 0.4:
            sign = rng.choice((1, -1))
            current = kirby_stabilize(current, sign)
            label = f"move {step}: stabilize {'+' if sign > 0 else '-'}"
        else:
            direction = rng.choice(("-", "+"))
            sites = _fenn_rourke_sites(current)
            rng.shuffle(sites)
            for site in sites:
                try:
                    current = fenn_rourke(current, *site,
                                          direction=direction)
                    break
                except SurgeryError:
                    continue
            else:
                report.add_check(f"move {step}: no usable site", False)
                return
            blown = direction
            label = (f"move {step}: blow-up {direction} at "
                     f"{site[0]},{site[1]} width {site[2]}")
        special = check_special(current)
        report.add_check(label + " stays special", not special["failures"])
        if special["failures"]:
            return
        if blown is not None:
            delta = base.delta_minus if blown == "-" else base.delta_plus
            report.add_check(label + " rescales F by delta",
                             canonical_f(current) == delta * f_before)
        value = tau(current, rank_sign=args.dsign,
                    order=args.cyclotomic_order).value
        report.add_check(label + " preserves tau", value == base.value)


def _cmd_verlinde(args, report):
    category = _load_category(report, args.category)
    colors = verlinde_algebra(category)
    grp = category.group
    for alpha in grp.elements():
        eta = canonical_color(category, alpha)
        pretty = " + ".join(
            f"{formats.render_scalar(c)}*{category.names[s]}"
            for s, c in enumerate(eta) if not c.is_zero()) or "0"
        report.add_result(f"color[{alpha}]", pretty)
        report.add_result(f"count[{alpha}]",
                          str(len(category.simples_of_degree(alpha))))
    bad = []
    for alpha in grp.elements():
        for beta in grp.elements():
            moved = colors.act(alpha, canonical_color(category, beta))
            if moved != canonical_color(category, grp.conj(alpha, beta)):
                bad.append(("color-conjugation", (alpha, beta)))
    _witness_check(report, "canonical colors are conjugation-equivariant", bad)


def _cmd_verify_crossed_algebra(args, report):
    category = _load_category(report, args.category)
    try:
        algebra = crossed_algebra(category)
    except ValueError as err:
        raise CommandError(str(err))
    report.add_result("basis", str(len(category.grading)))
    _witness_check(report, "crossed-algebra axioms",
                   verify_crossed_algebra(algebra))


def _cmd_blocks(args, report):
    category = _load_category(report, args.category)
    alphas = _csv_ints(args.alphas)
    betas = _csv_ints(args.betas)
    marks = []
    for chunk in (args.marks.split(",") if args.marks else []):
        parts = chunk.split(":")
        if len(parts) != 3:
            raise CommandError(f"bad mark {chunk!r}; use sign:label:color")
        marks.append((int(parts[0]), int(parts[1]), int(parts[2])))
    try:
        surface = SurfaceSpec(category.group, args.genus, alphas, betas, marks)
        value = block_dimension(category, surface)
    except ValueError as err:
        raise CommandError(str(err))
    report.add_result("dimension", str(value))
    report.add_check("surface data consistent", True)


def _cmd_transfer(args, report):
    category = _load_category(report, args.category)
    try:
        pi = formats.group_from_string(args.pi)
    except (GroupValidationError, ValueError) as err:
        raise CommandError(f"--pi: {err}")
    images = _csv_ints(args.images)
    try:
        embedding = GroupHom(category.group, pi, images)
        built = transfer(category, pi, embedding)
    except (GroupValidationError, ValueError) as err:
        raise CommandError(str(err))
    report.add_result("cosets", str(built.coset_count))
    report.add_result("unit endomorphism rank", str(built.end_unit_rank()))
    _witness_check(report, "transfer axioms", built.axiom_report())


def _cmd_extend(args, report):
    category = _load_category(report, args.category)
    try:
        extended, witnesses = canonical_extension(category)
    except ValueError as err:
        raise CommandError(str(err))
    report.add_result("simples", str(len(extended.grading)))
    _witness_check(report, "extension verifies", witnesses)
    if args.out:
        text = formats.save_category(extended,
                                     (report.category or "base") + "-extended")
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        report.add_check(f"wrote {args.out}", True)


def _cmd_hopf_verify(args, report):
    _, (hopf, r, ribbon) = _load(report, args.file, "hopf")
    report.add_result("dimension", str(hopf.dimension))
    _witness_check(report, "hopf axioms", verify_hopf(hopf))
    if r is not None:
        _witness_check(report, "r-matrix axioms",
                       hopf_quasitriangular_witnesses(hopf, r))
    if ribbon is not None:
        if r is None:
            report.add_check("ribbon axioms", False,
                             "a ribbon element needs an r table")
        else:
            _witness_check(report, "ribbon axioms",
                           hopf_ribbon_witnesses(hopf, r, ribbon))


def _hopf_spread(report, path, variant):
    _, (hopf, r, ribbon) = _load(report, path, "hopf")
    try:
        if r is not None and ribbon is not None:
            return build_R_theta_from_ribbon(hopf, r, ribbon, variant)
        group, members = group_likes(hopf)
        action = {}
        for a in group.elements():
            left = hopf.basis(members[a])
            right = hopf.basis(members[group.inv[a]])
            action[a] = [hopf.multiply(hopf.multiply(left, hopf.basis(i)),
                                       right)
                         for i in range(hopf.dimension)]
        return build_A_pi(hopf, group, action, variant), None, None
    except ValueError as err:
        raise CommandError(str(err))


def _cmd_hopf_build(args, report):
    data, family, twist = _hopf_spread(report, args.file, args.variant)
    report.add_result("group order", str(data.group.order))
    report.add_result("component dimension",
                      str(data.dims[data.group.unit]))
    report.add_result("variant", args.variant)
    _witness_check(report, "crossed axioms", verify_crossed(data))
    if family is not None:
        _witness_check(report, "r-matrix family",
                       verify_quasitriangular(data, family))
        _witness_check(report, "twist family",
                       verify_ribbon(data, family, twist))


def _cmd_hopf_mirror(args, report):
    data, family, twist = _hopf_spread(report, args.file, args.variant)
    if family is not None:
        mirrored, m_family, m_twist = mirror_coalgebra(data, family, twist)
        _witness_check(report, "mirror crossed axioms",
                       verify_crossed(mirrored))
        _witness_check(report, "mirror r-matrix family",
                       verify_quasitriangular(mirrored, m_family))
        _witness_check(report, "mirror twist family",
                       verify_ribbon(mirrored, m_family, m_twist))
        back, b_family, b_twist = mirror_coalgebra(mirrored, m_family,
                                                   m_twist)
        report.add_check("mirror is an involution",
                         back == data and b_family == family
                         and b_twist == twist)
    else:
        mirrored = mirror_coalgebra(data)
        _witness_check(report, "mirror crossed axioms",
                       verify_crossed(mirrored))
        report.add_check("mirror is an involution",
                         mirror_coalgebra(mirrored) == data)
    report.add_result("group order", str(mirrored.group.order))


def _cmd_fixtures(args, report):
    import os

    out = args.dir
    os.makedirs(out, exist_ok=True)
    written = []

    def write(filename, text):
        path = os.path.join(out, filename)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        written.append(filename)

    for name, category in corpus.category_corpus().items():
        _witness_check(report, f"{name} verifies",
                       crossed_invariance_suite(category))
        write(name + ".toml", formats.save_category(category, name))
    for name, t in corpus.tuple_corpus().items():
        flat = [w for ws in verify_tuple(t).values() for w in ws]
        _witness_check(report, f"{name} verifies", flat)
        write(name + ".toml", formats.save_tuple(t, name))

    z3 = corpus.bicharacter_category(3)
    diagrams = {
        "unknot": [("cup", 0, "ud", 1, 1), ("cap", 0, "ud")],
        "hopf_link": [("cup", 0, "ud", 1, 1), ("cup", 1, "ud", 1, 1),
                      ("cross", 0, 1), ("cross", 0, 1),
                      ("cap", 1, "ud"), ("cap", 0, "ud")],
        "trefoil": [("cup", 0, "ud", 1, 1), ("cup", 1, "ud", 1, 1),
                    ("cross", 0, 1), ("cross", 0, 1), ("cross", 0, 1),
                    ("cap", 1, "ud"), ("cap", 0, "ud")],
    }
    for name, slices in diagrams.items():
        tangle = ColoredPiTangle(z3, (), slices)
        report.add_check(f"{name} closes", tangle.is_closed())
        write(name + ".json", formats.save_diagram(name, (), slices))

    surgeries = {
        "s3": [],
        "s1xs2": [("cup", 0, "ud", 0, 0), ("cap", 0, "ud")],
        "lens31": [("cup", 0, "ud", 1, 1), ("kink", 0, 1), ("kink", 0, 1),
                   ("kink", 0, 1), ("cap", 0, "ud")],
    }
    for name, slices in surgeries.items():
        presentation = SurgeryPresentation(z3, slices)
        _witness_check(report, f"{name} is special",
                       check_special(presentation)["failures"])
        write(name + ".surgery", formats.save_surgery(name, slices))

    for name, (hopf, r, ribbon) in corpus.hopf_corpus().items():
        bad = verify_hopf(hopf) + hopf_quasitriangular_witnesses(hopf, r) \
            + hopf_ribbon_witnesses(hopf, r, ribbon)
        _witness_check(report, f"{name} verifies", bad)
        write(name + ".hopf.json", formats.save_hopf(hopf, name, r, ribbon))

    report.add_result("files", str(len(written)))
    report.add_result("directory", out)
    report.add_check("at least twenty fixtures", len(written) >= 20,
                     f"wrote {len(written)}")


# -- dispatch -------------------------------------------------------------


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cyclotomic-order", type=int, default=None,
                        help="force the cyclotomic field order for ranks")
    common.add_argument("--dsign", choices=("+", "-"), default="+",
                        help="which square root to use as the rank")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks")
    common.add_argument("--json-report", metavar="FILE", default=None,
                        help="also write the report as JSON")

    parser = argparse.ArgumentParser(
        prog="crossedcat",
        description="exact invariants from group-structured categories")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-cocycle", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify_cocycle)

    p = sub.add_parser("verify-category", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify_category)

    p = sub.add_parser("eval-link", parents=[common])
    p.add_argument("category")
    p.add_argument("diagram")
    p.set_defaults(func=_cmd_eval_link)

    p = sub.add_parser("tau", parents=[common])
    p.add_argument("category")
    p.add_argument("surgery")
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("kirby-test", parents=[common])
    p.add_argument("category")
    p.add_argument("surgery")
    p.add_argument("--moves", type=int, default=5)
    p.set_defaults(func=_cmd_kirby_test)

    p = sub.add_parser("verlinde", parents=[common])
    p.add_argument("category")
    p.set_defaults(func=_cmd_verlinde)

    p = sub.add_parser("verify-crossed-algebra", parents=[common])
    p.add_argument("category")
    p.set_defaults(func=_cmd_verify_crossed_algebra)

    p = sub.add_parser("blocks", parents=[common])
    p.add_argument("category")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--alphas", default="")
    p.add_argument("--betas", default="")
    p.add_argument("--marks", default="",
                   help="comma-separated sign:label:color triples")
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("transfer", parents=[common])
    p.add_argument("category")
    p.add_argument("--pi", required=True,
                   help="big group: cyclic:<n>, product:<..>, s3, or q8")
    p.add_argument("--images", required=True,
                   help="comma-separated images of the base elements")
    p.set_defaults(func=_cmd_transfer)

    p = sub.add_parser("extend", parents=[common])
    p.add_argument("category")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("hopf-verify", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=_cmd_hopf_verify)

    p = sub.add_parser("hopf-build", parents=[common])
    p.add_argument("file")
    p.add_argument("--variant", choices=("plain", "bar"), default="plain")
    p.set_defaults(func=_cmd_hopf_build)

    p = sub.add_parser("hopf-mirror", parents=[common])
    p.add_argument("file")
    p.add_argument("--variant", choices=("plain", "bar"), default="plain")
    p.set_defaults(func=_cmd_hopf_mirror)

    p = sub.add_parser("fixtures", parents=[common])
    p.add_argument("--dir", default="fixtures")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def run(argv):
    """Execute one command; returns (exit code, RunReport)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    report = RunReport(args.command, seed=getattr(args, "seed", None))
    started = time.perf_counter()
    try:
        args.func(args, report)
    except CommandError as err:
        report.add_check("error", False, str(err))
    report.timing = time.perf_counter() - started
    if getattr(args, "json_report", None):
        with open(args.json_report, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(report.to_json(), indent=2) + "\n")
    return (0 if report.ok() else 1), report


def main(argv=None):
    code, report = run(sys.argv[1:] if argv is None else argv)
    print(report.render())
    sys.exit(code)
