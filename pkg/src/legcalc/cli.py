"""``legcalc``: command-line access to the calculators.

Every command prints one JSON document.  Exit status: 0 when a question
was decided (or there was no yes/no question), 1 for a "no", 2 for usage or
input errors, 3 when the answer is not known.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

from . import cables, farey, fronts, mountain, toruslinks
from .cables import CableSpec, KnotTypeData, Verdict
from .errors import LegcalcError
from .fronts import build as front_build
from .fronts.render import render
from .mountain import Invariants
from .toruslinks import OrderedLink, TorusLinkSpec

YES, NO, USAGE, UNKNOWN = 0, 1, 2, 3


class InputError(LegcalcError):
    def __init__(self, message, path=""):
        super().__init__(message)
        self.path = path


def _schema_registry():
    resources_ = []
    for entry in resources.files("legcalc.schemas").iterdir():
        if entry.name.endswith(".json"):
            doc = json.loads(entry.read_text())
            resources_.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources_)


_REGISTRY = None


def schema_validator(name: str):
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _schema_registry()
    schema = _REGISTRY.contents(f"legcalc/{name}")
    return jsonschema.Draft202012Validator(schema, registry=_REGISTRY)


def load_json(text: str, schema: str, flag: str):
    """Parse a JSON argument (or ``@file``) and validate it against a schema."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as e:
            raise InputError(f"{flag}: cannot read {text[1:]}: {e.strerror}", flag) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{flag}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}", flag) from None
    errors = sorted(schema_validator(schema).iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        pointer = "/" + "/".join(str(p) for p in err.absolute_path)
        raise InputError(f"{flag}{pointer}: {err.message}", f"{flag}{pointer}")
    return doc


def _link(text, flag="--link"):
    doc = load_json(text, "link.schema.json", flag)
    toruslinks.check_orientations([c.get("orientation", "+") for c in doc])
    comps = tuple(Invariants(c["tb"], c["r"]) for c in doc)
    labels = {i: c["cyclic"] for i, c in enumerate(doc) if "cyclic" in c}
    return comps, labels or None


def _knot(args) -> KnotTypeData:
    if getattr(args, "knot_file", None):
        return KnotTypeData.from_json(load_json("@" + args.knot_file, "knot.schema.json", "--knot-file"))
    return cables.builtin_knot(args.knot)


def _sigma(text):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"--sigma: expected comma-separated integers, got {text!r}", "--sigma") from None


def _comps(cs):
    return [c.to_json() for c in cs]


def _reps(reps):
    return [r.to_json() for r in reps]


def _yes_no(flag):
    return YES if flag else NO


# farey


def cmd_farey_mediant(args):
    m = farey.mediant(farey.Slope.parse(args.a), farey.Slope.parse(args.b))
    return {"mediant": str(m)}, YES, "Farey sum (a+c)/(b+d); infinity taken on the side of the other slope."


def cmd_farey_intersect(args):
    a, b = farey.Slope.parse(args.a), farey.Slope.parse(args.b)
    n = farey.intersection_number(a, b)
    return {"intersection_number": n, "edge": n == 1}, YES, "Curves a/b and c/d on a torus meet |ad - bc| times."


def cmd_farey_contains(args):
    s0, s1, s = (farey.Slope.parse(x) for x in (args.s0, args.s1, args.s))
    ok = farey.clockwise_contains(s0, s1, s)
    return {"contains": ok}, _yes_no(ok), "Clockwise order on the boundary of the Farey disk."


def cmd_farey_path(args):
    path = farey.minimal_path(farey.Slope.parse(args.s0), farey.Slope.parse(args.s1))
    why = "Shortest clockwise Farey path; each edge is one basic slice."
    return {"path": [str(s) for s in path], "basic_slices": len(path) - 1}, YES, why


# mountain ranges


def _range(args):
    if getattr(args, "range_file", None):
        return mountain.MountainRange.from_json(load_json("@" + args.range_file, "range.schema.json", "--range-file"))
    return _knot(args).range


def cmd_range_peaks(args):
    mr = _range(args)
    return mr.to_json(), YES, "Peaks are the non-destabilizable classes."


def cmd_range_check(args):
    ok = _range(args).contains(args.tb, args.r)
    why = "(tb, r) is realized iff it lies in the stabilization cone below some peak."
    return {"contains": ok}, _yes_no(ok), why


def cmd_range_lattice(args):
    pts = mountain.lattice_points_at_or_above(_range(args), args.tb0)
    return {"points": _comps(pts), "count": len(pts)}, YES, "All realized classes with tb >= tb0."


# torus links

TORUS_WHY = (
    "Classification of Legendrian torus links: links are determined by their component "
    "invariants and every link destabilizes to one of the listed non-destabilizable representatives."
)


def _spec(args):
    return TorusLinkSpec(args.n, args.p, args.q, args.sign)


def cmd_torus_reps(args):
    reps = toruslinks.nondestabilizable_reps(_spec(args))
    return {"spec": _spec(args).to_json(), "count": len(reps), "reps": _reps(reps)}, YES, TORUS_WHY


def cmd_torus_realize(args):
    spec = _spec(args)
    comps, _ = _link(args.link)
    res = toruslinks.is_realizable(spec, comps)
    doc = {"realizable": res.realizable}
    if res.realizable:
        doc["witnesses"] = _reps(res.witnesses)
    return doc, _yes_no(res.realizable), TORUS_WHY


def cmd_torus_isotopic(args):
    spec = _spec(args)
    a, _ = _link(args.link)
    b, _ = _link(args.other, "--other")
    ok = toruslinks.unordered_isotopic(spec, a, b)
    return {"isotopic": ok}, _yes_no(ok), TORUS_WHY


def cmd_torus_destab(args):
    reps = toruslinks.common_destabilizations(_spec(args), _link(args.link)[0])
    why = "Representatives whose stabilizations reach the link, under some matching of components."
    return {"count": len(reps), "reps": _reps(reps)}, YES, why


def cmd_torus_tb(args):
    spec = _spec(args)
    comps, _ = _link(args.link)
    doc = {
        "total_tb": toruslinks.total_tb(spec, comps),
        "component_tb_sum": sum(c.tb for c in comps),
        "max_component_tb_sum": toruslinks.max_component_tb_sum(spec),
    }
    why = "tb of a link is the sum over components plus twice the pairwise linking, here +-(n-1)n pq."
    return doc, YES, why


PERMS_WHY = (
    "Ordered classification: for negative torus links only cyclic permutations of the max-tb "
    "components are realizable, other components must keep their invariants; for positive torus "
    "links every invariant-preserving permutation is realizable."
)


def cmd_torus_perms(args):
    spec = _spec(args)
    comps, labels = _link(args.link)
    link = OrderedLink(comps, labels)
    if args.sigma is None:
        perms = toruslinks.realizable_permutations(spec, link)
        return {"count": len(perms), "permutations": [list(p) for p in perms]}, YES, PERMS_WHY
    ok = toruslinks.permutation_realizable(spec, link, _sigma(args.sigma))
    return {"realizable": ok}, _yes_no(ok), PERMS_WHY


def cmd_torus_transverse(args):
    spec = _spec(args)
    top = toruslinks.transverse_sl_max_component(spec.p, spec.q, spec.sign)
    doc = {"sl_max_component": top}
    status = YES
    if args.sl is not None:
        sls = json.loads(args.sl) if args.sl.startswith("[") else _sigma(args.sl)
        ok = toruslinks.transverse_realizable(spec, sls)
        doc["realizable"] = ok
        status = _yes_no(ok)
    why = "Transverse torus links are determined by component self-linking numbers, each at most the max and of the same parity."
    return doc, status, why


# cables

CABLE_WHY = {
    "Greater": "Greater-slope cables: the standard cable is the unique max-tb representative per peak; permutations preserving invariants are realizable.",
    "TbSlope": "tb-slope cables: the n-copy of a max-tb representative; the order of max-tb components cannot be changed.",
    "IntegralLesser": "Lesser integral slope: n-copies at tb = q together with t-twisted n-copies; max-tb components can only be permuted cyclically.",
    "NonintegralLesser": "Lesser non-integral slope: standard cables built with S or Z tangles; max-tb components can only be permuted cyclically.",
}


def _cable(args):
    return CableSpec(args.n, args.p, args.q)


def cmd_cable_regime(args):
    K, spec = _knot(args), _cable(args)
    regime = cables.slope_regime(K, spec)
    doc = {"knot": K.name, "tb_bar": K.tb_bar, "regime": regime.value}
    return doc, YES, CABLE_WHY[regime.value]


def cmd_cable_std(args):
    K, spec = _knot(args), _cable(args)
    reps = cables.std_cable_components(K, spec)
    regime = cables.slope_regime(K, spec).value
    return {"regime": regime, "count": len(reps), "reps": _reps(reps)}, YES, CABLE_WHY[regime]


def cmd_cable_reps(args):
    K, spec = _knot(args), _cable(args)
    reps = cables.nondestabilizable_reps_cable(K, spec)
    regime = cables.slope_regime(K, spec).value
    return {"regime": regime, "count": len(reps), "reps": _reps(reps)}, YES, CABLE_WHY[regime]


def cmd_cable_realize(args):
    K, spec = _knot(args), _cable(args)
    comps, _ = _link(args.link)
    res = cables.is_realizable_cable(K, spec, comps)
    doc = {"realizable": res.realizable}
    if res.realizable:
        doc["witnesses"] = _reps(res.witnesses)
    return doc, _yes_no(res.realizable), CABLE_WHY[cables.slope_regime(K, spec).value]


def cmd_cable_perms(args):
    K, spec = _knot(args), _cable(args)
    comps, labels = _link(args.link)
    verdict = cables.permutation_realizable_cable(K, spec, OrderedLink(comps, labels), _sigma(args.sigma))
    status = {Verdict.YES: YES, Verdict.NO: NO, Verdict.UNKNOWN: UNKNOWN}[verdict]
    why = CABLE_WHY[cables.slope_regime(K, spec).value]
    if verdict is Verdict.UNKNOWN:
        why = "The companion is itself a cable whose cabling slope equals q/p; permutations of such cables are not classified."
    return {"decision": verdict.value}, status, why


def cmd_cable_transverse(args):
    K = _knot(args)
    doc = {
        "sl_max_component": cables.transverse_cable_sl_max(K, args.p, args.q),
        "tb_max_component": cables.cable_max_tb_component(K, args.p, args.q),
    }
    return doc, YES, "Transverse cables are the push-offs of the Legendrian ones with sl = tb - r."


def cmd_cable_maxtb(args):
    K, spec = _knot(args), _cable(args)
    doc = {
        "tb_max_component": cables.cable_max_tb_component(K, spec.p, spec.q),
        "tb_max_component_sum": cables.cable_max_tb_sum(K, spec),
    }
    return doc, YES, "Maximal tb of cables of uniformly thick knot types."


# fronts


def _front_out(args, f, extra=None):
    doc = dict(extra or {})
    doc["word"] = f.to_json()
    doc["components"] = [{"tb": tb, "r": r} for tb, r in fronts.component_invariants(f)]
    doc["linking"] = fronts.linking_matrix(f)
    if getattr(args, "svg", None):
        Path(args.svg).write_text(render(f, "svg"))
        doc["svg"] = args.svg
    if getattr(args, "ascii", False):
        doc["ascii"] = render(f, "ascii")
    return doc


def cmd_front_cable(args):
    K = _knot(args)
    spec = _cable(args)
    f = front_build.cable_base_front(K.name, spec, args.r)
    g = fronts.standard_cable_front(f, spec, K.tb_bar, args.kind)
    base = fronts.component_invariants(f)[0]
    doc = _front_out(args, g, {"base": {"tb": base[0], "r": base[1]}})
    return doc, YES, CABLE_WHY[cables.slope_regime(K, spec).value]


def cmd_front_twisted(args):
    f = front_build.knot_front(args.knot, args.tb, args.r)
    g = fronts.twisted_n_copy(f, args.n, args.t)
    return _front_out(args, g), YES, "t-twisted n-copy: one component keeps tb, the rest drop by 2t."


def cmd_front_torus(args):
    g = fronts.positive_torus_front(args.n, args.p, args.q)
    return _front_out(args, g), YES, "np nested max-tb unknots closed by nq positive twists."


def cmd_front_knot(args):
    f = front_build.knot_front(args.knot, args.tb, args.r)
    return _front_out(args, f), YES, "Built-in max-tb front, stabilized as requested."


def cmd_front_show(args):
    f = fronts.FrontWord.from_json(load_json(args.word, "front.schema.json", "--word"))
    return _front_out(args, f), YES, "Invariants computed from the front: tb = writhe - right cusps, r = (down - up cusps)/2."


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="legcalc", description=__doc__.split("\n")[0])
    ap.add_argument("--explain", action="store_true", help="add a short rationale to the output")
    nouns = ap.add_subparsers(dest="noun", required=True)

    def verb(sub, name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=fn)
        p.add_argument("--explain", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        return p

    def torus_args(p):
        p.add_argument("-n", type=int, required=True)
        p.add_argument("-p", type=int, required=True)
        p.add_argument("-q", type=int, required=True)
        p.add_argument("--sign", choices=["+", "-"], required=True)

    def knot_args(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--knot", help="unknot, fig8 or torus:p:+-q")
        g.add_argument("--knot-file", help="JSON knot type data")

    def cable_args(p, with_n=True):
        knot_args(p)
        if with_n:
            p.add_argument("-n", type=int, required=True)
        p.add_argument("-p", type=int, required=True)
        p.add_argument("-q", type=int, required=True)

    fa = nouns.add_parser("farey", help="Farey graph arithmetic").add_subparsers(dest="verb", required=True)
    p = verb(fa, "mediant", cmd_farey_mediant, "Farey sum of two slopes")
    p.add_argument("a")
    p.add_argument("b")
    p = verb(fa, "intersect", cmd_farey_intersect, "intersection number and adjacency")
    p.add_argument("a")
    p.add_argument("b")
    p = verb(fa, "contains", cmd_farey_contains, "is S on the clockwise arc from S0 to S1")
    for name in ("s0", "s1", "s"):
        p.add_argument(name)
    p = verb(fa, "path", cmd_farey_path, "minimal clockwise path")
    p.add_argument("s0")
    p.add_argument("s1")

    ra = nouns.add_parser("range", help="mountain ranges").add_subparsers(dest="verb", required=True)
    for name, fn, help_ in (
        ("peaks", cmd_range_peaks, "peaks of a knot type"),
        ("check", cmd_range_check, "is (tb, r) realized"),
        ("lattice", cmd_range_lattice, "classes with tb >= tb0"),
    ):
        p = verb(ra, name, fn, help_)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--knot")
        g.add_argument("--knot-file")
        g.add_argument("--range-file")
        if name == "check":
            p.add_argument("--tb", type=int, required=True)
            p.add_argument("--r", type=int, required=True)
        if name == "lattice":
            p.add_argument("--tb0", type=int, required=True)

    to = nouns.add_parser("torus", help="Legendrian torus links").add_subparsers(dest="verb", required=True)
    torus_args(verb(to, "reps", cmd_torus_reps, "non-destabilizable representatives"))
    for name, fn, help_ in (
        ("realize", cmd_torus_realize, "is a multiset of invariants realized"),
        ("destab", cmd_torus_destab, "representatives a link destabilizes to"),
        ("tb", cmd_torus_tb, "total tb of a link"),
    ):
        p = verb(to, name, fn, help_)
        torus_args(p)
        p.add_argument("--link", required=True, help="JSON array of {tb, r}, or @file")
    p = verb(to, "isotopic", cmd_torus_isotopic, "are two links isotopic (unordered)")
    torus_args(p)
    p.add_argument("--link", required=True)
    p.add_argument("--other", required=True)
    p = verb(to, "perms", cmd_torus_perms, "realizable permutations of an ordered link")
    torus_args(p)
    p.add_argument("--link", required=True)
    p.add_argument("--sigma", help="permutation as comma-separated images, e.g. 1,2,0")
    p = verb(to, "transverse", cmd_torus_transverse, "transverse torus links")
    torus_args(p)
    p.add_argument("--sl", help="self-linking numbers, comma-separated or JSON array")

    ca = nouns.add_parser("cable", help="Legendrian cable links").add_subparsers(dest="verb", required=True)
    for name, fn, help_ in (
        ("regime", cmd_cable_regime, "slope regime"),
        ("std", cmd_cable_std, "standard cable invariants"),
        ("reps", cmd_cable_reps, "non-destabilizable representatives"),
        ("maxtb", cmd_cable_maxtb, "maximal tb bounds"),
    ):
        cable_args(verb(ca, name, fn, help_))
    p = verb(ca, "realize", cmd_cable_realize, "is a multiset of invariants realized")
    cable_args(p)
    p.add_argument("--link", required=True)
    p = verb(ca, "perms", cmd_cable_perms, "is a permutation realizable")
    cable_args(p)
    p.add_argument("--link", required=True)
    p.add_argument("--sigma", required=True)
    cable_args(verb(ca, "transverse", cmd_cable_transverse, "max self-linking of a cable component"), with_n=False)

    fr = nouns.add_parser("front", help="front diagrams").add_subparsers(dest="verb", required=True)

    def out_args(p):
        p.add_argument("--svg", help="write an SVG drawing here")
        p.add_argument("--ascii", action="store_true", help="include an ASCII drawing")

    p = verb(fr, "cable", cmd_front_cable, "front of a standard cable")
    p.add_argument("--knot", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--r", type=int, help="rotation number of the base knot (lesser slopes)")
    p.add_argument("--kind", choices=["S", "Z"], default="Z")
    out_args(p)
    p = verb(fr, "twisted", cmd_front_twisted, "t-twisted n-copy of a knot front")
    p.add_argument("--knot", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--tb", type=int)
    p.add_argument("--r", type=int)
    out_args(p)
    p = verb(fr, "torus", cmd_front_torus, "positive torus link front")
    for flag in ("-n", "-p", "-q"):
        p.add_argument(flag, type=int, required=True)
    out_args(p)
    p = verb(fr, "knot", cmd_front_knot, "built-in knot front")
    p.add_argument("--knot", required=True)
    p.add_argument("--tb", type=int)
    p.add_argument("--r", type=int)
    out_args(p)
    p = verb(fr, "show", cmd_front_show, "invariants and drawing of an event word")
    p.add_argument("--word", required=True, help='JSON {"events": [["L",0],...]} or @file')
    out_args(p)
    return ap


def run(argv=None) -> tuple[int, str]:
    """Run one command; returns (exit status, text written to stdout)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), ""
    try:
        doc, status, why = args.handler(args)
    except LegcalcError as e:
        err = {"type": type(e).__name__, "message": str(e)}
        if getattr(e, "path", ""):
            err["path"] = e.path
        if getattr(e, "which", None):
            err["which"] = e.which
        print(f"legcalc: {e}", file=sys.stderr)
        return USAGE, json.dumps({"error": err}, indent=2) + "\n"
    if args.explain:
        doc["explanation"] = why
    return status, json.dumps(doc, indent=2) + "\n"


def main(argv=None) -> int:
    status, out = run(argv)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
