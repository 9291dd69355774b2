"""Command-line front end.

Every subcommand prints one JSON object on stdout (schema field
"laxdesc/1") and reserves stderr for human diagnostics.  Exit codes: 0 the
requested property holds (or the computation succeeded), 1 the property
fails (the report is still printed), 2 malformed input (bad file, bad
flags, unresolved names).  Size bounds for slice-world computations are
always explicit flags; there is no default bound.
"""

import argparse
import json
import sys

from .descent import (
    descent_factorization,
    eq_groupoid,
    internal_actions,
    is_effective_descent,
)
from .dsl import ParseError, SemanticError, load
from .finset import FinSetMap, basic_indexed_category, sigma_adjunction
from .kan import left_kan, right_kan
from .monadics import beck_chevalley, benabou_roubaud_compare, is_monadic
from .theorems import main_theorem_suite, monadicity_suite

SCHEMA = "laxdesc/1"


class InputError(Exception):
    pass


def _emit(payload, command):
    body = {"schema": SCHEMA, "command": command}
    body.update(payload)
    json.dump(body, sys.stdout, indent=2, default=repr)
    sys.stdout.write("\n")


def _load(path):
    try:
        return load(path)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from None
    except (ParseError, SemanticError) as e:
        raise InputError(f"{path}: {e}") from None


def _pick(env, kind, name, what):
    if name is not None:
        entry = env.get(name)
        if entry is None or entry["kind"] != kind:
            raise InputError(f"no {kind} named {name!r} in the document")
        return entry["value"]
    hits = [e for e in env.values() if e["kind"] == kind]
    if len(hits) != 1:
        raise InputError(
            f"document declares {len(hits)} {kind}s; pick one with {what}")
    return hits[0]["value"]


def _map_from(args):
    _, env = _load(args.map)
    p = _pick(env, "map", getattr(args, "name", None), "--name")
    if not isinstance(p, FinSetMap):
        raise InputError("declaration is not a finite map")
    return p


def _indexed_world(args):
    if args.indexed != "slice":
        raise InputError(
            "only the slice indexed family is wired to map subcommands")
    return basic_indexed_category(args.bound)


# -- subcommand bodies ------------------------------------------------------------


def _cmd_build(args):
    doc, env = _load(args.file)
    decls = [{"name": d.name, "kind": env[d.name]["kind"]}
             for d in doc.decls]
    _emit({"file": args.file, "declarations": decls}, "build")
    return 0


def _cmd_actions(args):
    _, env = _load(args.file)
    entry = env.get(args.pseudo)
    if entry is None or entry["kind"] != "pseudofunctor":
        raise InputError(f"no pseudofunctor named {args.pseudo!r}")
    spec = entry["value"]
    F = spec.indexed.make(args.bound)
    ld, up = internal_actions(F, spec.over, args.bound)
    objs = list(ld.objects())
    morphisms = sum(len(ld.hom(x, y)) for x in objs for y in objs)
    _emit({"pseudofunctor": args.pseudo, "bound": args.bound,
           "objects": len(objs), "morphisms": morphisms}, "actions")
    return 0


def _cmd_eqp(args):
    p = _map_from(args)
    a = eq_groupoid(p)
    levels = {str(lv): len(a.ob[lv]) for lv in (1, 2, 3)}
    _emit({"map": repr(p), "levels": levels}, "eqp")
    return 0


def _cmd_factor(args):
    p = _map_from(args)
    F = _indexed_world(args)
    df = descent_factorization(F, p, args.bound)
    objs = list(df.lax.objects())
    ok = bool(df.composite_check)
    _emit({"bound": args.bound, "composite_matches": ok,
           "descent_objects": len(objs)}, "factor")
    return 0 if ok else 1


def _cmd_effective(args):
    p = _map_from(args)
    F = _indexed_world(args)
    rep = is_effective_descent(F, p, args.bound)
    _emit({"bound": args.bound, "report": rep}, "effective")
    return 0 if rep["effective"] else 1


def _cmd_monadic(args):
    p = _map_from(args)
    adj = sigma_adjunction(p, args.bound)
    rep = is_monadic(adj.right, adj, args.bound)
    payload = {"bound": args.bound, "monadic": rep["monadic"],
               "agree": rep["agree"], "note": rep.get("note"),
               "comparison": rep["comparison"]}
    _emit(payload, "monadic")
    return 0 if (rep["monadic"] is True and rep["agree"]) else 1


def _cmd_check(args):
    p = _map_from(args)
    F = _indexed_world(args)
    if args.property == "bc":
        rep = beck_chevalley(F, p, args.bound)
        _emit({"bound": args.bound, "holds": rep["holds"],
               "witness": rep.get("witness")}, "check bc")
        return 0 if rep["holds"] else 1
    rep = benabou_roubaud_compare(F, p, args.bound)
    _emit({"bound": args.bound, "report": rep}, "check br")
    return 0 if rep["found"] else 1


def _cmd_kan(args):
    _, env = _load(args.file)
    J = _pick(env, "functor", args.of, "--of")
    H = _pick(env, "functor", args.along, "--along")
    if J.src is not H.src:
        raise InputError("--of and --along must share their source")
    ke = right_kan(J, H) if args.side == "right" else left_kan(J, H)
    payload = {"side": args.side, "exists": ke.exists}
    if ke.exists:
        payload["value"] = {str(b): repr(ke.value.ob(b))
                            for b in H.dst.objects()}
        payload["universal"] = {str(s): repr(ke.universal.at(s))
                                for s in H.src.objects()}
    else:
        payload["witness"] = repr(ke.failure_witness)
    _emit(payload, "kan")
    return 0 if ke.exists else 1


def _cmd_verify(args):
    if args.target == "main":
        rep = main_theorem_suite(args.seed, args.count, side=args.side)
        ok = (not rep["counterexamples"]
              and rep["instances"] - rep["vacuous"] >= args.count)
        _emit({"target": "main", "side": args.side, "seed": args.seed,
               "count": args.count, "instances": rep["instances"],
               "vacuous": rep["vacuous"], "verified": rep["verified"],
               "counterexamples": rep["counterexamples"]}, "verify")
        return 0 if ok else 1
    rep = monadicity_suite(args.seed, args.count)
    ok = not rep["failures"] and rep["instances"] == args.count
    _emit({"target": "monadic", "seed": args.seed, "count": args.count,
           "instances": rep["instances"], "verified": rep["verified"],
           "failures": rep["failures"]}, "verify")
    return 0 if ok else 1


# -- argument plumbing -------------------------------------------------------------


def _add_map_flags(sp, bound=True):
    sp.add_argument("--map", required=True,
                    help=".lcat file holding the map declaration")
    sp.add_argument("--name", help="map name when the file has several")
    sp.add_argument("--indexed", required=True, choices=["slice"],
                    help="indexed family the map acts in")
    if bound:
        sp.add_argument("--bound", required=True, type=int,
                        help="carrier size bound (explicit, no default)")


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="laxdesc",
        description="descent-data computations on finite instances")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("build", help="load and validate a document")
    sp.add_argument("file")
    sp.set_defaults(fn=_cmd_build)

    sp = sub.add_parser("actions",
                        help="materialize the descent category of a "
                             "pseudofunctor declaration")
    sp.add_argument("--file", required=True)
    sp.add_argument("--pseudo", required=True)
    sp.add_argument("--bound", required=True, type=int)
    sp.set_defaults(fn=_cmd_actions)

    sp = sub.add_parser("eqp", help="kernel-pair groupoid of a map")
    sp.add_argument("--map", required=True)
    sp.add_argument("--name")
    sp.set_defaults(fn=_cmd_eqp)

    sp = sub.add_parser("factor",
                        help="factor the change-of-base functor through "
                             "descent data")
    _add_map_flags(sp)
    sp.set_defaults(fn=_cmd_factor)

    sp = sub.add_parser("effective",
                        help="decide effectiveness of a map at a bound")
    _add_map_flags(sp)
    sp.set_defaults(fn=_cmd_effective)

    sp = sub.add_parser("monadic",
                        help="two-oracle monadicity of change of base")
    sp.add_argument("--map", required=True)
    sp.add_argument("--name")
    sp.add_argument("--bound", required=True, type=int)
    sp.set_defaults(fn=_cmd_monadic)

    sp = sub.add_parser("check", help="pasting conditions for a map")
    sp.add_argument("property", choices=["bc", "br"])
    _add_map_flags(sp)
    sp.set_defaults(fn=_cmd_check)

    sp = sub.add_parser("kan", help="Kan extension of declared functors")
    sp.add_argument("--file", required=True)
    sp.add_argument("--of", help="functor to extend")
    sp.add_argument("--along", help="functor to extend along")
    sp.add_argument("--side", choices=["right", "left"], default="right")
    sp.set_defaults(fn=_cmd_kan)

    sp = sub.add_parser("verify",
                        help="randomized suites for the creation and "
                             "monadicity statements")
    sp.add_argument("target", choices=["main", "monadic"])
    sp.add_argument("--seed", required=True, type=int)
    sp.add_argument("--count", required=True, type=int)
    sp.add_argument("--side", choices=["right", "left"], default="right")
    sp.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None):
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse already wrote usage to stderr; normalize the code
        return 0 if e.code == 0 else 2
    try:
        return args.fn(args)
    except InputError as e:
        print(f"laxdesc: {e}", file=sys.stderr)
        return 2
    except (ParseError, SemanticError) as e:
        print(f"laxdesc: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
