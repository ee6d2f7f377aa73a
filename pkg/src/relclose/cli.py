"""Command-line front end: every operation, JSON/DOT/binary output.

Exit status is 0 on success, 1 on a domain error (bad ambient, bad
triple, unknown mode), 2 on a resource limit.  Errors are emitted as a
single JSON object {"error": code, "message": text} on stderr, with code
"malformed-input" for command-line parse failures, "invalid-argument"
for domain errors, and "resource-limit" for exceeded bounds.  Success
output goes to stdout behind a one-line version header (a ``//`` comment
in DOT mode, omitted in binary mode) that --porcelain suppresses; the
payload itself is byte-stable across runs.
"""

import argparse
import json
import sys

from . import __version__
from .closure import is_relatively_closed, radical, relative_closure
from .gf import gf_build
from .groups import AmbientGroup, DomainError, ResourceLimit, make_presentation
from .lattice import (
    closed_lattice,
    lattice_to_dot,
    lattice_to_json,
    maximal_intransitive,
    maximal_relatively_closed,
    rank_four,
    second_maximal,
)
from .normal_form import to_normal_form
from .orbits import orbit_multiset
from .schemes import affine_classify, gamma_l1, scheme_to_binary, scheme_to_json
from .verify import run_battery


class _Parser(argparse.ArgumentParser):
    """argparse with JSON error reporting instead of usage text."""

    def error(self, message):
        _emit_error("malformed-input", message)
        raise SystemExit(1)


def _emit_error(code, message):
    json.dump({"error": code, "message": message}, sys.stderr, sort_keys=True)
    sys.stderr.write("\n")


def _triple(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected k,i,j, got {text!r}")
    try:
        return tuple(int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three integers, got {text!r}")


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--porcelain",
        action="store_true",
        help="suppress the version header line",
    )

    parser = _Parser(prog="relclose", description=__doc__.splitlines()[0])
    verbs = parser.add_subparsers(dest="verb", required=True)

    def ambient_verb(name, help_text, subgroup=None):
        sub = verbs.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--n", type=int, required=True, help="order of the cyclic point set")
        sub.add_argument("--alpha", type=int, required=True, help="stabilizer action w -> w^alpha")
        if subgroup is not None:
            sub.add_argument(
                "--subgroup",
                type=_triple,
                required=(subgroup == "required"),
                metavar="k,i,j",
                help="subgroup presentation <a^k w^i, w^j>",
            )
        return sub

    ambient_verb("normal-form", "normalize a subgroup presentation", "required")
    ambient_verb("radical", "radical of the orbit partition", "required")
    ambient_verb("closure", "smallest relatively closed overgroup", "required")
    ambient_verb("is-closed", "test relative closedness", "required")
    ambient_verb("orbits", "orbit multiset on points", "required")
    ambient_verb(
        "maximal",
        "maximal relatively closed subgroups (of the whole group, or of --subgroup)",
        "optional",
    )
    ambient_verb("second-maximal", "second maximal relatively closed classes")
    ambient_verb("rank4", "relatively closed classes with exactly three orbits")
    lattice = ambient_verb("lattice", "DAG of relatively closed classes")
    lattice.add_argument("--depth", type=int, default=None, help="stop after this many levels")
    lattice.add_argument("--format", choices=("json", "dot"), default="json")

    affine = verbs.add_parser(
        "affine", parents=[common], help="one-dimensional affine groups over GF(p^d)"
    )
    affine.add_argument("mode", choices=("maximal", "rank4", "schemes"))
    affine.add_argument("--p", type=int, required=True, help="field characteristic")
    affine.add_argument("--d", type=int, required=True, help="field degree")
    affine.add_argument("--format", choices=("json", "binary"), default="json")

    verify = verbs.add_parser(
        "verify", parents=[common], help="cross-validate formulas against the brute oracle"
    )
    verify.add_argument("--bound", type=int, default=None, help="largest point count swept")

    return parser


def _subgroup_json(G, H):
    return {
        "k": H.k,
        "i": H.i,
        "j": H.j,
        "order": H.subgroup_order(G),
        "order_triple": list(H.order_triple(G)),
    }


def _record_json(G, rec):
    return {
        "family": rec.family_tag,
        "parameters": list(rec.parameters),
        "subgroup": _subgroup_json(G, rec.presentation),
        "orbits": [[length, mult] for length, mult in rec.orbit_multiset.entries],
    }


def _ambient_json(G):
    return {"n": G.n, "alpha": G.alpha}


def _dispatch(args):
    if args.verb == "verify":
        if args.bound is None:
            return "json", run_battery()
        return "json", run_battery(bound=args.bound, affine_bound=args.bound)

    if args.verb == "affine":
        F = gf_build(args.p, args.d)
        G = gamma_l1(F)
        if args.mode in ("maximal", "rank4"):
            if args.format == "binary":
                raise DomainError("binary output is only available for schemes")
            records = affine_classify(F, args.mode)
            return "json", {
                "q": F.q,
                "p": F.p,
                "d": F.d,
                "families": [_record_json(G, rec) for rec in records],
            }
        report = affine_classify(F, "minimal-schemes")
        if args.format == "binary":
            return "bytes", b"".join(scheme_to_binary(S) for S in report["schemes"])
        comparisons = [
            {
                "first": cmp.first,
                "second": cmp.second,
                "verdict": cmp.verdict,
                "point_map": list(cmp.point_map) if cmp.point_map is not None else None,
                "color_map": list(cmp.color_map) if cmp.color_map is not None else None,
            }
            for cmp in report["comparisons"]
        ]
        return "json", {
            "q": F.q,
            "p": F.p,
            "d": F.d,
            "groups": [_record_json(G, rec) for rec in report["groups"]],
            "schemes": [scheme_to_json(S) for S in report["schemes"]],
            "comparisons": comparisons,
        }

    G = AmbientGroup(args.n, args.alpha)

    if args.verb == "second-maximal":
        records = second_maximal(G)
        return "json", {
            "ambient": _ambient_json(G),
            "second_maximal": [_record_json(G, rec) for rec in records],
        }

    if args.verb == "rank4":
        records = rank_four(G)
        return "json", {
            "ambient": _ambient_json(G),
            "rank_four": [_record_json(G, rec) for rec in records],
        }

    if args.verb == "lattice":
        lat = closed_lattice(G, max_depth=args.depth)
        if args.format == "dot":
            return "dot", lattice_to_dot(lat)
        return "json", lattice_to_json(lat)

    if args.verb == "maximal":
        if args.subgroup is None:
            records = maximal_intransitive(G)
            payload = {"ambient": _ambient_json(G)}
        else:
            Hn, _ = to_normal_form(G, make_presentation(G, *args.subgroup))
            records = maximal_relatively_closed(G, Hn)
            payload = {"ambient": _ambient_json(G), "normal_form": _subgroup_json(G, Hn)}
        payload["maximal"] = [_record_json(G, rec) for rec in records]
        return "json", payload

    H = make_presentation(G, *args.subgroup)
    Hn, conjugator = to_normal_form(G, H)
    payload = {"ambient": _ambient_json(G), "normal_form": _subgroup_json(G, Hn)}

    if args.verb == "normal-form":
        payload["input"] = {"k": H.k, "i": H.i, "j": H.j}
        payload["conjugator"] = conjugator
    elif args.verb == "radical":
        payload["radical"] = radical(G, Hn)
    elif args.verb == "closure":
        closure_n, _ = to_normal_form(G, relative_closure(G, H))
        payload["closure"] = _subgroup_json(G, closure_n)
        payload["is_closed"] = is_relatively_closed(G, Hn)
    elif args.verb == "is-closed":
        payload["is_closed"] = is_relatively_closed(G, Hn)
    else:  # orbits
        omega = orbit_multiset(G, Hn)
        payload["orbits"] = [[length, mult] for length, mult in omega.entries]
        payload["orbit_count"] = sum(mult for _, mult in omega.entries)
    return "json", payload


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        kind, payload = _dispatch(args)
    except DomainError as exc:
        _emit_error("invalid-argument", str(exc))
        return 1
    except ResourceLimit as exc:
        _emit_error("resource-limit", str(exc))
        return 2

    if kind == "bytes":
        sys.stdout.buffer.write(payload)
        return 0
    header = f"relclose {__version__}"
    if kind == "dot":
        if not args.porcelain:
            sys.stdout.write(f"// {header}\n")
        sys.stdout.write(payload)
    else:
        if not args.porcelain:
            sys.stdout.write(header + "\n")
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
