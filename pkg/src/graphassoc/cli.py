"""Command-line front end with deterministic machine-readable output.

Every subcommand reads a diagram file, prints one JSON payload to stdout
and reserves stderr for human diagnostics.  Identical inputs produce
byte-identical outputs.  Exit status: 0 success, 1 validation error,
2 parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass

from . import coherence, dynkin, homology, nested, polytope
from .diagram import Diagram, DiagramError, INFINITY, ParseError, parse_diagram


@dataclass(frozen=True)
class CommandResult:
    command: str
    fingerprint: str
    payload: dict | None
    status: int
    message: str = ""


def fingerprint(D: Diagram) -> str:
    """Canonical hash of the vertex/edge data."""
    parts = ["v:" + ",".join(D.names)]
    for (i, j), label in D.edge_labels:
        text = "inf" if label == INFINITY else str(int(label))
        parts.append(f"e:{D.names[i]}-{D.names[j]}:{text}")
    return hashlib.sha256(";".join(parts).encode("utf-8")).hexdigest()


def parse_nested_set(D: Diagram, text: str) -> nested.NestedSet:
    """Nested sets on the command line: vertex ids joined by spaces, parts by ';'."""
    lists = []
    for part in text.split(";"):
        names = part.split()
        if not names:
            raise ParseError(f"empty subdiagram in {text!r}")
        lists.append([D.index(v) for v in names])
    return nested.NestedSet.from_vertex_lists(D, lists)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphassoc",
        description="Graph associahedra: face posets, polytopes, homology, "
        "Dynkin cohomology and quasi-Coxeter presentations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text, **flags):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--diagram", required=True, help="diagram source file")
        for flag, kwargs in flags.items():
            p.add_argument(flag, **kwargs)
        return p

    cmd("faces", "face poset (all faces, or --dim k only)",
        **{"--dim": dict(type=int, default=None)})
    cmd("fvector", "face counts by dimension")
    cmd("twofaces", "classification of the 2-faces")
    cmd("polytope", "exact convex realization (JSON; OFF via --off)",
        **{"--off": dict(default=None, metavar="PATH")})
    cmd("homology", "integer homology of the nested-set complex")
    cmd("dynkin", "Dynkin cohomology dimensions",
        **{"--coeffs": dict(default=None, metavar="FILE")})
    cmd("relations", "generators and relation words of the presentation")
    p = cmd("sequence", "good elementary sequence between two maximal nested sets")
    p.add_argument("--pair", nargs=2, required=True, metavar=("F", "G"))
    p = cmd("support", "support and central support of a pair")
    p.add_argument("--pair", nargs=2, required=True, metavar=("F", "G"))
    return parser


def _dispatch(args, D: Diagram) -> dict:
    if args.command == "faces":
        if args.dim is None:
            return nested.face_poset_json(D)
        out = []
        for H in nested.faces(D, args.dim):
            out.append(
                {
                    "elements": [D.vertex_names(m) for m in H.elements],
                    "dim": H.dim,
                    "unsaturated": [
                        {"B": D.vertex_names(B), "alpha": D.vertex_names(a)}
                        for B, a in H.unsaturated()
                    ],
                }
            )
        return {"faces": out}
    if args.command == "fvector":
        return {"f": nested.f_vector(D)}
    if args.command == "twofaces":
        faces = []
        counts = {"square": 0, "pentagon": 0, "hexagon": 0}
        if D.n >= 3:
            for H in nested.faces(D, 2):
                kind = nested.classify_two_face(D, H).value
                counts[kind] += 1
                faces.append(
                    {"elements": [D.vertex_names(m) for m in H.elements], "kind": kind}
                )
        return {"twofaces": faces, "counts": counts}
    if args.command == "polytope":
        R = polytope.make_realization(D)
        doc = polytope.export_polytope(R)
        if args.off is not None:
            text = polytope.off_text(R)
            if text is None:
                raise DiagramError("OFF export needs affine dimension at most 3")
            with open(args.off, "w", encoding="utf-8") as fh:
                fh.write(text)
        return doc
    if args.command == "homology":
        return homology.homology_json(D)
    if args.command == "dynkin":
        M = dynkin.load_coefficients(D, args.coeffs)
        return dynkin.dynkin_json(D, M)
    if args.command == "relations":
        return coherence.presentation_json(D)
    if args.command == "sequence":
        F = parse_nested_set(D, args.pair[0])
        G = parse_nested_set(D, args.pair[1])
        seq = coherence.good_elementary_sequence(D, F, G)
        return {
            "sequence": [[D.vertex_names(m) for m in H.elements] for H in seq]
        }
    if args.command == "support":
        F = parse_nested_set(D, args.pair[0])
        G = parse_nested_set(D, args.pair[1])
        supp = coherence.support(D, F, G)
        zsupp = coherence.central_support(D, F, G) if F.elements != G.elements else 0
        return {"supp": D.vertex_names(supp), "zsupp": D.vertex_names(zsupp)}
    raise DiagramError(f"unknown subcommand {args.command!r}")


def run(argv) -> CommandResult:
    """Parse arguments, dispatch, and fold any failure into the result."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    echo = "graphassoc " + " ".join(argv)
    try:
        with open(args.diagram, "r", encoding="utf-8") as fh:
            D = parse_diagram(fh.read())
    except OSError as exc:
        return CommandResult(echo, "", None, 2, f"cannot read diagram: {exc}")
    except ParseError as exc:
        return CommandResult(echo, "", None, 2, f"diagram parse error: {exc}")
    except DiagramError as exc:
        return CommandResult(echo, "", None, 1, str(exc))
    fp = fingerprint(D)
    try:
        payload = _dispatch(args, D)
    except ParseError as exc:
        return CommandResult(echo, fp, None, 2, str(exc))
    except (DiagramError, polytope.RealizationError, dynkin.CoefficientError) as exc:
        return CommandResult(echo, fp, None, 1, str(exc))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        return CommandResult(echo, fp, None, 1, f"invalid input: {exc}")
    return CommandResult(echo, fp, payload, 0)


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.message:
        print(result.message, file=sys.stderr)
    if result.payload is not None:
        print(json.dumps(result.payload, separators=(",", ":")))
    return result.status


if __name__ == "__main__":
    sys.exit(main())
