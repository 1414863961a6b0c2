"""``hic`` command line."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chordal import NotChordalError, chordal_homotopy_type, check_decomposition_hypotheses
from .complex import BuildLimits, FaceBudgetExceeded, build_ind_complex
from .domination import (
    InfeasibleDomination,
    distance_domination_number,
    set_domination_number,
    strong_domination_number,
)
from .generators import FAMILIES, GeneratorSpec, generate_graph
from .graph import GraphError, parse_graph, serialize_graph
from .homology import betti_mod_p, reduced_homology
from .synthesis import SynthesisError, WedgeSpec, parse_summands, synthesize_chordal
from .verify import SUITES, SuiteConfig, replay_bundle, run_suite


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _emit(obj, out: str | None = None):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_param(text: str):
    key, _, value = text.partition("=")
    if not _:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        num = int(value)
    except ValueError:
        try:
            num = float(value)
        except ValueError:
            num = {"true": True, "false": False}.get(value.lower(), value)
    return key, num


def cmd_homology(args):
    G = _read_graph(args.graph)
    K = build_ind_complex(G, args.r, BuildLimits(args.max_faces))
    out = reduced_homology(K).to_dict()
    out["f_vector"] = list(K.f_vector)
    if args.mod_p:
        out["mod_p"] = {
            "p": args.mod_p,
            "betti": {str(d): b for d, b in sorted(betti_mod_p(K, args.mod_p).items())},
        }
    _emit(out)
    return 0


def cmd_chordal(args):
    G = _read_graph(args.graph)
    T, trace = chordal_homotopy_type(G, args.r)
    if args.trace:
        _emit(trace.to_dict(), args.trace)
    _emit(T.to_dict())
    return 0


def cmd_domination(args):
    G = _read_graph(args.graph)
    if args.kind == "distance":
        cert = distance_domination_number(G, args.r)
    elif args.kind == "set":
        cert = set_domination_number(G, args.r)
    else:
        cert = strong_domination_number(G)
    _emit(cert.to_dict())
    return 0


def cmd_supports(args):
    G = _read_graph(args.graph)
    _emit(check_decomposition_hypotheses(G, args.vertex, args.r).to_dict())
    return 0


def cmd_synthesize(args):
    res = synthesize_chordal(WedgeSpec(args.r, parse_summands(args.summands)))
    text = serialize_graph(res.graph, comment=f"r={args.r} summands={args.summands} expected={res.expected}")
    if args.out:
        Path(args.out).write_text(text)
        Path(args.out + ".json").write_text(res.to_json() + "\n")
    else:
        sys.stdout.write(text)
    return 0


def cmd_generate(args):
    spec = GeneratorSpec(args.family, dict(args.params or ()), args.seed)
    G = generate_graph(spec)
    text = serialize_graph(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args):
    if args.replay:
        bundle = json.loads(Path(args.replay).read_text())
        outcome = replay_bundle(bundle)
        _emit({"status": outcome.status, "values": outcome.values})
        return 1 if outcome.status == "fail" else 0
    if not args.suite:
        raise SystemExit("hic verify: --suite is required unless --replay is given")
    cfg = SuiteConfig(
        args.suite,
        trials=args.trials,
        max_n=args.max_n,
        r_max=args.r_max,
        r_min=args.r_min,
        seed=args.seed,
        max_faces=args.max_faces,
        max_nodes=args.max_nodes,
        workers=args.workers,
    )
    report = run_suite(cfg)
    if args.json:
        Path(args.json).write_text(report.to_json())
    print(report.summary())
    if report.run:
        print(f"vacuous fraction: {report.vacuous_fraction:.3f}")
    for n, bundle in enumerate(report.counterexamples):
        if args.bundle_dir:
            path = Path(args.bundle_dir) / f"{args.suite}-{bundle['trial']}-r{bundle['r']}.json"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(bundle, indent=2, sort_keys=True) + "\n")
            print(f"counterexample {n}: {path}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hic", description="r-independence complexes of graphs")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("homology", help="reduced integral homology of Ind_r(G)")
    s.add_argument("--graph", required=True, help="edge-list file, or - for stdin")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--mod-p", type=int, default=None)
    s.add_argument("--max-faces", type=int, default=2_000_000)
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("chordal", help="homotopy type of Ind_r(G) for chordal G")
    s.add_argument("--graph", required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--trace", default=None, help="write the decomposition trace here")
    s.set_defaults(func=cmd_chordal)

    s = sub.add_parser("domination", help="exact domination invariants")
    s.add_argument("--graph", required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--kind", choices=("distance", "set", "strong"), required=True)
    s.set_defaults(func=cmd_domination)

    s = sub.add_parser("supports", help="r-supports of a vertex and their flags")
    s.add_argument("--graph", required=True)
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_supports)

    s = sub.add_parser("synthesize", help="chordal graph realising a wedge of spheres")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--summands", required=True, help='e.g. "1:1,2:2" (d:k pairs)')
    s.add_argument("--out", default=None, help="edge-list path; labels go to OUT.json")
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("generate", help="generate a graph from a named family")
    s.add_argument("--family", required=True, choices=sorted(FAMILIES))
    s.add_argument("--params", nargs="*", type=_parse_param, metavar="KEY=VALUE")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify", help="run a named verification suite")
    s.add_argument("--suite", choices=sorted(SUITES))
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--max-n", type=int, default=9)
    s.add_argument("--r-max", type=int, default=3)
    s.add_argument("--r-min", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-faces", type=int, default=2_000_000)
    s.add_argument("--max-nodes", type=int, default=1_000_000)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--json", default=None, help="write the JSON report here")
    s.add_argument("--bundle-dir", default=None, help="write counterexample bundles here")
    s.add_argument("--replay", default=None, help="re-run one counterexample bundle")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, SynthesisError, NotChordalError, InfeasibleDomination,
            FaceBudgetExceeded, OSError, ValueError) as e:
        print(f"hic {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
