"""Command-line front end.

Exit codes: 0 success (verified / computed / replay match), 1 a
counterexample or replay difference was found (still a valid report),
2 rejected input, 3 infeasible request or exhausted budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, blocks, lattice, search, speeds
from .errors import Infeasible, InvalidInput
from .graphs import GraphFamily, OrderedGraph
from .reports import SCHEMA_VERSION, canonical_json, render_text
from .runrecord import compare_payloads, load_record, persist_run


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ordshadow",
                                  description="shadows, types and speeds of ordered graphs")
    top.add_argument("--version", action="version", version=__version__)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--f", type=int, help="linear-speed offset f(k); default (k-1)(k+4)/2")
    common.add_argument("--max-size", type=int)
    common.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--seed", type=int)
    common.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--input")
    common.add_argument("--output")
    common.add_argument("--graph", help="graph literal like 4:1f")
    common.add_argument("--name", help="named family / property")
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--record", metavar="DIR", help="persist a run record here")

    sub = top.add_subparsers(dest="command", required=True)
    sub.add_parser("shadow", parents=[common])
    sub.add_parser("blocks", parents=[common])

    lat = sub.add_parser("lattice", parents=[common])
    lat.add_argument("action", choices=["verify-line-lemma", "shadow", "extremal"])

    ver = sub.add_parser("verify", parents=[common])
    ver.add_argument("action", choices=["theorem1", "gline", "2mT", "difftypes",
                                        "allcliques", "obs-calc"])

    sea = sub.add_parser("search", parents=[common])
    sea.add_argument("action", choices=["min-shadow", "question-5-1", "conjecture-k"])

    spd = sub.add_parser("speed", parents=[common])
    spd.add_argument("action", choices=["compute", "named", "closure", "check-theorem2"])

    rep = sub.add_parser("report", parents=[common])
    rep.add_argument("action", choices=["replay"])
    return top


def _require(args, *names):
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise InvalidInput(f"--{name} is required here")


def _load_family(args) -> GraphFamily:
    if args.graph is not None:
        g = OrderedGraph.from_literal(args.graph)
        return GraphFamily.from_graphs(g.n, [g])
    if args.input is not None:
        return GraphFamily.load(args.input)
    raise InvalidInput("need --graph or --input")


def _exit_code(payload: dict) -> int:
    if payload.get("counterexamples") or payload.get("violations") \
            or payload.get("lower_bound_violations"):
        return 1
    return 0


def _cmd_shadow(args) -> tuple[dict, int]:
    fam = _load_family(args)
    shadow = fam.shadow()
    payload = {
        "schema": SCHEMA_VERSION,
        "target": "shadow",
        "n": fam.n,
        "size": len(fam),
        "shadow_size": len(shadow),
        "shadow": shadow.literals(),
    }
    return payload, 0


def _cmd_blocks(args) -> tuple[dict, int]:
    _require(args, "graph")
    g = OrderedGraph.from_literal(args.graph)
    dec = blocks.homogeneous_blocks(g)
    t = blocks.type_of(g)
    payload = {
        "schema": SCHEMA_VERSION,
        "target": "blocks",
        "graph": g.literal(),
        "blocks": str(dec),
        "type": t.literal(),
        "excess": blocks.excess(g),
        "phi": list(blocks.phi(g)),
    }
    return payload, 0


def _cmd_lattice(args) -> tuple[dict, int]:
    if args.action == "verify-line-lemma":
        _require(args, "d", "n")
        payload = lattice.verify_line_dichotomy(
            args.d, args.n, mode=args.mode, trials=args.trials,
            seed=args.seed, workers=args.workers)
        return payload, _exit_code(payload)
    if args.action == "shadow":
        _require(args, "input")
        with open(args.input, "r", encoding="utf-8") as fh:
            A = lattice.LatticeSet.from_json_dict(json.load(fh))
        sh = A.shadow()
        payload = {
            "schema": SCHEMA_VERSION,
            "target": "lattice-shadow",
            "d": A.d, "n": A.n, "size": len(A),
            "shadow_size": len(sh),
            "shadow": sh.to_json_dict()["points"],
        }
        return payload, 0
    # extremal
    _require(args, "n")
    a1, a2 = lattice.extremal_sets(args.n)
    payload = {
        "schema": SCHEMA_VERSION,
        "target": "lattice-extremal",
        "n": args.n,
        "sets": [
            {"points": a1.to_json_dict()["points"], "size": len(a1),
             "shadow_size": len(a1.shadow()), "line": a1.find_line()},
            {"points": a2.to_json_dict()["points"], "size": len(a2),
             "shadow_size": len(a2.shadow()), "line": a2.find_line()},
        ],
    }
    return payload, 0


def _cmd_verify(args) -> tuple[dict, int]:
    if args.action == "theorem1":
        _require(args, "n", "max-size")
        report = search.verify_shadow_theorem(args.n, args.max_size,
                                              budget=args.budget, workers=args.workers)
    elif args.action == "gline":
        _require(args, "n", "max-size")
        report = search.verify_type_dichotomy(args.n, args.max_size,
                                              budget=args.budget, workers=args.workers)
    elif args.action == "2mT":
        _require(args, "n")
        report = search.verify_line_family_bound(args.n, budget=args.budget)
    elif args.action == "difftypes":
        _require(args, "n", "t", "m")
        report = search.verify_difftypes(args.n, args.t, args.m, mode=args.mode,
                                         trials=args.trials, seed=args.seed,
                                         budget=args.budget, workers=args.workers)
    elif args.action == "allcliques":
        _require(args, "n")
        report = search.verify_allcliques(args.n, mode=args.mode,
                                          trials=args.trials, seed=args.seed)
    else:  # obs-calc
        report = search.check_obs_calc(m=args.m, n=args.n, t=args.t)
    payload = report.to_payload()
    return payload, _exit_code(payload)


def _cmd_search(args) -> tuple[dict, int]:
    if args.action == "min-shadow":
        _require(args, "n", "t")
        report = search.min_shadow(args.n, args.t, budget=args.budget,
                                   workers=args.workers)
    elif args.action == "question-5-1":
        _require(args, "n")
        report = search.question_5_1(args.n, budget=args.budget, workers=args.workers)
    else:  # conjecture-k
        _require(args, "n", "k")
        report = search.verify_conjecture_generalk(args.n, args.k, f_k=args.f,
                                                   budget=args.budget,
                                                   workers=args.workers)
    payload = report.to_payload()
    return payload, _exit_code(payload)


def _cmd_speed(args) -> tuple[dict, int]:
    if args.action == "compute":
        _require(args, "input")
        prop = speeds.HereditaryProperty.load(args.input)
        payload = speeds.speed_sequence(prop, args.n).to_payload()
    elif args.action == "named":
        _require(args, "name", "n")
        prop = speeds.named_property(args.name, args.n, k=args.k)
        payload = speeds.speed_sequence(prop).to_payload()
    elif args.action == "closure":
        _require(args, "input", "n")
        generators = GraphFamily.load(args.input)
        prop = speeds.closure([generators], args.n)
        payload = speeds.speed_sequence(prop).to_payload()
    else:  # check-theorem2
        _require(args, "input", "k")
        prop = speeds.HereditaryProperty.load(args.input)
        payload = speeds.verify_theorem_hered(prop, args.k).to_payload()
    code = 1 if any(f.startswith("suspect-implementation") for f in
                    payload.get("findings", [])) else 0
    return payload, code


def _replay(args) -> tuple[dict, int]:
    _require(args, "input")
    record = load_record(args.input)
    argv = _strip_io_flags(record["command"])
    if argv and argv[0] == "ordshadow":
        argv = argv[1:]
    new_payload, _ = _dispatch_payload(argv)
    diffs = compare_payloads(record["payload"], new_payload)
    if record["version"] != __version__:
        diffs.insert(0, f"version: recorded {record['version']}, running {__version__}")
    payload = {
        "schema": SCHEMA_VERSION,
        "target": "replay",
        "record": str(args.input),
        "recorded_version": record["version"],
        "running_version": __version__,
        "match": not diffs,
        "differences": diffs,
    }
    return payload, 0 if not diffs else 1


def _strip_io_flags(argv: list[str]) -> list[str]:
    out = []
    skip = False
    for token in argv:
        if skip:
            skip = False
            continue
        if token in ("--record", "--output"):
            skip = True
            continue
        out.append(token)
    return out


_HANDLERS = {
    "shadow": _cmd_shadow,
    "blocks": _cmd_blocks,
    "lattice": _cmd_lattice,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "speed": _cmd_speed,
    "report": _replay,
}


def _dispatch_payload(argv: list[str]) -> tuple[dict, int]:
    """Execute a command, capturing rejected-input and infeasibility errors
    as payloads so error runs persist and replay like any other."""
    args = _parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except InvalidInput as exc:
        return {"schema": SCHEMA_VERSION, "status": "input-error",
                "error": str(exc)}, 2
    except Infeasible as exc:
        return {"schema": SCHEMA_VERSION, "status": "infeasible-error",
                "error": str(exc)}, 3


def cli_dispatch(argv: list[str]) -> int:
    """Run one command: print the report, honor --output/--record, and map
    errors onto the exit-code contract."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    payload, code = _dispatch_payload(argv)

    text = canonical_json(payload) if args.format == "json" else render_text(payload)
    print(text)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(canonical_json(payload) + "\n")
        except OSError as exc:
            print(f"cannot write --output: {exc}", file=sys.stderr)
            return 2
    if args.record:
        inputs = [args.input] if args.input else []
        config = {key: value for key, value in sorted(vars(args).items())
                  if key not in ("record", "output", "format") and value is not None}
        persist_run(payload, args.record, ["ordshadow", *argv], config, inputs,
                    __version__)
    return code


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
