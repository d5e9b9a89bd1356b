"""Command line front end.

Every command prints one JSON report to stdout (a list when several
input files are given) and exits 0 on success, 2 on malformed input,
3 when an answer was withheld for capacity, 4 on infeasible queries,
and 5 when an internal invariant check failed. Certificates are
re-verified against their definitions before they are printed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from pathlib import Path

from . import oracle as oracle_mod
from .acyclicity import (
    TYPE4_DEFAULT_BOUND,
    classify,
    recognize_type4,
    verify_ordering,
)
from .connectivity import menger_gap, solve_type4
from .core import EdgeColoredGraph, Walk, is_pc_walk, parse_graph, serialize_graph
from .errors import (
    CapacityError,
    GraphError,
    InfeasibleSeparatorError,
    InvariantViolation,
    NotTypeFourError,
    ParseError,
    PcgraphError,
)
from .fixtures import write_corpus
from .reductions import (
    betweenness_to_type4,
    digraph_to_2ecg,
    extend,
    parse_betweenness,
    parse_digraph,
    parse_plain_graph,
    parse_rbpm,
    rbpm_to_packing,
    type5_deletion_reduction,
    vertex_cover_to_separator,
    vertex_split_edge_transform,
)
from .structures import has_pc_closed_trail, has_pc_closed_walk, has_pc_cycle

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_INFEASIBLE = 4
EXIT_INVARIANT = 5

_ERROR_CODES = {
    "input": EXIT_INPUT,
    "parse": EXIT_INPUT,
    "capacity": EXIT_CAPACITY,
    "infeasible": EXIT_INFEASIBLE,
    "invariant": EXIT_INVARIANT,
}


def _error_kind(exc: Exception) -> str:
    if isinstance(exc, ParseError):
        return "parse"
    if isinstance(exc, CapacityError):
        return "capacity"
    if isinstance(exc, InfeasibleSeparatorError):
        return "infeasible"
    if isinstance(exc, InvariantViolation):
        return "invariant"
    return "input"


def _walk_json(w: Walk) -> dict:
    return {"vertices": list(w.vertices), "edges": list(w.edges)}


def _load(path: str) -> tuple[EdgeColoredGraph, dict]:
    data = Path(path).read_bytes()
    G = parse_graph(data.decode())
    info = {
        "path": path,
        "sha256": hashlib.sha256(data).hexdigest(),
        "n": G.n,
        "m": G.m,
        "c": G.c,
    }
    return G, info


def _envelope(command: str, info: dict | None = None) -> dict:
    env: dict = {"command": command}
    if info is not None:
        env["input"] = info
    return env


# ---------------------------------------------------------------------------
# classify


def _classify_fast(G: EdgeColoredGraph, bound: int) -> tuple[dict, int]:
    res = classify(G, type4_bound=bound)
    for k, ordering in res.orderings.items():
        if not verify_ordering(G, ordering, k):
            raise InvariantViolation(f"emitted level-{k} ordering fails re-check")
    payload = {
        "result": {
            "level": res.level,
            "type4_skipped": res.type4_skipped,
            "verdicts": dict(res.verdicts),
            "orderings": {k: list(o) for k, o in res.orderings.items()},
        },
        "detections": {
            "pc_cycle": has_pc_cycle(G, want_certificate=False).found,
            "pc_closed_trail": has_pc_closed_trail(G, want_certificate=False).found,
            "pc_closed_walk": has_pc_closed_walk(G, want_certificate=False).found,
        },
        "mode": "fast",
    }
    return payload, EXIT_CAPACITY if res.level is None else EXIT_OK


def _classify_oracle(G: EdgeColoredGraph) -> tuple[dict, int]:
    verdicts: dict[int, bool] = {}
    orderings: dict[int, list[int]] = {}
    for k in (1, 2, 3, 4, 5):
        found = oracle_mod.brute_recognize(G, k)
        verdicts[k] = found is not None
        if found is not None:
            if not verify_ordering(G, found, k):
                raise InvariantViolation(f"oracle level-{k} ordering fails re-check")
            orderings[k] = list(found)
    level = 0
    while level < 5 and verdicts[level + 1]:
        level += 1
    payload = {
        "result": {
            "level": level,
            "type4_skipped": False,
            "verdicts": verdicts,
            "orderings": orderings,
        },
        "detections": {
            "pc_cycle": oracle_mod.brute_has_pc_cycle(G),
            "pc_closed_trail": oracle_mod.brute_has_pc_closed_trail(G),
            "pc_closed_walk": oracle_mod.brute_has_pc_closed_walk(G),
        },
        "mode": "oracle",
    }
    return payload, EXIT_OK


def _cmd_classify(args) -> tuple[list[dict], int]:
    reports = []
    worst = EXIT_OK
    for path in args.files:
        env = _envelope("classify")
        t0 = time.perf_counter()
        try:
            G, info = _load(path)
            env["input"] = info
            payload, code = (
                _classify_oracle(G) if args.oracle else _classify_fast(G, args.type4_bound)
            )
            env.update(payload)
        except (PcgraphError, OSError) as exc:
            kind = _error_kind(exc)
            env.setdefault("input", {"path": path})
            env["error"] = {"kind": kind, "message": str(exc)}
            code = _ERROR_CODES[kind]
        env["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        reports.append(env)
        worst = max(worst, code)
    return reports, worst


# ---------------------------------------------------------------------------
# detect


_DETECTORS = {
    "cycle": (has_pc_cycle, oracle_mod.brute_has_pc_cycle, "is_cycle"),
    "trail": (has_pc_closed_trail, oracle_mod.brute_has_pc_closed_trail, "is_trail"),
    "walk": (has_pc_closed_walk, oracle_mod.brute_has_pc_closed_walk, None),
}


def _cmd_detect(args) -> tuple[list[dict], int]:
    fast, brute, extra_check = _DETECTORS[args.structure]
    reports = []
    worst = EXIT_OK
    for path in args.files:
        env = _envelope("detect")
        env["structure"] = args.structure
        t0 = time.perf_counter()
        try:
            G, info = _load(path)
            env["input"] = info
            if args.oracle:
                env["found"] = brute(G)
                env["certificate"] = None
                env["certificate_capped"] = False
                env["mode"] = "oracle"
                code = EXIT_OK
            else:
                res = fast(G)
                cert = res.certificate
                if cert is not None:
                    ok = is_pc_walk(G, cert) and cert.closed
                    if ok and extra_check is not None:
                        ok = getattr(cert, extra_check)()
                    if not ok:
                        raise InvariantViolation(
                            f"{args.structure} certificate fails re-check"
                        )
                env["found"] = res.found
                env["certificate"] = None if cert is None else _walk_json(cert)
                env["certificate_capped"] = res.certificate_capped
                env["mode"] = "fast"
                code = EXIT_CAPACITY if res.certificate_capped else EXIT_OK
        except (PcgraphError, OSError) as exc:
            kind = _error_kind(exc)
            env.setdefault("input", {"path": path})
            env["error"] = {"kind": kind, "message": str(exc)}
            code = _ERROR_CODES[kind]
        env["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        reports.append(env)
        worst = max(worst, code)
    return reports, worst


# ---------------------------------------------------------------------------
# connectivity


def _verify_connectivity(G, x, y, result) -> None:
    if len(result.separator) != result.s or len(result.paths) != result.t:
        raise InvariantViolation("separator or packing size mismatch")
    if result.separator_kind == "vertex":
        if oracle_mod.pc_path_exists(G, x, y, banned_vertices=result.separator):
            raise InvariantViolation("claimed separator leaves a path alive")
    else:
        if oracle_mod.pc_path_exists(G, x, y, banned_edges=result.separator):
            raise InvariantViolation("claimed edge separator leaves a path alive")
    seen_internal: set[int] = set()
    for p in result.paths:
        if not (is_pc_walk(G, p) and p.is_path()):
            raise InvariantViolation("packing member is not a properly colored path")
        if p.vertices[0] != x or p.vertices[-1] != y:
            raise InvariantViolation("packing member has wrong endpoints")
        inner = set(p.vertices[1:-1])
        if inner & seen_internal:
            raise InvariantViolation("packing members share an internal vertex")
        seen_internal |= inner


def _cmd_connectivity(args) -> tuple[list[dict], int]:
    env = _envelope("connectivity")
    env["terminals"] = [args.x, args.y]
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        G, info = _load(args.file)
        env["input"] = info
        notes = []
        if args.oracle:
            result = menger_gap(G, args.x, args.y)
        else:
            try:
                result = solve_type4(G, args.x, args.y)
            except NotTypeFourError as exc:
                notes.append(f"not level 4: {exc.diagnostic}; fell back to search")
                result = menger_gap(G, args.x, args.y)
        _verify_connectivity(G, args.x, args.y, result)
        env["result"] = {
            "s": result.s,
            "t": result.t,
            "separator": list(result.separator),
            "separator_kind": result.separator_kind,
            "menger_equal": result.menger_equal,
            "method": result.method,
            "paths": [_walk_json(p) for p in result.paths],
        }
        env["notes"] = notes
    except (PcgraphError, OSError) as exc:
        kind = _error_kind(exc)
        env.setdefault("input", {"path": args.file})
        env["error"] = {"kind": kind, "message": str(exc)}
        code = _ERROR_CODES[kind]
    env["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return [env], code


# ---------------------------------------------------------------------------
# reduce


def _parse_sizes(text: str):
    parts = text.split(",")
    if len(parts) == 1:
        return int(parts[0])
    return [int(p) for p in parts]


def _cmd_reduce(args) -> tuple[list[dict], int]:
    env = _envelope("reduce")
    env["kind"] = args.kind
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        data = Path(args.input).read_bytes()
        env["input"] = {
            "path": args.input,
            "sha256": hashlib.sha256(data).hexdigest(),
        }
        text = data.decode()
        if args.kind == "digraph":
            image, meta = digraph_to_2ecg(parse_digraph(text))
        elif args.kind == "betweenness":
            image, meta = betweenness_to_type4(parse_betweenness(text))
        elif args.kind == "vertex-cover":
            image, meta = vertex_cover_to_separator(parse_plain_graph(text))
        elif args.kind == "rbpm":
            image, meta = rbpm_to_packing(parse_rbpm(text))
        elif args.kind == "extend":
            if args.sizes is None:
                raise GraphError("extend needs --sizes")
            image, meta = extend(parse_graph(text), _parse_sizes(args.sizes))
        elif args.kind == "split":
            keep = [int(v) for v in args.keep.split(",")] if args.keep else ()
            image, meta = vertex_split_edge_transform(parse_graph(text), keep=keep)
        elif args.kind == "fvs":
            image, meta = type5_deletion_reduction(parse_digraph(text), mode="fvs")
        elif args.kind == "bipartization":
            image, meta = type5_deletion_reduction(
                parse_plain_graph(text), mode="bipartization"
            )
        else:
            raise GraphError(f"unknown reduction kind '{args.kind}'")
        out_graph = Path(args.out + ".ecg")
        out_map = Path(args.out + ".map.json")
        out_graph.write_text(serialize_graph(image))
        out_map.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
        env["outputs"] = {"graph": str(out_graph), "map": str(out_map)}
        env["image"] = {"n": image.n, "m": image.m, "c": image.c}
    except (PcgraphError, OSError, ValueError) as exc:
        kind = _error_kind(exc) if isinstance(exc, PcgraphError) else "input"
        env["error"] = {"kind": kind, "message": str(exc)}
        code = _ERROR_CODES[kind]
    env["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return [env], code


# ---------------------------------------------------------------------------
# fixtures and oracle-check


def _cmd_fixtures(args) -> tuple[list[dict], int]:
    env = _envelope("fixtures")
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        manifest = write_corpus(args.outdir)
        names = json.loads(manifest.read_text())["fixtures"]
        env["outdir"] = args.outdir
        env["manifest"] = str(manifest)
        env["written"] = [e["name"] for e in names]
    except OSError as exc:
        env["error"] = {"kind": "input", "message": str(exc)}
        code = EXIT_INPUT
    env["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return [env], code


def _cmd_oracle_check(args) -> tuple[list[dict], int]:
    from .acyclicity import recognize_type1, recognize_type2, recognize_type3, recognize_type5

    recognizers = {
        1: recognize_type1,
        2: recognize_type2,
        3: recognize_type3,
        4: recognize_type4,
        5: recognize_type5,
    }
    env = _envelope("oracle-check")
    t0 = time.perf_counter()
    rng = random.Random(args.seed)
    disagreements = []
    for i in range(args.random):
        G = oracle_mod.random_multigraph(rng, n_max=args.n_max)
        for k, fast in recognizers.items():
            got = fast(G) is not None
            want = oracle_mod.brute_recognize(G, k) is not None
            if got != want:
                disagreements.append(
                    {"instance": i, "check": f"level-{k}", "fast": got, "oracle": want}
                )
        pairs = [
            ("cycle", has_pc_cycle(G, want_certificate=False).found,
             oracle_mod.brute_has_pc_cycle(G)),
            ("trail", has_pc_closed_trail(G, want_certificate=False).found,
             oracle_mod.brute_has_pc_closed_trail(G)),
            ("walk", has_pc_closed_walk(G, want_certificate=False).found,
             oracle_mod.brute_has_pc_closed_walk(G)),
        ]
        for name, got, want in pairs:
            if got != want:
                disagreements.append(
                    {"instance": i, "check": name, "fast": got, "oracle": want}
                )
    env["instances"] = args.random
    env["seed"] = args.seed
    env["n_max"] = args.n_max
    env["disagreements"] = disagreements
    env["ok"] = not disagreements
    env["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return [env], EXIT_OK if not disagreements else EXIT_INVARIANT


# ---------------------------------------------------------------------------
# argument wiring


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pcgraph",
        description="properly colored acyclicity levels, walk structures, "
        "and path connectivity in edge-colored multigraphs",
    )
    top.add_argument("--json-out", metavar="PATH", help="also write the report here")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="levels 0..5 plus structure decisions")
    p.add_argument("files", nargs="+")
    p.add_argument("--oracle", action="store_true", help="answer by exhaustive scan")
    p.add_argument("--type4-bound", type=int, default=TYPE4_DEFAULT_BOUND)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("detect", help="find one properly colored structure")
    p.add_argument("structure", choices=("cycle", "trail", "walk"))
    p.add_argument("files", nargs="+")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(run=_cmd_detect)

    p = sub.add_parser("connectivity", help="minimum separator and maximum packing")
    p.add_argument("file")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(run=_cmd_connectivity)

    p = sub.add_parser("reduce", help="emit a transform image plus its map")
    p.add_argument(
        "kind",
        choices=(
            "digraph",
            "betweenness",
            "vertex-cover",
            "rbpm",
            "extend",
            "split",
            "fvs",
            "bipartization",
        ),
    )
    p.add_argument("input")
    p.add_argument("--out", required=True, metavar="PREFIX")
    p.add_argument("--sizes", help="for extend: one count or per-vertex list")
    p.add_argument("--keep", help="for split: comma list of vertices kept whole")
    p.set_defaults(run=_cmd_reduce)

    p = sub.add_parser("fixtures", help="write the built-in corpus")
    p.add_argument("outdir")
    p.set_defaults(run=_cmd_fixtures)

    p = sub.add_parser("oracle-check", help="random fast-vs-exhaustive sweep")
    p.add_argument("--random", type=int, default=25, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(run=_cmd_oracle_check)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    reports, code = args.run(args)
    doc = reports[0] if len(reports) == 1 else reports
    text = json.dumps(doc, indent=2, sort_keys=False)
    print(text)
    if args.json_out:
        Path(args.json_out).write_text(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
