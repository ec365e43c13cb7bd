"""Command-line front end.  JSON on stdout, logs on stderr.

Exit codes: 0 ok/feasible, 2 infeasible/no realization, 1 usage, cap or
precondition error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import replace
from typing import Sequence

from degseq.core import DEFAULT_CAPS, ObjectiveSpec, evaluate, format_rational, parse_rational
from degseq.errors import DegSeqError, DomainError
from degseq.hardness import ThreePartitionInstance, lift_to_k, reduce_3partition
from degseq.optimize import (
    DpSolution,
    linear_opt_hyper,
    linear_opt_multi,
    opt_convex_multi,
    opt_graph_dp,
    opt_multi_dp,
    opt_threshold_dp,
)
from degseq.oracle import brute_opt, decide_degree_sequence
from degseq.polytope import polytope_vertices, verify_threshold_vertex_theorem
from degseq.realize import eg_check, havel_hakimi_realize, multi_feasible, multi_realize

log = logging.getLogger("degseq")

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2

ALGORITHMS = ("multi-dp", "graph-dp", "threshold-dp", "linear-multi", "linear-hyper", "convex-multi")


class UsageError(DegSeqError):
    pass


def parse_vector(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def expand_objective(obj: dict, n: int, m: int) -> ObjectiveSpec:
    """Build an ObjectiveSpec from the ``objective`` field of an instance file.

    Besides explicit ``identical``/``per-vertex`` tables this accepts the
    shorthands ``squares`` (t^2), ``neg-squares-at`` with ``d`` (-(t-d_i)^2)
    and ``linear`` with ``weights`` (w_i t), tabulated on ``{0..m}``.
    """
    kind = obj.get("kind")
    if kind == "identical":
        tables = obj.get("tables") or []
        if len(tables) != 1:
            raise UsageError("identical objective needs exactly one table row")
        return ObjectiveSpec.identical(tables[0])
    if kind == "per-vertex":
        tables = obj.get("tables") or []
        if len(tables) != n:
            raise UsageError(f"per-vertex objective needs {n} rows")
        return ObjectiveSpec.per_vertex(tables)
    if kind == "squares":
        return ObjectiveSpec.identical([t * t for t in range(m + 1)])
    if kind == "neg-squares-at":
        target = obj.get("d")
        if target is None or len(target) != n:
            raise UsageError("neg-squares-at needs a length-n vector 'd'")
        return ObjectiveSpec.per_vertex([[-(t - di) ** 2 for t in range(m + 1)] for di in target])
    if kind == "linear":
        w = obj.get("weights")
        if w is None or len(w) != n:
            raise UsageError("linear objective needs a length-n vector 'weights'")
        return ObjectiveSpec.per_vertex([[parse_rational(wi) * t for t in range(m + 1)] for wi in w])
    raise UsageError(f"unknown objective kind {kind!r}")


def load_instance(path: str) -> tuple[int, int, int, ObjectiveSpec]:
    try:
        with (sys.stdin if path == "-" else open(path, encoding="utf-8")) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read instance {path}: {exc}") from None
    try:
        n, m = int(data["n"]), int(data["m"])
        k = int(data.get("k", 2))
        obj = data["objective"]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed instance: {exc}") from None
    return n, k, m, expand_objective(obj, n, m)


def _weights(f: ObjectiveSpec, n: int):
    """Per-vertex slopes of an affine objective."""
    out = []
    for i in range(n):
        row = f.row(i)
        slope = row[1] - row[0] if len(row) > 1 else 0
        if any(row[t] - row[0] != slope * t for t in range(len(row))):
            raise DomainError("linear algorithms need affine objective rows")
        out.append(slope)
    return out


def run_algorithm(alg: str, f: ObjectiveSpec, n: int, k: int, m: int, args) -> DpSolution:
    if alg == "multi-dp":
        return opt_multi_dp(f, k, n, m)
    if alg == "graph-dp":
        return opt_graph_dp(f, n, m)
    if alg == "threshold-dp":
        return opt_threshold_dp(f, n, m)
    if alg == "convex-multi":
        return opt_convex_multi(f, k, n, m, mode=args.mode, caps=args.caps)
    if alg in ("linear-multi", "linear-hyper"):
        f.check_vertices(n)
        w = _weights(f, n)
        sol = linear_opt_multi(w, k, m) if alg == "linear-multi" else linear_opt_hyper(w, k, m, args.method)
        # report sum f_i(d_i), which adds the constant rows f_i(0)
        return replace(sol, value=evaluate(f, sol.degrees))
    raise UsageError(f"unknown algorithm {alg!r}")


def envelope(sol: DpSolution, elapsed: float) -> dict:
    return {
        "status": "ok",
        "algorithm": sol.algorithm,
        "value": format_rational(sol.value),
        "degrees": list(sol.degrees),
        "witness": sol.witness.to_json(),
        "elapsed_ms": round(elapsed * 1000, 3),
    }


def error_payload(exc: Exception, status: str = "error") -> dict:
    code = exc.code if isinstance(exc, DegSeqError) else type(exc).__name__
    return {"status": status, "code": code, "message": str(exc)}


def emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def cmd_check(args) -> int:
    d = parse_vector(args.d)
    if args.kind == "graph":
        ok = eg_check(d)
        out = {"kind": "graph", "feasible": ok}
        if ok:
            out["witness"] = havel_hakimi_realize(d).to_json()
    elif args.kind == "multi":
        if args.k is None or args.m is None:
            raise UsageError("check multi needs --k and --m")
        ok = multi_feasible(d, args.k, args.m)
        out = {"kind": "multi", "feasible": ok}
        if ok:
            out["witness"] = multi_realize(d, args.k, args.m).to_json()
    else:
        if args.k is None:
            raise UsageError("check hyper needs --k")
        if len(d) > args.max_n:
            raise UsageError(f"n={len(d)} exceeds --max-n {args.max_n}")
        h = decide_degree_sequence(d, args.k, args.caps)
        ok = h is not None
        out = {"kind": "hyper", "feasible": ok}
        if ok:
            out["witness"] = h.to_json()
    emit(out)
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_optimize(args) -> int:
    n, k, m, f = load_instance(args.instance)
    start = time.perf_counter()
    try:
        sol = run_algorithm(args.algorithm, f, n, k, m, args)
    except DegSeqError as exc:
        emit(error_payload(exc))
        return EXIT_ERROR
    emit(envelope(sol, time.perf_counter() - start))
    return EXIT_OK


def cmd_reduce(args) -> int:
    inst = ThreePartitionInstance(tuple(parse_vector(args.a)), args.b)
    out = reduce_3partition(inst).to_json()
    if args.lift is not None:
        out["lifted"] = list(lift_to_k(out["d"], args.lift))
    emit(out)
    return EXIT_OK


def cmd_polytope(args) -> int:
    if args.n > args.max_n:
        raise UsageError(f"n={args.n} exceeds --max-n {args.max_n}")
    if args.verify_threshold:
        if args.k != 2:
            raise UsageError("--verify-threshold is for graphs (k=2)")
        report = verify_threshold_vertex_theorem(args.n, args.m, args.caps)
        emit(report)
        return EXIT_OK if report["result"] == "equal" else EXIT_INFEASIBLE
    verts = polytope_vertices(args.n, args.k, args.m, args.caps)
    emit({"n": args.n, "k": args.k, "m": args.m, "vertices": verts.to_json()})
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.task == "decide":
        if args.d is None or args.k is None:
            raise UsageError("oracle decide needs --d and --k")
        d = parse_vector(args.d)
        if len(d) > args.max_n:
            raise UsageError(f"n={len(d)} exceeds --max-n {args.max_n}")
        h = decide_degree_sequence(d, args.k, args.caps)
        if h is None:
            emit({"status": "infeasible", "feasible": False})
            return EXIT_INFEASIBLE
        emit({"status": "ok", "feasible": True, "witness": h.to_json()})
        return EXIT_OK
    if args.instance is None:
        raise UsageError("oracle brute-opt needs --instance")
    n, k, m, f = load_instance(args.instance)
    start = time.perf_counter()
    sol = brute_opt(f, n, k, m, mode=args.mode, caps=args.caps, jobs=args.jobs)
    if sol is None:
        emit({"status": "infeasible"})
        return EXIT_INFEASIBLE
    emit(envelope(sol, time.perf_counter() - start))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="degseq", description="Optimization over degree sequences.", allow_abbrev=False
    )
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--max-enum", type=int, default=DEFAULT_CAPS.max_enum,
                   help="cap on enumerated structures / search nodes")
    p.add_argument("--max-n", type=int, default=12, help="cap on n for brute-force commands")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for oracle enumeration")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", allow_abbrev=False, help="decide whether d is a degree sequence")
    c.add_argument("kind", choices=("graph", "multi", "hyper"))
    c.add_argument("d", help="comma-separated degrees")
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int)
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("optimize", allow_abbrev=False, help="optimize an instance file")
    o.add_argument("algorithm", choices=ALGORITHMS)
    o.add_argument("instance", help="instance JSON file, or - for stdin")
    o.add_argument("--mode", choices=("separable-convex", "enumerate"), default="separable-convex")
    o.add_argument("--method", choices=("lawler", "enumerate"), default="lawler")
    o.set_defaults(func=cmd_optimize)

    r = sub.add_parser("reduce", allow_abbrev=False, help="3-partition to 3-hypergraph degree sequence")
    r.add_argument("--a", required=True, help="comma-separated item sizes")
    r.add_argument("--b", required=True, type=int)
    r.add_argument("--lift", type=int, metavar="K", help="also lift d to K-hypergraphs")
    r.set_defaults(func=cmd_reduce)

    pt = sub.add_parser("polytope", allow_abbrev=False, help="vertices of the m-edge degree sequence polytope")
    pt.add_argument("--n", required=True, type=int)
    pt.add_argument("--m", required=True, type=int)
    pt.add_argument("--k", type=int, default=2)
    pt.add_argument("--verify-threshold", action="store_true")
    pt.set_defaults(func=cmd_polytope)

    orc = sub.add_parser("oracle", allow_abbrev=False, help="brute-force references")
    orc.add_argument("--task", required=True, choices=("decide", "brute-opt"))
    orc.add_argument("--d")
    orc.add_argument("--k", type=int)
    orc.add_argument("--instance")
    orc.add_argument("--mode", choices=("hyper", "multi"), default="hyper")
    orc.set_defaults(func=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    args.caps = replace(DEFAULT_CAPS, max_enum=args.max_enum, max_partition_n=args.max_n)
    log.info("running %s", args.command)
    try:
        return args.func(args)
    except DegSeqError as exc:
        log.debug("failed", exc_info=True)
        emit(error_payload(exc))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
