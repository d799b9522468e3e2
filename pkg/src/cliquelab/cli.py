"""Command-line interface.

Subcommands: cliques, kgraph, iterate, behavior, helly, hch, classify,
lemmas, verify, gen.  ``verify`` streams one JSON record per (graph, check)
and exits nonzero on any Fail or BudgetExceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import Pool
from typing import Iterable, TextIO

from . import kernels
from .bitset import bit_list
from .cliques import DEFAULT_VERTEX_BUDGET, clique_graph, iterate, maximal_cliques
from .dynamics import DEFAULT_MAX_ITERATIONS, classify_behavior
from .generate import CorpusSpec, corpus_from_graph6, enumerate_connected_bounded
from .graph import (
    NAMED_GRAPHS,
    Graph,
    GraphError,
    parse_edge_list_text,
    parse_graph6,
    to_dot,
    to_graph6,
)
from .helly import hajos_violation, is_clique_helly, is_helly_family, is_intersecting_family
from .lemmas import run_lemma_suite
from .structure import K2Analysis


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _add_source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="TOKEN", help="graph6 token")
    src.add_argument("--edge-list", metavar="FILE", help="edge-list text file")
    src.add_argument("--named", metavar="NAME",
                     help=f"one of: {', '.join(sorted(NAMED_GRAPHS))}")


def _add_output_args(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edge_list is not None:
        with open(args.edge_list, encoding="ascii") as fh:
            return parse_edge_list_text(fh.read())
    try:
        return NAMED_GRAPHS[args.named]
    except KeyError:
        raise GraphError(f"unknown named graph {args.named!r}") from None


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="cliquelab",
                                  description="clique-graph dynamics engine")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cliques", help="maximal cliques of a graph")
    _add_source_args(p)
    _add_output_args(p, ("text", "json"))

    p = sub.add_parser("kgraph", help="the clique graph K(G)")
    _add_source_args(p)
    _add_output_args(p, ("text", "json", "dot"))

    p = sub.add_parser("iterate", help="iterated clique graphs K^0..K^k")
    _add_source_args(p)
    _add_output_args(p, ("text", "json"))
    p.add_argument("--steps", type=int, default=5)
    p.add_argument("--vertex-budget", type=int, default=DEFAULT_VERTEX_BUDGET)

    p = sub.add_parser("behavior", help="convergence classification")
    _add_source_args(p)
    _add_output_args(p, ("json", "text"))
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITERATIONS)
    p.add_argument("--vertex-budget", type=int, default=DEFAULT_VERTEX_BUDGET)

    p = sub.add_parser("helly", help="clique-Helly tests")
    _add_source_args(p)
    _add_output_args(p, ("json", "text"))

    p = sub.add_parser("hch", help="hereditary clique-Helly (Hajós) test")
    _add_source_args(p)
    _add_output_args(p, ("json", "text"))

    p = sub.add_parser("classify", help="stars and neckties of K²(G)")
    _add_source_args(p)
    _add_output_args(p, ("json", "dot"))

    p = sub.add_parser("lemmas", help="run the lemma suite on one graph")
    _add_source_args(p)
    _add_output_args(p, ("json", "text"))

    p = sub.add_parser("gen", help="enumerate the corpus as graph6 lines")
    _add_corpus_args(p)
    p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("verify", help="corpus-wide verification pipeline")
    _add_corpus_args(p)
    p.add_argument("--graph6-file", metavar="PATH",
                   help="use this corpus instead of the generator")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITERATIONS)
    p.add_argument("--vertex-budget", type=int, default=DEFAULT_VERTEX_BUDGET)
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: CLIQUE_LAB_THREADS or 1)")
    p.add_argument("--output", metavar="PATH")

    return top


def _add_corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--delta-max", type=int, default=4)
    p.add_argument("--exclude-octahedron", action="store_true", default=False)


def _spec_from_args(args: argparse.Namespace) -> CorpusSpec:
    return CorpusSpec(args.n_min, args.n_max, args.delta_max,
                      args.exclude_octahedron)


# ---------------------------------------------------------------------------
# per-graph verification (also used by the acceptance tests)
# ---------------------------------------------------------------------------


def verify_records(g: Graph, max_iter: int, vertex_budget: int) -> tuple[list[dict], bool]:
    """All verification records for one graph; ok=False on any Fail or
    BudgetExceeded."""
    gid = to_graph6(g) if g.n <= 62 else f"order{g.n}"
    records: list[dict] = []
    ok = True

    behavior = classify_behavior(g, max_iter, vertex_budget)
    records.append({"graph": gid, "kind": "behavior", **behavior.to_json()})
    if not behavior.convergent:
        ok = False

    ana = K2Analysis(g)
    helly = is_clique_helly(g)
    records.append({"graph": gid, "kind": "helly", "clique_helly": helly,
                    "neckties": len(ana.neckties)})

    records.append({
        "graph": gid,
        "kind": "k2",
        "stars": len(ana.stars),
        "neckties": len(ana.neckties),
        "unmatched_neckties": sum(1 for v in ana.neckties if v.unmatched),
    })

    for report in run_lemma_suite(g):
        records.append({"graph": gid, "kind": "lemma", **report.to_json()})
        if report.failed:
            ok = False
    return records, ok


def _verify_worker(payload: tuple[str, int, int]) -> tuple[list[dict], bool]:
    token, max_iter, vertex_budget = payload
    return verify_records(parse_graph6(token), max_iter, vertex_budget)


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------


def _out_stream(args: argparse.Namespace) -> TextIO:
    if getattr(args, "output", None):
        return open(args.output, "w", encoding="utf-8")
    return sys.stdout


def _cmd_cliques(args: argparse.Namespace, out: TextIO) -> int:
    g = _load_graph(args)
    fam = maximal_cliques(g)
    if args.format == "json":
        out.write(_dump({"order": g.n, "cliques": [bit_list(q) for q in fam]}) + "\n")
    else:
        for q in fam:
            out.write(" ".join(map(str, bit_list(q))) + "\n")
    return 0


def _cmd_kgraph(args: argparse.Namespace, out: TextIO) -> int:
    g = _load_graph(args)
    kg, fam = clique_graph(g)
    labels = ["-".join(map(str, bit_list(q))) for q in fam]
    if args.format == "dot":
        out.write(to_dot(kg, labels))
    elif args.format == "json":
        out.write(_dump({
            "order": kg.n,
            "edges": list(kg.edges()),
            "cliques": [bit_list(q) for q in fam],
        }) + "\n")
    else:
        out.write(f"{kg.n} vertices\n")
        for u, v in kg.edges():
            out.write(f"{labels[u]} -- {labels[v]}\n")
    return 0


def _cmd_iterate(args: argparse.Namespace, out: TextIO) -> int:
    g = _load_graph(args)
    result = iterate(g, args.steps, args.vertex_budget)
    rec = {"orders": result.orders, "truncated": result.truncated}
    if result.projected_order is not None:
        rec["projected_order_at_least"] = result.projected_order
    if args.format == "json":
        out.write(_dump(rec) + "\n")
    else:
        out.write(" ".join(map(str, result.orders)))
        if result.truncated:
            out.write(f" (next > budget, at least {result.projected_order})")
        out.write("\n")
    return 0


def _cmd_behavior(args: argparse.Namespace, out: TextIO) -> int:
    g = _load_graph(args)
    behavior = classify_behavior(g, args.max_iter, args.vertex_budget)
    if args.format == "json":
        out.write(_dump(behavior.to_json()) + "\n")
    else:
        out.write(f"{behavior.verdict} orders={behavior.orders}\n")
    return 0 if behavior.convergent else 1


def _cmd_helly(args: argparse.Namespace, out: TextIO) -> int:
    g = _load_graph(args)
    fam = maximal_cliques(g)
    rec = {
        "clique_helly": is_clique_helly(g),
        "intersecting_cliques": is_intersecting_family(fam),
    }
    if len(fam) <= 20:
        rec["helly_family_oracle"] = is_helly_family(fam)
    if args.format == "json":
        out.write(_dump(rec) + "\n")
    else:
        out.write("".join(f"{k}: {v}\n" for k, v in sorted(rec.items())))
    return 0


def _cmd_hch(args: argparse.Namespace, out: TextIO) -> int:
    g = _load_graph(args)
    violation = hajos_violation(g)
    rec: dict = {"hajos_compatible": violation is None}
    if violation is not None:
        rec["embedding"] = violation.to_json()
    if args.format == "json":
        out.write(_dump(rec) + "\n")
    else:
        out.write(f"hajos_compatible: {violation is None}\n")
        if violation is not None:
            out.write(f"witness: inner={violation.inner} outer={violation.outer}\n")
    return 0 if violation is None else 1


def _cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    g = _load_graph(args)
    ana = K2Analysis(g)
    if args.format == "dot":
        out.write(to_dot(ana.k2graph, ana.k2_labels()))
    else:
        out.write(_dump(ana.to_json()) + "\n")
    return 0


def _cmd_lemmas(args: argparse.Namespace, out: TextIO) -> int:
    g = _load_graph(args)
    reports = run_lemma_suite(g)
    failed = any(r.failed for r in reports)
    if args.format == "json":
        for r in reports:
            out.write(_dump(r.to_json()) + "\n")
    else:
        for r in reports:
            out.write(f"{r.lemma_id}: {r.verdict}\n")
    return 1 if failed else 0


def _cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    spec = _spec_from_args(args)
    for g in enumerate_connected_bounded(spec):
        out.write(to_graph6(g) + "\n")
    return 0


def _worker_count(args: argparse.Namespace) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    env = os.environ.get("CLIQUE_LAB_THREADS")
    if env:
        return max(1, int(env))
    return 1


def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    spec = _spec_from_args(args)
    if args.graph6_file:
        with open(args.graph6_file, encoding="ascii") as fh:
            corpus: Iterable[Graph] = corpus_from_graph6(fh, spec)
    else:
        corpus = enumerate_connected_bounded(spec)
    workers = _worker_count(args)

    header = {
        "kind": "header",
        "spec": {
            "n_min": spec.n_min,
            "n_max": spec.n_max,
            "delta_max": spec.delta_max,
            "exclude_octahedron": spec.exclude_octahedron,
        },
        "budgets": {"max_iterations": args.max_iter,
                    "vertex_budget": args.vertex_budget},
        "kernels": kernels.IMPL_NAME,
        "workers": workers,
    }
    out.write(_dump(header) + "\n")

    graphs = 0
    fails = 0
    budget_exceeded = 0

    def consume(result: tuple[list[dict], bool]) -> None:
        nonlocal graphs, fails, budget_exceeded
        records, ok = result
        graphs += 1
        for rec in records:
            if rec["kind"] == "lemma" and rec["verdict"] == "Fail":
                fails += 1
            if rec["kind"] == "behavior" and rec["verdict"] == "BudgetExceeded":
                budget_exceeded += 1
            out.write(_dump(rec) + "\n")
        del ok

    if workers == 1:
        for g in corpus:
            consume(verify_records(g, args.max_iter, args.vertex_budget))
    else:
        payloads = ((to_graph6(g), args.max_iter, args.vertex_budget) for g in corpus)
        with Pool(workers) as pool:
            for result in pool.imap(_verify_worker, payloads, chunksize=16):
                consume(result)

    summary = {"kind": "summary", "graphs": graphs, "fails": fails,
               "budget_exceeded": budget_exceeded}
    out.write(_dump(summary) + "\n")
    return 0 if fails == 0 and budget_exceeded == 0 else 1


_COMMANDS = {
    "cliques": _cmd_cliques,
    "kgraph": _cmd_kgraph,
    "iterate": _cmd_iterate,
    "behavior": _cmd_behavior,
    "helly": _cmd_helly,
    "hch": _cmd_hch,
    "classify": _cmd_classify,
    "lemmas": _cmd_lemmas,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = _out_stream(args)
    try:
        return _COMMANDS[args.command](args, out)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
