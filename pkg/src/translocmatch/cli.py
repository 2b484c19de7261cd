"""Command-line front end.

``translocmatch`` searches in-process by default; with ``--server`` it acts
as a thin client of a running translocmatch service.  ``translocmatch
bench`` runs the instrumented harness, ``translocmatch serve`` starts the
HTTP service.

Exit codes: 0 success, 1 no match (only with --fail-on-nomatch), 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import (
    BUDGET_FACTOR,
    DEFAULT_BUDGET_SIZES,
    RandomTextSpec,
    assert_worst_case_budgets,
    measure_average_work,
    unary_corpus,
    write_counter_csv,
)
from .core import ENGINES as ENGINE_NAMES
from .core import SearchConfig, SearchReport, VARIANTS, max_translocations
from .engines import search
from .textio import load_document


def _search_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="translocmatch",
        description="Approximate search allowing non-overlapping translocations "
        "of adjacent, possibly different-length factors.",
    )
    pat = p.add_mutually_exclusive_group(required=True)
    pat.add_argument("-p", "--pattern", help="pattern given literally")
    pat.add_argument("--pattern-file", help="read the pattern from a file")
    p.add_argument("-t", "--text", required=True, help="text file, or - for stdin")
    p.add_argument("-d", "--delta", type=int, default=None,
                   help="translocation bound (default: floor(m/2))")
    p.add_argument("--variant", choices=VARIANTS, default="c",
                   help="a: unbounded count, b: bounded count, "
                   "c: positions (default), d: per-position cost sets")
    p.add_argument("--engine", choices=ENGINE_NAMES, default="dawg")
    p.add_argument("--format", choices=("plain", "fasta", "auto"), default="auto",
                   help="input format (auto sniffs extension and '>' headers)")
    p.add_argument("--fold-case", action="store_true", help="uppercase inputs")
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    p.add_argument("--fail-on-nomatch", action="store_true",
                   help="exit with status 1 when nothing matches")
    p.add_argument("--server", metavar="URL",
                   help="delegate to a running translocmatch service")
    return p


def _report_payload(report: SearchReport) -> dict:
    payload: dict = {"variant": report.variant}
    if report.count is not None:
        payload["count"] = report.count
    if report.positions is not None:
        payload["positions"] = list(report.positions)
    if report.cost_sets is not None:
        payload["matches"] = [
            {"position": pos, "count": len(costs), "costs": list(costs)}
            for pos, costs in sorted(report.cost_sets.items())
        ]
    return payload


def _render(payload: dict, as_json: bool, out) -> bool:
    """Print the report; returns True when at least one window matched."""
    variant = payload["variant"]
    if variant in ("a", "b"):
        count = payload["count"]
        if as_json:
            print(json.dumps({"count": count}), file=out)
        else:
            print(count, file=out)
        return count > 0
    if variant == "c":
        positions = payload["positions"]
        for pos in positions:
            print(json.dumps({"position": pos}) if as_json else pos, file=out)
        return bool(positions)
    matches = payload["matches"]
    for entry in matches:
        if as_json:
            print(json.dumps(entry), file=out)
        else:
            costs = ",".join(str(t) for t in entry["costs"])
            print(f"{entry['position']}\t{entry['count']}\t{costs}", file=out)
    return bool(matches)


def _run_search(argv: list[str], out, err) -> int:
    args = _search_parser().parse_args(argv)
    try:
        if args.pattern is not None:
            pattern = args.pattern
        else:
            pattern = load_document(args.pattern_file, args.format, args.fold_case).sequence
        if not pattern:
            raise ValueError("pattern must be non-empty")
        if args.delta is not None and args.delta < 0:
            raise ValueError("delta must be non-negative")

        if args.server:
            payload = _remote_search(args, pattern)
        else:
            doc = load_document(args.text, args.format, args.fold_case)
            text = doc.sequence
            if len(pattern) > len(text):
                raise ValueError(
                    f"pattern length {len(pattern)} exceeds text length {len(text)}"
                )
            cap = max_translocations(len(pattern))
            if args.variant != "a" and args.delta is not None and args.delta > cap:
                print(
                    f"warning: delta {args.delta} exceeds floor(m/2)={cap}; clamping",
                    file=err,
                )
            cfg = SearchConfig(delta=args.delta, variant=args.variant, engine=args.engine)
            payload = _report_payload(search(pattern, text, cfg))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2

    matched = _render(payload, args.json, out)
    if args.fail_on_nomatch and not matched:
        return 1
    return 0


def _remote_search(args, pattern: str) -> dict:
    import httpx

    doc = load_document(args.text, args.format, args.fold_case)
    request = {
        "pattern": pattern,
        "text": doc.sequence,
        "delta": args.delta,
        "variant": args.variant,
        "engine": args.engine,
    }
    response = httpx.post(args.server.rstrip("/") + "/search", json=request, timeout=300.0)
    if response.status_code != 200:
        raise ValueError(f"server rejected the request: {response.status_code} {response.text}")
    return response.json()


def _bench_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="translocmatch bench",
                                description="Instrumented work measurements.")
    sub = p.add_subparsers(dest="mode", required=True)

    avg = sub.add_parser("average", help="mean work per text symbol on random corpora")
    avg.add_argument("--engine", choices=ENGINE_NAMES, default="dawg")
    avg.add_argument("--sigma", type=int, default=4)
    avg.add_argument("--n", type=int, default=1 << 16)
    avg.add_argument("-m", "--m", type=int, action="append", default=None,
                     help="pattern length (repeatable; default 16 64 256)")
    avg.add_argument("--delta", type=int, default=2)
    avg.add_argument("--trials", type=int, default=20)
    avg.add_argument("--seed", type=int, default=1)
    avg.add_argument("--csv", metavar="PATH", help="write per-counter rows (- for stdout)")

    bud = sub.add_parser("budgets", help="worst-case budget check on unary inputs")
    bud.add_argument("--size", action="append", default=None, metavar="MxN",
                     help="pattern/text sizes, e.g. 8x32 (repeatable)")
    bud.add_argument("--delta-cap", type=int, default=2)
    bud.add_argument("--factor", type=int, default=BUDGET_FACTOR)
    return p


def _run_bench(argv: list[str], out, err) -> int:
    args = _bench_parser().parse_args(argv)
    if args.mode == "average":
        lengths = args.m or [16, 64, 256]
        all_rows = []
        for m in lengths:
            spec = RandomTextSpec(sigma=args.sigma, n=args.n, m=m,
                                  delta=min(args.delta, m // 2), seed=args.seed,
                                  trials=args.trials)
            result = measure_average_work(spec, engine=args.engine)
            all_rows.extend(result.rows)
            print(
                f"{args.engine} sigma={args.sigma} n={args.n} m={m}: "
                f"work/symbol mean={result.mean_work_per_symbol:.3f} "
                f"stdev={result.stdev_work_per_symbol:.3f} over {args.trials} trials",
                file=out,
            )
        if args.csv:
            if args.csv == "-":
                write_counter_csv(out, all_rows)
            else:
                with open(args.csv, "w", newline="", encoding="ascii") as fh:
                    write_counter_csv(fh, all_rows)
        return 0

    sizes = []
    for token in args.size or []:
        m_str, _, n_str = token.partition("x")
        sizes.append((int(m_str), int(n_str)))
    corpus = unary_corpus(sizes or DEFAULT_BUDGET_SIZES, max_delta=args.delta_cap)
    report = assert_worst_case_budgets(corpus, factor=args.factor)
    for entry in report.entries:
        print(entry.describe(), file=out)
    if not report.ok:
        print("budget exceeded", file=err)
        return 1
    return 0


def _run_serve(argv: list[str]) -> int:
    p = argparse.ArgumentParser(prog="translocmatch serve",
                                description="Run the HTTP search service.")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    args = p.parse_args(argv)
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    if argv and argv[0] == "bench":
        return _run_bench(argv[1:], out, err)
    if argv and argv[0] == "serve":
        return _run_serve(argv[1:])
    if argv and argv[0] == "search":
        argv = argv[1:]
    return _run_search(argv, out, err)


if __name__ == "__main__":
    raise SystemExit(main())
