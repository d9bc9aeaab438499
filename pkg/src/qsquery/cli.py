"""Command-line front door: single-query parse, batch corpus runs,
latency benchmarking, and the local HTTP serve mode."""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from dataclasses import dataclass
from math import ceil
from pathlib import Path

from . import analyze
from .lexicon import Lexicon, LexiconError, load_lexicon
from .qparse import EmptyQuery, Mode, parse
from .server import DEFAULT_PORT, make_server

EXIT_OK = 0
EXIT_LEXICON = 1
EXIT_EMPTY = 2


@dataclass(frozen=True)
class BenchReport:
    """Per-parse latency statistics over a corpus, in microseconds."""

    query_count: int
    latencies_us: tuple[float, ...]
    median_us: float
    p95_us: float
    max_us: float
    mode: Mode
    lexicon_version: str


def run_bench(lex: Lexicon, queries: list[str], mode: Mode | str, reps: int) -> BenchReport:
    """Time parse() alone: one warm-up pass, then reps timed passes."""
    mode = Mode(mode)
    for query in queries:
        parse(lex, query, mode)
    latencies = []
    for _ in range(reps):
        for query in queries:
            start = time.perf_counter_ns()
            parse(lex, query, mode)
            latencies.append((time.perf_counter_ns() - start) / 1000.0)
    ordered = sorted(latencies)
    return BenchReport(
        query_count=len(latencies),
        latencies_us=tuple(latencies),
        median_us=statistics.median(latencies),
        p95_us=ordered[ceil(0.95 * len(ordered)) - 1],
        max_us=ordered[-1],
        mode=mode,
        lexicon_version=lex.version,
    )


def _read_corpus(path: str) -> list[str]:
    return [line.strip() for line in Path(path).read_text("utf-8").splitlines() if line.strip()]


def _format_text(payload: dict) -> str:
    tuple_ = payload["tuple"]
    diag = payload["diagnostics"]
    times = ", ".join(
        ref["term"] if ref["term"] else ref["source"] for ref in tuple_["times"]
    )
    lines = [
        f"question word  {tuple_['question_word'] or '-'}",
        f"tense          {tuple_['tense']}",
        f"times          {times}",
        f"subjects       {', '.join(tuple_['subjects']) or '-'}",
        f"qualifiers     {', '.join(tuple_['qualifiers']) or '-'}",
        f"aggregations   {', '.join(tuple_['aggregations']) or '-'}",
        f"comparison     {'yes' if tuple_['is_comparison'] else 'no'}",
    ]
    for arm in tuple_["comparison_arms"]:
        term = arm["time"]["term"] or arm["time"]["source"]
        lines.append(f"  arm          {term} ({arm['aggregation'] or 'no aggregation'})")
    missing = [name for name, present in diag["flags"].items() if not present]
    lines.append(f"complete       {'yes' if diag['overall_ok'] else 'no'}")
    if missing:
        lines.append(f"missing        {', '.join(missing)}")
        for name in missing:
            words = diag["suggestions"][name]
            if words:
                lines.append(f"  try {name}: {', '.join(words)}")
    if diag["time_defaulted"]:
        lines.append("note           no time given; defaulting applied")
    return "\n".join(lines)


def _load_or_fail(path: str | None) -> Lexicon:
    try:
        return load_lexicon(path)
    except (LexiconError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_LEXICON) from None


def cmd_parse(args: argparse.Namespace) -> int:
    lex = _load_or_fail(args.lexicon)
    try:
        payload = analyze(lex, args.text, args.mode)
    except EmptyQuery as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(_format_text(payload))
    return EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
    lex = _load_or_fail(args.lexicon)
    try:
        queries = _read_corpus(args.corpus)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LEXICON
    parsed = ok = defaulted = 0
    missing = {"question_word": 0, "time": 0, "subject": 0}
    for query in queries:
        try:
            payload = analyze(lex, query, args.mode)
        except EmptyQuery:
            print(json.dumps({"query": query, "error": "empty query"}))
            continue
        parsed += 1
        diag = payload["diagnostics"]
        ok += diag["overall_ok"]
        defaulted += diag["time_defaulted"]
        for name, present in diag["flags"].items():
            missing[name] += not present
        print(json.dumps({"query": query, **payload}))
    summary = {
        "count": len(queries),
        "parsed": parsed,
        "overall_ok": ok,
        "missing": missing,
        "time_defaulted": defaulted,
    }
    print(json.dumps({"summary": summary}))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    started = time.perf_counter_ns()
    lex = _load_or_fail(args.lexicon)
    load_us = (time.perf_counter_ns() - started) / 1000.0
    try:
        queries = _read_corpus(args.corpus)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LEXICON
    if not queries or args.reps < 1:
        print("error: bench needs a non-empty corpus and reps >= 1", file=sys.stderr)
        return EXIT_LEXICON
    report = run_bench(lex, queries, args.mode, args.reps)
    print(
        json.dumps(
            {
                "query_count": report.query_count,
                "median_us": round(report.median_us, 2),
                "p95_us": round(report.p95_us, 2),
                "max_us": round(report.max_us, 2),
                "mode": report.mode.value,
                "lexicon_version": report.lexicon_version,
                "lexicon_load_us": round(load_us, 2),
            }
        )
    )
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    lex = _load_or_fail(args.lexicon)
    server = make_server(lex, port=args.port)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} (lexicon {lex.version}); Ctrl-C stops", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsquery",
        description="Parse natural-language quantified-self queries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lexicon", default=None, help="lexicon file (default: bundled)")
        p.add_argument(
            "--mode",
            default=Mode.IVT.value,
            choices=[m.value for m in Mode],
            help="parser mode (default: ivt)",
        )

    p_parse = sub.add_parser("parse", help="parse one query")
    p_parse.add_argument("text", help="query text")
    add_common(p_parse)
    p_parse.add_argument("--format", default="json", choices=["json", "text"])
    p_parse.set_defaults(func=cmd_parse)

    p_batch = sub.add_parser("batch", help="parse a corpus, one query per line")
    p_batch.add_argument("corpus", help="UTF-8 file, one query per line")
    add_common(p_batch)
    p_batch.set_defaults(func=cmd_batch)

    p_bench = sub.add_parser("bench", help="measure parse latency over a corpus")
    p_bench.add_argument("corpus", help="UTF-8 file, one query per line")
    add_common(p_bench)
    p_bench.add_argument("--reps", type=int, default=100, help="timed passes (default: 100)")
    p_bench.set_defaults(func=cmd_bench)

    p_serve = sub.add_parser("serve", help="run the local HTTP service")
    p_serve.add_argument("--port", type=int, default=DEFAULT_PORT)
    p_serve.add_argument("--lexicon", default=None, help="lexicon file (default: bundled)")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
