"""Command line entry points: build, merge, inspect, serve, suggest, neighbors.

Exit codes: 0 success, 1 usage error, 2 data error (bad inputs, corrupt
index, unknown ids, bind failures).
"""

from __future__ import annotations

import argparse
import socket
import sys
from pathlib import Path

from .cooc import WeightConfig, build_index, load_weight_config, relatedness
from .errors import EngineError, IoFailure
from .ontology import concept_record, load_dictionary
from .query import DISEASE_SEMANTIC_TYPE, suggest
from .server import (
    ApiConfig,
    MODE_HIERARCHICAL,
    MODES,
    SEMANTIC_TYPE_ALL,
    SUGGEST_MAX_K,
    create_app,
    graph_payload,
    payload_json,
    suggestion_payload,
)
from .store import IndexBundle, load_index, merge_incremental, save_index


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="coocnet",
                     description="Build, inspect, and serve concept co-occurrence indexes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="build an index from a dictionary and corpus")
    p.add_argument("--dictionary", required=True, help="concept dictionary file (one JSON record per line)")
    p.add_argument("--corpus", required=True, help="document corpus file (one JSON record per line)")
    p.add_argument("--weights", help="weight configuration file (defaults applied if omitted)")
    p.add_argument("--out", required=True, help="output index directory")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("merge", help="merge two compatible indexes")
    p.add_argument("--base", required=True, help="base index directory")
    p.add_argument("--delta", required=True, help="delta index directory")
    p.add_argument("--out", required=True, help="output index directory")
    p.set_defaults(func=_cmd_merge)

    p = sub.add_parser("inspect", help="print index statistics, an edge, or a concept")
    p.add_argument("--index", required=True, help="index directory")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--edge", nargs=2, metavar=("A", "B"), help="show one edge's score and postings")
    group.add_argument("--concept", metavar="ID", help="show one concept's record and degree")
    p.set_defaults(func=_cmd_inspect)

    p = sub.add_parser("serve", help="serve the HTTP API over an index")
    p.add_argument("--index", required=True, help="index directory")
    p.add_argument("--bind", default="127.0.0.1:8787", help="host:port to listen on")
    p.add_argument("--cors-origin", default="*", help="value for Access-Control-Allow-Origin")
    p.add_argument("--ui-dir", help="optional static directory served at /")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("suggest", help="print suggestions as served by /api/suggest")
    p.add_argument("--index", required=True, help="index directory")
    p.add_argument("--query", required=True, help="query text")
    p.add_argument("-k", type=int, default=10, help="maximum suggestions (default 10)")
    p.set_defaults(func=_cmd_suggest)

    p = sub.add_parser("neighbors", help="print a result tree as served by /api/graph")
    p.add_argument("--index", required=True, help="index directory")
    p.add_argument("--concept", required=True, metavar="ID", help="query concept id")
    p.add_argument("--semantic-type", default=DISEASE_SEMANTIC_TYPE,
                   help=f"type code filter, or '{SEMANTIC_TYPE_ALL}' (default {DISEASE_SEMANTIC_TYPE})")
    p.add_argument("--mode", choices=MODES, default=MODE_HIERARCHICAL)
    p.set_defaults(func=_cmd_neighbors)

    return parser


def _read_corpus_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as handle:
            return [line for line in handle if line.strip()]
    except OSError as exc:
        raise IoFailure(path, str(exc)) from exc


def _print_stats(bundle: IndexBundle) -> None:
    stats = bundle.stats
    print(f"documents      {stats.documents}")
    print(f"skipped        {stats.skipped}")
    print(f"matched_spans  {stats.matched_spans}")
    print(f"distinct_edges {stats.distinct_edges}")
    print(f"matrix_entries {len(bundle.matrix)}")
    print(f"concepts       {len(bundle.dictionary.concepts)}")


def _cmd_build(args) -> int:
    dictionary = load_dictionary(args.dictionary)
    cfg = load_weight_config(args.weights) if args.weights else WeightConfig()
    lines = _read_corpus_lines(args.corpus)
    build = build_index(lines, dictionary, cfg)
    bundle = IndexBundle.from_build(build, dictionary, cfg)
    save_index(bundle, args.out)
    _print_stats(bundle)
    return 0


def _cmd_merge(args) -> int:
    merged = merge_incremental(load_index(args.base), load_index(args.delta))
    save_index(merged, args.out)
    _print_stats(merged)
    return 0


def _cmd_inspect(args) -> int:
    bundle = load_index(args.index)
    if args.edge:
        a, b = args.edge
        score = relatedness(bundle.matrix, bundle.fmap, a, b)
        postings = bundle.evidence.postings(a, b)
        print(f"edge {a} {b}")
        print(f"score {score:g}")
        print(f"postings {len(postings)}")
        for posting in postings:
            subject = f" subject={posting.subject_concept}" if posting.subject_concept else ""
            print(f"  {posting.pub_year} {posting.source_kind} {posting.doc_id}{subject}")
    elif args.concept:
        concept = bundle.dictionary.get(args.concept)
        degree = sum(1 for _ in bundle.evidence.neighbors_of(concept.id))
        for key, value in concept_record(concept).items():
            print(f"{key} {value}")
        print(f"degree {degree}")
    else:
        _print_stats(bundle)
    return 0


def _cmd_serve(args) -> int:
    config = ApiConfig(bind_address=args.bind, index_dir=args.index,
                       cors_allowed_origin=args.cors_origin)
    try:
        host, port = config.host_port()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    bundle = load_index(args.index)
    app = create_app(config, bundle)
    if args.ui_dir:
        if not Path(args.ui_dir).is_dir():
            print(f"error: ui directory not found: {args.ui_dir}", file=sys.stderr)
            return 2
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=args.ui_dir, html=True), name="ui")

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError as exc:
        print(f"error: cannot bind {args.bind}: {exc}", file=sys.stderr)
        return 2
    finally:
        probe.close()

    import uvicorn
    uvicorn.run(app, host=host, port=port, log_level="warning")
    return 0


def _cmd_suggest(args) -> int:
    if not args.query.strip():
        print("error: query must be nonempty", file=sys.stderr)
        return 1
    if args.k < 1:
        print("error: k must be at least 1", file=sys.stderr)
        return 1
    bundle = load_index(args.index)
    k = min(args.k, SUGGEST_MAX_K)
    print(payload_json(suggestion_payload(suggest(bundle.dictionary, args.query, k))))
    return 0


def _cmd_neighbors(args) -> int:
    bundle = load_index(args.index)
    type_filter = None if args.semantic_type == SEMANTIC_TYPE_ALL else args.semantic_type
    print(payload_json(graph_payload(bundle, args.concept, type_filter, args.mode)))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
