"""Command-line interface.

Exit codes: 0 success, 1 usage or configuration error, 2 malformed snapshot,
3 integrity error or unknown concept/author/paper.
"""
from __future__ import annotations

import argparse
import logging
import sys
from collections import Counter
from typing import Optional, Sequence

from kosnet.communities import connected_components, label_propagation, topic_community
from kosnet.config import ConfigError, PipelineConfig, load_config_file
from kosnet.enrichment import author_profiles
from kosnet.errors import EmptyKey, IntegrityError, ParseError, UnknownAuthor, UnknownConcept, UnknownPaper
from kosnet.export import canonical_json, export_graph
from kosnet.graphs import build_graph, coauthorship_graph
from kosnet.ingest import build_catalog
from kosnet.kos import build_kos
from kosnet.pipeline import recommendation_record, run_pipeline
from kosnet.query import area_report, authors_and_keywords_of, papers_by_area, tops_of_keywords
from kosnet.recommender import recommend_pairs
from kosnet.triples import read_triples

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INTEGRITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("inputs and settings")
    g.add_argument("--data", dest="data_path", help="scholarly triple snapshot")
    g.add_argument("--kos", dest="kos_path", help="concept scheme snapshot")
    g.add_argument("--config", help="flat key = value settings file; flags override it")
    g.add_argument("--output-dir", dest="output_dir", help="output directory (fallback: $KOSNET_OUTPUT_DIR)")
    g.add_argument("--w-direct", dest="w_direct", type=float)
    g.add_argument("--w-related", dest="w_related", type=float)
    g.add_argument("--w-broader", dest="w_broader", type=float)
    g.add_argument("--no-enrich", dest="enrichment_enabled", action="store_const", const=False,
                   help="score on directly resolved concepts only")
    g.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _Parser(prog="kosnet", description="Discover potential research-collaboration networks.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    sub.add_parser("validate", parents=[common], help="parse and check both snapshots")
    sub.add_parser("pipeline", parents=[common], help="write report.json and DOT graphs")

    g = sub.add_parser("graph", parents=[common], help="export a collaboration graph")
    g.add_argument("--level", choices=["author", "org", "country"], default="author")
    g.add_argument("--format", choices=["dot", "json"], default="dot")

    c = sub.add_parser("communities", parents=[common], help="detect author communities")
    c.add_argument("--algorithm", choices=["components", "labelprop"], default="components")
    c.add_argument("--topic", help="restrict to authors interested in this concept IRI")
    c.add_argument("--max-iters", type=int, default=100)

    r = sub.add_parser("recommend", parents=[common], help="rank potential collaborations")
    r.add_argument("--top", dest="top_k", type=int)
    r.add_argument("--min-score", dest="min_score", type=float)

    q = sub.add_parser("query", help="area / author / top-concept queries")
    qs = q.add_subparsers(dest="query", metavar="QUERY")
    qs.required = True
    qa = qs.add_parser("area", parents=[common], help="papers under a concept's narrower closure")
    qa.add_argument("concept")
    qa.add_argument("--compose", action="store_true",
                    help="also list authors, keywords and keyword top concepts")
    qu = qs.add_parser("authors", parents=[common], help="authors and keywords of papers")
    qu.add_argument("papers", nargs="*")
    qt = qs.add_parser("tops", parents=[common], help="top concepts of keywords")
    qt.add_argument("keywords", nargs="+")
    return parser


def _settings(args) -> dict:
    values = load_config_file(args.config) if args.config else {}
    for key in ("data_path", "kos_path", "output_dir", "w_direct", "w_related", "w_broader",
                "enrichment_enabled", "top_k", "min_score"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    return values


def _require(values, *keys):
    for key in keys:
        if not values.get(key):
            raise UsageError(f"--{key.replace('_path', '')} is required")


def _pipeline_config(values) -> PipelineConfig:
    _require(values, "data_path", "kos_path")
    return PipelineConfig.from_mapping(values)


def _load(cfg: PipelineConfig):
    return build_catalog(read_triples(cfg.data_path)), build_kos(read_triples(cfg.kos_path))


def _run(args, out) -> int:
    values = _settings(args)
    cmd = args.command

    if cmd == "query" and args.query == "authors":
        _require(values, "data_path")
        cat = build_catalog(read_triples(values["data_path"]))
        rows = authors_and_keywords_of(cat, args.papers)
        out.write(canonical_json([{"author": a, "keywords": kws} for a, kws in rows]))
        return EXIT_OK
    if cmd == "query" and args.query == "tops":
        _require(values, "kos_path")
        kos = build_kos(read_triples(values["kos_path"]))
        rows = tops_of_keywords(kos, args.keywords)
        out.write(canonical_json([{"keyword": kw, "tops": list(t)} for kw, t in rows]))
        return EXIT_OK

    cfg = _pipeline_config(values)
    if cmd == "pipeline":
        return run_pipeline(cfg)

    cat, kos = _load(cfg)
    if cmd == "validate":
        stats = cat.stats()
        warnings = Counter({f"data.{k}": v for k, v in cat.warnings.items()})
        warnings.update({f"kos.{k}": v for k, v in kos.warnings.items()})
        out.write(
            f"ok: {stats['papers']} papers, {stats['authors']} authors, {stats['orgs']} orgs, "
            f"{len(kos.concepts)} concepts\n"
        )
        for key, n in sorted(warnings.items()):
            out.write(f"warning: {key} x{n}\n")
        return EXIT_OK
    if cmd == "graph":
        out.write(export_graph(build_graph(cat, args.level), args.format))
        return EXIT_OK
    if cmd == "communities":
        g = coauthorship_graph(cat)
        if args.topic:
            tc = topic_community(cat, kos, author_profiles(cat, kos, cfg.enrich), g, args.topic)
            payload = {
                "topic": tc.topic,
                "members": list(tc.members),
                "communities": [list(c) for c in tc.partition.communities()],
            }
        elif args.algorithm == "labelprop":
            part = label_propagation(g, args.max_iters)
            payload = {"algorithm": "labelprop", "converged": part.converged,
                       "communities": [list(c) for c in part.communities()]}
        else:
            part = connected_components(g)
            payload = {"algorithm": "components", "communities": [list(c) for c in part.communities()]}
        out.write(canonical_json(payload))
        return EXIT_OK
    if cmd == "recommend":
        recs = recommend_pairs(cat, coauthorship_graph(cat), author_profiles(cat, kos, cfg.enrich),
                               cfg.top_k, cfg.min_score)
        out.write(canonical_json([recommendation_record(r) for r in recs]))
        return EXIT_OK
    if cmd == "query" and args.query == "area":
        if args.compose:
            out.write(canonical_json(area_report(cat, kos, args.concept)))
        else:
            res = papers_by_area(cat, kos, args.concept)
            out.write(canonical_json({"concept": res.concept, "expanded": list(res.expanded),
                                      "papers": list(res.papers)}))
        return EXIT_OK
    raise UsageError(f"unhandled command {cmd!r}")


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    out = sys.stdout if out is None else out
    try:
        return _run(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"kosnet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, OSError) as exc:
        print(f"kosnet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"kosnet: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (IntegrityError, UnknownConcept, UnknownAuthor, UnknownPaper, EmptyKey) as exc:
        print(f"kosnet: integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())
