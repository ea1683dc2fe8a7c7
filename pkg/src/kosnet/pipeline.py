"""End-to-end run: ingest, enrich, build graphs, detect communities, recommend."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from kosnet.communities import connected_components, label_propagation
from kosnet.enrichment import ConceptProfile, author_profiles
from kosnet.export import canonical_json, graph_to_dot
from kosnet.graphs import WeightedGraph, aggregate_graph, coauthorship_graph
from kosnet.ingest import Catalog, build_catalog
from kosnet.kos import KosIndex, build_kos
from kosnet.recommender import Recommendation, recommend_pairs
from kosnet.resolver import resolve_keyword
from kosnet.config import ConfigError, PipelineConfig
from kosnet.triples import read_triples

logger = logging.getLogger(__name__)

OUTPUT_FILES = ("report.json", "authors.dot", "orgs.dot", "countries.dot")


@dataclass
class PipelineResult:
    catalog: Catalog
    kos: KosIndex
    profiles: dict[str, ConceptProfile]
    graphs: dict[str, WeightedGraph]
    recommendations: list[Recommendation]
    warnings: Counter
    report: dict


def load_inputs(data_path, kos_path) -> tuple[Catalog, KosIndex]:
    return build_catalog(read_triples(data_path)), build_kos(read_triples(kos_path))


def recommendation_record(r: Recommendation) -> dict:
    return {
        "a": r.author_a,
        "b": r.author_b,
        "score": r.score,
        "shared": [{"concept": c, "weight": w} for c, w in r.shared_concepts],
    }


def _resolution_stats(cat: Catalog, kos: KosIndex) -> dict[str, int]:
    stats = Counter(keywords=0, resolved=0, unresolved=0, ambiguous=0)
    for kw in sorted({kw for p in cat.papers.values() for kw in p.keywords}):
        res = resolve_keyword(kos, kw)
        stats["keywords"] += 1
        stats["resolved" if res.resolved else "unresolved"] += 1
        stats["ambiguous"] += res.ambiguous
    return dict(stats)


def analyze(cat: Catalog, kos: KosIndex, cfg: PipelineConfig) -> PipelineResult:
    warnings: Counter = Counter()
    for source, counts in (("data", cat.warnings), ("kos", kos.warnings)):
        for key, n in counts.items():
            warnings[f"{source}.{key}"] += n

    profiles = author_profiles(cat, kos, cfg.enrich)
    graphs = {"author": coauthorship_graph(cat)}
    for level, prefix in (("institution", "orgs"), ("country", "countries")):
        local: Counter = Counter()
        graphs[level] = aggregate_graph(cat, level, local)
        for key, n in local.items():
            warnings[f"{prefix}.{key}"] += n

    authors = graphs["author"]
    lp = label_propagation(authors)
    recs = recommend_pairs(cat, authors, profiles, cfg.top_k, cfg.min_score)
    e = cfg.enrich
    report = {
        "catalog": cat.stats(),
        "kos": {"concepts": len(kos.concepts), "label_keys": len(kos.label_index)},
        "resolution": _resolution_stats(cat, kos),
        "config": {
            "w_direct": float(e.w_direct),
            "w_related": float(e.w_related),
            "w_broader": float(e.w_broader),
            "enrichment_enabled": e.enrichment_enabled,
            "top_k": cfg.top_k,
            "min_score": float(cfg.min_score),
        },
        "warnings": dict(sorted(warnings.items())),
        "graphs": {
            level: {"nodes": len(g.nodes), "edges": len(g.edges)} for level, g in graphs.items()
        },
        "communities": {
            "components": [list(c) for c in connected_components(authors).communities()],
            "label_propagation": {
                "converged": lp.converged,
                "communities": [list(c) for c in lp.communities()],
            },
        },
        "recommendations": [recommendation_record(r) for r in recs],
    }
    return PipelineResult(cat, kos, profiles, graphs, recs, warnings, report)


def run_pipeline(cfg: PipelineConfig) -> int:
    """Write the report and DOT exports into ``cfg.output_dir``; returns 0.

    Parse and integrity failures propagate as exceptions; the CLI maps them
    to exit codes.
    """
    if cfg.output_dir is None:
        raise ConfigError("no output directory (use --output-dir or KOSNET_OUTPUT_DIR)")
    cat, kos = load_inputs(cfg.data_path, cfg.kos_path)
    result = analyze(cat, kos, cfg)
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    payloads = {
        "report.json": canonical_json(result.report),
        "authors.dot": graph_to_dot(result.graphs["author"]),
        "orgs.dot": graph_to_dot(result.graphs["institution"]),
        "countries.dot": graph_to_dot(result.graphs["country"]),
    }
    for name, text in payloads.items():
        (out / name).write_text(text, encoding="utf-8", newline="\n")
    logger.info("wrote %s to %s", ", ".join(payloads), out)
    return 0
