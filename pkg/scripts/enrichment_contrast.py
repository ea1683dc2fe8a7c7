"""Compare recommendations with and without KOS enrichment.

Runs the recommender on a data/KOS pair twice (enrichment on, then direct
concepts only) and prints which pairs only the enriched run finds.

    python scripts/enrichment_contrast.py
    python scripts/enrichment_contrast.py --data my.nt --kos my_kos.nt --min-score 0.1
"""
import argparse
from dataclasses import dataclass
from pathlib import Path

from kosnet.enrichment import EnrichConfig, author_profiles
from kosnet.graphs import coauthorship_graph
from kosnet.pipeline import load_inputs
from kosnet.recommender import recommend_pairs

F1 = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "f1"


@dataclass
class ContrastConfig:
    data: Path = F1 / "data.nt"
    kos: Path = F1 / "kos.nt"
    min_score: float = 0.05
    top_k: int = 10_000


def run(cfg: ContrastConfig):
    cat, kos = load_inputs(cfg.data, cfg.kos)
    g = coauthorship_graph(cat)
    results = {}
    for label, enrich in (("enriched", True), ("lexical", False)):
        profiles = author_profiles(cat, kos, EnrichConfig(enrichment_enabled=enrich))
        results[label] = {(r.author_a, r.author_b): r for r in recommend_pairs(cat, g, profiles, cfg.top_k, cfg.min_score)}
    return cat, results


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--data", type=Path, default=ContrastConfig.data)
    parser.add_argument("--kos", type=Path, default=ContrastConfig.kos)
    parser.add_argument("--min-score", type=float, default=ContrastConfig.min_score)
    args = parser.parse_args()
    cat, results = run(ContrastConfig(args.data, args.kos, args.min_score))

    enriched, lexical = results["enriched"], results["lexical"]
    print(f"authors: {len(cat.authors)}  papers: {len(cat.papers)}")
    print(f"pairs >= {args.min_score}: enriched {len(enriched)}, lexical {len(lexical)}")
    only = sorted(set(enriched) - set(lexical), key=lambda p: -enriched[p].score)
    print(f"found only with enrichment: {len(only)}")
    for pair in only:
        r = enriched[pair]
        top = ", ".join(c.rsplit("/", 1)[-1] for c, _ in r.shared_concepts[:3])
        print(f"  {pair[0].rsplit('/', 1)[-1]} ~ {pair[1].rsplit('/', 1)[-1]}  {r.score:.3f}  [{top}]")


if __name__ == "__main__":
    main()
