"""Sweep related/broader weights and report how the recommendation set moves.

For each (w_related, w_broader) grid point, prints the number of pairs above
the score threshold and the Jaccard overlap of the top-k with the default run.
"""
import argparse
import itertools
from dataclasses import dataclass, field
from pathlib import Path

from kosnet.enrichment import EnrichConfig, author_profiles
from kosnet.graphs import coauthorship_graph
from kosnet.pipeline import load_inputs
from kosnet.recommender import recommend_pairs

F1 = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "f1"


@dataclass
class SweepConfig:
    data: Path = F1 / "data.nt"
    kos: Path = F1 / "kos.nt"
    related: list = field(default_factory=lambda: [0.0, 0.25, 0.5, 0.75, 1.0])
    broader: list = field(default_factory=lambda: [0.0, 0.125, 0.25, 0.5])
    top_k: int = 10
    min_score: float = 0.05


def top_pairs(cat, kos, g, enrich, cfg):
    profiles = author_profiles(cat, kos, enrich)
    return recommend_pairs(cat, g, profiles, 10_000, cfg.min_score)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--data", type=Path, default=SweepConfig.data)
    parser.add_argument("--kos", type=Path, default=SweepConfig.kos)
    parser.add_argument("--top-k", type=int, default=SweepConfig.top_k)
    args = parser.parse_args()
    cfg = SweepConfig(data=args.data, kos=args.kos, top_k=args.top_k)

    cat, kos = load_inputs(cfg.data, cfg.kos)
    g = coauthorship_graph(cat)
    ref = {(r.author_a, r.author_b) for r in top_pairs(cat, kos, g, EnrichConfig(), cfg)[:cfg.top_k]}
    print(f"{'w_related':>9} {'w_broader':>9} {'pairs':>6} {'top-k overlap':>13}")
    for wr, wb in itertools.product(cfg.related, cfg.broader):
        if wb > wr:
            continue
        recs = top_pairs(cat, kos, g, EnrichConfig(1.0, wr, wb), cfg)
        top = {(r.author_a, r.author_b) for r in recs[:cfg.top_k]}
        overlap = len(top & ref) / len(top | ref) if top | ref else 1.0
        print(f"{wr:>9.3f} {wb:>9.3f} {len(recs):>6d} {overlap:>13.3f}")


if __name__ == "__main__":
    main()
