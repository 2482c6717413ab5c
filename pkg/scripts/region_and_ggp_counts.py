"""Degrees of interlocking-comb unions and intersections, and Ggp counts of dart rows.

Each degree entry is [found, expected].
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from math import comb

from kconvex.fixtures import interlock_combs, quad_row
from kconvex.regions import empirical_degree, intersect, union
from kconvex.transversals import enumerate_ggp, family, ggp_bound


@dataclass
class Config:
    km: list[tuple[int, int]] = field(default_factory=lambda: [(2, 2), (2, 3), (3, 2)])
    rows: list[int] = field(default_factory=lambda: [3, 4, 5, 6])


def run(cfg: Config) -> dict:
    t0 = time.perf_counter()
    degrees = []
    for k, m in cfg.km:
        degrees.append({
            "k": k,
            "m": m,
            "union": [empirical_degree(union(*interlock_combs(k, m, "union"))), k + m],
            "intersect": [empirical_degree(intersect(*interlock_combs(k, m, "intersect"))), k + m - 1],
            "family": [empirical_degree(intersect(*interlock_combs(k, m, "family"))), m * (k - 1) + 1],
        })
    ggps = []
    for n in cfg.rows:
        fam = family(quad_row(n))
        ggps.append({"n": n, "count": len(enumerate_ggp(fam)), "pairs": comb(n, 2), "bound": ggp_bound(fam)})
    return {
        "config": asdict(cfg),
        "degrees": degrees,
        "ggp": ggps,
        "seconds": round(time.perf_counter() - t0, 2),
    }


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", default="3,4,5,6")
    a = ap.parse_args()
    print(json.dumps(run(Config(rows=[int(n) for n in a.rows.split(",")])), indent=2))
