"""Comparison counts of the scan and finger sorts on combs, with fitted constants."""
import argparse
import json
import math
from dataclasses import asdict, dataclass, field

from kconvex.fixtures import comb
from kconvex.sweep import sort_finger, sort_scan


@dataclass
class Config:
    n: int = 512
    ks: list[int] = field(default_factory=lambda: [2, 4, 8, 16])


def run(cfg: Config) -> dict:
    rows = []
    for k in cfg.ks:
        P = comb(k, cfg.n)
        f = sort_finger(P).comparison_count
        s = sort_scan(P).comparison_count
        rows.append({
            "k": k,
            "finger": f,
            "scan": s,
            "finger_per_nlog": round(f / (P.n * math.log2(2 + k)), 3),
            "scan_per_kn": round(s / (k * P.n), 3),
        })
    return {
        "config": asdict(cfg),
        "rows": rows,
        "c_finger": max(r["finger_per_nlog"] for r in rows),
        "c_scan": max(r["scan_per_kn"] for r in rows),
    }


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=512)
    ap.add_argument("--ks", default="2,4,8,16")
    a = ap.parse_args()
    print(json.dumps(run(Config(a.n, [int(k) for k in a.ks.split(",")])), indent=2))
