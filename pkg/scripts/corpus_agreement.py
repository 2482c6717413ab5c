"""Compare the 2-convex recognizer with the exact stabbing oracle on the standard corpus."""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from kconvex.fixtures import standard_corpus
from kconvex.stabbing import stabbing_number
from kconvex.twoconvex import recognize_2convex


@dataclass
class Config:
    random_count: int = 140
    max_n: int = 60


def run(cfg: Config) -> dict:
    t0 = time.perf_counter()
    corpus = standard_corpus(cfg.random_count, cfg.max_n)
    rows, disagree, fallback = [], [], 0
    for name, P in corpus:
        v = recognize_2convex(P)
        stab = stabbing_number(P).value
        fallback += v.used_oracle
        if v.is_two_convex != (stab <= 4):
            disagree.append(name)
        rows.append({"name": name, "n": P.n, "stabbing": stab, "two_convex": v.is_two_convex})
    return {
        "config": asdict(cfg),
        "polygons": len(corpus),
        "two_convex": sum(r["two_convex"] for r in rows),
        "oracle_fallbacks": fallback,
        "disagreements": disagree,
        "seconds": round(time.perf_counter() - t0, 2),
    }


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random-count", type=int, default=Config.random_count)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    a = ap.parse_args()
    print(json.dumps(run(Config(a.random_count, a.max_n)), indent=2))
