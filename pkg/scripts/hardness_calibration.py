"""Calibrate the slot-polygon thresholds and measure how often each construction misclassifies."""
import argparse
import json
import random
import time
from dataclasses import asdict, dataclass

from kconvex.hardness import EarlyExit, build_P2, calibrate_thresholds, three_sum_brute
from kconvex.stabbing import stabbing_number


@dataclass
class Config:
    cases: int = 500
    max_size: int = 6
    bound: int = 5
    seed: int = 0


def _classify(xs, verbatim: bool, yes: int, no: int):
    try:
        value = stabbing_number(build_P2(xs, verbatim=verbatim).P2).value
    except EarlyExit as exc:
        return exc.answer, None
    return (True if value >= yes else False if value <= no else None), value


def run(cfg: Config) -> dict:
    t0 = time.perf_counter()
    th = calibrate_thresholds()
    rng = random.Random(cfg.seed)
    lists = [
        [rng.randint(-cfg.bound, cfg.bound) for _ in range(rng.randint(1, cfg.max_size))]
        for _ in range(cfg.cases)
    ]
    out = {"config": asdict(cfg), "stab_yes": th.stab_yes, "stab_no": th.stab_no}
    for label, verbatim in (("bridged", False), ("verbatim", True)):
        wrong, values = 0, {"yes": set(), "no": set()}
        for xs in lists:
            answer, value = _classify(xs, verbatim, th.stab_yes, th.stab_no)
            truth = three_sum_brute(xs)
            wrong += answer != truth
            if value is not None:
                values["yes" if truth else "no"].add(value)
        out[label] = {
            "misclassified": wrong,
            "values_on_yes": sorted(values["yes"]),
            "values_on_no": sorted(values["no"]),
        }
    out["seconds"] = round(time.perf_counter() - t0, 2)
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    print(json.dumps(run(Config(cases=a.cases, seed=a.seed)), indent=2))
