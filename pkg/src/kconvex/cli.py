"""Command-line interface: JSON in, JSON out.

Exit codes: 0 success, 1 negative analysis result (only with --expect, or
when the analysis cannot apply to the input), 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .exactgeom import GeometryError, Polygon, polygon_from_json


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from None


def _read_polygon(path: str) -> Polygon:
    return polygon_from_json(_read_json(path))


def _read_family(path: str) -> dict[str, Polygon]:
    obj = _read_json(path)
    polys = obj.get("polygons") if isinstance(obj, dict) else obj
    if isinstance(polys, dict):
        return {str(k): polygon_from_json(v) for k, v in polys.items()}
    if isinstance(polys, list):
        from .transversals import family

        return family(polygon_from_json(v) for v in polys)
    raise InputError("family JSON needs a 'polygons' object or list")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _write_svg(path: str | None, spec) -> None:
    if path:
        from .render import render

        Path(path).write_text(render(spec))


def _parse_params(text: str | None) -> dict:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise InputError(f"bad parameter {item!r}, expected name=value")
        k, v = item.split("=", 1)
        v = v.strip()
        try:
            f = Fraction(v)
            out[k.strip()] = int(f) if f.denominator == 1 else f
        except ValueError:
            out[k.strip()] = v
    return out


# -- subcommands -----------------------------------------------------------


def cmd_stab(a) -> int:
    from .render import RenderSpec
    from .stabbing import stabbing_number

    P = _read_polygon(a.polygon)
    cert = stabbing_number(P)
    _emit(cert.to_json())
    _write_svg(a.svg, RenderSpec([P], lines=[cert.witness_line]))
    return 0


def cmd_kconvex(a) -> int:
    from .stabbing import stabbing_number

    P = _read_polygon(a.polygon)
    cert = stabbing_number(P)
    ok = cert.value <= 2 * a.k
    out = {"k_convex": ok, "k": a.k}
    if not ok:
        out["witness_line"] = cert.witness_line.to_json()
        out["components"] = cert.value // 2
    _emit(out)
    return 1 if a.expect and not ok else 0


def cmd_recognize2(a) -> int:
    from .twoconvex import recognize_2convex

    P = _read_polygon(a.polygon)
    v = recognize_2convex(P, oracle=a.oracle)
    _emit(v.to_json())
    return 1 if a.expect and not v.is_two_convex else 0


def cmd_triangulate(a) -> int:
    from .render import RenderSpec
    from .sweep import triangulate

    P = _read_polygon(a.polygon)
    T = triangulate(P, sort=a.sort)
    out = T.to_json()
    if a.stats:
        out["comparison_count"] = T.comparison_count
        out["max_status"] = T.max_status
    _emit(out)
    _write_svg(a.svg, RenderSpec([P], segments=[(P[i], P[j]) for i, j in T.diagonals]))
    return 0


def _shape_cmd(a, fn, key) -> int:
    from .render import RenderSpec
    from .shape import ShapeError

    P = _read_polygon(a.polygon)
    try:
        res = fn(P)
    except ShapeError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 1
    _emit({key: res})
    groups = res if res and isinstance(res[0], list) else [res]
    _write_svg(a.svg, RenderSpec([P], highlight=groups))
    return 0


def cmd_chains(a) -> int:
    from .shape import convex_chains

    return _shape_cmd(a, convex_chains, "chains")


def cmd_convex_subset(a) -> int:
    from .shape import largest_convex_subset

    return _shape_cmd(a, largest_convex_subset, "subset")


def cmd_partition(a) -> int:
    from .shape import convex_partition

    return _shape_cmd(a, convex_partition, "parts")


def cmd_reduce3sum(a) -> int:
    from .hardness import EarlyExit, build_P2, decide_3sum_geometric, three_sum_brute

    try:
        xs = [int(t) for t in a.input.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"--input must be comma-separated integers, got {a.input!r}") from None
    out: dict = {"input": xs}
    try:
        inst = build_P2(xs, verbatim=a.verbatim)
        out.update(inst.to_json())
        if a.emit_polygon:
            Path(a.emit_polygon).write_text(json.dumps(inst.P2.to_json(), sort_keys=True) + "\n")
    except EarlyExit as exc:
        out["early_exit"] = exc.reason
    if a.decide:
        out["decision"] = decide_3sum_geometric(xs)
        out["brute_force"] = three_sum_brute(xs)
    _emit(out)
    return 0


def cmd_region_degree(a) -> int:
    from .regions import degree_witness, region_from_json

    E = region_from_json(_read_json(a.spec))
    value, line = degree_witness(E, random_lines=a.random_lines, seed=a.seed)
    _emit({"degree": value, "witness_line": None if line is None else line.to_json()})
    return 0


def cmd_helly(a) -> int:
    from .regions import helly_check

    r = helly_check(a.m)
    _emit(r.to_json())
    return 1 if a.expect and not r.ok else 0


def cmd_ggp(a) -> int:
    from .render import RenderSpec
    from .transversals import enumerate_ggp_with_witnesses, ggp_bound

    fam = _read_family(a.family)
    found = enumerate_ggp_with_witnesses(fam)
    _emit({"count": len(found), "bound": ggp_bound(fam), "ggps": [g.to_json() for g in found]})
    _write_svg(a.render, RenderSpec(list(fam.values()), lines=list(found.values()), labels=list(fam)))
    return 0


def cmd_gen(a) -> int:
    from .fixtures import FixtureSpec, generate
    from .transversals import family

    res = generate(FixtureSpec(a.name, _parse_params(a.params), a.seed))
    obj = res.to_json() if isinstance(res, Polygon) else {
        "polygons": {k: P.to_json() for k, P in family(res).items()}
    }
    text = json.dumps(obj, sort_keys=True) + "\n"
    if a.output:
        Path(a.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_render(a) -> int:
    from .render import RenderSpec, render

    obj = _read_json(a.input)
    if isinstance(obj, dict) and "vertices" in obj:
        polys, labels = [polygon_from_json(obj)], []
    else:
        fam = _read_family(a.input)
        polys, labels = list(fam.values()), list(fam)
    lines = []
    if a.witness:
        from .stabbing import stabbing_number

        lines = [stabbing_number(P).witness_line for P in polys]
    svg = render(RenderSpec(polys, lines=lines, labels=labels))
    if a.output:
        Path(a.output).write_text(svg)
        _emit({"svg": a.output})
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kconvex", description="Exact analysis of k-convex polygons.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def poly_cmd(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("polygon", help="polygon JSON file, '-' for stdin")
        s.set_defaults(fn=fn)
        return s

    s = poly_cmd("stab", cmd_stab, "exact stabbing number with a witness line")
    s.add_argument("--svg")
    s = poly_cmd("kconvex", cmd_kconvex, "is the polygon k-convex")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--expect", action="store_true", help="exit 1 when not k-convex")
    s = poly_cmd("recognize2", cmd_recognize2, "2-convexity verdict with witness")
    s.add_argument("--oracle", action="store_true", help="decide through the stabbing number")
    s.add_argument("--expect", action="store_true", help="exit 1 when not 2-convex")
    s = poly_cmd("triangulate", cmd_triangulate, "sweep triangulation")
    s.add_argument("--sort", choices=("scan", "finger"), default="finger")
    s.add_argument("--stats", action="store_true")
    s.add_argument("--svg")
    for name, fn in (("chains", cmd_chains), ("convex-subset", cmd_convex_subset), ("partition", cmd_partition)):
        s = poly_cmd(name, fn, f"{name} of a 2-convex polygon")
        s.add_argument("--svg")

    s = sub.add_parser("reduce3sum", help="3SUM instance to slotted polygon")
    s.add_argument("--input", required=True, help='comma-separated integers, e.g. "1,2,-3"')
    s.add_argument("--emit-polygon", dest="emit_polygon")
    s.add_argument("--decide", action="store_true")
    s.add_argument("--verbatim", action="store_true", help="slot polygon without bridge vertices")
    s.set_defaults(fn=cmd_reduce3sum)

    s = sub.add_parser("region-degree", help="degree of convexity of a union/intersection expression")
    s.add_argument("spec")
    s.add_argument("--random-lines", dest="random_lines", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_region_degree)

    s = sub.add_parser("helly", help="check the strip family with no Helly number")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--expect", action="store_true")
    s.set_defaults(fn=cmd_helly)

    s = sub.add_parser("ggp", help="generalized geometric permutations of a family")
    s.add_argument("family")
    s.add_argument("--render")
    s.set_defaults(fn=cmd_ggp)

    s = sub.add_parser("gen", help="generate a fixture")
    s.add_argument("name")
    s.add_argument("--params", help="e.g. k=4,n=32")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("render", help="draw a polygon or family as SVG")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.add_argument("--witness", action="store_true", help="overlay stabbing witness lines")
    s.set_defaults(fn=cmd_render)
    return p


def main(argv=None) -> int:
    from .fixtures import ParamOutOfRange, PropertyAssertionFailed
    from .regions import UnboundId

    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "--input -3,1,2" would otherwise be read as an unknown option
    for i, tok in enumerate(argv[:-1]):
        if tok == "--input" and argv[i + 1].startswith("-"):
            argv[i : i + 2] = [f"--input={argv[i + 1]}"]
            break
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (InputError, GeometryError, ParamOutOfRange, UnboundId, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PropertyAssertionFailed as exc:
        print(f"fixture failed its property check: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
