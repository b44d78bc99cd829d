"""Command-line front end: instance I/O, analysis pipeline, generators,
and SVG plots of planar sumsets.

Exit codes: 0 success; 1 I/O, validation, or internal-certification
errors; 2 instance outside the certified families (or over the
resource cap).  All JSON documents carry schema "toric-reg/1".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from pathlib import Path
from typing import Optional

from . import families
from .classify import OTHER, classify
from .errors import (InvalidInstanceError, PreconditionError,
                     ResourceLimitError, ToricRegError,
                     UnsupportedInstanceError)
from .lattice import DEFAULT_MAX_SLICE_SIZE, GeneratorSet, hilbert_function
from .regularity import degree, eg_check, reg
from .sumsets import sigma

SCHEMA = "toric-reg/1"
FIELDS = {"q": "q", "f2": 2, "f32003": 32003}


def load_instance(path: str, max_slice: int) -> GeneratorSet:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "d" not in data or "A" not in data:
        raise InvalidInstanceError('instance JSON needs keys "d" and "A"')
    return GeneratorSet(int(data["d"]), data["A"], max_slice)


def instance_dict(A: GeneratorSet) -> dict:
    return {"d": A.d, "A": [list(p) for p in A.points]}


def _emit(doc: dict) -> None:
    doc = {"schema": SCHEMA, **doc}
    json.dump(doc, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def analysis_bundle(A: GeneratorSet, field, cutoff: Optional[int]) -> dict:
    timings = {}

    def timed(name, fn):
        t = time.perf_counter()
        out = fn()
        timings[name] = round(time.perf_counter() - t, 6)
        return out

    report = timed("classify", lambda: classify(A))
    bundle = {"instance": instance_dict(A),
              "classification": report.to_json_dict()}
    if report.verdict == OTHER:
        if cutoff is None:
            raise UnsupportedInstanceError(
                "variety is neither smooth nor one-singular; rerun with "
                "--cutoff N for an uncertified regularity lower bound")
        bundle["sigma"] = None
        rr = timed("reg", lambda: reg(A, report, field=field, cutoff=cutoff))
    else:
        sr = timed("sigma", lambda: sigma(A, report))
        bundle["sigma"] = sr.to_json_dict()
        rr = timed("reg", lambda: reg(A, report, sr, field=field))
    bundle["regularity"] = rr.to_json_dict()
    dr = timed("degree", lambda: degree(A, report))
    bundle["degree"] = dr.to_json_dict()
    bundle["eisenbud_goto"] = timed(
        "eg_check", lambda: eg_check(A, report, rr, dr))
    bundle["timings"] = timings
    return bundle


def plot_svg(A: GeneratorSet, s: int) -> str:
    """Filled circles for sA, hollow squares for the rest of the slice."""
    if A.d != 2:
        raise UnsupportedInstanceError("plots are only available for d = 2")
    lvl = A.level(s)
    members = lvl.point_set()
    N = lvl.slice.N
    scale, margin, r = 24, 30, 5
    size = 2 * margin + scale * max(N, 1)

    def xy(p):
        return margin + scale * p[0], size - margin - scale * p[1]

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f'<text x="{margin}" y="16" font-size="12">'
           f's={s}, |sA|={lvl.cardinality}, slice={lvl.slice.size}</text>']
    for p in [lvl.slice.unrank(i) for i in range(lvl.slice.size)]:
        x, y = xy(p)
        if p in members:
            out.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="black"/>')
        else:
            out.append(f'<rect x="{x - r}" y="{y - r}" width="{2 * r}" '
                       f'height="{2 * r}" fill="none" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out)


def generate(family: str, d: int, D: int, e: Optional[int],
             extras: Optional[int], seed: int) -> GeneratorSet:
    rng = random.Random(seed)
    if family == "veronese":
        return families.veronese(d, D)
    if family == "minimal-smooth":
        return families.minimal_smooth(d, D)
    if family == "smooth-random":
        return families.smooth_random_superset(d, D, rng, extras)
    if family == "one-singular":
        if e is None:
            raise PreconditionError("one-singular generation needs --e")
        if extras == 0:
            return families.one_singular_base(d, D, e)
        return families.one_singular_random(d, D, e, rng, extras)
    if family == "sextic-surface":
        return families.sextic_surface()
    raise PreconditionError(f"unknown family {family!r}")


def run_corpus(directory: str, field, cutoff: Optional[int],
               max_slice: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["file", "d", "D", "e", "verdict", "sigma", "reg",
                     "degree", "codim", "eg_slack", "reg_sigma_gap"])
    for path in sorted(Path(directory).glob("*.json")):
        A = load_instance(str(path), max_slice)
        try:
            bundle = analysis_bundle(A, field, cutoff)
        except UnsupportedInstanceError:
            writer.writerow([path.name, A.d, A.D, A.e, OTHER,
                             "", "", "", "", "", ""])
            continue
        sg = (bundle["sigma"] or {}).get("sigma", "")
        rg = bundle["regularity"]["reg"]
        eg = bundle["eisenbud_goto"]
        writer.writerow([
            path.name, A.d, A.D, bundle["classification"]["e"],
            bundle["classification"]["verdict"], sg, rg,
            bundle["degree"]["degree"], bundle["degree"]["codim"],
            eg["bound"] - eg["reg"], rg - sg if sg != "" else ""])
    return buf.getvalue()


GLOBAL_DEFAULTS = {"field": "q", "cutoff": None, "threads": None,
                   "max_slice": DEFAULT_MAX_SLICE_SIZE, "seed": 0}


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps subcommand-position flags from clobbering ones given
    # before the subcommand; missing values are filled in after parsing.
    c = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    c.add_argument("--field", choices=sorted(FIELDS),
                   help="coefficient field for homology ranks (default q)")
    c.add_argument("--cutoff", type=int,
                   help="enumeration level for uncertified instances")
    c.add_argument("--threads", type=int,
                   help="accepted for compatibility; computation is "
                        "single-threaded and deterministic")
    c.add_argument("--max-slice", type=int,
                   help="cap on lattice points per simplex slice")
    c.add_argument("--seed", type=int,
                   help="PRNG seed for instance generation (default 0)")
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    p = argparse.ArgumentParser(
        prog="toric-reg",
        parents=[common],
        description="Exact sumset and regularity analysis of simplicial "
                    "projective toric varieties")
    sub = p.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def with_instance(name, **kw):
        sp = add_parser(name, **kw)
        sp.add_argument("instance", help="path to an instance JSON file")
        return sp

    with_instance("analyze", help="full pipeline, JSON bundle on stdout")
    sp = with_instance("sumset", help="list or count the s-fold sumset")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--count", action="store_true",
                    help="emit the cardinality only")
    sp = with_instance("hilbert", help="table of |sA| for s = 0..s-max")
    sp.add_argument("--s-max", type=int, required=True)
    with_instance("sigma", help="sumsets regularity with certificates")
    with_instance("reg", help="Castelnuovo-Mumford regularity")
    with_instance("degree", help="degree via gcd of maximal minors")
    with_instance("eg-check", help="Eisenbud-Goto bound verdict")
    sp = with_instance("plot", help="SVG of sA against its slice (d = 2)")
    sp.add_argument("--s", type=int, required=True)

    sp = add_parser("gen", help="emit a generated instance as JSON")
    sp.add_argument("family", choices=["veronese", "minimal-smooth",
                                       "smooth-random", "one-singular",
                                       "sextic-surface"])
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--D", type=int, default=4)
    sp.add_argument("--e", type=int, default=None)
    sp.add_argument("--extras", type=int, default=None)

    sp = add_parser("corpus", help="analyze a directory, CSV on stdout")
    sp.add_argument("directory")
    return p


def _dispatch(args) -> int:
    field = FIELDS[args.field]
    if args.command == "gen":
        A = generate(args.family, args.d, args.D, args.e, args.extras,
                     args.seed)
        _emit(instance_dict(A))
        return 0
    if args.command == "corpus":
        sys.stdout.write(run_corpus(args.directory, field, args.cutoff,
                                    args.max_slice))
        return 0

    A = load_instance(args.instance, args.max_slice)
    if args.command == "analyze":
        _emit(analysis_bundle(A, field, args.cutoff))
    elif args.command == "sumset":
        lvl = A.level(args.s)
        doc = {"s": args.s, "count": lvl.cardinality}
        if not args.count:
            doc["points"] = [list(map(int, p)) for p in lvl.points]
        _emit(doc)
    elif args.command == "hilbert":
        _emit({"values": hilbert_function(A, args.s_max)})
    elif args.command == "sigma":
        report = classify(A)
        _emit(sigma(A, report).to_json_dict())
    elif args.command == "reg":
        report = classify(A)
        _emit(reg(A, report, field=field, cutoff=args.cutoff).to_json_dict())
    elif args.command == "degree":
        _emit(degree(A, classify(A)).to_json_dict())
    elif args.command == "eg-check":
        report = classify(A)
        _emit(eg_check(A, report))
    elif args.command == "plot":
        sys.stdout.write(plot_svg(A, args.s) + "\n")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        return _dispatch(args)
    except (UnsupportedInstanceError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ToricRegError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
