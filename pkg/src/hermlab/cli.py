"""Command-line front end.

Subcommands: generate (enumerate + cache points/lines/curves), srg (graph
parameters and the complement identity), scheme (intersection or orbital
schemes with exact tables), verify (the full reproduction suite).

Exit codes: 0 pass, 1 verification mismatch, 2 inconclusive computation,
3 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import bulk, emit, graphs, hermitian as hm, polyalg, schemes, verify

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


@dataclass
class RunConfig:
    q: int
    command: str
    cache_dir: str | None
    jobs: int
    fmt: str
    cyclotomic_order: int
    profile: str
    resume: bool

    def __post_init__(self):
        if self.q not in hm.SUPPORTED_Q:
            raise ValueError(f"q must be one of {hm.SUPPORTED_Q}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    parser = _Parser(prog="hermlab", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", type=int, required=True, choices=hm.SUPPORTED_Q)
        p.add_argument("--cache-dir", default=os.environ.get("HERMLAB_CACHE"))
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", dest="fmt", default="text",
                       choices=("json", "latex", "text"))
        p.add_argument("--cyclotomic-order", type=int, default=12)
        p.add_argument("--profile", default="counts", choices=("full", "counts"))
        p.add_argument("--resume", action="store_true",
                       help="reuse persisted partial bulk results")

    p_gen = sub.add_parser("generate", help="enumerate and cache one artifact")
    p_gen.add_argument("kind", choices=("points", "lines", "curves"))
    common(p_gen)

    p_srg = sub.add_parser("srg", help="strongly regular graph parameters")
    common(p_srg)

    p_scheme = sub.add_parser("scheme", help="association scheme tables")
    p_scheme.add_argument("source", choices=("intersection", "orbital:points",
                                             "orbital:lines", "orbital:curves"))
    common(p_scheme)

    p_verify = sub.add_parser("verify", help="run the reproduction suite")
    common(p_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        cfg = RunConfig(q=args.q, command=args.command, cache_dir=args.cache_dir,
                        jobs=args.jobs, fmt=args.fmt,
                        cyclotomic_order=args.cyclotomic_order,
                        profile=args.profile, resume=args.resume)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handler = {"generate": cmd_generate, "srg": cmd_srg,
               "scheme": cmd_scheme, "verify": cmd_verify}[cfg.command]
    try:
        return handler(cfg, args)
    except (polyalg.InconclusiveError, verify.Inconclusive) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except hm.OrbitCapExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


def _surface(cfg):
    return hm.HermitianSurface(cfg.q, cache_dir=cfg.cache_dir)


def cmd_generate(cfg, args):
    surface = _surface(cfg)
    kind = args.kind
    expected = {"points": hm.point_count, "lines": hm.line_count,
                "curves": hm.curve_count}[kind](cfg.q)
    if kind == "points":
        count = len(surface.points())
    elif kind == "lines":
        count = len(surface.lines())
    else:
        count = len(surface.curve_orbit())
    status = "pass" if count == expected else "fail"
    if cfg.fmt == "json":
        print(json.dumps({"q": cfg.q, "kind": kind, "count": count,
                          "expected": expected, "status": status}))
    else:
        print(f"{kind} q={cfg.q}: {count} (expected {expected}) [{status}]")
    return EXIT_PASS if status == "pass" else EXIT_MISMATCH


def cmd_srg(cfg, args):
    from . import projgeo
    surface = _surface(cfg)
    formula = graphs.srg_formula(cfg.q)
    line_pts = [projgeo.line_points(l) for l in surface.lines()]
    coll = graphs.collinearity_graph(surface.points(), line_pts)
    comp = coll.complement()
    comp_params = graphs.srg_params(comp)
    rows = [("collinearity", graphs.srg_params(coll)),
            ("complement", comp_params)]
    ok = isinstance(comp_params, graphs.SrgParams) and \
        comp_params.as_tuple() == formula.as_tuple()
    identity = None
    if cfg.q <= 3:
        orbit = surface.curve_orbit()
        curve_pts = [hm.curve_rational_points(c) for c in orbit.items]
        pc = graphs.build_point_curve_graph(surface.points(), curve_pts)
        pc_params = graphs.srg_params(pc)
        rows.append(("point-curve", pc_params))
        identity = pc.same_edges(comp)
        ok = ok and identity and isinstance(pc_params, graphs.SrgParams) \
            and pc_params.as_tuple() == formula.as_tuple()
    payload = {
        "q": cfg.q,
        "formula": formula.as_tuple(),
        "graphs": {name: (p.as_tuple() if isinstance(p, graphs.SrgParams) else str(p))
                   for name, p in rows},
        "complement_identity": identity,
        "status": "pass" if ok else "fail",
    }
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for name, p in rows:
            print(f"{name}: {p.as_tuple() if isinstance(p, graphs.SrgParams) else p}")
        print(f"formula: {formula.as_tuple()}")
        if identity is not None:
            print(f"complement identity (point-curve == complement of "
                  f"collinearity): {identity}")
        print(f"status: {payload['status']}")
    return EXIT_PASS if ok else EXIT_MISMATCH


def cmd_scheme(cfg, args):
    surface = _surface(cfg)
    source = args.source
    if source == "intersection":
        if cfg.q == 3 and cfg.profile != "full":
            print("note: q=3 full pair matrix is behind --profile full; "
                  "this runs the base-curve profile classes only",
                  file=sys.stderr)
            orbit = surface.curve_orbit()
            resume = None
            if cfg.cache_dir:
                resume = os.path.join(cfg.cache_dir, f"profile-q{cfg.q}.json")
            prof = bulk.base_profile(orbit, method="fast", jobs=cfg.jobs,
                                     resume_path=resume if cfg.resume else None)
            values = sorted(set(int(v) for v in prof if v >= 0))
            published = sorted({int(v) if v > 0 else
                                polyalg.cone_intersection_number(
                                    orbit.items[0], orbit.items[int(j)])
                                for j, v in enumerate(prof) if v >= 0})
            payload = {"q": cfg.q, "classes": values,
                       "classes_published_convention": published,
                       "d": len(values)}
            print(json.dumps(payload, indent=2) if cfg.fmt == "json"
                  else "\n".join(f"{k}: {v}" for k, v in payload.items()))
            return EXIT_PASS
        scheme = surface.intersection_scheme(method="fast", jobs=cfg.jobs)
    else:
        kind = source.split(":", 1)[1]
        scheme = surface.schurian_scheme(kind)
    table = schemes.character_table(scheme, N=cfg.cyclotomic_order)
    duals = schemes.dual_intersection_matrices(table)
    if cfg.fmt == "json":
        print(json.dumps(emit.scheme_report(scheme, table, duals), indent=2))
    elif cfg.fmt == "latex":
        print(emit.scheme_latex(scheme, table, duals))
    else:
        print(emit.scheme_text(scheme, table, duals))
    return EXIT_PASS


def cmd_verify(cfg, args):
    t0 = time.perf_counter()
    checks, timings = verify.run_suite(cfg.q, profile=cfg.profile,
                                       jobs=cfg.jobs, cache_dir=cfg.cache_dir)
    timings["total"] = round(time.perf_counter() - t0, 3)
    report = emit.check_report_json(cfg.q, "verify", checks, timings)
    if cfg.fmt == "json":
        print(report)
    else:
        for c in checks:
            print(f"[{c.status.upper():4}] {c.name}: expected {c.expected!r}, "
                  f"got {c.actual!r}")
        print(f"total: {timings['total']}s")
    failed = [c for c in checks if not c.ok]
    return EXIT_MISMATCH if failed else EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
