"""Command-line surface.

Commands: analyze, search, tensor, simulate, bounds.  Exit codes: 0 on
success, 1 when a reproduction command finds a mismatch, 2 for usage or
parse errors, 3 when a resource limit refuses the computation.  Errors are
reported as one machine-readable JSON object on stdout.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

from .burst import no_cloning_check, qrb, quantum_burst_capability
from .channel import sweep, sweep_to_csv
from .classical import (classical_burst_capability, cyclic_from_poly,
                        rs_burst_capability, rs_mds)
from .gf import GF2, GF4, ext_field_build
from .qtpc import InterleaverMap, dispersal_report, qtpc_construct
from .registry import registry_entry
from .search import (GenPolyError, SearchPlan, build_registry_code, genpoly_to_poly,
                     parse_genpoly, records_to_csv, reproduce_table1, search)
from .stabilizer import ResourceLimitError, css_construct, hermitian_construct

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class UsageError(ValueError):
    pass


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _write_output(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# analyze
# ----------------------------------------------------------------------

def _cmd_analyze(args) -> int:
    construction = args.construction
    if construction == "css" and not args.poly2:
        raise UsageError("css construction needs --poly2")
    if construction == "hermitian" and args.poly2:
        raise UsageError("--poly2 is only meaningful with --construction css")
    if construction == "hermitian":
        spec = parse_genpoly(args.poly, args.n)
        code = cyclic_from_poly(genpoly_to_poly(spec, GF4), args.n).base
        stab = hermitian_construct(code)
    else:
        s1 = parse_genpoly(args.poly, args.n)
        s2 = parse_genpoly(args.poly2, args.n)
        c1 = cyclic_from_poly(genpoly_to_poly(s1, GF2), args.n).base
        c2 = cyclic_from_poly(genpoly_to_poly(s2, GF2), args.n).base
        stab = css_construct(c1, c2)
    analysis = quantum_burst_capability(stab)
    out = {
        "n": stab.n, "k": stab.k, "l": analysis.l,
        "qrb": qrb(stab.n, stab.k), "saturates": analysis.saturates,
        "degenerate": analysis.degenerate,
    }
    if args.distance_limit and (1 << (stab.n + stab.k)) <= args.distance_limit:
        out["distance"] = stab.min_distance(limit=args.distance_limit)
    _emit(out)
    return EXIT_OK


# ----------------------------------------------------------------------
# search
# ----------------------------------------------------------------------

def _cmd_search(args) -> int:
    if args.reproduce_table1:
        report = reproduce_table1()
        rows = []
        for r in report.rows:
            exp, obs = r.expected, r.observed
            rows.append({
                "id": r.entry_id,
                "expected": {"n": exp[0], "k": exp[1], "l": exp[2],
                             "degenerate": exp[3], "qrb": exp[4]},
                "observed": {"n": obs[0], "k": obs[1], "l": obs[2],
                             "degenerate": obs[3], "qrb": obs[4]},
                "match": r.match,
                "seconds": round(r.seconds, 3),
                **({"note": r.note} if r.note else {}),
            })
        _emit({"rows": rows,
               "matched": sum(r.match for r in report.rows),
               "total": len(report.rows)})
        return EXIT_OK if report.all_match else EXIT_MISMATCH
    if args.min_n is None or args.max_n is None:
        raise UsageError("search needs --min-n and --max-n (or --reproduce-table1)")
    n_values = tuple(n for n in range(args.min_n, args.max_n + 1) if n % 2 == 1)
    if not n_values:
        raise UsageError(f"no odd lengths in [{args.min_n}, {args.max_n}]; "
                         "even-length cyclic codes are outside the default plan")
    constructions = tuple(args.construction.split(","))
    plan = SearchPlan(n_values, constructions,
                      max_seconds=args.max_seconds,
                      max_candidates=args.max_candidates)
    outcome = search(plan)
    csv_text = records_to_csv(outcome.records)
    if not outcome.complete:
        sys.stderr.write("warning: budget exhausted, results are incomplete\n")
    _write_output(csv_text, args.output)
    return EXIT_OK


# ----------------------------------------------------------------------
# tensor
# ----------------------------------------------------------------------

def _cmd_tensor(args) -> int:
    try:
        n2_s, l2_s = args.rs.split(",")
        n2, l2 = int(n2_s), int(l2_s)
    except ValueError:
        raise UsageError(f"--rs expects 'n2,l2', got {args.rs!r}") from None
    spec = parse_genpoly(args.c1_poly, args.c1_n)
    c1 = cyclic_from_poly(genpoly_to_poly(spec, GF4), args.c1_n).base
    rho1 = c1.n - c1.k
    c2 = rs_mds(n2, l2, ext_field_build(rho1))
    stab, qspec = qtpc_construct(c1, c2)
    out = {
        "n1": qspec.n1, "k1": qspec.k1, "n2": qspec.n2, "k2": qspec.k2,
        "rho1": qspec.rho1, "rho2": qspec.rho2,
        "params": list(qspec.params),
        "rank": qspec.rho1 * qspec.rho2,
        "self_orthogonal": True,  # verified during construction
    }
    if args.dispersal:
        l1 = args.l1 or classical_burst_capability(c1).l
        if l1 <= 0 or qspec.n1 % l1 != 0:
            raise UsageError(f"subblock height {l1} must divide n1={qspec.n1}")
        imap = InterleaverMap(qspec.n1, qspec.n2, l1)
        full = dispersal_report(imap, args.dispersal)
        aligned = dispersal_report(imap, args.dispersal, aligned_only=True)
        out["dispersal"] = {
            "L": full.burst_len,
            "max_subblocks": full.max_affected_subblocks,
            "max_inner_burst": full.max_inner_burst,
            "aligned": {
                "max_subblocks": aligned.max_affected_subblocks,
                "max_inner_burst": aligned.max_inner_burst,
            },
            "l1": l1,
            "l2": rs_burst_capability(c2).l,
        }
    _emit(out)
    return EXIT_OK


# ----------------------------------------------------------------------
# simulate
# ----------------------------------------------------------------------

def _parse_grid(text: str) -> List[float]:
    parts = text.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise UsageError(f"range {text!r} must be VALUE, start:step:end, or start:log:end")
    if parts[1] == "log":
        lo, hi = float(parts[0]), float(parts[2])
        if lo <= 0 or hi <= lo:
            raise UsageError(f"log range {text!r} needs 0 < start < end")
        decades = math.log10(hi / lo)
        count = int(round(4 * decades)) + 1  # five points per decade
        step = decades / (count - 1)
        return [lo * 10 ** (i * step) for i in range(count)]
    lo, step, hi = float(parts[0]), float(parts[1]), float(parts[2])
    if step <= 0:
        raise UsageError("step must be positive")
    count = int(round((hi - lo) / step)) + 1
    return [lo + i * step for i in range(count)]


def _cmd_simulate(args) -> int:
    specs = []
    for code_id in args.code.split(","):
        entry = registry_entry(code_id)
        stab = build_registry_code(entry)
        t = args.t
        if t is None:
            if 1 << (stab.n + stab.k) > (1 << 26):
                raise UsageError(
                    f"{code_id}: distance enumeration too large to derive t; pass --t")
            d = stab.min_distance()
            t = (d - 1) // 2
        l = args.l if args.l is not None else entry.l
        specs.append((code_id, stab, t, l))
    modes = args.decoder.split(",")
    p_grid = _parse_grid(args.p)
    mu_grid = _parse_grid(args.mu)
    points = sweep(specs, modes, p_grid, mu_grid,
                   strategy=args.strategy, w_max=args.w_max,
                   limit=args.limit, workers=args.workers)
    _write_output(sweep_to_csv(points), args.output)
    return EXIT_OK


# ----------------------------------------------------------------------
# bounds
# ----------------------------------------------------------------------

def _cmd_bounds(args) -> int:
    q = qrb(args.n, args.k)
    _emit({
        "qrb": q,
        "qrb_ok": args.l <= q,
        "no_cloning_ok": no_cloning_check(args.n, args.l) if args.k >= 1 else True,
    })
    return EXIT_OK


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbecc",
        description="Quantum burst-error-correcting code workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one cyclic-code construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", required=True, help="generator, e.g. '1^6 2^3 1^0'")
    p.add_argument("--poly2", help="second binary generator (css only)")
    p.add_argument("--construction", choices=["hermitian", "css"], default="hermitian")
    p.add_argument("--distance-limit", type=int, default=1 << 28,
                   help="dual-enumeration cap for the distance field; 0 disables")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("search", help="enumerate and analyze cyclic candidates")
    p.add_argument("--min-n", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--odd-only", action="store_true", default=True,
                   help="restrict to odd lengths (always on)")
    p.add_argument("--construction", default="hermitian,css")
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--max-candidates", type=int)
    p.add_argument("--reproduce-table1", action="store_true",
                   help="rebuild every registry row and compare")
    p.add_argument("--output", help="CSV path (default stdout)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("tensor", help="build a tensor-product quantum code")
    p.add_argument("--c1-poly", required=True)
    p.add_argument("--c1-n", type=int, required=True)
    p.add_argument("--rs", required=True, help="outer MDS code as 'n2,l2'")
    p.add_argument("--l1", type=int, help="subblock height (default: measured burst capability of C1)")
    p.add_argument("--dispersal", type=int, help="report dispersal for this stream burst length")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("simulate", help="entanglement fidelity over the memory channel")
    p.add_argument("--code", required=True, help="registry id(s), comma separated")
    p.add_argument("--decoder", default="combined", help="random|burst|combined, comma separated")
    p.add_argument("--p", required=True, help="error probability grid")
    p.add_argument("--mu", required=True, help="correlation degree grid")
    p.add_argument("--strategy", choices=["exact", "truncated"], default="exact")
    p.add_argument("--w-max", type=int, default=4)
    p.add_argument("--t", type=int, help="random-error radius (default from distance)")
    p.add_argument("--l", type=int, help="burst span (default from registry)")
    p.add_argument("--limit", type=int, default=4 ** 13,
                   help="exact-strategy cap on 4^n")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", help="CSV path (default stdout)")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("bounds", help="burst-length bound predicates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        _emit({"error": {"type": "resource-limit", "message": str(exc)}})
        return EXIT_LIMIT
    except (UsageError, GenPolyError, ValueError, KeyError) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
