"""Command line front end: ``cubehom <validate|generate|chains|homology|oracle>``.

Exit codes: 0 success, 1 invalid input, 2 budget exceeded, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from collections import defaultdict

from .chains import chain_type, enumerate_chains
from .errors import BudgetExceeded, EnumerationError, PCSError
from .ingest import GridSpec, generate_grid_complex, parse_pcs, random_grid_spec, serialize_pcs
from .pcs import has_no_loops, is_covering_proper, is_proper, validate_precubical
from .pipeline import oracle, path_space_model

EXIT_INVALID, EXIT_BUDGET, EXIT_MISMATCH = 1, 2, 3
DEFAULT_SEED = 20240101


class InvalidInput(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubehom", description="Homology of directed path spaces of pre-cubical sets.")
    p.add_argument("command", choices=["validate", "generate", "chains", "homology", "oracle"])
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help=".pcs.json document")
    src.add_argument("--grid", metavar="SPEC", help='grid spec: JSON text or a file, {"extents": [...], "forbidden": [...]}')
    p.add_argument("--from", dest="source", metavar="V")
    p.add_argument("--to", dest="target", metavar="W")
    p.add_argument("--max-length", type=int)
    p.add_argument("--limit", type=int, default=200_000, help="maximal number of cube chains")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--dump-complex", metavar="FILE")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--random", type=int, default=10, metavar="N",
                   help="oracle without input: number of random grid complexes")
    return p


def load(args):
    """(complex, source, target) from --input or --grid, endpoints overridden by --from/--to."""
    if args.input:
        try:
            with open(args.input) as fh:
                cset, origin, goal = parse_pcs(fh.read())
        except OSError as exc:
            raise InvalidInput(str(exc)) from None
    elif args.grid:
        text = args.grid
        if os.path.exists(text):
            with open(text) as fh:
                text = fh.read()
        cset, origin, goal = generate_grid_complex(GridSpec.from_json(text))
    else:
        raise InvalidInput("one of --input or --grid is required")
    origin = args.source or origin
    goal = args.target or goal
    for name, x in (("--from", origin), ("--to", goal)):
        if x is not None and (x not in cset or cset.dim(x) != 0):
            raise InvalidInput(f"{name} {x!r} is not a vertex")
    return cset, origin, goal


def need_endpoints(origin, goal):
    if origin is None or goal is None:
        raise InvalidInput("source and target vertices are required (--from/--to)")


def check_usable(cset):
    report = validate_precubical(cset)
    if not report.ok:
        raise InvalidInput(f"pre-cubical relations fail ({len(report.violations)} violations)")
    ok, pair = is_covering_proper(cset)
    if not ok:
        raise InvalidInput(f"non-looping covering is not proper: {pair[0]!r} and {pair[1]!r}")


def cmd_validate(args, out):
    cset, origin, goal = load(args)
    report = validate_precubical(cset)
    proper, pair = is_proper(cset)
    loopfree, cycle = has_no_loops(cset)
    cproper, cpair = is_covering_proper(cset)
    if args.json:
        out.write(json.dumps({
            "grading": list(cset.grading()),
            "precubical": report.ok,
            "violations": [[c, list(r), m] for c, r, m in report.violations],
            "proper": proper, "proper_witness": pair,
            "no_loops": loopfree, "loop_witness": cycle,
            "covering_proper": cproper, "covering_witness": cpair,
        }, indent=1) + "\n")
    else:
        out.write(f"grading: {list(cset.grading())}\n")
        out.write(f"pre-cubical relations: {'ok' if report.ok else 'FAIL'}\n")
        for c, rel, msg in report.violations:
            out.write(f"  {c}: (i,j,eps,eta)={rel}: {msg}\n")
        out.write(f"proper: {'yes' if proper else 'no ' + repr(pair)}\n")
        out.write(f"no loops: {'yes' if loopfree else 'no, cycle ' + ' -> '.join(cycle)}\n")
        out.write(f"covering proper: {'yes' if cproper else 'no ' + repr(cpair)}\n")
    return 0 if report.ok and cproper else EXIT_INVALID


def cmd_generate(args, out):
    if not args.grid:
        raise InvalidInput("generate needs --grid")
    cset, origin, goal = load(args)
    out.write(serialize_pcs(cset, origin, goal))
    return 0


def cmd_chains(args, out):
    cset, origin, goal = load(args)
    need_endpoints(origin, goal)
    chains = enumerate_chains(cset, origin, goal, max_length=args.max_length, limit=args.limit)
    groups = defaultdict(list)
    for c in chains:
        t = chain_type(cset, c)
        groups[sum(t), t].append(c)
    if args.json:
        out.write(json.dumps([{"length": n, "type": list(t), "chains": [list(c) for c in cs]}
                              for (n, t), cs in sorted(groups.items())], indent=1) + "\n")
        return 0
    out.write(f"{len(chains)} cube chains from {origin} to {goal}\n")
    for (n, t), cs in sorted(groups.items()):
        out.write(f"length {n}, type {list(t)}: {len(cs)}\n")
        for c in cs:
            out.write("  " + (" ".join(c) or "(empty chain)") + "\n")
    return 0


def cmd_homology(args, out):
    cset, origin, goal = load(args)
    need_endpoints(origin, goal)
    check_usable(cset)
    model = path_space_model(cset, origin, goal, max_length=args.max_length, limit=args.limit)
    if args.dump_complex:
        with open(args.dump_complex, "w") as fh:
            fh.write(model.complex.to_json())
    if args.json:
        out.write(json.dumps({
            "source": origin, "target": goal,
            "cells": model.complex.counts(),
            "strata": {str(n): r.to_dict() for n, r in model.strata.items()},
            "total": model.total.to_dict(),
        }, indent=1) + "\n")
        return 0
    out.write(f"cells per dimension: {model.complex.counts()}\n")
    for n, rep in model.strata.items():
        out.write(f"length {n}:\n")
        for line in rep.trimmed().lines():
            out.write(f"  {line}\n")
    out.write("total:\n")
    for line in model.total.trimmed().lines():
        out.write(f"  {line}\n")
    return 0


def _oracle_one(label, cset, origin, goal, args, out, rows):
    check_usable(cset)
    res = oracle(cset, origin, goal, max_length=args.max_length, limit=args.limit)
    status = "match" if res.match else "MISMATCH"
    rows.append({"instance": label, "match": res.match, "dd_zero": res.dd_zero,
                 "differential_failures": [list(c) for c in res.differential_failures],
                 "strata": {str(n): {"cellular": a.to_dict(), "nerve": b.to_dict()}
                            for n, (a, b, _) in res.strata.items()}})
    if not args.json:
        out.write(f"{label}: {status}\n")
        for n, (a, b, diffs) in res.strata.items():
            out.write(f"  length {n}: {'; '.join(a.trimmed().lines())}\n")
            for d, x, y in diffs:
                out.write(f"    degree {d}: cellular {x} vs nerve {y}\n")
        for c in res.differential_failures:
            out.write(f"  differential formula fails on {c}\n")
        if not res.dd_zero:
            out.write("  boundary o boundary != 0\n")
    return res.match


def cmd_oracle(args, out):
    rows, ok = [], True
    if args.input or args.grid:
        cset, origin, goal = load(args)
        need_endpoints(origin, goal)
        ok = _oracle_one(args.input or args.grid, cset, origin, goal, args, out, rows)
    else:
        rng = random.Random(args.seed)
        for _ in range(args.random):
            spec = random_grid_spec(rng)
            cset, origin, goal = generate_grid_complex(spec)
            label = json.dumps({"extents": list(spec.extents), "forbidden": [list(c) for c in spec.forbidden]})
            ok &= _oracle_one(label, cset, origin, goal, args, out, rows)
    if args.json:
        out.write(json.dumps({"match": ok, "instances": rows}, indent=1) + "\n")
    return 0 if ok else EXIT_MISMATCH


COMMANDS = {"validate": cmd_validate, "generate": cmd_generate, "chains": cmd_chains,
            "homology": cmd_homology, "oracle": cmd_oracle}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (InvalidInput, PCSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except EnumerationError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_MISMATCH


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
