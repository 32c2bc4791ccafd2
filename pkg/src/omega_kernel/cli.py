"""``omega`` command line driver.

Exit codes: 0 success, 1 internal inconsistency, 2 parse error,
3 zero module, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

from . import limits
from .errors import InternalInconsistency, ResourceCapExceeded, ZeroModuleError
from .parser import ParseError, parse_file
from .report import build_report, dumps, render_text
from .resolution import free_resolution
from .ring import format_poly

EXIT_OK, EXIT_INCONSISTENT, EXIT_PARSE, EXIT_ZERO, EXIT_CAP = 0, 1, 2, 3, 4


def _timing_enabled(args) -> bool:
    return not (getattr(args, "no_timing", False) or os.environ.get("OMEGA_NO_TIMING"))


def run_file(path: str, check: bool, timing: bool = True) -> Tuple[int, dict]:
    """Process one presentation file; returns ``(exit_code, report_or_error)``."""
    try:
        doc = parse_file(path)
    except ParseError as exc:
        return EXIT_PARSE, {"error": "parse error", "detail": str(exc)}
    except OSError as exc:
        return EXIT_PARSE, {"error": "unreadable file", "detail": str(exc)}
    try:
        if doc.module().is_zero():
            return EXIT_ZERO, {"error": "zero module", "detail": "the presented module is zero"}
        rep = build_report(doc, check, label=Path(path).stem, timing=timing)
    except ResourceCapExceeded as exc:
        return EXIT_CAP, {"error": "resource cap", "detail": str(exc)}
    except ZeroModuleError as exc:
        return EXIT_ZERO, {"error": "zero module", "detail": str(exc)}
    except InternalInconsistency as exc:
        return EXIT_INCONSISTENT, {"error": "internal inconsistency", "detail": str(exc)}
    if check and not rep["conditions"]["agree"]:
        return EXIT_INCONSISTENT, rep
    return EXIT_OK, rep


def _emit(code: int, rep: dict, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(dumps(rep))
    elif "error" in rep:
        print(f"error: {rep['error']}: {rep['detail']}", file=sys.stderr)
    else:
        sys.stdout.write(render_text(rep))
    return code


def cmd_invariants(args) -> int:
    code, rep = run_file(args.file, check=False, timing=_timing_enabled(args))
    return _emit(code, rep, args.json)


def cmd_check(args) -> int:
    code, rep = run_file(args.file, check=True, timing=_timing_enabled(args))
    return _emit(code, rep, args.json)


def _corpus_worker(job):
    path, lim, timing = job
    limits.set_limits(lim)
    return run_file(path, check=True, timing=timing)


def run_corpus(directory: str, jobs: int = 1, timing: bool = True) -> Tuple[int, dict]:
    files = sorted(str(p) for p in Path(directory).glob("*.gmod"))
    work = [(f, limits.current(), timing) for f in files]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_corpus_worker, work))
    else:
        results = [_corpus_worker(w) for w in work]
    summary = {"files": len(files), "agree": 0, "inconsistent": 0, "errors": 0,
               "gap_one_confirmed": 0, "gap_one_refuted_with_claim": 0}
    reports = []
    for path, (code, rep) in zip(files, results):
        name = Path(path).name
        if code == EXIT_OK or (code == EXIT_INCONSISTENT and "conditions" in rep):
            if rep["conditions"]["agree"]:
                summary["agree"] += 1
            else:
                summary["inconsistent"] += 1
            verdict = rep["gap_one"]["verdict"]
            if verdict == "Confirmed":
                summary["gap_one_confirmed"] += 1
            if verdict == "Refuted" and rep["module"]["claim_cohomology_ring"]:
                summary["gap_one_refuted_with_claim"] += 1
        elif code == EXIT_INCONSISTENT:
            summary["inconsistent"] += 1
        else:
            summary["errors"] += 1
        reports.append({"file": name, "exit": code, "report": rep})
    code = EXIT_INCONSISTENT if summary["inconsistent"] else EXIT_OK
    return code, {"summary": summary, "reports": reports}


def cmd_corpus(args) -> int:
    code, out = run_corpus(args.directory, args.jobs, timing=_timing_enabled(args))
    if args.json:
        sys.stdout.write(dumps(out))
        return code
    for entry in out["reports"]:
        rep = entry["report"]
        if "error" in rep:
            print(f"{entry['file']}: error ({rep['error']}): {rep['detail']}")
            continue
        c, g = rep["conditions"], rep["gap_one"]
        inv = rep["invariants"]
        print(f"{entry['file']}: depth {inv['depth']} dim {inv['dim']} omega {inv['omega']} "
              f"pd {inv['pd']} conditions {'agree' if c['agree'] else 'DISAGREE'} "
              f"({c['depth_equals_omega']}) gap-one {g['verdict']}"
              + (" [review]" if g["noteworthy"] else ""))
    s = out["summary"]
    print("summary: " + ", ".join(f"{k} {v}" for k, v in s.items()))
    return code


def cmd_resolve(args) -> int:
    try:
        doc = parse_file(args.file)
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    M = doc.module()
    try:
        if M.is_zero():
            print("error: zero module", file=sys.stderr)
            return EXIT_ZERO
        R = free_resolution(M, args.max_length)
    except ResourceCapExceeded as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    ring = M.ring
    out = {
        "ranks": R.ranks,
        "twists": [list(t) for t in R.twists],
        "differentials": [
            [[format_poly(ring, f.terms) for f in row] for row in R.matrix(i)]
            for i in range(1, R.length + 1)
        ],
    }
    if args.json:
        sys.stdout.write(dumps(out))
    else:
        for i, tw in enumerate(R.twists):
            print(f"F{i}: " + " + ".join(f"S({-t})" for t in tw))
        for i, mat in enumerate(out["differentials"], start=1):
            print(f"d{i}:")
            for row in mat:
                print("  [" + ", ".join(row) + "]")
    return EXIT_OK


def _load_config(path: Optional[str]) -> None:
    lim = limits.Limits.from_env()
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        lim = lim.updated(data.get("limits", data))
    limits.set_limits(lim)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="omega", description=__doc__.splitlines()[0])
    ap.add_argument("--config", help="JSON file with a 'limits' table (max_pairs, degree_cap)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="depth, dim, codim, pd, omega, Betti table")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit the wall_ms field")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check", help="four-condition equivalence and gap-one verdict")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("corpus", help="check every .gmod file in a directory")
    p.add_argument("directory")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("resolve", help="print the minimal free resolution")
    p.add_argument("file")
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_resolve)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _load_config(args.config)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
