"""Canonical JSON reports.

Key order is fixed by construction (dicts are built in a set order and
dumped without sorting); every value is an integer, boolean, string or
list thereof.
"""

from __future__ import annotations

import json
import time
from typing import Optional

from . import __version__
from .checker import DUAL_CRITERION_NOTE, check_gap_one, evaluate_conditions
from .invariants import invariant_report
from .parser import PresentationDocument
from .ring import ORDER_NAME, format_poly, format_vec

ENGINE = "omega-kernel"


def _header(doc: PresentationDocument, label: Optional[str]) -> dict:
    r = doc.ring
    names = [n for n, _ in doc.gens]
    return {
        "label": doc.label or label or "",
        "engine": {"name": ENGINE, "version": __version__, "order": ORDER_NAME},
        "ring": {
            "characteristic": r.p,
            "variables": [{"name": x, "weight": w} for x, w in zip(r.names, r.weights)],
        },
        "module": {
            "generators": [{"name": n, "degree": d} for n, d in doc.gens],
            "relations": [format_vec(r, v.terms, names) for v in doc.relations],
            "claim_cohomology_ring": doc.claim_cohomology_ring,
        },
    }


def invariants_section(doc: PresentationDocument) -> dict:
    M = doc.module()
    rep = invariant_report(M)
    ring = doc.ring
    return {
        "invariants": {
            "depth": rep.depth, "dim": rep.dim, "codim": rep.codim,
            "pd": rep.pd, "omega": rep.omega,
        },
        "betti": [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(rep.betti.items())],
        "hilbert": {
            "numerator": [{"exponent": k, "coefficient": c} for k, c in rep.hilbert.numerator],
            "denominator_weights": list(rep.hilbert.weights),
        },
        "profile": [
            {
                "e": p.e,
                "ext_nonzero": p.ext_nonzero,
                "annihilator": [format_poly(ring, {e: a for (_, e), a in g.items()})
                                for g in p.annihilator.groebner],
                "codim": p.codim,
                "flag": p.flag,
            }
            for p in rep.profile.entries
        ],
    }


def conditions_section(doc: PresentationDocument) -> dict:
    M = doc.module()
    v = evaluate_conditions(M)
    gap = check_gap_one(M, doc.claim_cohomology_ring)
    return {
        "conditions": {
            "e": v.e,
            "depth_equals_omega": v.depth_equals_omega,
            "h0_nonzero": v.h0_nonzero,
            "hom_nonzero": v.hom_nonzero,
            "tor_nonzero": v.tor_nonzero,
            "agree": v.agree,
            "dual_criterion": DUAL_CRITERION_NOTE,
        },
        "gap_one": {
            "verdict": gap.verdict.value,
            "gap": gap.gap,
            "noteworthy": gap.noteworthy,
        },
    }


def build_report(doc: PresentationDocument, check: bool, label: Optional[str] = None,
                 timing: bool = True) -> dict:
    start = time.perf_counter_ns()
    out = _header(doc, label)
    out.update(invariants_section(doc))
    if check:
        out.update(conditions_section(doc))
    if timing:
        out["wall_ms"] = (time.perf_counter_ns() - start) // 1_000_000
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def render_text(rep: dict) -> str:
    lines = []
    if rep.get("label"):
        lines.append(f"label: {rep['label']}")
    inv = rep["invariants"]
    lines.append("  ".join(f"{k} {inv[k]}" for k in ("depth", "dim", "codim", "pd", "omega")))
    betti = ", ".join(f"b[{b['i']},{b['j']}]={b['beta']}" for b in rep["betti"])
    lines.append(f"betti: {betti}")
    num = " ".join(f"{c:+d}*t^{k}" for k, c in
                   ((t["exponent"], t["coefficient"]) for t in rep["hilbert"]["numerator"]))
    den = "".join(f"(1-t^{w})" for w in rep["hilbert"]["denominator_weights"])
    lines.append(f"hilbert: ({num}) / {den}")
    flags = [p["e"] for p in rep["profile"] if p["flag"]]
    lines.append(f"associated codimensions: {flags}")
    if "conditions" in rep:
        c = rep["conditions"]
        lines.append(
            f"e={c['e']}: depth=omega {c['depth_equals_omega']}, H0 {c['h0_nonzero']}, "
            f"Hom {c['hom_nonzero']}, Tor {c['tor_nonzero']}, agree {c['agree']}")
        g = rep["gap_one"]
        lines.append(f"gap-one: {g['verdict']} (gap {g['gap']})"
                     + ("  [claimed cohomology ring: review presentation]" if g["noteworthy"] else ""))
    return "\n".join(lines) + "\n"
