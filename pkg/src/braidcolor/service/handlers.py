"""The work behind each endpoint, as plain functions over request models.

The command line imports these directly, so a local run and a run against
a served instance produce the same payloads.
"""

from __future__ import annotations

import numpy as np

from .. import registry
from ..biquandles import (
    Biquandle,
    biquandle_from_json,
    check_biquandle_axioms,
    check_quandle_axioms,
    quandle_from_json,
)
from ..braces import brace_from_json, validate_skew_brace
from ..braids import (
    fixed_points_finite,
    markov_conjugate,
    markov_stabilize,
    parse_braid,
    render_braid,
)
from ..errors import FormatError
from ..fixedpoints import sample_fixed_points
from ..groups import group_from_json, validate_group
from ..links import CONVENTION, coloring_space_system, crossing_matrix
from ..links import verify_system_vs_fixed_points
from .models import CheckRequest, ColorRequest, InvarianceRequest, LinkinfoRequest

MAX_LISTED_COLORINGS = 10000

_RESOLVERS = {
    "group": (registry.resolve_group, group_from_json),
    "brace": (registry.resolve_brace, brace_from_json),
    "quandle": (registry.resolve_quandle, quandle_from_json),
    "biquandle": (registry.resolve_biquandle, biquandle_from_json),
}

_VALIDATORS = {
    "group": validate_group,
    "brace": validate_skew_brace,
    "quandle": check_quandle_axioms,
    "biquandle": check_biquandle_axioms,
}


def _resolve(kind: str, selector, document):
    if (selector is None) == (document is None):
        raise FormatError(f"give exactly one of selector or document for the {kind}")
    by_name, by_doc = _RESOLVERS[kind]
    return by_name(selector) if selector is not None else by_doc(document)


def run_check(req: CheckRequest) -> dict:
    obj = _resolve(req.kind, req.selector, req.document)
    finite = obj.carrier.kind == "finite"
    if req.mode == "exhaustive" and not finite:
        raise FormatError("a continuous carrier cannot be checked exhaustively")
    if req.mode == "sampled" and finite:
        raise FormatError("finite carriers are checked exhaustively; "
                          "use mode auto or exhaustive")
    effective = "exhaustive" if finite else "sampled"
    report = _VALIDATORS[req.kind](
        obj, samples=req.samples, tolerance=req.tolerance, seed=req.seed
    )
    data = report.to_json()
    return {
        "command": "check",
        "kind": req.kind,
        "selector": req.selector,
        "mode": effective,
        "samples": None if finite else req.samples,
        "tolerance": req.tolerance,
        "seed": None if finite else req.seed,
        "valid": data["valid"],
        "checked": data["checked"],
        "max_residual": data.get("max_residual"),
        "violations": data["violations"],
    }


def run_color(req: ColorRequest) -> dict:
    q: Biquandle = _resolve("biquandle", req.biquandle, req.document)
    word = parse_braid(req.braid)
    payload = {
        "command": "color",
        "biquandle": req.biquandle,
        "braid": render_braid(word),
        "samples": req.samples,
        "tolerance": req.tolerance,
        "seed": req.seed,
        "budget": req.budget,
    }
    if q.is_finite:
        colorings = fixed_points_finite(q, word, req.budget)
        report = {
            "kind": "finite",
            "count": len(colorings),
            "colorings": [list(c) for c in colorings[:MAX_LISTED_COLORINGS]],
        }
        if len(colorings) > MAX_LISTED_COLORINGS:
            report["colorings_truncated"] = True
    else:
        entries = sample_fixed_points(
            q, word, samples=req.samples, tolerance=req.tolerance,
            seed=req.seed, max_iterations=req.max_iterations,
        )
        converged = [e for e in entries if e["converged"]]
        report = {
            "kind": "continuous",
            "attempts": req.samples,
            "converged": len(converged),
            "samples": converged,
            "failures": [
                {"seed_index": e["seed_index"], "residual": e["residual"]}
                for e in entries if not e["converged"]
            ],
        }
    payload["report"] = report
    return payload


def run_linkinfo(req: LinkinfoRequest) -> dict:
    word = parse_braid(req.braid)
    profile = crossing_matrix(word)
    system = coloring_space_system(profile)
    payload = {
        "command": "linkinfo",
        "braid": render_braid(word),
        "profile": profile.to_json(),
        "strand_components": list(profile.strand_components),
        "system": system.to_json(),
        "convention": CONVENTION,
    }
    if req.samples > 0:
        payload["cross_check"] = verify_system_vs_fixed_points(
            word, samples=req.samples, tolerance=req.tolerance, seed=req.seed,
        )
    return payload


def run_invariance(req: InvarianceRequest) -> dict:
    q: Biquandle = _resolve("biquandle", req.biquandle, req.document)
    if not q.is_finite:
        raise FormatError("coloring counts need a finite carrier; "
                          "continuous reports are not a single number")
    word = parse_braid(req.braid)
    rng = np.random.default_rng(req.seed)

    reps = [("original", word)]
    if word.strands >= 2:
        for _ in range(req.conjugates):
            g = int(rng.integers(1, word.strands))
            if rng.uniform() < 0.5:
                g = -g
            reps.append((f"conjugate:{g}", markov_conjugate(word, g)))
    if req.stabilize:
        reps.append(("stabilize:+1", markov_stabilize(word, 1)))
        reps.append(("stabilize:-1", markov_stabilize(word, -1)))

    representatives = []
    counts = []
    for move, rep in reps:
        count = len(fixed_points_finite(q, rep, req.budget))
        representatives.append(
            {"move": move, "word": render_braid(rep), "count": count}
        )
        counts.append(count)

    return {
        "command": "invariance",
        "biquandle": req.biquandle,
        "braid": render_braid(word),
        "conjugates": req.conjugates,
        "stabilize": req.stabilize,
        "seed": req.seed,
        "budget": req.budget,
        "representatives": representatives,
        "counts": counts,
        "all_equal": len(set(counts)) == 1,
    }
