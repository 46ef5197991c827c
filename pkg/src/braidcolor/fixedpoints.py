"""Numerics for coloring sets on continuous carriers.

Fixed points of the induced map are found by a damped Gauss-Newton
iteration on chart coordinates (a least-squares step handles the rank
deficiency that comes with positive-dimensional solution sets), and the
local dimension of the solution set is read off the singular values of a
finite-difference Jacobian of f - id.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .biquandles import Biquandle
from .braids import BraidWord, induced_map
from .errors import FormatError, NoConvergenceError, PreconditionError


def fixed_residual(q: Biquandle, word: BraidWord, state: tuple) -> float:
    """Largest componentwise distance between f(state) and state."""
    f = induced_map(q, word)
    image = f(tuple(state))
    carrier = q.carrier
    return max(carrier.distance(p, fp) for p, fp in zip(state, image))


def _perturb_state(carrier, state, u):
    d = carrier.dim
    return tuple(
        carrier.perturb(p, u[i * d:(i + 1) * d]) for i, p in enumerate(state)
    )


def _chart_residual(carrier, state, image):
    return np.concatenate([
        carrier.chart_diff(p, fp) for p, fp in zip(state, image)
    ])


def _jacobian(q: Biquandle, word: BraidWord, state: tuple, fd_step: float):
    """Central-difference Jacobian of the chart residual of f - id."""
    carrier = q.carrier
    f = induced_map(q, word)
    dim = carrier.dim * len(state)

    def residual_at(u):
        x = _perturb_state(carrier, state, u)
        return _chart_residual(carrier, x, f(x))

    jac = np.empty((dim, dim))
    for j in range(dim):
        e = np.zeros(dim)
        e[j] = fd_step
        jac[:, j] = (residual_at(e) - residual_at(-e)) / (2.0 * fd_step)
    return jac


@dataclass
class SolveResult:
    state: tuple
    residual: float
    iterations: int


def solve_fixed_point_near(q: Biquandle, word: BraidWord, seed_state: tuple, *,
                           tolerance: float = 1e-9, max_iterations: int = 100,
                           fd_step: float = 1e-6, max_halvings: int = 20) -> SolveResult:
    """Damped Gauss-Newton from a seed state.  Raises NoConvergenceError
    (carrying the best state seen) when the tolerance is not reached."""
    if q.carrier.kind != "continuous":
        raise FormatError("the solver works on continuous carriers")
    carrier = q.carrier
    f = induced_map(q, word)
    state = tuple(seed_state)
    best = (fixed_residual(q, word, state), state)

    for it in range(max_iterations):
        res_now = fixed_residual(q, word, state)
        if res_now <= tolerance:
            return SolveResult(state, res_now, it)
        rvec = _chart_residual(carrier, state, f(state))
        jac = _jacobian(q, word, state, fd_step)
        step, *_ = np.linalg.lstsq(jac, -rvec, rcond=None)

        moved = False
        for _ in range(max_halvings + 1):
            candidate = _perturb_state(carrier, state, step)
            res_cand = fixed_residual(q, word, candidate)
            if res_cand < res_now:
                state = candidate
                moved = True
                break
            step = step / 2.0
        if not moved:
            break
        if best[0] > res_cand:
            best = (res_cand, state)

    res_final = fixed_residual(q, word, state)
    if res_final <= tolerance:
        return SolveResult(state, res_final, max_iterations)
    if res_final < best[0]:
        best = (res_final, state)
    raise NoConvergenceError(
        f"no fixed point within tolerance {tolerance} near the seed "
        f"(best residual {best[0]:.3e})",
        best_state=best[1], best_residual=best[0],
        iterations=max_iterations,
    )


@dataclass
class DimensionEstimate:
    dimension: int
    rank: int
    ambient: int
    singular_values: list = field(default_factory=list)


def estimate_dimension(q: Biquandle, word: BraidWord, state: tuple, *,
                       tolerance: float = 1e-9, fd_step: float = 1e-6,
                       rank_cutoff: float = 1e-6) -> DimensionEstimate:
    """Local dimension of the coloring set at a fixed point: ambient chart
    dimension minus the numerical rank of the Jacobian of f - id.  Singular
    values at or below rank_cutoff times the largest count as zero."""
    res = fixed_residual(q, word, state)
    if res > tolerance:
        raise PreconditionError(
            f"dimension estimate needs a fixed point; residual is {res:.3e}"
        )
    jac = _jacobian(q, word, state, fd_step)
    svals = np.linalg.svd(jac, compute_uv=False)
    top = float(svals[0]) if len(svals) else 0.0
    if top <= 0.0:
        rank = 0
    else:
        rank = int(np.sum(svals > rank_cutoff * top))
    ambient = q.carrier.dim * len(state)
    return DimensionEstimate(
        dimension=ambient - rank,
        rank=rank,
        ambient=ambient,
        singular_values=[float(s) for s in svals],
    )


def sample_fixed_points(q: Biquandle, word: BraidWord, *, samples: int = 20,
                        tolerance: float = 1e-9, seed: int = 0,
                        max_iterations: int = 100, fd_step: float = 1e-6) -> list:
    """Run the solver from seeded random states and report what it finds.

    Each converged entry carries the point, its residual, the local
    dimension estimate and the singular values behind it; failed seeds are
    recorded with their best residual.
    """
    carrier = q.carrier
    rng = np.random.default_rng(seed)
    out = []
    for k in range(samples):
        seed_state = tuple(carrier.sample(rng) for _ in range(word.strands))
        try:
            sol = solve_fixed_point_near(
                q, word, seed_state, tolerance=tolerance,
                max_iterations=max_iterations, fd_step=fd_step,
            )
        except NoConvergenceError as exc:
            out.append({
                "seed_index": k,
                "converged": False,
                "residual": float(exc.best_residual),
            })
            continue
        est = estimate_dimension(q, word, sol.state, tolerance=tolerance,
                                 fd_step=fd_step)
        out.append({
            "seed_index": k,
            "converged": True,
            "point": [carrier.to_json(p) for p in sol.state],
            "residual": float(sol.residual),
            "dimension": est.dimension,
            "singular_values": est.singular_values,
        })
    return out
