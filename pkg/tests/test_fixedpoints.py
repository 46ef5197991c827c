import numpy as np
import pytest

from braidcolor import (
    NoConvergenceError,
    PreconditionError,
    TorusCarrier,
    estimate_dimension,
    fixed_residual,
    make_alexander,
    parse_braid,
    sample_fixed_points,
    solve_fixed_point_near,
)
from braidcolor.registry import resolve_biquandle

HOPF = parse_braid("2: 1 1")
TREFOIL = parse_braid("2: 1 1 1")


def test_hopf_surface_point_is_fixed_with_full_dimension():
    q = resolve_biquandle("r2-heis")
    state = (np.array([1.0, 2.0, 3.0]), np.array([2.0, 4.0, 7.0]))
    assert fixed_residual(q, HOPF, state) == 0.0
    est = estimate_dimension(q, HOPF, state)
    assert est.ambient == 6
    assert est.rank == 1
    assert est.dimension == 5


def test_trefoil_family_is_fixed_with_dimension_three():
    q = resolve_biquandle("r2-heis")
    rng = np.random.default_rng(9)
    for _ in range(20):
        x, y, z = rng.uniform(-5, 5, 3)
        state = (np.array([x, y, z]), np.array([x, y, z + x * y]))
        assert fixed_residual(q, TREFOIL, state) <= 1e-9
        assert estimate_dimension(q, TREFOIL, state).dimension == 3


def test_torus_trefoil_generic_and_exceptional_dimensions():
    q = resolve_biquandle("r2-torus")
    w = np.exp(0.7j)
    a2 = 1.5 + 0.5j
    member = (TorusCarrier.point(w, np.conj(w) * a2), TorusCarrier.point(w, a2))
    assert fixed_residual(q, TREFOIL, member) <= 1e-9
    assert estimate_dimension(q, TREFOIL, member).dimension == 3

    w = np.exp(1j * np.pi / 3)
    free = (TorusCarrier.point(w, 0.3 + 0.2j), TorusCarrier.point(w, -1.0 + 0.8j))
    assert fixed_residual(q, TREFOIL, free) <= 1e-9
    assert estimate_dimension(q, TREFOIL, free).dimension == 4


def test_solver_lands_on_the_hopf_surface():
    q = resolve_biquandle("r2-heis")
    rng = np.random.default_rng(21)
    for _ in range(5):
        seed_state = (rng.uniform(-5, 5, 3), rng.uniform(-5, 5, 3))
        sol = solve_fixed_point_near(q, HOPF, seed_state)
        assert sol.residual <= 1e-9
        (x1, y1, _), (x2, y2, _) = sol.state
        assert abs(x1 * y2 - x2 * y1) <= 1e-6


def test_solver_reports_non_convergence():
    q = resolve_biquandle("r2-heis")
    seed_state = (np.array([3.0, -2.0, 1.0]), np.array([5.0, 4.0, -6.0]))
    with pytest.raises(NoConvergenceError) as err:
        solve_fixed_point_near(q, HOPF, seed_state, max_iterations=1)
    assert err.value.iterations == 1
    assert err.value.best_state is not None
    assert err.value.best_residual > 0.0


def test_dimension_estimate_requires_a_fixed_point():
    q = resolve_biquandle("r2-heis")
    state = (np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))
    assert fixed_residual(q, HOPF, state) > 1e-3
    with pytest.raises(PreconditionError):
        estimate_dimension(q, HOPF, state)


def test_sampling_report_shapes():
    q = resolve_biquandle("r2-heis")
    entries = sample_fixed_points(q, HOPF, samples=4, seed=0)
    assert len(entries) == 4
    for entry in entries:
        assert entry["converged"]
        assert entry["residual"] <= 1e-9
        assert entry["dimension"] == 5
        assert len(entry["point"]) == 2
        assert len(entry["point"][0]) == 3
        assert len(entry["singular_values"]) == 6


def test_finite_residual_is_the_discrete_metric():
    q = make_alexander(5, 2, 3)
    good = (0, 0)
    assert fixed_residual(q, TREFOIL, good) == 0.0
    assert fixed_residual(q, TREFOIL, (1, 0)) == 1.0
