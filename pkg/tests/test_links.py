import numpy as np

from braidcolor import (
    closure_components,
    coloring_space_system,
    crossing_matrix,
    fixed_residual,
    parse_braid,
    propagate_state,
    verify_system_vs_fixed_points,
)
from braidcolor.registry import resolve_biquandle

HOPF = parse_braid("2: 1 1")
HOPF_NEG = parse_braid("2: -1 -1")
TREFOIL = parse_braid("2: 1 1 1")
FIGURE_EIGHT = parse_braid("3: 1 -2 1 -2")
CHAIN = parse_braid("3: 1 1 2 2")


def test_closure_component_counts():
    assert closure_components(HOPF) == ([0, 1], 2)
    assert closure_components(TREFOIL) == ([0, 0], 1)
    assert closure_components(FIGURE_EIGHT)[1] == 1
    assert closure_components(CHAIN) == ([0, 1, 2], 3)
    assert closure_components(parse_braid("3:")) == ([0, 1, 2], 3)


def test_crossing_matrices():
    hopf = crossing_matrix(HOPF)
    assert hopf.components == 2
    assert hopf.c.tolist() == [[0, 1], [1, 0]]
    assert hopf.lk.tolist() == [[0, 1], [1, 0]]

    neg = crossing_matrix(HOPF_NEG)
    assert neg.c.tolist() == [[0, -1], [-1, 0]]
    assert neg.lk.tolist() == [[0, -1], [-1, 0]]

    knot = crossing_matrix(TREFOIL)
    assert knot.c.tolist() == [[0]]
    assert knot.lk.tolist() == [[0]]

    chain = crossing_matrix(CHAIN)
    assert chain.c.tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    assert chain.lk.tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


def test_profile_json_shape():
    doc = crossing_matrix(HOPF).to_json()
    assert doc == {"components": 2, "c": [[0, 1], [1, 0]], "lk": [[0, 1], [1, 0]]}


def test_system_rendering():
    system = coloring_space_system(crossing_matrix(HOPF))
    assert system.texts == ["x1*y2 = x2*y1", "x2*y1 = x1*y2"]
    doc = system.to_json()
    assert doc["lhs"] == [[0, 1], [1, 0]]
    assert doc["rhs"] == [[0, 1], [1, 0]]
    assert doc["redundant_last"] is True

    knot_system = coloring_space_system(crossing_matrix(TREFOIL))
    assert knot_system.texts == ["0 = 0"]

    chain_system = coloring_space_system(crossing_matrix(CHAIN))
    assert chain_system.texts[1] == "x2*y1 + x2*y3 = x1*y2 + x3*y2"


def test_system_matrix_and_residual():
    system = coloring_space_system(crossing_matrix(HOPF))
    a = system.matrix(np.array([3.0, 5.0]))
    assert np.allclose(a, [[-5.0, 3.0], [5.0, -3.0]])
    assert system.residual([1.0, 2.0], [2.0, 4.0]) <= 1e-12
    assert system.residual([1.0, 2.0], [2.0, 5.0]) > 0.5
    assert np.allclose(a.sum(axis=0), 0.0)


def test_propagated_states_are_fixed_points():
    q = resolve_biquandle("r2-heis")
    system = coloring_space_system(crossing_matrix(HOPF))
    x = np.array([2.0, -3.0])
    y = np.array([1.5, -2.25])
    assert system.residual(x, y) <= 1e-12
    state = propagate_state(HOPF, x, y, np.array([0.7, -1.1]))
    assert fixed_residual(q, HOPF, state) <= 1e-9
    off = propagate_state(HOPF, x, np.array([1.5, 2.0]), np.array([0.7, -1.1]))
    assert fixed_residual(q, HOPF, off) > 1e-3


def test_cross_check_harness():
    for word in (HOPF, TREFOIL, CHAIN, FIGURE_EIGHT, parse_braid("3:")):
        report = verify_system_vs_fixed_points(word, samples=15, seed=4)
        assert report["passed"], report
        assert report["max_on_residual"] <= 1e-9
        assert report["max_redundant_residual"] <= 1e-9
    hopf_report = verify_system_vs_fixed_points(HOPF, samples=15, seed=4)
    assert hopf_report["min_off_residual"] > 1e-3
    knot_report = verify_system_vs_fixed_points(TREFOIL, samples=15, seed=4)
    assert knot_report["min_off_residual"] is None
