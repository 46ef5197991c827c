"""Skew braces, the biquandles they induce, and coloring invariants of
braid closures.

The package builds algebraic structures on finite tables or on continuous
carriers (coordinate space, the circle times the plane, spheres), checks
their axioms exhaustively or by sampling, and counts or samples the
colorings of a braid closure, which are the fixed points of the map the
braid induces on a power of the carrier.
"""

from .errors import (
    AxiomViolationError,
    BraidcolorError,
    ConstructionError,
    FormatError,
    NoConvergenceError,
    PreconditionError,
    ResourceError,
    UnsupportedInverseError,
)
from .carriers import FiniteCarrier, SphereCarrier, TorusCarrier, VectorCarrier
from .groups import (
    ContinuousGroup,
    FiniteGroup,
    ValidationReport,
    Violation,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_from_json,
    symmetric_group,
    validate_group,
)
from .braces import (
    SkewBrace,
    brace_from_groups,
    brace_from_json,
    even_residue_ring_brace,
    heisenberg_brace,
    make_radical_ring_brace,
    make_semidirect_brace,
    make_trivial_brace,
    semidirect_inversion_brace,
    torus_brace,
    validate_skew_brace,
)
from .biquandles import (
    Biquandle,
    InvolutivityResult,
    Quandle,
    biquandle_from_json,
    brace_to_biquandle,
    check_biquandle_axioms,
    check_quandle_axioms,
    closed_form_biquandle,
    detect_quandle,
    is_involutive,
    make_alexander,
    make_conjugation_quandle,
    make_core_quandle,
    make_sphere_quandle,
    make_trivial_quandle,
    make_wada,
    quandle_from_json,
    quandle_to_biquandle,
    s_map,
    tau,
    yb_map,
    yb_map_inverse,
)
from .braids import (
    BraidWord,
    apply_letter,
    braid_permutation,
    fixed_points_finite,
    induced_map,
    markov_conjugate,
    markov_stabilize,
    parse_braid,
    render_braid,
)
from .fixedpoints import (
    DimensionEstimate,
    SolveResult,
    estimate_dimension,
    fixed_residual,
    sample_fixed_points,
    solve_fixed_point_near,
)
from .links import (
    BilinearSystem,
    LinkProfile,
    closure_components,
    coloring_space_system,
    crossing_matrix,
    propagate_state,
    verify_system_vs_fixed_points,
)
from .registry import (
    registry_listing,
    resolve_biquandle,
    resolve_brace,
    resolve_group,
    resolve_quandle,
)

__version__ = "0.1.0"
