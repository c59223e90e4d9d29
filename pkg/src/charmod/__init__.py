"""Exact verification toolkit for cubic-form and characteristic-class
identities in dimensions ten and twelve.

Subpackages:

- ``exactmath``    exact q-series and residue arithmetic
- ``charring``     graded rings, virtual bundles, twist-bundle expansions
- ``thetamod``     modular q-series, theta ratios, numeric transformation laws
- ``anomaly``      the identity registry and its verification engine
- ``cubiclattice`` integral trilinear forms and their cubic refinements
- ``cli``          command-line front end
"""

from .exactmath import (
    GRID,
    GridError,
    NotExponentiable,
    NotInvertible,
    QExpSeries,
    RAT_RING,
    Rat,
    RingMismatchError,
    ZMod,
    qs_exp,
    qs_inv,
    qs_log,
    qs_mul,
)
from .charring import (
    ArgumentError,
    CalibrationError,
    CohomQSeries,
    DegreeError,
    DimError,
    GradedPoly,
    ParityError,
    PolyRing,
    SpecError,
    VirtualBundle,
    calibrate_e8_roots,
    ch_tangent,
    default_ring,
    e8_ch,
    line_pair_ch,
    multiplicative_class,
    power_sums_from_pontryagin,
    trivial_bundle,
    vb_adams,
    vb_lambda2_sym2,
    witten_character,
    witten_expand,
)
from .thetamod import (
    InternalCancellationError,
    NotProportional,
    PrecisionError,
    e8_character,
    e8_lattice_theta,
    eisenstein,
    match_modular_basis,
    numeric_transform_check,
    phi,
    theta_eighth_sum,
    theta_log_ratio,
    theta_zero_power8,
)
from .anomaly import (
    CLASS_KINDS,
    Mod2Poly,
    REGISTRY_IDS,
    UnsupportedGenerator,
    VerificationReport,
    build_twisted_class,
    boundary_ring,
    mod2_reduce,
    restrict_to_u,
    run_registry,
    verify_differ,
    verify_identity,
)
from .cubiclattice import (
    CubicFormSpec,
    HypothesisWarning,
    NoSolution,
    ScaleError,
    TrilinearLattice,
    check_cubic_relations,
    is_characteristic,
    load_lattice_json,
    solve_bhat,
    verify_refinement,
)

__version__ = "0.1.0"
