"""Exact cohomological transforms, stability charges and wall scans for
abelian-variety-style truncated lattices.

Everything numeric is exact: rationals, the quadratic field Q(sqrt 3) and
polar scalars with rational angle in units of pi.  Floats appear only in
documented display fallbacks and are flagged wherever they do.
"""

from .lattice import (
    AbelianContext,
    CohClass,
    ContextMismatchError,
    VVector,
    chi_advisory,
    divided_power_basis,
    exp_div,
    from_v_vector,
    integrate,
    line_bundle,
    mukai_dual,
    mukai_pairing,
    mul,
    semihomogeneous,
    skyscraper,
    structure_sheaf,
    twist,
    v_vector,
)
from .surd import PolarScalar, Q3, SurdComplex
from .transform import (
    FMTransformSpec,
    GammaAction,
    InvalidSpecError,
    ShiftedClass,
    adjoint_pairing_check,
    antidiag_matrix,
    apply,
    exp_image,
    gamma_action,
    polarization_image_check,
    quasi_inverse,
)
from .stability import (
    BGVerdict,
    ChargeSpec,
    HeartValueError,
    HNPolygon,
    bg_check,
    charge,
    heart_tower,
    hn_polygon,
    in_slice,
    phase,
    phase_cmp,
    slope,
    slope_cmp,
)
from .induced import (
    ComplexAmpleClass,
    InducedChargeLaw,
    LawVerdict,
    PhaseShiftVerdict,
    conjecture_params,
    induced_law,
    phase_shift_check,
    real_zeta_angles,
    verify_induced_law,
    zeta,
)
from .scan import ScanRequest, WallCell, WallDataset, recheck_walls, scan_walls

__version__ = "0.1.0"

__all__ = [
    "AbelianContext",
    "BGVerdict",
    "ChargeSpec",
    "CohClass",
    "ComplexAmpleClass",
    "ContextMismatchError",
    "FMTransformSpec",
    "GammaAction",
    "HNPolygon",
    "HeartValueError",
    "InducedChargeLaw",
    "InvalidSpecError",
    "LawVerdict",
    "PhaseShiftVerdict",
    "PolarScalar",
    "Q3",
    "ScanRequest",
    "ShiftedClass",
    "SurdComplex",
    "VVector",
    "WallCell",
    "WallDataset",
    "adjoint_pairing_check",
    "antidiag_matrix",
    "apply",
    "bg_check",
    "charge",
    "chi_advisory",
    "conjecture_params",
    "divided_power_basis",
    "exp_div",
    "exp_image",
    "from_v_vector",
    "gamma_action",
    "heart_tower",
    "hn_polygon",
    "in_slice",
    "induced_law",
    "integrate",
    "line_bundle",
    "mukai_dual",
    "mukai_pairing",
    "mul",
    "phase",
    "phase_cmp",
    "phase_shift_check",
    "polarization_image_check",
    "quasi_inverse",
    "real_zeta_angles",
    "recheck_walls",
    "scan_walls",
    "semihomogeneous",
    "skyscraper",
    "slope",
    "slope_cmp",
    "structure_sheaf",
    "twist",
    "v_vector",
    "verify_induced_law",
    "zeta",
]
