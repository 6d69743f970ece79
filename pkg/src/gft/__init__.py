"""gft: special functions, conformal moduli, quasiconformal distortion,
explicit growth/Holder bounds, and a numerical inequality-verification
engine with a matching command-line interface.
"""
from .special import (
    APERY_A,
    EULER_GAMMA,
    LANDAU_C,
    ZETA3,
    DistortionCoeff,
    DomainError,
    GeneralizedParam,
    PlanePoint,
    UnitRadius,
    agm,
    apery_zeta3,
    digamma,
    elliptic_e,
    elliptic_k,
    elliptic_ka,
    euler_gamma,
    gauss_2f1_sym,
    landau_constant,
    ramanujan_R,
)
from .modulus import (
    LandenSequence,
    Lemma2Constants,
    fn_A,
    fn_B,
    grotzsch_u,
    grotzsch_u_inv,
    grotzsch_ua,
    grotzsch_ua_inv,
    landen_ascend,
    landen_next,
    lemma2_constants,
    product_P,
)
from .distortion import (
    PhiResult,
    lemma3_fk,
    phi_k,
    phi_k_product,
    phi_ka,
    phi_partial_k,
    phi_partial_r,
)
from .bounds import (
    BLOCH_B1,
    LATTICE_GAP_D,
    BoundConfig,
    TriplePoints,
    derive_lattice_gap,
    eta_k,
    f_growth_bound,
    mori_h,
    mori_holder_bound,
    mori_sin_bound,
    mori_sin_bound_clamped,
    qc_schwarz_bounds,
    qc_schwarz_bounds_product_literal,
    rho_lower,
    schottky_F,
    schottky_classical,
    schottky_f0_window,
    schottky_sf,
    sigma_metric,
    theorem3_sfk,
    triple_angle,
    zeta_map,
)
from .verify import (
    SUITES,
    InequalityReport,
    SweepSpec,
    Target,
    UsageError,
    margin_at,
    mori_radial_experiment,
    registry,
    run_suite,
    suite_failed,
    sweep,
    target_info,
)

__version__ = "1.0.0"

__all__ = [
    "APERY_A", "EULER_GAMMA", "LANDAU_C", "ZETA3",
    "DistortionCoeff", "DomainError", "GeneralizedParam", "PlanePoint",
    "UnitRadius", "agm", "apery_zeta3", "digamma", "elliptic_e",
    "elliptic_k", "elliptic_ka", "euler_gamma", "gauss_2f1_sym",
    "landau_constant", "ramanujan_R",
    "LandenSequence", "Lemma2Constants", "fn_A", "fn_B", "grotzsch_u",
    "grotzsch_u_inv", "grotzsch_ua", "grotzsch_ua_inv", "landen_ascend",
    "landen_next", "lemma2_constants", "product_P",
    "PhiResult", "lemma3_fk", "phi_k", "phi_k_product", "phi_ka",
    "phi_partial_k", "phi_partial_r",
    "BLOCH_B1", "LATTICE_GAP_D", "BoundConfig", "TriplePoints",
    "derive_lattice_gap", "eta_k", "f_growth_bound", "mori_h",
    "mori_holder_bound", "mori_sin_bound", "mori_sin_bound_clamped",
    "qc_schwarz_bounds", "qc_schwarz_bounds_product_literal", "rho_lower",
    "schottky_F", "schottky_classical", "schottky_f0_window", "schottky_sf",
    "sigma_metric", "theorem3_sfk", "triple_angle", "zeta_map",
    "SUITES", "InequalityReport", "SweepSpec", "Target", "UsageError",
    "margin_at", "mori_radial_experiment", "registry", "run_suite",
    "suite_failed", "sweep", "target_info",
]
