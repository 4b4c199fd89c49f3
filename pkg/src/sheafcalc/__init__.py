"""Exact graded commutative algebra over polynomial rings, sheaf cohomology
on projective space, and a verified catalog of numeric claims.

The engine computes over the rationals by default (prime fields are available
for cross-checks): Groebner bases of submodules of graded free modules,
minimal free resolutions, Hilbert functions and polynomials, module and sheaf
Ext/Tor, cohomology tables, dual sheaves, a cohomology-signature classifier
for one-dimensional sheaves, and stability walls for sheaf-section pairs.
"""

from ._version import __version__
from .fields import QQ, PrimeField
from .poly import GREVLEX, LEX, PolyParseError, PolyRing, Polynomial
from .gradedmod import GradedFreeModule, GradedMatrix, ModulePresentation
from .groebner import (
    GroebnerBasis,
    ModuleOrder,
    annihilator,
    buchberger,
    kernel_into_quotient,
    saturate_at_irrelevant,
    submodule_colon,
    submodule_intersect,
    submodule_saturate,
    syzygy_module,
)
from .homology import (
    FreeResolution,
    HilbertPolynomial,
    QuotientBasis,
    ext_dims,
    ext_presentation_free,
    hilbert_polynomial,
    homology_presentation,
    minimize_presentation,
    resolve,
    tor_dims,
    truncate_at,
)
from .cohomology import (
    BeilinsonTable,
    CohomologyTable,
    NonStabilizationError,
    SheafExtResult,
    beilinson_table,
    cohomology_table,
    dual_sheaf,
    omega_module,
    saturate_presentation,
    serre_duality_check,
    sheaf_cohomology,
    sheaf_ext,
    sheaf_ext_dim,
    truncated_ext_dim,
)
from .walls import (
    CrossingReport,
    CurveChiTable,
    PairClass,
    Wall,
    crossing_report,
    section_admissible,
    walls,
)
from .fixtures import (
    fixture_module,
    fixture_names,
    jumpext_case,
    line_split_parts,
    load_fixture,
    planar_model,
    pushforward_image_oracle,
    skyscraper,
    tor_line_presentation,
)
from .scenarios import (
    Claim,
    ClaimResult,
    Report,
    load_claims,
    paper_suite,
    run_scenario,
)
from .session import SessionError, SessionFile, load_session, parse_session

__all__ = [
    "__version__",
    "QQ", "PrimeField",
    "GREVLEX", "LEX", "PolyParseError", "PolyRing", "Polynomial",
    "GradedFreeModule", "GradedMatrix", "ModulePresentation",
    "GroebnerBasis", "ModuleOrder", "annihilator", "buchberger",
    "kernel_into_quotient", "saturate_at_irrelevant", "submodule_colon",
    "submodule_intersect", "submodule_saturate", "syzygy_module",
    "FreeResolution", "HilbertPolynomial", "QuotientBasis", "ext_dims",
    "ext_presentation_free", "hilbert_polynomial", "homology_presentation",
    "minimize_presentation", "resolve", "tor_dims", "truncate_at",
    "BeilinsonTable", "CohomologyTable", "NonStabilizationError",
    "SheafExtResult", "beilinson_table", "cohomology_table", "dual_sheaf",
    "omega_module", "saturate_presentation", "serre_duality_check",
    "sheaf_cohomology", "sheaf_ext", "sheaf_ext_dim", "truncated_ext_dim",
    "CrossingReport", "CurveChiTable", "PairClass", "Wall",
    "crossing_report", "section_admissible", "walls",
    "fixture_module", "fixture_names", "jumpext_case", "line_split_parts",
    "load_fixture", "planar_model", "pushforward_image_oracle", "skyscraper",
    "tor_line_presentation",
    "Claim", "ClaimResult", "Report", "load_claims", "paper_suite",
    "run_scenario",
    "SessionError", "SessionFile", "load_session", "parse_session",
]
