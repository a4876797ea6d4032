"""Direct, indirect and transfer requirements for input-output systems."""

from .errors import (
    CsvFormatError,
    DiactError,
    DimensionError,
    MissingPublishedError,
    SeriesNotConvergedError,
    SingularMatrixError,
    UnknownFixtureError,
    UnsupportedCombinationError,
    ValidationError,
    ViabilityError,
)
from .impact import CUMULATIVE, DemandSegment, ImpactResult, final_demand_impact, gross_output_impact, impact
from .io_model import IoSystem, ViabilityReport, from_coefficients, from_transactions, viability
from .kernels import BACKEND
from .make_use import (
    MakeUseTables,
    TechnologyMatrices,
    coefficients_from_make_use,
    requirements_from_make_use,
    system_from_make_use,
    technology,
)
from .matrix_core import invert, lu_factor, multiply, solve, spectral_radius_bound
from .requirements import (
    Frame,
    Kind,
    LegacyVariant,
    RequirementsMatrix,
    Subthroughflow,
    TransactionsMatrix,
    composite_requirements,
    cycling_coefficients,
    diact_gross_outputs,
    diact_gross_outputs_via_requirements,
    legacy_indirect,
    requirements,
    simple_requirements,
    subthroughflow,
    transactions,
)
from .series import SeriesReport, matrix_power, propagation_round, truncated_leontief, verify_system

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
