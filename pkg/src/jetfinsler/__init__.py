"""Numerical tensor calculus for time-dependent cubic-root Finsler metrics
on the 1-jet space of curves R -> M^4.

The package computes the fundamental metric, spray, nonlinear and Cartan
connections, torsion/curvature/Ricci tensors, the Einstein system, and the
electromagnetic 2-form for the Chernov cubic preset, custom symmetric cubic
tables, and the quadratic preset, and cross-verifies every closed form
against independent finite-difference oracles.
"""

from .errors import (DegeneracyError, DomainError, JetFinslerError, MetricFileError,
                     OracleError, ParameterError, SamplingError, SingularMetricError,
                     UnknownTensorError)
from .jet_core import (DTensor, JetPoint, MRootStructure, TemporalMetric,
                       sample_nondegenerate_point, temporal_kappa)
from .mroot_algebra import (CubicContractions, DualContractions, contract_cubic,
                            dual_contractions, euler_residuals)
from .metric_engine import (FundamentalMetric, definitional_metric_oracle,
                            finsler_value, fundamental_metric)
from .connections import (CartanConnection, NonlinearConnection, SprayPair,
                          adapted_derivative, canonical_spray, cartan_connection,
                          nonlinear_connection)
from .curvature import (CurvatureSet, EinsteinSystem, RicciScalarSet, TorsionSet,
                        curvature_census_residuals, curvature_tensors,
                        einstein_block_residuals, einstein_system, ricci_and_scalar,
                        torsion_census_residuals, torsion_tensors)
from .electromag import EMField, em_two_form, maxwell_auxiliaries, maxwell_residuals
from .verify import (GeometryReport, VerifyConfig, eval_tensor, fd_partial,
                     parse_h, parse_metric, report_to_json, run_suite)

__version__ = "0.1.0"

__all__ = [
    "JetFinslerError", "DomainError", "DegeneracyError", "SingularMetricError",
    "SamplingError", "OracleError", "ParameterError", "MetricFileError",
    "UnknownTensorError",
    "JetPoint", "TemporalMetric", "MRootStructure", "DTensor",
    "temporal_kappa", "sample_nondegenerate_point",
    "CubicContractions", "DualContractions", "contract_cubic", "dual_contractions",
    "euler_residuals",
    "FundamentalMetric", "finsler_value", "fundamental_metric",
    "definitional_metric_oracle",
    "SprayPair", "NonlinearConnection", "CartanConnection", "canonical_spray",
    "nonlinear_connection", "adapted_derivative", "cartan_connection",
    "TorsionSet", "CurvatureSet", "RicciScalarSet", "EinsteinSystem",
    "torsion_tensors", "curvature_tensors", "ricci_and_scalar", "einstein_system",
    "einstein_block_residuals", "torsion_census_residuals", "curvature_census_residuals",
    "EMField", "em_two_form", "maxwell_auxiliaries", "maxwell_residuals",
    "VerifyConfig", "GeometryReport", "run_suite", "eval_tensor", "fd_partial",
    "parse_metric", "parse_h", "report_to_json",
    "__version__",
]
