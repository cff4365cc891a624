"""Exact-arithmetic toolkit for almost hypercomplex pseudo-Hermitian
structures: the standard linear model on R^{4n}, a four-parameter family of
4-dimensional Lie algebras carrying such a structure, and mechanical
verification of the family's curvature, structure-tensor and classification
identities over exact rings.
"""

from .analysis import (
    ClassReport,
    HermitianClassVerdict,
    IsotropicReport,
    NijenhuisData,
    NordenClassVerdict,
    StructureTensors,
    classify_hermitian,
    classify_norden,
    compute_nijenhuis,
    compute_structure_tensors,
    exterior_derivative,
    isotropic_flags,
)
from .liealg import (
    CurvatureData,
    HGStructure4,
    InvariantViolation,
    LieFamily,
    curvature,
    family_structure,
    koszul_connection,
    levi_civita,
)
from .linalg import Matrix, signature
from .report import AnalysisRequest, build_document, run_family_analysis, to_json, to_text
from .rings import Poly, lambda_symbols, parse_rational, scalar_str
from .spaces import (
    HypercomplexStructure,
    PseudoHermitianMetricPack,
    hermitian_type,
    project,
    standard_metric,
    standard_structure,
    structural_group_member,
)
from .tensors import (
    DimensionMismatch,
    MetricPair,
    Tensor,
    VarianceMismatch,
    contract,
    lower_index,
    raise_index,
    square_norm,
)

__all__ = [
    "AnalysisRequest",
    "ClassReport",
    "CurvatureData",
    "DimensionMismatch",
    "HGStructure4",
    "HermitianClassVerdict",
    "HypercomplexStructure",
    "InvariantViolation",
    "IsotropicReport",
    "LieFamily",
    "Matrix",
    "MetricPair",
    "NijenhuisData",
    "NordenClassVerdict",
    "Poly",
    "PseudoHermitianMetricPack",
    "StructureTensors",
    "Tensor",
    "VarianceMismatch",
    "build_document",
    "classify_hermitian",
    "classify_norden",
    "compute_nijenhuis",
    "compute_structure_tensors",
    "contract",
    "curvature",
    "exterior_derivative",
    "family_structure",
    "hermitian_type",
    "isotropic_flags",
    "koszul_connection",
    "lambda_symbols",
    "levi_civita",
    "lower_index",
    "parse_rational",
    "project",
    "raise_index",
    "run_family_analysis",
    "scalar_str",
    "signature",
    "square_norm",
    "standard_metric",
    "standard_structure",
    "structural_group_member",
    "to_json",
    "to_text",
]

__version__ = "0.1.0"
