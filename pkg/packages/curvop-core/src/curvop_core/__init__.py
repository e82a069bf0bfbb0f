"""Curvature operator core library."""

from .bounds import (
    ThresholdKind,
    bivector_dim,
    concentration_check,
    concircular_domination,
    eigen_sum_subadditivity,
    ky_fan_check,
    ky_fan_value,
    lemma32_bound,
    lemma44_check,
    lemma44_exhaustive,
    prop33_bounds,
    prop46_bound,
    sobolev_chain_check,
    threshold,
)
from .certify import (
    CertifyParams,
    CurvatureField,
    FieldSample,
    FieldTheorem,
    PointwiseTheorem,
    certify_field,
    certify_pointwise,
    lp_norm,
    prop43_chain,
    prop43_lower_bound,
    sphere_volume,
    yamabe_upper_bound,
)
from .conclusions import available_theorems, get_text
from .config import Config
from .data_loader import ModelRecord, ModelTable, load_model_table
from .decompose import (
    DecomposedCurvature,
    concircular_norm_sq,
    orthogonal_decompose,
    pinching_quantity,
    schouten,
    weyl,
)
from .linalg import jacobi_eigh, jacobi_eigvals
from .models import (
    BoundCheck,
    CertificateReport,
    CurvopError,
    DimensionError,
    EmptyFieldError,
    EqualityCase,
    FrameError,
    InternalConsistencyError,
    KPositivity,
    NotConformallyFlatError,
    NumericalError,
    Positivity,
    PreconditionError,
    RangeError,
    TensorFileError,
    UsageError,
    ValidationError,
    Verdict,
)
from .ricci_k import (
    RicKResult,
    directional_operator,
    orthonormal_complement,
    ric_k_at,
    ric_k_grid_min,
    ric_k_min,
    sectional_bounds,
    sphere_lattice,
)
from .spectra import (
    BivectorIndex,
    BivectorMatrix,
    SpectralSummary,
    Theorem12Blocks,
    bivector_index,
    curvature_operator,
    is_conformally_flat,
    k_positivity,
    pair_eigenvalues,
    quasi_positive_quantity,
    ricci_eigenframe,
    schouten_operator,
    sectional_range,
    spectrum,
    symmetric_spectrum,
    theorem12_blocks,
    traceless_ricci_operator,
)
from .tensor_io import field_from_dict, field_to_dict, load_field, load_tensor, tensor_from_dict, tensor_to_dict
from .tensors import (
    CurvatureTensor,
    Frame,
    SymTwoTensor,
    full_norm_sq,
    kulkarni_nomizu,
    metric,
    ricci_contract,
    scalar_curvature,
    symmetrize_random,
)
from .zoo import ModelKind, ModelSpec, build_model, named_model, named_spec, product, random_curvature, space_form

# The oracle suites pull in the whole search machinery; load them on first use
_oracles = None


def __getattr__(name: str) -> object:
    """Lazy load the oracle suites."""
    global _oracles
    if name in ("OracleSummary", "run_suite", "SUITES"):
        if _oracles is None:
            from . import oracles as _o

            _oracles = _o
        return getattr(_oracles, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    # Config
    "Config",
    # Errors and result types
    "CurvopError",
    "ValidationError",
    "TensorFileError",
    "DimensionError",
    "FrameError",
    "RangeError",
    "PreconditionError",
    "NotConformallyFlatError",
    "EmptyFieldError",
    "UsageError",
    "NumericalError",
    "InternalConsistencyError",
    "Verdict",
    "Positivity",
    "EqualityCase",
    "BoundCheck",
    "KPositivity",
    "CertificateReport",
    # Tensors
    "CurvatureTensor",
    "SymTwoTensor",
    "Frame",
    "metric",
    "kulkarni_nomizu",
    "full_norm_sq",
    "ricci_contract",
    "scalar_curvature",
    "symmetrize_random",
    # Decomposition
    "DecomposedCurvature",
    "orthogonal_decompose",
    "schouten",
    "weyl",
    "concircular_norm_sq",
    "pinching_quantity",
    # Spectra
    "jacobi_eigh",
    "jacobi_eigvals",
    "BivectorIndex",
    "BivectorMatrix",
    "SpectralSummary",
    "Theorem12Blocks",
    "bivector_index",
    "curvature_operator",
    "traceless_ricci_operator",
    "schouten_operator",
    "ricci_eigenframe",
    "pair_eigenvalues",
    "theorem12_blocks",
    "spectrum",
    "symmetric_spectrum",
    "k_positivity",
    "sectional_range",
    "is_conformally_flat",
    "quasi_positive_quantity",
    # Bounds
    "ThresholdKind",
    "threshold",
    "bivector_dim",
    "lemma32_bound",
    "eigen_sum_subadditivity",
    "ky_fan_value",
    "ky_fan_check",
    "concentration_check",
    "lemma44_check",
    "lemma44_exhaustive",
    "sobolev_chain_check",
    "prop33_bounds",
    "prop46_bound",
    "concircular_domination",
    # Ric_k
    "RicKResult",
    "directional_operator",
    "orthonormal_complement",
    "ric_k_at",
    "ric_k_min",
    "ric_k_grid_min",
    "sectional_bounds",
    "sphere_lattice",
    # Models
    "ModelKind",
    "ModelSpec",
    "ModelRecord",
    "ModelTable",
    "load_model_table",
    "space_form",
    "product",
    "random_curvature",
    "build_model",
    "named_spec",
    "named_model",
    # Certificates
    "PointwiseTheorem",
    "FieldTheorem",
    "CertifyParams",
    "FieldSample",
    "CurvatureField",
    "certify_pointwise",
    "certify_field",
    "lp_norm",
    "sphere_volume",
    "yamabe_upper_bound",
    "prop43_lower_bound",
    "prop43_chain",
    "get_text",
    "available_theorems",
    # I/O
    "load_tensor",
    "load_field",
    "tensor_from_dict",
    "field_from_dict",
    "tensor_to_dict",
    "field_to_dict",
    # Oracles (lazy loaded)
    "OracleSummary",
    "run_suite",
    "SUITES",
]
