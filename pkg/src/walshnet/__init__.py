"""WAFOM and minimum Dick weight of digital nets over F2, with lower-bound verification."""

__version__ = "0.1.0"

from .bounds import (
    QRDecomposition,
    VerificationReport,
    delta_upper_bound,
    lower_bound_log2,
    qr_decompose,
    staircase_space,
    theorem_threshold,
    threshold_satisfied,
    verify_net,
    witness,
)
from .dyadic import DyadicRational
from .f2core import (
    EnumerationCapError,
    F2Matrix,
    ShapeError,
    Subspace,
    canonicalize,
    dual,
    enumerate_subspaces,
    inner_product,
    intersect,
    iter_elements,
)
from .netfile import NetFormatError, parse_net, read_net, write_net
from .qmcnet import PointSet, integrand, qmc_integrate, random_net, to_points
from .wafom import WafomMethod, WafomValue, wafom, wafom_dual, wafom_exact, wafom_points
from .weights import WeightDistribution, dick_weight, min_weight, weight_distribution

__all__ = [
    "canonicalize",
    "delta_upper_bound",
    "dick_weight",
    "dual",
    "DyadicRational",
    "enumerate_subspaces",
    "EnumerationCapError",
    "F2Matrix",
    "inner_product",
    "integrand",
    "intersect",
    "iter_elements",
    "lower_bound_log2",
    "min_weight",
    "NetFormatError",
    "parse_net",
    "PointSet",
    "qmc_integrate",
    "qr_decompose",
    "QRDecomposition",
    "random_net",
    "read_net",
    "ShapeError",
    "staircase_space",
    "Subspace",
    "theorem_threshold",
    "threshold_satisfied",
    "to_points",
    "VerificationReport",
    "verify_net",
    "wafom",
    "wafom_dual",
    "wafom_exact",
    "wafom_points",
    "WafomMethod",
    "WafomValue",
    "weight_distribution",
    "WeightDistribution",
    "witness",
    "write_net",
]
