"""Exact sumset and regularity computations for simplicial projective
toric varieties defined by finite generator sets A in N^d."""

from .classify import (ONE_SINGULAR, OTHER, SMOOTH, AffineChart,
                       ClassificationReport, classify, is_chart_smooth,
                       reduce_e_equals_D)
from .errors import (CertificationError, InvalidInstanceError,
                     OutOfDomainError, PreconditionError, ResourceLimitError,
                     ToricRegError, UnsupportedInstanceError)
from .homology import (FaceComplex, betti_numbers, build_T, reduced_homology,
                       semigroup_member)
from .oracle import naive_member, naive_sumset
from .lattice import (GeneratorSet, HomogenizedGeneratorSet, SimplexSlice,
                      SumsetLevel, hilbert_function, homogenize, norm,
                      step_equality_holds, step_threshold, sumset_level)
from .regularity import (DegreeResult, RegularityResult, degree, eg_check,
                         eg_inequality_suite, herzog_hibi_bound,
                         one_singular_bound, reg, sizeA_bound)
from .sumsets import (HoleSet, SigmaBounds, SigmaResult, compute_holes,
                      normalize_singular_vertex, sigma, sigma_bounds,
                      verify_sigma_bounds)

__version__ = "0.1.0"

__all__ = [
    "AffineChart", "CertificationError", "ClassificationReport",
    "DegreeResult", "FaceComplex", "GeneratorSet",
    "HomogenizedGeneratorSet", "HoleSet", "InvalidInstanceError",
    "ONE_SINGULAR", "OTHER", "OutOfDomainError", "PreconditionError",
    "RegularityResult", "ResourceLimitError", "SMOOTH", "SigmaBounds",
    "SigmaResult", "SimplexSlice", "SumsetLevel", "ToricRegError",
    "UnsupportedInstanceError", "betti_numbers", "build_T", "classify",
    "compute_holes", "degree", "eg_check", "eg_inequality_suite",
    "herzog_hibi_bound", "hilbert_function", "homogenize",
    "is_chart_smooth", "naive_member", "naive_sumset", "norm",
    "normalize_singular_vertex", "one_singular_bound", "reduce_e_equals_D",
    "reduced_homology", "reg", "semigroup_member", "sigma", "sigma_bounds",
    "sizeA_bound", "step_equality_holds", "step_threshold", "sumset_level",
    "verify_sigma_bounds",
]
