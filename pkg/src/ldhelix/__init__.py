"""Clothoid helices constructed with the Lie-Darboux method."""
from .curve import (Bisectrix, ComplexTriple, Curve, CurveSample, Foci, delta_sequence, foci,
                    position_closed_form, position_quadrature, sample_curve, split_parts)
from .errors import (AlignmentError, DegenerateHelixError, DegenerateQuadrupleError, DomainError,
                     LDHelixError, PoleError, QuadratureError, UnsupportedParametersError)
from .frenet import (FrenetState, complex_frenet_check, curvature_torsion_from_samples,
                     frenet_integrate, rigid_align)
from .riccati import (CLOTHOID_ORIENTATION, CurvatureTorsionProfile, HelixParams, RiccatiConstants,
                      clothoid_phase, clothoid_profile, clothoid_riccati_solution, riccati_constants,
                      riccati_integrate, riccati_rhs)
from .scheffers import FQuadruple, TangentTriple, alpha_closed_form, alpha_from_f, f_set
from .special_functions import FresnelPair, fresnel, fresnel_scaled

__version__ = "0.1.0"

__all__ = [
    "Bisectrix",
    "ComplexTriple",
    "Curve",
    "CurveSample",
    "Foci",
    "delta_sequence",
    "foci",
    "position_closed_form",
    "position_quadrature",
    "sample_curve",
    "split_parts",
    "AlignmentError",
    "DegenerateHelixError",
    "DegenerateQuadrupleError",
    "DomainError",
    "LDHelixError",
    "PoleError",
    "QuadratureError",
    "UnsupportedParametersError",
    "FrenetState",
    "complex_frenet_check",
    "curvature_torsion_from_samples",
    "frenet_integrate",
    "rigid_align",
    "CLOTHOID_ORIENTATION",
    "CurvatureTorsionProfile",
    "HelixParams",
    "RiccatiConstants",
    "clothoid_phase",
    "clothoid_profile",
    "clothoid_riccati_solution",
    "riccati_constants",
    "riccati_integrate",
    "riccati_rhs",
    "FQuadruple",
    "TangentTriple",
    "alpha_closed_form",
    "alpha_from_f",
    "f_set",
    "FresnelPair",
    "fresnel",
    "fresnel_scaled",
]
