"""Kloosterman paths and the support of their limiting random Fourier series."""

from .gallery import gallery_function, gallery_verdict
from .membership import MembershipVerdict, Status, check_polygonal, classify_prime, path_verdict
from .modarith import SumSpec, kloosterman
from .pathcore import PolyPath, build_path, kloosterman_path, swiss_clock_path, symmetry_report
from .speccoef import polygonal_alpha, polygonal_fourier, quadrature_fourier
from .stochastic import mc_ball_probability, sample_K

__all__ = [
    "MembershipVerdict", "PolyPath", "Status", "SumSpec", "build_path", "check_polygonal",
    "classify_prime", "gallery_function", "gallery_verdict", "kloosterman", "kloosterman_path",
    "mc_ball_probability", "path_verdict", "polygonal_alpha", "polygonal_fourier",
    "quadrature_fourier", "sample_K", "swiss_clock_path", "symmetry_report",
]
__version__ = "0.1.0"
