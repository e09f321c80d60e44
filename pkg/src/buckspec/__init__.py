"""Spectral solver for the clamped buckling problem on the unit ball."""
from .dispersion import AlphaRoot, CrossingSet, ModeIndex, alpha_root, eigenvalue, first_eigenvalue
from .eigenmodes import EigenMode, RadialProfile, build_mode, radial_profile
from .nodal import NodalReport, Regime, RegimeReport, classify_regime, count_zeros
from .special import bessel_j, bessel_j_prime, bessel_zero, zero_table

__version__ = "0.1.0"

__all__ = [
    "AlphaRoot", "CrossingSet", "EigenMode", "ModeIndex", "NodalReport", "RadialProfile", "Regime",
    "RegimeReport", "alpha_root", "bessel_j", "bessel_j_prime", "bessel_zero", "build_mode",
    "classify_regime", "count_zeros", "eigenvalue", "first_eigenvalue", "radial_profile", "zero_table",
]
