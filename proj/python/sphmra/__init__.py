"""Polynomial wavelet multiresolution analysis on n-spheres."""

from ._core import (
    analyze,
    certify,
    classify,
    constants,
    dim_pi,
    gegenbauer,
    gegenbauer_at_one,
    gegenbauer_norm_1d,
    grid_size,
    harmonic_count,
    phi_m_variances,
    pyramid_decompose,
    pyramid_reconstruct,
    quadrature_weights,
    scaling_integral,
    scaling_kernel,
    scaling_norm_sq,
    single_frequency_integral,
    synthesize_on_grid,
    uncertainty_product,
    uncertainty_table_csv,
    wavelet_kernel,
    wavelet_norm_sq,
)

__all__ = [
    "analyze",
    "certify",
    "classify",
    "constants",
    "dim_pi",
    "gegenbauer",
    "gegenbauer_at_one",
    "gegenbauer_norm_1d",
    "grid_size",
    "harmonic_count",
    "phi_m_variances",
    "pyramid_decompose",
    "pyramid_reconstruct",
    "quadrature_weights",
    "scaling_integral",
    "scaling_kernel",
    "scaling_norm_sq",
    "single_frequency_integral",
    "synthesize_on_grid",
    "uncertainty_product",
    "uncertainty_table_csv",
    "wavelet_kernel",
    "wavelet_norm_sq",
]
