"""Bandlimited interpolation of graph signals: python surface over the C++ core."""

from ._core import (
    BandlimError,
    GmmModel,
    Hyperplane,
    SimilarityGraph,
    SpectralBasis,
    bandwidth_estimate,
    bernstein_tail_bound,
    bias_limit,
    boundary_power_integral,
    build_graph,
    check_conditions,
    cut_value,
    cutoff_frequency,
    exact_bandwidth,
    finite_m_prediction,
    fourier_basis,
    harmonic_interpolate,
    indicator_from_boundary,
    interpolate_ls,
    interpolate_min_bandwidth,
    laplacian_apply,
    limit_bandwidth,
    one_vs_all,
    pdf_eval,
    predict,
    project_bandlimited,
    reference_gmm,
    region_mass,
    sample,
    schedule,
    sup_on_boundary,
    t_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "BandlimError",
    "GmmModel",
    "Hyperplane",
    "SimilarityGraph",
    "SpectralBasis",
    "bandwidth_estimate",
    "bernstein_tail_bound",
    "bias_limit",
    "boundary_power_integral",
    "build_graph",
    "check_conditions",
    "cut_value",
    "cutoff_frequency",
    "exact_bandwidth",
    "finite_m_prediction",
    "fourier_basis",
    "harmonic_interpolate",
    "indicator_from_boundary",
    "interpolate_ls",
    "interpolate_min_bandwidth",
    "laplacian_apply",
    "limit_bandwidth",
    "one_vs_all",
    "pdf_eval",
    "predict",
    "project_bandlimited",
    "reference_gmm",
    "region_mass",
    "sample",
    "schedule",
    "sup_on_boundary",
    "t_coefficient",
]
