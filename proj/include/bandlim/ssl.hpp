#pragma once

#include "bandlim/spectral.hpp"
#include "bandlim/types.hpp"

namespace bandlim {

inline constexpr double kResidualTol = 1e-8;

// Least-squares bandlimited interpolation: fit coefficients of the
// eigenvectors below omega_L to the labels, minimum-norm on rank deficiency.
Vec interpolate_ls(const SpectralBasis& basis, const LabeledSet& labeled, double omega_L);

// Dual form: smallest eigenvector prefix that reproduces the labels within
// residual_tol * ||labels||. Ties between equal eigenvalues include the full
// eigenspace so the result is basis-rotation invariant.
MinBandwidthResult interpolate_min_bandwidth(const SpectralBasis& basis, const LabeledSet& labeled,
                                             double residual_tol = kResidualTol);

// Laplacian-regularization baseline: harmonic extension of the labels.
Vec harmonic_interpolate(const SimilarityGraph& graph, const LabeledSet& labeled);

// Threshold scores into a 0/1 indicator.
Prediction predict(const Vec& scores, double threshold = 0.5);

// One-vs-all multiclass on top of interpolate_ls; returns argmax class per
// node, ties to the lowest class index. classes[i] pairs with labeled rows.
std::vector<int> one_vs_all(const SpectralBasis& basis, const std::vector<int>& labeled_indices,
                            const std::vector<int>& labeled_classes, double omega_L);

}  // namespace bandlim
