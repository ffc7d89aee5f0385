#pragma once

#include "bandlim/graph.hpp"
#include "bandlim/types.hpp"

namespace bandlim {

inline constexpr int kDenseEigenCap = 4000;
inline constexpr double kCoeffTol = 1e-8;   // relative Fourier-coefficient threshold
inline constexpr int kCutoffOrder = 8;

// Full symmetric eigendecomposition of L, eigenvalues ascending and clamped
// at zero. Graphs above `cap` nodes are refused (use the iterated-apply
// estimators instead).
SpectralBasis fourier_basis(const SimilarityGraph& graph, int cap = kDenseEigenCap);

// (s' L^m s / s' s)^(1/m) via m applications of L.
double bandwidth_estimate(const SimilarityGraph& graph, const Vec& s, int m);

// Largest eigenvalue whose Fourier coefficient |u_k' s| exceeds tol * ||s||.
double exact_bandwidth(const SpectralBasis& basis, const Vec& s, double tol = kCoeffTol);

// (lambda_min[(L^k)_UU])^(1/k) where U is the unlabeled complement.
// Empty U returns +inf. Two internal computation paths (per-column applies
// and dense powering) are exposed for cross-checks.
double cutoff_frequency(const SimilarityGraph& graph, const LabeledSet& labeled,
                        int k = kCutoffOrder);
Mat cutoff_submatrix_apply(const SimilarityGraph& graph, const std::vector<int>& unlabeled, int k);
Mat cutoff_submatrix_dense(const SimilarityGraph& graph, const std::vector<int>& unlabeled, int k);

// Orthogonal projection onto span{u_k : lambda_k < omega} (strict).
Vec project_bandlimited(const SpectralBasis& basis, const Vec& s, double omega);

}  // namespace bandlim
