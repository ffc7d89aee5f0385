#pragma once

#include <utility>

#include "bandlim/types.hpp"

namespace bandlim {

// (2 pi sigma^2)^(-d/2) exp(-||x-y||^2 / (2 sigma^2))
double gaussian_kernel(const Vec& x, const Vec& y, const KernelParams& params);

// Dense similarity graph; entries below `truncation` are zeroed (0 keeps
// everything).
SimilarityGraph build_graph(const PointCloud& cloud, const KernelParams& params,
                            double truncation = 0.0);

// One application of L = (1/n)(D - W) without materializing L.
Vec laplacian_apply(const SimilarityGraph& graph, const Vec& f);

// L^m f by iterated application.
Vec laplacian_apply_m(const SimilarityGraph& graph, const Vec& f, int m);

struct CutValue {
    double raw = 0.0;     // sum of W_ij over i in S, j outside S
    double scaled = 0.0;  // sqrt(2 pi)/(n sigma) * s' L s
};

CutValue cut_value(const SimilarityGraph& graph, const Vec& s);

// Dense L as a matrix; used by the eigensolver and small-scale checks.
Mat dense_laplacian(const SimilarityGraph& graph);

}  // namespace bandlim
