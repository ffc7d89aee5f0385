#include "bandlim/graph.hpp"

#include <cmath>
#include <string>

#include "bandlim/errors.hpp"

namespace bandlim {

double gaussian_kernel(const Vec& x, const Vec& y, const KernelParams& params) {
    if (x.size() != y.size() || x.size() != params.dimension)
        throw InvalidInputError("kernel point dimension mismatch");
    if (!(params.sigma > 0)) throw InvalidInputError("kernel sigma must be positive");
    double s2 = params.sigma * params.sigma;
    double peak = std::pow(2.0 * M_PI * s2, -0.5 * params.dimension);
    return peak * std::exp(-(x - y).squaredNorm() / (2.0 * s2));
}

SimilarityGraph build_graph(const PointCloud& cloud, const KernelParams& params,
                            double truncation) {
    int n = cloud.n();
    if (n < 2) throw InvalidInputError("graph needs at least 2 points");
    if (cloud.dim() != params.dimension)
        throw InvalidInputError("cloud dimension does not match kernel params");
    if (!(params.sigma > 0)) throw InvalidInputError("kernel sigma must be positive");

    double s2 = params.sigma * params.sigma;
    double peak = std::pow(2.0 * M_PI * s2, -0.5 * params.dimension);

    SimilarityGraph g;
    g.n = n;
    g.sigma = params.sigma;
    g.truncation = truncation;

    // ||xi - xj||^2 = ri + rj - 2 xi.xj, assembled with one GEMM
    Vec r = cloud.points.rowwise().squaredNorm();
    g.W.noalias() = -2.0 * cloud.points * cloud.points.transpose();
    g.W.colwise() += r;
    g.W.rowwise() += r.transpose();
    g.W = (g.W.array().max(0.0) * (-1.0 / (2.0 * s2))).exp() * peak;
    g.W.diagonal().setZero();
    if (truncation > 0.0)
        g.W = (g.W.array() < truncation).select(0.0, g.W);
    // exact symmetry; GEMM rounding can differ across the diagonal
    g.W = 0.5 * (g.W + g.W.transpose()).eval();
    g.D = g.W.rowwise().sum();
    return g;
}

Vec laplacian_apply(const SimilarityGraph& graph, const Vec& f) {
    if (f.size() != graph.n)
        throw InvalidInputError("signal length " + std::to_string(f.size()) +
                                " does not match graph size " + std::to_string(graph.n));
    Vec out = graph.D.cwiseProduct(f);
    out.noalias() -= graph.W * f;
    return out / static_cast<double>(graph.n);
}

Vec laplacian_apply_m(const SimilarityGraph& graph, const Vec& f, int m) {
    if (m < 0) throw InvalidInputError("power must be nonnegative");
    Vec v = f;
    for (int i = 0; i < m; ++i) v = laplacian_apply(graph, v);
    return v;
}

CutValue cut_value(const SimilarityGraph& graph, const Vec& s) {
    if (s.size() != graph.n) throw InvalidInputError("indicator length mismatch");
    for (int i = 0; i < graph.n; ++i)
        if (s[i] != 0.0 && s[i] != 1.0)
            throw InvalidInputError("cut requires a binary indicator signal");
    // s'(D - W)s equals the weight crossing the partition
    double quad = s.dot(graph.D.cwiseProduct(s)) - s.dot(graph.W * s);
    CutValue cv;
    cv.raw = quad;
    double sLs = quad / static_cast<double>(graph.n);
    cv.scaled = std::sqrt(2.0 * M_PI) / (graph.n * graph.sigma) * sLs;
    return cv;
}

Mat dense_laplacian(const SimilarityGraph& graph) {
    Mat L = -graph.W;
    L.diagonal() += graph.D;
    return L / static_cast<double>(graph.n);
}

}  // namespace bandlim
