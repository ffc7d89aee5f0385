#include "bandlim/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "bandlim/errors.hpp"

namespace bandlim {

namespace {

std::vector<int> complement(const LabeledSet& labeled, int n) {
    std::vector<char> mark(n, 0);
    for (int i : labeled.indices) mark[i] = 1;
    std::vector<int> u;
    u.reserve(n - labeled.indices.size());
    for (int i = 0; i < n; ++i)
        if (!mark[i]) u.push_back(i);
    return u;
}

}  // namespace

void LabeledSet::validate(int n) const {
    if (static_cast<int>(indices.size()) != values.size())
        throw InvalidInputError("labeled set indices and values differ in length");
    std::vector<char> seen(n, 0);
    for (int i : indices) {
        if (i < 0 || i >= n) throw InvalidInputError("labeled index out of range");
        if (seen[i]) throw InvalidInputError("labeled indices must be distinct");
        seen[i] = 1;
    }
}

SpectralBasis fourier_basis(const SimilarityGraph& graph, int cap) {
    if (graph.n > cap)
        throw ResourceError("graph size " + std::to_string(graph.n) +
                            " exceeds the dense eigensolver cap " + std::to_string(cap) +
                            "; use the iterated-apply estimators");
    Eigen::SelfAdjointEigenSolver<Mat> es(dense_laplacian(graph));
    if (es.info() != Eigen::Success)
        throw NumericalError("eigendecomposition failed to converge");
    SpectralBasis b;
    b.eigenvalues = es.eigenvalues().cwiseMax(0.0);
    b.eigenvectors = es.eigenvectors();
    return b;
}

double bandwidth_estimate(const SimilarityGraph& graph, const Vec& s, int m) {
    if (m < 1) throw InvalidInputError("bandwidth order must be >= 1");
    double ss = s.squaredNorm();
    if (ss == 0.0) throw UndefinedBandwidthError("bandwidth of the zero signal is undefined");
    Vec v = laplacian_apply_m(graph, s, m);
    double num = s.dot(v);
    if (num <= 0.0) return 0.0;  // PSD guarantees >= 0; rounding can dip below
    return std::pow(num / ss, 1.0 / m);
}

double exact_bandwidth(const SpectralBasis& basis, const Vec& s, double tol) {
    if (s.size() != basis.n()) throw InvalidInputError("signal length mismatch");
    double norm = s.norm();
    if (norm == 0.0) throw UndefinedBandwidthError("bandwidth of the zero signal is undefined");
    Vec coeff = basis.eigenvectors.transpose() * s;
    double thr = tol * norm;
    for (int k = basis.n() - 1; k >= 0; --k)
        if (std::abs(coeff[k]) > thr) return basis.eigenvalues[k];
    return 0.0;
}

Mat cutoff_submatrix_apply(const SimilarityGraph& graph, const std::vector<int>& unlabeled,
                           int k) {
    int u = static_cast<int>(unlabeled.size());
    Mat M(u, u);
    Vec e = Vec::Zero(graph.n);
    for (int j = 0; j < u; ++j) {
        e[unlabeled[j]] = 1.0;
        Vec col = laplacian_apply_m(graph, e, k);
        for (int i = 0; i < u; ++i) M(i, j) = col[unlabeled[i]];
        e[unlabeled[j]] = 0.0;
    }
    return M;
}

Mat cutoff_submatrix_dense(const SimilarityGraph& graph, const std::vector<int>& unlabeled,
                           int k) {
    Mat P = dense_laplacian(graph);
    Mat acc = Mat::Identity(graph.n, graph.n);
    int e = k;
    while (e > 0) {  // binary powering
        if (e & 1) acc = (acc * P).eval();
        e >>= 1;
        if (e) P = (P * P).eval();
    }
    int u = static_cast<int>(unlabeled.size());
    Mat M(u, u);
    for (int j = 0; j < u; ++j)
        for (int i = 0; i < u; ++i) M(i, j) = acc(unlabeled[i], unlabeled[j]);
    return M;
}

double cutoff_frequency(const SimilarityGraph& graph, const LabeledSet& labeled, int k) {
    if (k < 1) throw InvalidInputError("cutoff order must be >= 1");
    labeled.validate(graph.n);
    std::vector<int> u = complement(labeled, graph.n);
    if (u.empty()) return kInf;  // every signal is recoverable

    int usz = static_cast<int>(u.size());
    // per-column applies cost |U| k n^2; dense binary powering ~3 n^3 at k=8
    Mat M = (static_cast<long>(usz) * k < 3L * graph.n)
                ? cutoff_submatrix_apply(graph, u, k)
                : cutoff_submatrix_dense(graph, u, k);
    M = 0.5 * (M + M.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("cutoff submatrix eigendecomposition failed");
    double lmin = std::max(0.0, es.eigenvalues()[0]);
    return std::pow(lmin, 1.0 / k);
}

Vec project_bandlimited(const SpectralBasis& basis, const Vec& s, double omega) {
    if (s.size() != basis.n()) throw InvalidInputError("signal length mismatch");
    if (omega < 0) throw InvalidInputError("cutoff must be nonnegative");
    int k = 0;
    while (k < basis.n() && basis.eigenvalues[k] < omega) ++k;  // strict inclusion
    if (k == 0) return Vec::Zero(s.size());
    Vec c = basis.eigenvectors.leftCols(k).transpose() * s;
    return basis.eigenvectors.leftCols(k) * c;
}

}  // namespace bandlim
