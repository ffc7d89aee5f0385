#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <vector>

namespace bandlim {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// One isotropic mixture component: covariance = variance * I.
struct GmmComponent {
    Vec mean;
    double variance = 1.0;
    double weight = 1.0;
};

struct GmmModel {
    std::vector<GmmComponent> components;
    int dimension = 0;

    // Throws InvalidInputError if weights do not sum to 1 within 1e-12,
    // a variance or weight is out of range, or dimensions disagree.
    void validate() const;
};

// Oriented boundary {x : normal.x = offset}; the region S is the open
// half-space {x : normal.x < offset}. The orientation convention is fixed
// project-wide.
struct Hyperplane {
    Vec normal;
    double offset = 0.0;

    void validate() const;  // requires ||normal|| = 1 within 1e-12
    Hyperplane flipped() const;
};

struct PointCloud {
    Mat points;              // n x d, one point per row
    std::uint64_t seed = 0;  // 0 when externally loaded

    int n() const { return static_cast<int>(points.rows()); }
    int dim() const { return static_cast<int>(points.cols()); }
};

struct KernelParams {
    double sigma = 0.1;
    int dimension = 2;
};

// Dense similarity graph. The Laplacian L = (1/n)(D - W) is never stored;
// operations apply it through W and D.
struct SimilarityGraph {
    int n = 0;
    double sigma = 0.0;
    double truncation = 0.0;  // absolute weight threshold, 0 = dense
    Mat W;                    // symmetric, zero diagonal
    Vec D;                    // row sums of W
};

struct LabeledSet {
    std::vector<int> indices;
    Vec values;

    void validate(int n) const;  // distinct indices within [0, n)
};

// Eigenpairs of L in ascending eigenvalue order, eigenvalues clamped at 0.
struct SpectralBasis {
    Vec eigenvalues;
    Mat eigenvectors;  // column k pairs with eigenvalues[k]

    int n() const { return static_cast<int>(eigenvalues.size()); }
};

struct Prediction {
    Vec scores;
    Vec labels;  // 0/1, thresholded from scores
    double threshold = 0.5;
};

struct MinBandwidthResult {
    Vec signal;
    double omega_min = 0.0;  // eigenvalue of the last included basis vector
    int k = 0;               // number of included basis columns
};

// Parameter schedule tying sigma and m to the sample size.
struct Schedule {
    long n = 0;
    double sigma = 0.0;
    int m = 0;
    double x = 0.0;
    double y = 0.0;
};

struct ConditionReport {
    long n = 0;
    double sigma = 0.0;
    int m = 0;
    int d = 0;
    double quantity_c3a = 0.0;     // m / n
    double quantity_c3b = 0.0;     // m * sigma^2
    double quantity_c4 = 0.0;      // (1/sigma)^(1/m)
    double quantity_c5 = 0.0;      // n * sigma^(m d + 1) / (m C^m)
    double strong_c5 = 0.0;        // quantity_c5 / log n
    double log_quantity_c5 = 0.0;  // natural-log forms stay finite at large m
    double log_strong_c5 = 0.0;
};

enum class TVariant { printed, corrected };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace bandlim
