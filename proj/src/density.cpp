#include "bandlim/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bandlim/errors.hpp"
#include "bandlim/rng.hpp"

namespace bandlim {

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

double log_gauss_norm(double variance, int d) {
    return -0.5 * d * std::log(2.0 * M_PI * variance);
}

// golden-section maximization on [a, b], f unimodal on the bracket
template <class F>
double golden_max(F f, double a, double b, double tol) {
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

// 16-point Gauss-Legendre nodes/weights on [-1, 1]
const double kGlNodes[16] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
const double kGlWeights[16] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

struct Patch {
    Vec lo, hi;      // per tangent coordinate
    double min_std;  // smallest component standard deviation
};

// bounding box on the tangent plane covering every projected mean +- 6 sd
Patch boundary_patch(const GmmModel& model, const Hyperplane& plane, const Mat& T) {
    int t = static_cast<int>(T.cols());
    Vec x0 = plane.offset * plane.normal;
    Patch p;
    p.lo = Vec::Constant(t, kInf);
    p.hi = Vec::Constant(t, -kInf);
    p.min_std = kInf;
    for (const auto& c : model.components) {
        double sd = std::sqrt(c.variance);
        p.min_std = std::min(p.min_std, sd);
        Vec proj = T.transpose() * (c.mean - x0);
        for (int j = 0; j < t; ++j) {
            p.lo[j] = std::min(p.lo[j], proj[j] - 6.0 * sd);
            p.hi[j] = std::max(p.hi[j], proj[j] + 6.0 * sd);
        }
    }
    return p;
}

// composite Gauss-Legendre of exp(q log p) over the patch, accumulated
// against a running scale to survive large q; returns log of the integral
double quad_log(const GmmModel& model, const Hyperplane& plane, const Mat& T,
                const Patch& patch, double q, double panel_width) {
    Vec x0 = plane.offset * plane.normal;
    int t = static_cast<int>(T.cols());

    // log p at a tangent point
    auto logp = [&](const Vec& u) {
        Vec x = x0 + T * u;
        double p = pdf_eval(model, x);
        return p > 0 ? std::log(p) : -kInf;
    };

    double shift = -kInf;  // running max of q*logp over nodes
    double acc = 0.0;      // sum of w * exp(q logp - shift)

    auto add = [&](double w, double lp) {
        double e = q * lp;
        if (e == -kInf) return;
        if (e > shift) {
            if (shift != -kInf) acc *= std::exp(shift - e);
            shift = e;
        }
        acc += w * std::exp(e - shift);
    };

    if (t == 1) {
        int panels = std::max(1, static_cast<int>(std::ceil((patch.hi[0] - patch.lo[0]) / panel_width)));
        double h = (patch.hi[0] - patch.lo[0]) / panels;
        Vec u(1);
        for (int p = 0; p < panels; ++p) {
            double c = patch.lo[0] + (p + 0.5) * h;
            for (int g = 0; g < 16; ++g) {
                u[0] = c + 0.5 * h * kGlNodes[g];
                add(0.5 * h * kGlWeights[g], logp(u));
            }
        }
    } else if (t == 2) {
        int px = std::max(1, static_cast<int>(std::ceil((patch.hi[0] - patch.lo[0]) / panel_width)));
        int py = std::max(1, static_cast<int>(std::ceil((patch.hi[1] - patch.lo[1]) / panel_width)));
        double hx = (patch.hi[0] - patch.lo[0]) / px;
        double hy = (patch.hi[1] - patch.lo[1]) / py;
        Vec u(2);
        for (int p = 0; p < px; ++p) {
            double cx = patch.lo[0] + (p + 0.5) * hx;
            for (int r = 0; r < py; ++r) {
                double cy = patch.lo[1] + (r + 0.5) * hy;
                for (int gx = 0; gx < 16; ++gx) {
                    for (int gy = 0; gy < 16; ++gy) {
                        u[0] = cx + 0.5 * hx * kGlNodes[gx];
                        u[1] = cy + 0.5 * hy * kGlNodes[gy];
                        add(0.25 * hx * hy * kGlWeights[gx] * kGlWeights[gy], logp(u));
                    }
                }
            }
        }
    } else {
        throw InvalidInputError("boundary quadrature supports dimension <= 3, got tangent dim " +
                                std::to_string(t));
    }
    if (acc <= 0.0) return -kInf;
    return shift + std::log(acc);
}

double power_integral_log_impl(const GmmModel& model, const Hyperplane& plane, double q) {
    model.validate();
    plane.validate();
    if (q < 1.0) throw InvalidInputError("boundary power integral requires q >= 1");
    if (model.dimension != plane.normal.size())
        throw InvalidInputError("model and plane dimension mismatch");

    if (model.dimension == 1) {
        Vec x0 = plane.offset * plane.normal;
        double p = pdf_eval(model, x0);
        return p > 0 ? q * std::log(p) : -kInf;
    }

    Mat T = tangent_basis(plane);
    Patch patch = boundary_patch(model, plane, T);
    // p^q narrows like a Gaussian of width sd/sqrt(q); resolve it
    double width = patch.min_std / (2.0 * std::sqrt(q));
    double coarse = quad_log(model, plane, T, patch, q, width);
    double fine = quad_log(model, plane, T, patch, q, width / 2.0);
    if (fine == -kInf && coarse == -kInf) return -kInf;
    double rel = std::abs(std::expm1(coarse - fine));
    if (!(rel <= 0.005))
        throw NumericalError("boundary quadrature did not converge: refinement moved result by " +
                             std::to_string(rel * 100) + "%");
    return fine;
}

}  // namespace

void GmmModel::validate() const {
    if (dimension < 1) throw InvalidInputError("model dimension must be >= 1");
    if (components.empty()) throw InvalidInputError("model has no components");
    double wsum = 0.0;
    for (const auto& c : components) {
        if (!(c.variance > 0)) throw InvalidInputError("component variance must be positive");
        if (!(c.weight > 0) || c.weight > 1.0)
            throw InvalidInputError("component weight must lie in (0, 1]");
        if (c.mean.size() != dimension)
            throw InvalidInputError("component mean dimension disagrees with model");
        wsum += c.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw InvalidInputError("component weights must sum to 1 within 1e-12");
}

void Hyperplane::validate() const {
    if (normal.size() < 1) throw InvalidInputError("hyperplane normal is empty");
    if (std::abs(normal.norm() - 1.0) > 1e-12)
        throw InvalidInputError("hyperplane normal must be unit length within 1e-12");
}

Hyperplane Hyperplane::flipped() const {
    Hyperplane f;
    f.normal = -normal;
    f.offset = -offset;
    return f;
}

double pdf_eval(const GmmModel& model, const Vec& x) {
    model.validate();
    if (x.size() != model.dimension)
        throw InvalidInputError("point dimension " + std::to_string(x.size()) +
                                " does not match model dimension " +
                                std::to_string(model.dimension));
    double p = 0.0;
    for (const auto& c : model.components) {
        double d2 = (x - c.mean).squaredNorm();
        p += c.weight * std::exp(log_gauss_norm(c.variance, model.dimension) -
                                 d2 / (2.0 * c.variance));
    }
    return p;
}

PointCloud sample(const GmmModel& model, long n, std::uint64_t seed) {
    model.validate();
    if (n < 1) throw InvalidInputError("sample size must be >= 1");
    int d = model.dimension;
    int k = static_cast<int>(model.components.size());
    Vec weights(k);
    for (int i = 0; i < k; ++i) weights[i] = model.components[i].weight;

    Rng rng(seed);
    PointCloud cloud;
    cloud.seed = seed;
    cloud.points.resize(n, d);
    for (long i = 0; i < n; ++i) {
        int c = rng.categorical(weights);
        const auto& comp = model.components[c];
        double sd = std::sqrt(comp.variance);
        for (int j = 0; j < d; ++j)
            cloud.points(i, j) = comp.mean[j] + sd * rng.normal();
    }
    return cloud;
}

Vec indicator_from_boundary(const PointCloud& cloud, const Hyperplane& plane) {
    plane.validate();
    if (cloud.dim() != plane.normal.size())
        throw InvalidInputError("cloud and plane dimension mismatch");
    Vec s(cloud.n());
    for (int i = 0; i < cloud.n(); ++i)
        s[i] = (cloud.points.row(i).dot(plane.normal) < plane.offset) ? 1.0 : 0.0;
    return s;
}

Mat tangent_basis(const Hyperplane& plane) {
    plane.validate();
    int d = static_cast<int>(plane.normal.size());
    if (d < 2) throw InvalidInputError("tangent basis needs dimension >= 2");
    // Householder reflector sending the normal to -sign(a0) e0; its trailing
    // columns are an orthonormal basis of the tangent space.
    Vec a = plane.normal;
    Vec v = a;
    double s = (a[0] >= 0) ? 1.0 : -1.0;
    v[0] += s;
    double vtv = v.squaredNorm();
    Mat H = Mat::Identity(d, d) - (2.0 / vtv) * (v * v.transpose());
    return H.rightCols(d - 1);
}

double sup_on_boundary(const GmmModel& model, const Hyperplane& plane) {
    model.validate();
    plane.validate();
    if (model.dimension != plane.normal.size())
        throw InvalidInputError("model and plane dimension mismatch");

    Vec x0 = plane.offset * plane.normal;
    if (model.dimension == 1) return pdf_eval(model, x0);

    Mat T = tangent_basis(plane);
    int t = static_cast<int>(T.cols());
    Patch patch = boundary_patch(model, plane, T);
    double step = patch.min_std / 20.0;

    auto eval = [&](const Vec& u) { return pdf_eval(model, x0 + T * u); };

    if (t == 1) {
        int cells = std::max(1, static_cast<int>(std::ceil((patch.hi[0] - patch.lo[0]) / step)));
        double h = (patch.hi[0] - patch.lo[0]) / cells;
        double best = -kInf, bestu = patch.lo[0];
        Vec u(1);
        for (int i = 0; i <= cells; ++i) {
            u[0] = patch.lo[0] + i * h;
            double p = eval(u);
            if (p > best) { best = p; bestu = u[0]; }
        }
        auto f = [&](double x) { Vec w(1); w[0] = x; return eval(w); };
        double refined = golden_max(f, bestu - h, bestu + h, 1e-12);
        return std::max(best, refined);
    }
    if (t == 2) {
        int cx = std::max(1, static_cast<int>(std::ceil((patch.hi[0] - patch.lo[0]) / step)));
        int cy = std::max(1, static_cast<int>(std::ceil((patch.hi[1] - patch.lo[1]) / step)));
        double hx = (patch.hi[0] - patch.lo[0]) / cx;
        double hy = (patch.hi[1] - patch.lo[1]) / cy;
        double best = -kInf;
        Vec bu(2);
        Vec u(2);
        for (int i = 0; i <= cx; ++i) {
            for (int j = 0; j <= cy; ++j) {
                u[0] = patch.lo[0] + i * hx;
                u[1] = patch.lo[1] + j * hy;
                double p = eval(u);
                if (p > best) { best = p; bu = u; }
            }
        }
        // coordinate-wise golden refinement
        for (int round = 0; round < 6; ++round) {
            for (int c = 0; c < 2; ++c) {
                double h = (c == 0) ? hx : hy;
                auto f = [&](double x) { Vec w = bu; w[c] = x; return eval(w); };
                double lo = bu[c] - h, hi = bu[c] + h;
                double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
                while (hi - lo > 1e-12) {
                    if (f(x1) < f(x2)) { lo = x1; x1 = x2; x2 = lo + kGolden * (hi - lo); }
                    else { hi = x2; x2 = x1; x1 = hi - kGolden * (hi - lo); }
                }
                bu[c] = 0.5 * (lo + hi);
            }
        }
        return std::max(best, eval(bu));
    }
    throw InvalidInputError("sup search supports dimension <= 3");
}

double boundary_power_integral_log(const GmmModel& model, const Hyperplane& plane, double q) {
    return power_integral_log_impl(model, plane, q);
}

double boundary_power_integral(const GmmModel& model, const Hyperplane& plane, double q) {
    double lg = power_integral_log_impl(model, plane, q);
    return lg == -kInf ? 0.0 : std::exp(lg);
}

double region_mass(const GmmModel& model, const Hyperplane& plane) {
    model.validate();
    plane.validate();
    if (model.dimension != plane.normal.size())
        throw InvalidInputError("model and plane dimension mismatch");
    double mass = 0.0;
    for (const auto& c : model.components) {
        double z = (plane.offset - plane.normal.dot(c.mean)) / std::sqrt(c.variance);
        mass += c.weight * 0.5 * std::erfc(-z / std::sqrt(2.0));
    }
    return mass;
}

GmmModel reference_gmm() {
    GmmModel m;
    m.dimension = 2;
    GmmComponent a, b, c;
    a.mean = Vec(2); a.mean << -2.0, 0.0; a.variance = 0.64; a.weight = 0.5;
    b.mean = Vec(2); b.mean << 0.0, 0.0;  b.variance = 0.25; b.weight = 0.2;
    c.mean = Vec(2); c.mean << 2.0, 0.0;  c.variance = 0.16; c.weight = 0.3;
    m.components = {a, b, c};
    return m;
}

}  // namespace bandlim
