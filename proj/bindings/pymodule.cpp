#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bandlim/asymptotics.hpp"
#include "bandlim/density.hpp"
#include "bandlim/errors.hpp"
#include "bandlim/graph.hpp"
#include "bandlim/serialize.hpp"
#include "bandlim/spectral.hpp"
#include "bandlim/ssl.hpp"

namespace py = pybind11;
using namespace bandlim;

namespace {

GmmModel model_from_parts(const std::vector<Vec>& means, const std::vector<double>& variances,
                          const std::vector<double>& weights) {
    if (means.size() != variances.size() || means.size() != weights.size())
        throw InvalidInputError("means, variances and weights must have equal length");
    GmmModel m;
    m.dimension = means.empty() ? 0 : static_cast<int>(means[0].size());
    for (size_t i = 0; i < means.size(); ++i) {
        GmmComponent c;
        c.mean = means[i];
        c.variance = variances[i];
        c.weight = weights[i];
        m.components.push_back(std::move(c));
    }
    m.validate();
    return m;
}

Hyperplane plane_from_parts(const Vec& normal, double offset) {
    Hyperplane p;
    double nrm = normal.norm();
    if (nrm == 0) throw InvalidInputError("plane normal must be nonzero");
    p.normal = normal / nrm;
    p.offset = offset;
    return p;
}

LabeledSet labeled_from_parts(const std::vector<int>& indices, const Vec& values) {
    LabeledSet ls;
    ls.indices = indices;
    ls.values = values;
    return ls;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "bandlimited graph-signal interpolation core";

    py::register_exception<Error>(m, "BandlimError");

    py::class_<GmmModel>(m, "GmmModel")
        .def(py::init(&model_from_parts), py::arg("means"), py::arg("variances"),
             py::arg("weights"))
        .def_property_readonly("dimension", [](const GmmModel& g) { return g.dimension; })
        .def("to_json", &model_to_json)
        .def_static("from_json", &model_from_json);

    py::class_<Hyperplane>(m, "Hyperplane")
        .def(py::init(&plane_from_parts), py::arg("normal"), py::arg("offset"))
        .def_property_readonly("normal", [](const Hyperplane& p) { return p.normal; })
        .def_property_readonly("offset", [](const Hyperplane& p) { return p.offset; });

    py::class_<SimilarityGraph>(m, "SimilarityGraph")
        .def_property_readonly("n", [](const SimilarityGraph& g) { return g.n; })
        .def_property_readonly("sigma", [](const SimilarityGraph& g) { return g.sigma; })
        .def_property_readonly("W", [](const SimilarityGraph& g) { return g.W; })
        .def_property_readonly("degrees", [](const SimilarityGraph& g) { return g.D; });

    py::class_<SpectralBasis>(m, "SpectralBasis")
        .def_property_readonly("eigenvalues", [](const SpectralBasis& b) { return b.eigenvalues; })
        .def_property_readonly("eigenvectors",
                               [](const SpectralBasis& b) { return b.eigenvectors; });

    m.def("reference_gmm", &reference_gmm);
    m.def("pdf_eval", &pdf_eval, py::arg("model"), py::arg("x"));
    m.def(
        "sample",
        [](const GmmModel& model, long n, std::uint64_t seed) {
            return sample(model, n, seed).points;
        },
        py::arg("model"), py::arg("n"), py::arg("seed"));
    m.def(
        "indicator_from_boundary",
        [](const Mat& points, const Hyperplane& plane) {
            PointCloud c;
            c.points = points;
            return indicator_from_boundary(c, plane);
        },
        py::arg("points"), py::arg("plane"));
    m.def("sup_on_boundary", &sup_on_boundary, py::arg("model"), py::arg("plane"));
    m.def("boundary_power_integral", &boundary_power_integral, py::arg("model"), py::arg("plane"),
          py::arg("q"));
    m.def("region_mass", &region_mass, py::arg("model"), py::arg("plane"));

    m.def(
        "build_graph",
        [](const Mat& points, double sigma, double truncation) {
            PointCloud c;
            c.points = points;
            KernelParams kp{sigma, static_cast<int>(points.cols())};
            return build_graph(c, kp, truncation);
        },
        py::arg("points"), py::arg("sigma"), py::arg("truncation") = 0.0);
    m.def("laplacian_apply", &laplacian_apply, py::arg("graph"), py::arg("f"));
    m.def(
        "cut_value",
        [](const SimilarityGraph& g, const Vec& s) {
            CutValue cv = cut_value(g, s);
            return py::make_tuple(cv.raw, cv.scaled);
        },
        py::arg("graph"), py::arg("s"));

    m.def("fourier_basis", &fourier_basis, py::arg("graph"), py::arg("cap") = kDenseEigenCap);
    m.def("bandwidth_estimate", &bandwidth_estimate, py::arg("graph"), py::arg("s"), py::arg("m"));
    m.def("exact_bandwidth", &exact_bandwidth, py::arg("basis"), py::arg("s"),
          py::arg("tol") = kCoeffTol);
    m.def(
        "cutoff_frequency",
        [](const SimilarityGraph& g, const std::vector<int>& indices, int k) {
            LabeledSet ls;
            ls.indices = indices;
            ls.values = Vec::Zero(indices.size());
            return cutoff_frequency(g, ls, k);
        },
        py::arg("graph"), py::arg("labeled_indices"), py::arg("k") = kCutoffOrder);
    m.def("project_bandlimited", &project_bandlimited, py::arg("basis"), py::arg("s"),
          py::arg("omega"));

    m.def(
        "interpolate_ls",
        [](const SpectralBasis& b, const std::vector<int>& idx, const Vec& vals, double omega) {
            return interpolate_ls(b, labeled_from_parts(idx, vals), omega);
        },
        py::arg("basis"), py::arg("labeled_indices"), py::arg("labeled_values"),
        py::arg("omega_L"));
    m.def(
        "interpolate_min_bandwidth",
        [](const SpectralBasis& b, const std::vector<int>& idx, const Vec& vals, double tol) {
            MinBandwidthResult r = interpolate_min_bandwidth(b, labeled_from_parts(idx, vals), tol);
            return py::make_tuple(r.signal, r.omega_min, r.k);
        },
        py::arg("basis"), py::arg("labeled_indices"), py::arg("labeled_values"),
        py::arg("residual_tol") = kResidualTol);
    m.def(
        "harmonic_interpolate",
        [](const SimilarityGraph& g, const std::vector<int>& idx, const Vec& vals) {
            return harmonic_interpolate(g, labeled_from_parts(idx, vals));
        },
        py::arg("graph"), py::arg("labeled_indices"), py::arg("labeled_values"));
    m.def(
        "predict",
        [](const Vec& scores, double thr) { return predict(scores, thr).labels; },
        py::arg("scores"), py::arg("threshold") = 0.5);
    m.def("one_vs_all", &one_vs_all, py::arg("basis"), py::arg("labeled_indices"),
          py::arg("labeled_classes"), py::arg("omega_L"));

    m.def(
        "t_coefficient",
        [](int mm, const std::string& variant) {
            return t_coefficient(mm, variant == "printed" ? TVariant::printed
                                                          : TVariant::corrected);
        },
        py::arg("m"), py::arg("variant") = "corrected");
    m.def(
        "bias_limit",
        [](const GmmModel& g, const Hyperplane& p, int mm, const std::string& variant) {
            return bias_limit(g, p, mm,
                              variant == "printed" ? TVariant::printed : TVariant::corrected);
        },
        py::arg("model"), py::arg("plane"), py::arg("m"), py::arg("variant") = "corrected");
    m.def(
        "finite_m_prediction",
        [](const GmmModel& g, const Hyperplane& p, int mm, double sigma,
           const std::string& variant) {
            return finite_m_prediction(
                g, p, mm, sigma, variant == "printed" ? TVariant::printed : TVariant::corrected);
        },
        py::arg("model"), py::arg("plane"), py::arg("m"), py::arg("sigma"),
        py::arg("variant") = "corrected");
    m.def("limit_bandwidth", &limit_bandwidth, py::arg("model"), py::arg("plane"));
    m.def("bernstein_tail_bound", &bernstein_tail_bound, py::arg("n"), py::arg("m"),
          py::arg("sigma"), py::arg("d"), py::arg("expected_v"), py::arg("epsilon"));
    m.def(
        "schedule",
        [](long n, double x, double y, int d) {
            Schedule s = schedule(n, x, y, d);
            return py::make_tuple(s.m, s.sigma);
        },
        py::arg("n"), py::arg("x"), py::arg("y"), py::arg("d"));
    m.def(
        "check_conditions",
        [](long n, double sigma, int mm, int d) {
            ConditionReport r = check_conditions(n, sigma, mm, d);
            py::dict out;
            out["m_over_n"] = r.quantity_c3a;
            out["m_sigma_sq"] = r.quantity_c3b;
            out["inv_sigma_root_m"] = r.quantity_c4;
            out["c5"] = r.quantity_c5;
            out["strong_c5"] = r.strong_c5;
            out["log_c5"] = r.log_quantity_c5;
            out["log_strong_c5"] = r.log_strong_c5;
            return out;
        },
        py::arg("n"), py::arg("sigma"), py::arg("m"), py::arg("d"));
}
