#include "bandlim/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "bandlim/asymptotics.hpp"
#include "bandlim/density.hpp"
#include "bandlim/errors.hpp"
#include "bandlim/graph.hpp"
#include "bandlim/rng.hpp"
#include "bandlim/serialize.hpp"
#include "bandlim/spectral.hpp"
#include "bandlim/ssl.hpp"
#include "bandlim/svg.hpp"

namespace bandlim {

using nlohmann::json;

namespace {

Hyperplane plane_x1(double c, int d) {
    Hyperplane p;
    p.normal = Vec::Zero(d);
    p.normal[0] = 1.0;
    p.offset = c;
    return p;
}

std::uint64_t trial_seed(const ExperimentConfig& cfg, long n, int m, double c, int trial) {
    return mix_seed(cfg.base_seed,
                    {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m),
                     std::bit_cast<std::uint64_t>(c), static_cast<std::uint64_t>(trial)});
}

struct TrialAccum {
    std::vector<double> vals;
    int excluded = 0;
};

// one Monte-Carlo cell: `trials` samples of omega_m for the x1 < c indicator
TrialAccum run_cell(const ExperimentConfig& cfg, long n, int m, double c) {
    TrialAccum acc;
    Hyperplane plane = plane_x1(c, cfg.model.dimension);
    KernelParams kp{cfg.sigma, cfg.model.dimension};
    for (int t = 0; t < cfg.trials; ++t) {
        PointCloud cloud = sample(cfg.model, n, trial_seed(cfg, n, m, c, t));
        Vec s = indicator_from_boundary(cloud, plane);
        double ones = s.sum();
        if (ones < 5.0 || ones > n - 5.0) {  // degenerate split
            ++acc.excluded;
            continue;
        }
        try {
            SimilarityGraph g = build_graph(cloud, kp);
            acc.vals.push_back(bandwidth_estimate(g, s, m));
        } catch (const NumericalError&) {
            ++acc.excluded;
        }
    }
    return acc;
}

StatRow make_row(long n, int m, double c, const TrialAccum& acc, double sup,
                 double prediction) {
    StatRow row;
    row.n = n;
    row.m = m;
    row.c = c;
    row.trials_used = static_cast<int>(acc.vals.size());
    row.excluded = acc.excluded;
    if (!acc.vals.empty()) {
        double mean = std::accumulate(acc.vals.begin(), acc.vals.end(), 0.0) / acc.vals.size();
        double var = 0.0;
        for (double v : acc.vals) var += (v - mean) * (v - mean);
        row.mean_omega = mean;
        row.std_omega = acc.vals.size() > 1 ? std::sqrt(var / (acc.vals.size() - 1)) : 0.0;
    }
    row.sup_p = sup;
    row.prediction_m = prediction;
    row.variant = "corrected";
    return row;
}

}  // namespace

ExperimentConfig ExperimentConfig::fig2_defaults() {
    ExperimentConfig c;
    c.model = reference_gmm();
    c.offsets = {0.0};
    c.ns = {500, 1000, 1500, 2000, 2500};
    c.ms = {10, 20, 30};
    c.sigma = 0.1;
    c.trials = 100;
    return c;
}

ExperimentConfig ExperimentConfig::fig3_defaults() {
    ExperimentConfig c;
    c.model = reference_gmm();
    for (int i = -12; i <= 12; ++i) c.offsets.push_back(i * 0.25);
    c.ns = {2500};
    c.ms = {20};
    c.sigma = 0.1;
    c.trials = 100;
    return c;
}

ExperimentConfig ExperimentConfig::recovery_defaults() {
    ExperimentConfig c;
    c.model = reference_gmm();
    c.offsets = {0.0};
    c.ns = {200};
    c.ms = {};
    c.sigma = 0.5;
    c.trials = 1;
    c.recovery_n = 200;
    c.recovery_sigma = 0.5;
    return c;
}

ExperimentConfig config_from_json(const std::string& text, const ExperimentConfig& defaults) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("bad config JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInputError("config JSON must be an object");
    ExperimentConfig c = defaults;
    static const std::vector<std::string> known = {
        "model",  "offsets",    "ns",         "ms",           "sigma",       "trials",
        "base_seed", "outdir", "recovery_n", "recovery_sigma", "cutoff_order"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw InvalidInputError("unknown config key '" + it.key() + "'");
    if (doc.contains("model")) c.model = model_from_json(doc["model"].dump());
    if (doc.contains("offsets")) c.offsets = doc["offsets"].get<std::vector<double>>();
    if (doc.contains("ns")) c.ns = doc["ns"].get<std::vector<long>>();
    if (doc.contains("ms")) c.ms = doc["ms"].get<std::vector<int>>();
    if (doc.contains("sigma")) c.sigma = doc["sigma"].get<double>();
    if (doc.contains("trials")) c.trials = doc["trials"].get<int>();
    if (doc.contains("base_seed")) c.base_seed = doc["base_seed"].get<std::uint64_t>();
    if (doc.contains("outdir")) c.outdir = doc["outdir"].get<std::string>();
    if (doc.contains("recovery_n")) c.recovery_n = doc["recovery_n"].get<long>();
    if (doc.contains("recovery_sigma")) c.recovery_sigma = doc["recovery_sigma"].get<double>();
    if (doc.contains("cutoff_order")) c.cutoff_order = doc["cutoff_order"].get<int>();
    if (c.trials < 1) throw InvalidInputError("trials must be >= 1");
    if (!(c.sigma > 0)) throw InvalidInputError("sigma must be positive");
    for (long n : c.ns)
        if (n < 2) throw InvalidInputError("sample sizes must be >= 2");
    return c;
}

std::string config_to_json(const ExperimentConfig& config) {
    json doc;
    doc["model"] = json::parse(model_to_json(config.model));
    doc["offsets"] = config.offsets;
    doc["ns"] = config.ns;
    doc["ms"] = config.ms;
    doc["sigma"] = config.sigma;
    doc["trials"] = config.trials;
    doc["base_seed"] = config.base_seed;
    doc["outdir"] = config.outdir;
    doc["recovery_n"] = config.recovery_n;
    doc["recovery_sigma"] = config.recovery_sigma;
    doc["cutoff_order"] = config.cutoff_order;
    return doc.dump(2) + "\n";
}

SummaryStats run_fig2(const ExperimentConfig& config) {
    if (config.ns.empty() || config.ms.empty())
        throw InvalidInputError("fig2 needs sample sizes and orders");
    double c = config.offsets.empty() ? 0.0 : config.offsets[0];
    Hyperplane plane = plane_x1(c, config.model.dimension);
    double sup = sup_on_boundary(config.model, plane);

    std::map<int, double> pred;
    for (int m : config.ms)
        pred[m] = finite_m_prediction(config.model, plane, m, config.sigma, TVariant::corrected);

    SummaryStats stats;
    for (long n : config.ns)
        for (int m : config.ms) {
            TrialAccum acc = run_cell(config, n, m, c);
            stats.rows.push_back(make_row(n, m, c, acc, sup, pred[m]));
        }
    return stats;
}

SummaryStats run_fig3(const ExperimentConfig& config) {
    if (config.ns.empty() || config.ms.empty() || config.offsets.empty())
        throw InvalidInputError("fig3 needs a sample size, an order and offsets");
    long n = config.ns[0];
    int m = config.ms[0];

    SummaryStats stats;
    for (double c : config.offsets) {
        Hyperplane plane = plane_x1(c, config.model.dimension);
        double sup = sup_on_boundary(config.model, plane);
        double prediction =
            finite_m_prediction(config.model, plane, m, config.sigma, TVariant::corrected);
        TrialAccum acc = run_cell(config, n, m, c);
        stats.rows.push_back(make_row(n, m, c, acc, sup, prediction));
    }
    return stats;
}

std::string stats_to_csv(const SummaryStats& stats) {
    std::string out = "n,m,c,trials_used,mean_omega,std_omega,sup_p,prediction_m,variant,excluded\n";
    for (const auto& r : stats.rows) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.m);
        out += ',';
        out += fmt_sig(r.c, 12);
        out += ',';
        out += std::to_string(r.trials_used);
        out += ',';
        out += fmt_sig(r.mean_omega, 12);
        out += ',';
        out += fmt_sig(r.std_omega, 12);
        out += ',';
        out += fmt_sig(r.sup_p, 12);
        out += ',';
        out += fmt_sig(r.prediction_m, 12);
        out += ',';
        out += r.variant;
        out += ',';
        out += std::to_string(r.excluded);
        out += '\n';
    }
    return out;
}

std::string emit_svg(const SummaryStats& stats, const ChartStyle& style) {
    std::vector<StatRow> rows;
    for (const auto& r : stats.rows)
        if (style.filter_m < 0 || r.m == style.filter_m) rows.push_back(r);
    if (rows.empty()) throw InvalidInputError("no stats rows to chart");
    std::sort(rows.begin(), rows.end(), [&](const StatRow& a, const StatRow& b) {
        return style.x_is_offset ? a.c < b.c : a.n < b.n;
    });

    SvgSeries mean, sup, pred;
    mean.label = "mean omega";
    mean.markers = true;
    sup.label = "sup on boundary";
    sup.color = "#d62728";
    sup.dashed = true;
    pred.label = "finite-m prediction";
    pred.color = "#2ca02c";
    for (const auto& r : rows) {
        double x = style.x_is_offset ? r.c : static_cast<double>(r.n);
        if (r.trials_used > 0) {
            mean.x.push_back(x);
            mean.y.push_back(r.mean_omega);
            mean.band_lo.push_back(r.mean_omega - r.std_omega);
            mean.band_hi.push_back(r.mean_omega + r.std_omega);
        }
        sup.x.push_back(x);
        sup.y.push_back(r.sup_p);
        pred.x.push_back(x);
        pred.y.push_back(r.prediction_m);
    }
    return render_chart(style.title, style.xlabel, style.ylabel, {mean, sup, pred});
}

RecoveryReport run_recovery_demo(const ExperimentConfig& config) {
    long n = config.recovery_n;
    if (n < 10) throw InvalidInputError("recovery demo needs at least 10 points");
    double c = config.offsets.empty() ? 0.0 : config.offsets[0];
    Hyperplane plane = plane_x1(c, config.model.dimension);

    PointCloud cloud = sample(config.model, n, mix_seed(config.base_seed, {0x7ec0u, static_cast<std::uint64_t>(n)}));
    KernelParams kp{config.recovery_sigma, config.model.dimension};
    SimilarityGraph graph = build_graph(cloud, kp);
    SpectralBasis basis = fourier_basis(graph);
    Vec s = indicator_from_boundary(cloud, plane);
    double omega_star = exact_bandwidth(basis, s);

    // random labeling order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(mix_seed(config.base_seed, {0x0cdeu, static_cast<std::uint64_t>(n)}));
    for (int i = static_cast<int>(n) - 1; i > 0; --i) {
        int j = static_cast<int>(rng.raw() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }

    RecoveryReport report;
    LabeledSet labeled;
    for (int size = 1; size <= n; ++size) {
        labeled.indices.push_back(order[size - 1]);
        labeled.values = Vec(size);
        for (int r = 0; r < size; ++r) labeled.values[r] = s[labeled.indices[r]];

        RecoveryRow row;
        row.size = size;
        row.bandwidth = omega_star;
        row.cutoff = cutoff_frequency(graph, labeled, config.cutoff_order);
        row.condition_met = row.cutoff > omega_star;

        // a zero cutoff leaves an empty lowpass span whose only element is 0
        Vec f_ls;
        if (row.cutoff <= 0.0) {
            f_ls = Vec::Zero(graph.n);
        } else {
            try {
                f_ls = interpolate_ls(
                    basis, labeled,
                    row.cutoff == kInf ? basis.eigenvalues[basis.n() - 1] + 1.0 : row.cutoff);
            } catch (const InfeasibleCutoffError&) {
                f_ls = Vec::Zero(graph.n);
            }
        }
        MinBandwidthResult mb = interpolate_min_bandwidth(basis, labeled);
        row.err_ls = (f_ls - s).cwiseAbs().maxCoeff();
        row.err_min = (mb.signal - s).cwiseAbs().maxCoeff();
        row.acc_ls = (predict(f_ls).labels - s).cwiseAbs().sum();
        row.acc_min = (predict(mb.signal).labels - s).cwiseAbs().sum();
        row.acc_ls = 1.0 - row.acc_ls / n;
        row.acc_min = 1.0 - row.acc_min / n;
        report.rows.push_back(row);

        if (row.condition_met) {
            report.final_size = size;
            report.recovered = row.err_ls <= 1e-6 && row.err_min <= 1e-6;
            break;
        }
    }
    if (report.final_size == 0) {
        report.final_size = static_cast<int>(n);
        report.recovered = false;
    }
    return report;
}

std::string recovery_to_csv(const RecoveryReport& report) {
    std::string out = "size,cutoff,bandwidth,err_ls,err_min,acc_ls,acc_min,condition_met\n";
    for (const auto& r : report.rows) {
        out += std::to_string(r.size);
        out += ',';
        out += fmt_sig(r.cutoff, 12);
        out += ',';
        out += fmt_sig(r.bandwidth, 12);
        out += ',';
        out += fmt_sig(r.err_ls, 12);
        out += ',';
        out += fmt_sig(r.err_min, 12);
        out += ',';
        out += fmt_sig(r.acc_ls, 12);
        out += ',';
        out += fmt_sig(r.acc_min, 12);
        out += ',';
        out += r.condition_met ? "1" : "0";
        out += '\n';
    }
    return out;
}

std::string recovery_svg(const RecoveryReport& report) {
    SvgSeries ls, mb, cond;
    ls.label = "accuracy (least squares)";
    ls.markers = true;
    mb.label = "accuracy (min bandwidth)";
    mb.color = "#d62728";
    mb.markers = true;
    for (const auto& r : report.rows) {
        ls.x.push_back(r.size);
        ls.y.push_back(r.acc_ls);
        mb.x.push_back(r.size);
        mb.y.push_back(r.acc_min);
    }
    cond.label = "cutoff condition met";
    cond.color = "#2ca02c";
    cond.dashed = true;
    cond.x = {static_cast<double>(report.final_size), static_cast<double>(report.final_size)};
    cond.y = {0.0, 1.0};
    return render_chart("Recovery vs labeled-set size", "labeled nodes", "accuracy",
                        {ls, mb, cond});
}

}  // namespace bandlim
