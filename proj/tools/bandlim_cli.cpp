#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bandlim/asymptotics.hpp"
#include "bandlim/density.hpp"
#include "bandlim/errors.hpp"
#include "bandlim/graph.hpp"
#include "bandlim/harness.hpp"
#include "bandlim/serialize.hpp"
#include "bandlim/spectral.hpp"
#include "bandlim/ssl.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace bandlim;

namespace {

GmmModel load_model(const std::string& path) {
    if (path.empty()) return reference_gmm();
    return model_from_json(read_file(path));
}

Hyperplane make_plane(const std::string& normal_csv, double offset, int d) {
    Hyperplane p;
    if (normal_csv.empty()) {
        p.normal = Vec::Zero(d);
        p.normal[0] = 1.0;
    } else {
        std::vector<double> parts;
        size_t pos = 0;
        while (pos <= normal_csv.size()) {
            size_t comma = normal_csv.find(',', pos);
            parts.push_back(std::stod(normal_csv.substr(
                pos, comma == std::string::npos ? comma : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        p.normal = Eigen::Map<Vec>(parts.data(), parts.size());
        double nrm = p.normal.norm();
        if (nrm == 0) throw InvalidInputError("plane normal must be nonzero");
        p.normal /= nrm;
    }
    p.offset = offset;
    return p;
}

// config file first, explicit flags override
ExperimentConfig resolve_config(const std::string& config_path, const ExperimentConfig& defaults,
                                CLI::App* cmd, std::vector<long>& ns, std::vector<int>& ms,
                                std::vector<double>& cs, double sigma, int trials,
                                std::uint64_t seed, std::string& outdir, long recovery_n,
                                double recovery_sigma) {
    ExperimentConfig cfg = defaults;
    if (!config_path.empty()) cfg = config_from_json(read_file(config_path), defaults);
    if (cmd->count("--n")) cfg.ns = ns;
    if (cmd->count("--m")) cfg.ms = ms;
    if (cmd->count("--c")) cfg.offsets = cs;
    if (cmd->count("--sigma")) cfg.sigma = sigma;
    if (cmd->count("--trials")) cfg.trials = trials;
    if (cmd->count("--seed")) cfg.base_seed = seed;
    if (cmd->count("--outdir")) cfg.outdir = outdir;
    if (cmd->count("--recovery-n")) cfg.recovery_n = recovery_n;
    if (cmd->count("--recovery-sigma")) cfg.recovery_sigma = recovery_sigma;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bandlimited graph-signal interpolation toolkit"};
    app.require_subcommand(1);

    // ---- sample ----
    auto* c_sample = app.add_subcommand("sample", "draw points from a mixture model");
    std::string s_model, s_out = "points.csv";
    long s_n = 1000;
    std::uint64_t s_seed = 1;
    c_sample->add_option("--model", s_model, "model JSON path (default: built-in mixture)");
    c_sample->add_option("--n", s_n, "number of points")->required();
    c_sample->add_option("--seed", s_seed, "RNG seed");
    c_sample->add_option("--out", s_out, "output CSV path");

    // ---- build-graph ----
    auto* c_graph = app.add_subcommand("build-graph", "similarity graph from points");
    std::string g_points, g_out = "graph.csv";
    double g_sigma = 0.1, g_trunc = 0.0;
    c_graph->add_option("--points", g_points, "points CSV")->required();
    c_graph->add_option("--sigma", g_sigma, "kernel width")->required();
    c_graph->add_option("--truncation", g_trunc, "zero weights below this threshold");
    c_graph->add_option("--out", g_out, "output edge list path");

    // ---- bandwidth ----
    auto* c_bw = app.add_subcommand("bandwidth", "m-th order bandwidth of a boundary indicator");
    std::string b_points, b_normal;
    double b_sigma = 0.1, b_offset = 0.0;
    int b_m = 20;
    c_bw->add_option("--points", b_points, "points CSV")->required();
    c_bw->add_option("--sigma", b_sigma, "kernel width")->required();
    c_bw->add_option("--m", b_m, "estimate order");
    c_bw->add_option("--normal", b_normal, "plane normal, comma separated (default e1)");
    c_bw->add_option("--offset", b_offset, "plane offset");

    // ---- interpolate ----
    auto* c_interp = app.add_subcommand("interpolate", "reconstruct labels on a graph");
    std::string i_points, i_labels, i_method = "big-ls", i_out = "scores.csv";
    double i_sigma = 0.1, i_omega = 0.0;
    c_interp->add_option("--points", i_points, "points CSV")->required();
    c_interp->add_option("--labels", i_labels, "labels CSV (index,value)")->required();
    c_interp->add_option("--sigma", i_sigma, "kernel width")->required();
    c_interp->add_option("--method", i_method, "big-ls | big-min | harmonic")
        ->check(CLI::IsMember({"big-ls", "big-min", "harmonic"}));
    c_interp->add_option("--omega", i_omega, "cutoff for big-ls (default: estimated)");
    c_interp->add_option("--out", i_out, "scores CSV path");

    // ---- limits ----
    auto* c_lim = app.add_subcommand("limits", "theoretical limits and condition report");
    std::string l_model, l_normal;
    double l_sigma = 0.1, l_offset = 0.0;
    int l_m = 20;
    long l_n = 2500;
    c_lim->add_option("--model", l_model, "model JSON path (default: built-in mixture)");
    c_lim->add_option("--normal", l_normal, "plane normal (default e1)");
    c_lim->add_option("--offset", l_offset, "plane offset");
    c_lim->add_option("--m", l_m, "bandwidth order");
    c_lim->add_option("--sigma", l_sigma, "kernel width");
    c_lim->add_option("--n", l_n, "sample size for the condition report");

    // ---- experiment runners ----
    std::string x_config, x_outdir = ".";
    std::vector<long> x_ns;
    std::vector<int> x_ms;
    std::vector<double> x_cs;
    double x_sigma = 0.1, x_rec_sigma = 0.5;
    int x_trials = 100;
    std::uint64_t x_seed = 1;
    long x_rec_n = 200;
    auto add_experiment_flags = [&](CLI::App* cmd) {
        cmd->add_option("--config", x_config, "config JSON (flags override)");
        cmd->add_option("--n", x_ns, "sample sizes");
        cmd->add_option("--m", x_ms, "bandwidth orders");
        cmd->add_option("--c", x_cs, "boundary offsets");
        cmd->add_option("--sigma", x_sigma, "kernel width");
        cmd->add_option("--trials", x_trials, "Monte-Carlo trials per cell");
        cmd->add_option("--seed", x_seed, "base seed");
        cmd->add_option("--outdir", x_outdir, "output directory");
        cmd->add_option("--recovery-n", x_rec_n, "recovery demo size");
        cmd->add_option("--recovery-sigma", x_rec_sigma, "recovery demo kernel width");
    };
    auto* c_fig2 = app.add_subcommand("fig2", "bandwidth vs sample size sweep");
    add_experiment_flags(c_fig2);
    auto* c_fig3 = app.add_subcommand("fig3", "bandwidth vs boundary position sweep");
    add_experiment_flags(c_fig3);
    auto* c_rec = app.add_subcommand("recovery-demo", "labeled-set growth until perfect recovery");
    add_experiment_flags(c_rec);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_sample->parsed()) {
            GmmModel model = load_model(s_model);
            PointCloud cloud = sample(model, s_n, s_seed);
            write_file(s_out, points_to_csv(cloud));
            std::cout << json{{"points", s_out}, {"n", s_n}, {"seed", s_seed}}.dump() << "\n";
        } else if (c_graph->parsed()) {
            PointCloud cloud = points_from_csv(read_file(g_points));
            KernelParams kp{g_sigma, cloud.dim()};
            SimilarityGraph g = build_graph(cloud, kp, g_trunc);
            write_file(g_out, graph_to_csv(g));
            std::cout << json{{"graph", g_out}, {"n", g.n}}.dump() << "\n";
        } else if (c_bw->parsed()) {
            PointCloud cloud = points_from_csv(read_file(b_points));
            Hyperplane plane = make_plane(b_normal, b_offset, cloud.dim());
            KernelParams kp{b_sigma, cloud.dim()};
            SimilarityGraph g = build_graph(cloud, kp);
            Vec s = indicator_from_boundary(cloud, plane);
            double omega = bandwidth_estimate(g, s, b_m);
            std::cout << json{{"omega_m", omega}, {"m", b_m}, {"n", g.n}}.dump() << "\n";
        } else if (c_interp->parsed()) {
            PointCloud cloud = points_from_csv(read_file(i_points));
            LabeledSet labeled = labels_from_csv(read_file(i_labels));
            KernelParams kp{i_sigma, cloud.dim()};
            SimilarityGraph g = build_graph(cloud, kp);
            Vec scores;
            json info;
            if (i_method == "harmonic") {
                scores = harmonic_interpolate(g, labeled);
            } else {
                SpectralBasis basis = fourier_basis(g);
                if (i_method == "big-ls") {
                    double omega = i_omega;
                    if (!c_interp->count("--omega")) {
                        omega = cutoff_frequency(g, labeled, kCutoffOrder);
                        info["estimated_omega"] = omega;
                    }
                    scores = interpolate_ls(basis, labeled, omega);
                } else {
                    MinBandwidthResult mb = interpolate_min_bandwidth(basis, labeled);
                    scores = mb.signal;
                    info["omega_min"] = mb.omega_min;
                    info["k"] = mb.k;
                }
            }
            Prediction pred = predict(scores);
            std::string out = "index,score,label\n";
            for (int i = 0; i < scores.size(); ++i)
                out += std::to_string(i) + "," + fmt_full(scores[i]) + "," +
                       std::to_string(static_cast<int>(pred.labels[i])) + "\n";
            write_file(i_out, out);
            info["scores"] = i_out;
            info["method"] = i_method;
            std::cout << info.dump() << "\n";
        } else if (c_lim->parsed()) {
            GmmModel model = load_model(l_model);
            Hyperplane plane = make_plane(l_normal, l_offset, model.dimension);
            json doc;
            doc["limit_bandwidth"] = limit_bandwidth(model, plane);
            doc["region_mass"] = region_mass(model, plane);
            json bias, pred;
            bias["corrected"] = bias_limit(model, plane, l_m, TVariant::corrected);
            pred["corrected"] =
                finite_m_prediction(model, plane, l_m, l_sigma, TVariant::corrected);
            bias["printed"] = bias_limit(model, plane, l_m, TVariant::printed);
            try {
                pred["printed"] =
                    finite_m_prediction(model, plane, l_m, l_sigma, TVariant::printed);
            } catch (const VariantInconsistencyError& e) {
                pred["printed"] = nullptr;
                pred["printed_error"] = e.what();
            }
            doc["bias_limit"] = bias;
            doc["finite_m_prediction"] = pred;
            ConditionReport r = check_conditions(l_n, l_sigma, l_m, model.dimension);
            doc["condition_report"] = {
                {"n", r.n},         {"sigma", r.sigma},
                {"m", r.m},         {"d", r.d},
                {"m_over_n", r.quantity_c3a},
                {"m_sigma_sq", r.quantity_c3b},
                {"inv_sigma_root_m", r.quantity_c4},
                {"c5", r.quantity_c5},
                {"strong_c5", r.strong_c5},
                {"log_c5", r.log_quantity_c5},
                {"log_strong_c5", r.log_strong_c5}};
            std::cout << doc.dump(2) << "\n";
        } else if (c_fig2->parsed() || c_fig3->parsed() || c_rec->parsed()) {
            const ExperimentConfig defaults = c_fig2->parsed()
                                                  ? ExperimentConfig::fig2_defaults()
                                                  : (c_fig3->parsed()
                                                         ? ExperimentConfig::fig3_defaults()
                                                         : ExperimentConfig::recovery_defaults());
            CLI::App* cmd = c_fig2->parsed() ? c_fig2 : (c_fig3->parsed() ? c_fig3 : c_rec);
            ExperimentConfig cfg =
                resolve_config(x_config, defaults, cmd, x_ns, x_ms, x_cs, x_sigma, x_trials,
                               x_seed, x_outdir, x_rec_n, x_rec_sigma);
            fs::create_directories(cfg.outdir);
            json out;
            if (c_fig2->parsed()) {
                SummaryStats stats = run_fig2(cfg);
                std::string csv_path = (fs::path(cfg.outdir) / "fig2.csv").string();
                write_file(csv_path, stats_to_csv(stats));
                out["csv"] = csv_path;
                out["svg"] = json::array();
                for (int m : cfg.ms) {
                    ChartStyle style;
                    style.title = "Empirical bandwidth vs sample size (m = " + std::to_string(m) + ")";
                    style.xlabel = "n";
                    style.filter_m = m;
                    std::string svg_path =
                        (fs::path(cfg.outdir) / ("fig2_m" + std::to_string(m) + ".svg")).string();
                    write_file(svg_path, emit_svg(stats, style));
                    out["svg"].push_back(svg_path);
                }
                out["rows"] = stats.rows.size();
            } else if (c_fig3->parsed()) {
                SummaryStats stats = run_fig3(cfg);
                std::string csv_path = (fs::path(cfg.outdir) / "fig3.csv").string();
                write_file(csv_path, stats_to_csv(stats));
                ChartStyle style;
                style.title = "Empirical bandwidth vs boundary position";
                style.xlabel = "c";
                style.x_is_offset = true;
                std::string svg_path = (fs::path(cfg.outdir) / "fig3.svg").string();
                write_file(svg_path, emit_svg(stats, style));
                out["csv"] = csv_path;
                out["svg"] = json::array({svg_path});
                out["rows"] = stats.rows.size();
            } else {
                RecoveryReport rep = run_recovery_demo(cfg);
                std::string csv_path = (fs::path(cfg.outdir) / "recovery.csv").string();
                std::string svg_path = (fs::path(cfg.outdir) / "recovery.svg").string();
                write_file(csv_path, recovery_to_csv(rep));
                write_file(svg_path, recovery_svg(rep));
                out["csv"] = csv_path;
                out["svg"] = json::array({svg_path});
                out["final_size"] = rep.final_size;
                out["recovered"] = rep.recovered;
            }
            std::cout << out.dump() << "\n";
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }
}
