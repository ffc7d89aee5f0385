#include "bandlim/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bandlim/errors.hpp"

namespace bandlim {

using nlohmann::json;

std::string fmt_full(double x) { return fmt_sig(x, 17); }

std::string fmt_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

std::string points_to_csv(const PointCloud& cloud) {
    std::string out;
    out.reserve(static_cast<size_t>(cloud.n()) * cloud.dim() * 20);
    for (int i = 0; i < cloud.n(); ++i) {
        for (int j = 0; j < cloud.dim(); ++j) {
            if (j) out += ',';
            out += fmt_full(cloud.points(i, j));
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<double> parse_row(const std::string& line, int lineno) {
    std::vector<double> row;
    size_t pos = 0;
    while (pos <= line.size()) {
        size_t comma = line.find(',', pos);
        std::string cell = line.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            size_t used = 0;
            row.push_back(std::stod(cell, &used));
        } catch (const std::exception&) {
            throw InvalidInputError("unparseable number '" + cell + "' on line " +
                                    std::to_string(lineno));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return row;
}

}  // namespace

PointCloud points_from_csv(const std::string& text) {
    PointCloud cloud;
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        rows.push_back(parse_row(line, lineno));
        if (rows.size() > 1 && rows.back().size() != rows.front().size())
            throw InvalidInputError("ragged point rows at line " + std::to_string(lineno));
    }
    if (rows.empty()) throw InvalidInputError("empty point cloud file");
    cloud.points.resize(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.front().size(); ++j) cloud.points(i, j) = rows[i][j];
    return cloud;
}

std::string labels_to_csv(const LabeledSet& labeled) {
    std::string out = "index,value\n";
    for (size_t r = 0; r < labeled.indices.size(); ++r) {
        out += std::to_string(labeled.indices[r]);
        out += ',';
        out += fmt_full(labeled.values[r]);
        out += '\n';
    }
    return out;
}

LabeledSet labels_from_csv(const std::string& text) {
    LabeledSet ls;
    std::istringstream in(text);
    std::string line;
    std::vector<double> vals;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("index", 0) == 0) continue;  // optional header
        auto row = parse_row(line, lineno);
        if (row.size() != 2)
            throw InvalidInputError("label rows need exactly index,value (line " +
                                    std::to_string(lineno) + ")");
        ls.indices.push_back(static_cast<int>(row[0]));
        vals.push_back(row[1]);
    }
    ls.values = Eigen::Map<Vec>(vals.data(), vals.size());
    return ls;
}

std::string graph_to_csv(const SimilarityGraph& graph) {
    json header = {{"n", graph.n}, {"sigma", graph.sigma}, {"truncation", graph.truncation}};
    std::string out = header.dump();
    out += '\n';
    for (int i = 0; i < graph.n; ++i)
        for (int j = i + 1; j < graph.n; ++j) {
            if (graph.W(i, j) == 0.0) continue;
            out += std::to_string(i);
            out += ',';
            out += std::to_string(j);
            out += ',';
            out += fmt_full(graph.W(i, j));
            out += '\n';
        }
    return out;
}

SimilarityGraph graph_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInputError("empty graph file");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("bad graph header: ") + e.what());
    }
    SimilarityGraph g;
    g.n = header.at("n").get<int>();
    g.sigma = header.at("sigma").get<double>();
    g.truncation = header.value("truncation", 0.0);
    if (g.n < 2) throw InvalidInputError("graph header has n < 2");
    g.W = Mat::Zero(g.n, g.n);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto row = parse_row(line, lineno);
        if (row.size() != 3)
            throw InvalidInputError("edge rows need i,j,w (line " + std::to_string(lineno) + ")");
        int i = static_cast<int>(row[0]), j = static_cast<int>(row[1]);
        if (i < 0 || j < 0 || i >= g.n || j >= g.n || i >= j)
            throw InvalidInputError("edge endpoints out of order on line " +
                                    std::to_string(lineno));
        g.W(i, j) = row[2];
        g.W(j, i) = row[2];
    }
    g.D = g.W.rowwise().sum();
    return g;
}

std::string model_to_json(const GmmModel& model) {
    json comps = json::array();
    for (const auto& c : model.components) {
        json mean = json::array();
        for (int j = 0; j < c.mean.size(); ++j) mean.push_back(c.mean[j]);
        comps.push_back({{"mean", mean}, {"variance", c.variance}, {"weight", c.weight}});
    }
    json doc = {{"dimension", model.dimension}, {"components", comps}};
    return doc.dump(2) + "\n";
}

GmmModel model_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("bad model JSON: ") + e.what());
    }
    GmmModel m;
    try {
        m.dimension = doc.at("dimension").get<int>();
        for (const auto& c : doc.at("components")) {
            GmmComponent comp;
            auto mean = c.at("mean");
            comp.mean = Vec(mean.size());
            for (size_t j = 0; j < mean.size(); ++j) comp.mean[j] = mean[j].get<double>();
            comp.variance = c.at("variance").get<double>();
            comp.weight = c.at("weight").get<double>();
            m.components.push_back(std::move(comp));
        }
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("bad model JSON: ") + e.what());
    }
    m.validate();
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write " + path);
    out << content;
}

}  // namespace bandlim
