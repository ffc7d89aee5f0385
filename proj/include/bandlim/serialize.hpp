#pragma once

#include <string>
#include <vector>

#include "bandlim/types.hpp"

namespace bandlim {

// shortest-round-trip decimal text (17 significant digits)
std::string fmt_full(double x);
// fixed significant digits
std::string fmt_sig(double x, int digits);

// --- point clouds: headerless CSV, one point per row -----------------------
std::string points_to_csv(const PointCloud& cloud);
PointCloud points_from_csv(const std::string& text);

// --- labels: "index,value" rows ---------------------------------------------
std::string labels_to_csv(const LabeledSet& labeled);
LabeledSet labels_from_csv(const std::string& text);

// --- graphs: one JSON header line, then "i,j,w" upper-triangle rows --------
std::string graph_to_csv(const SimilarityGraph& graph);
SimilarityGraph graph_from_csv(const std::string& text);

// --- mixture models: JSON document ------------------------------------------
std::string model_to_json(const GmmModel& model);
GmmModel model_from_json(const std::string& text);

// --- files -------------------------------------------------------------------
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bandlim
