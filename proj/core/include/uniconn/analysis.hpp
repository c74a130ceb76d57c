#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniconn/constructions.hpp"
#include "uniconn/graph.hpp"
#include "uniconn/planarity.hpp"
#include "uniconn/treewidth.hpp"

namespace uniconn {

struct AnalyzeOptions {
  bool with_crossing = true;
  bool with_treewidth = true;
  bool with_unsafe = true;
  int treewidth_budget = kDefaultTreewidthBudget;
  int crossing_budget = kDefaultCrossingBudget;
  // Construction counters when the caller built the graph itself; analyze
  // cannot recover them from the graph alone.
  std::optional<OperationProfile> profile;
};

// Per-graph certificate bundle.  Optional fields are null exactly when their
// computation was skipped for budget reasons; `skipped` names each with the
// reason.
struct AnalysisReport {
  std::string graph6;
  int n = 0;
  int min_degree = 0;
  int nu = 0;
  std::optional<int> uniform_k;  // the common local connectivity, if uniform
  bool extremal = false;
  std::optional<OperationProfile> profile;
  std::optional<CrossingCertificate> crossing;
  std::optional<int> treewidth;
  std::optional<std::vector<VertexId>> unsafe_vertices;
  std::vector<std::string> skipped;
};

// Deterministic given (g, options).  Budget overruns never throw; the field
// stays null and the reason lands in `skipped`.
AnalysisReport analyze(const Graph& g, const AnalyzeOptions& options = {});

// Cross-checks the fields against each other and against the graph decoded
// from the report's own graph6 text.
bool report_consistent(const AnalysisReport& report);

std::string report_to_json(const AnalysisReport& report, bool pretty = false);
AnalysisReport report_from_json(const std::string& text);

}  // namespace uniconn
