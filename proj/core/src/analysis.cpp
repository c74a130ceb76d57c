#include "uniconn/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "uniconn/connectivity.hpp"
#include "uniconn/errors.hpp"
#include "uniconn/extremal.hpp"
#include "uniconn/graph6.hpp"

namespace uniconn {

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& options) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("analyze: empty graph");
  }
  AnalysisReport r;
  r.graph6 = graph6_encode(g);
  r.n = g.vertex_count();
  r.min_degree = g.min_degree();
  r.nu = nu(g);
  r.profile = options.profile;

  if (r.n >= 2) {
    const ConnectivityProfile cp = connectivity_profile(g);
    if (cp.min_value == cp.max_value) r.uniform_k = cp.min_value;
  }
  r.extremal =
      r.uniform_k == 3 && r.n >= 4 && r.nu == extremal_bound(r.n);

  if (options.with_crossing) {
    try {
      r.crossing = crossing_le_one(g, options.crossing_budget);
    } catch (const BudgetError& e) {
      r.skipped.push_back(std::string("crossing: ") + e.what());
    }
  }
  if (options.with_treewidth) {
    try {
      r.treewidth = treewidth_exact(g, options.treewidth_budget).value;
    } catch (const BudgetError& e) {
      r.skipped.push_back(std::string("treewidth: ") + e.what());
    }
  }
  if (options.with_unsafe) {
    try {
      std::vector<VertexId> unsafe;
      for (VertexId v = 0; v < r.n; ++v) {
        if (g.degree(v) == 3 &&
            !is_safe_vertex(g, v, options.treewidth_budget)) {
          unsafe.push_back(v);
        }
      }
      r.unsafe_vertices = std::move(unsafe);
    } catch (const BudgetError& e) {
      r.skipped.push_back(std::string("unsafe_vertices: ") + e.what());
    }
  }
  return r;
}

bool report_consistent(const AnalysisReport& r) {
  Graph g;
  try {
    g = graph6_decode(r.graph6);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (g.vertex_count() != r.n || g.vertex_count() == 0) return false;
  if (g.min_degree() != r.min_degree || nu(g) != r.nu) return false;
  if (r.nu < 1 || r.nu > r.n) return false;
  if (r.uniform_k && *r.uniform_k > 0 && r.min_degree < *r.uniform_k) {
    return false;
  }
  if (r.extremal) {
    if (r.uniform_k != 3) return false;
    if (r.n < 4 || r.nu != extremal_bound(r.n)) return false;
  }
  if (r.profile) {
    const auto& p = *r.profile;
    if (p.n != r.n || p.n != 3 * p.k + p.ell) return false;
    if (p.n != 4 + 2 * p.j + 2 * p.t + p.p + p.s) return false;
  }
  if (r.crossing) {
    const int m = g.edge_count();
    if (r.crossing->kind == CrossingKind::Planar && r.n >= 3 &&
        m > 3 * r.n - 6) {
      return false;
    }
    if ((r.crossing->kind == CrossingKind::OneCrossing) !=
        r.crossing->pair.has_value()) {
      return false;
    }
    if (r.crossing->pair) {
      const auto& [e, f] = *r.crossing->pair;
      if (!g.has_edge(e.u, e.v) || !g.has_edge(f.u, f.v)) return false;
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) return false;
    }
  }
  if (r.treewidth && (*r.treewidth < 0 || *r.treewidth >= r.n)) return false;
  if (r.unsafe_vertices) {
    for (VertexId v : *r.unsafe_vertices) {
      if (!g.has_vertex(v) || g.degree(v) != 3) return false;
    }
  }
  return true;
}

namespace {

nlohmann::json profile_json(const OperationProfile& p) {
  return {{"n", p.n}, {"k", p.k},       {"ell", p.ell}, {"j", p.j},
          {"t", p.t}, {"p_count", p.p}, {"s_count", p.s}};
}

OperationProfile profile_from(const nlohmann::json& j) {
  OperationProfile p;
  p.n = j.at("n").get<int>();
  p.k = j.at("k").get<int>();
  p.ell = j.at("ell").get<int>();
  p.j = j.at("j").get<int>();
  p.t = j.at("t").get<int>();
  p.p = j.at("p_count").get<int>();
  p.s = j.at("s_count").get<int>();
  return p;
}

const char* crossing_name(CrossingKind k) {
  switch (k) {
    case CrossingKind::Planar:
      return "planar";
    case CrossingKind::OneCrossing:
      return "one";
    case CrossingKind::AtLeastTwo:
      return "ge2";
  }
  throw std::logic_error("crossing_name: bad kind");
}

CrossingKind crossing_kind(const std::string& name) {
  if (name == "planar") return CrossingKind::Planar;
  if (name == "one") return CrossingKind::OneCrossing;
  if (name == "ge2") return CrossingKind::AtLeastTwo;
  throw std::invalid_argument("report_from_json: bad crossing kind '" + name +
                              "'");
}

}  // namespace

std::string report_to_json(const AnalysisReport& r, bool pretty) {
  nlohmann::json j;
  j["schema"] = 1;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["min_degree"] = r.min_degree;
  j["nu"] = r.nu;
  j["uniform_k"] = r.uniform_k ? nlohmann::json(*r.uniform_k)
                               : nlohmann::json(nullptr);
  j["extremal"] = r.extremal;
  j["profile"] =
      r.profile ? profile_json(*r.profile) : nlohmann::json(nullptr);
  if (r.crossing) {
    j["crossing"] = crossing_name(r.crossing->kind);
    if (r.crossing->pair) {
      const auto& [e, f] = *r.crossing->pair;
      j["pair"] = {{e.u, e.v}, {f.u, f.v}};
    }
  } else {
    j["crossing"] = nullptr;
  }
  j["treewidth"] =
      r.treewidth ? nlohmann::json(*r.treewidth) : nlohmann::json(nullptr);
  j["unsafe_vertices"] = r.unsafe_vertices
                             ? nlohmann::json(*r.unsafe_vertices)
                             : nlohmann::json(nullptr);
  j["skipped"] = r.skipped;
  return pretty ? j.dump(2) : j.dump();
}

AnalysisReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report_from_json: ") + e.what());
  }
  AnalysisReport r;
  try {
    if (j.at("schema").get<int>() != 1) {
      throw std::invalid_argument("report_from_json: unknown schema version");
    }
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.min_degree = j.at("min_degree").get<int>();
    r.nu = j.at("nu").get<int>();
    if (!j.at("uniform_k").is_null()) r.uniform_k = j["uniform_k"].get<int>();
    r.extremal = j.at("extremal").get<bool>();
    if (!j.at("profile").is_null()) r.profile = profile_from(j["profile"]);
    if (!j.at("crossing").is_null()) {
      CrossingCertificate c;
      c.kind = crossing_kind(j["crossing"].get<std::string>());
      if (j.contains("pair")) {
        const auto& p = j["pair"];
        c.pair = {Edge(p.at(0).at(0).get<int>(), p.at(0).at(1).get<int>()),
                  Edge(p.at(1).at(0).get<int>(), p.at(1).at(1).get<int>())};
      }
      r.crossing = c;
    }
    if (!j.at("treewidth").is_null()) r.treewidth = j["treewidth"].get<int>();
    if (!j.at("unsafe_vertices").is_null()) {
      r.unsafe_vertices = j["unsafe_vertices"].get<std::vector<VertexId>>();
    }
    r.skipped = j.at("skipped").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report_from_json: ") + e.what());
  }
  return r;
}

}  // namespace uniconn
