// Command-line front end: generation, verification, enumeration, and the
// treewidth probe over graph6 corpora.
//
// Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 internal
// invariant violation.

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uniconn/analysis.hpp"
#include "uniconn/canonical.hpp"
#include "uniconn/errors.hpp"
#include "uniconn/extremal.hpp"
#include "uniconn/graph6.hpp"
#include "uniconn/treewidth.hpp"

namespace {

using namespace uniconn;

std::string profile_text(const OperationProfile& p) {
  std::ostringstream s;
  s << "j=" << p.j << ",t=" << p.t << ",p=" << p.p << ",s=" << p.s;
  return s.str();
}

nlohmann::json profile_json(const OperationProfile& p) {
  return {{"n", p.n}, {"k", p.k},       {"ell", p.ell}, {"j", p.j},
          {"t", p.t}, {"p_count", p.p}, {"s_count", p.s}};
}

OperationProfile parse_profile(const std::string& text, int n) {
  std::map<std::string, int> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("profile: expected key=value, got '" + item +
                                  "'");
    }
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("profile: bad count in '" + item + "'");
    }
    if (!vals.emplace(key, value).second) {
      throw std::invalid_argument("profile: repeated key '" + key + "'");
    }
  }
  for (const char* key : {"j", "t", "p", "s"}) {
    if (!vals.count(key)) {
      throw std::invalid_argument(std::string("profile: missing key '") + key +
                                  "'");
    }
  }
  if (vals.size() != 4) {
    throw std::invalid_argument("profile: only keys j, t, p, s are allowed");
  }
  return make_profile(n, vals["j"], vals["t"], vals["p"], vals["s"]);
}

// Ordered map over input lines with a worker pool: results print in input
// order, memory stays bounded by the in-flight window.
template <typename F>
void ordered_lines(std::istream& in, std::ostream& out, int jobs, F process) {
  struct Item {
    std::size_t seq = 0;
    std::size_t lineno = 0;
    std::string text;
  };
  std::mutex mu;
  std::condition_variable cv_work, cv_out, cv_space;
  std::deque<Item> queue;
  std::map<std::size_t, std::string> ready;
  std::optional<std::size_t> total;
  std::size_t next_out = 0;
  std::size_t assigned = 0;
  bool done = false;
  const std::size_t window = static_cast<std::size_t>(jobs) * 4;

  auto worker = [&] {
    for (;;) {
      Item item;
      {
        std::unique_lock lk(mu);
        cv_work.wait(lk, [&] { return done || !queue.empty(); });
        if (queue.empty()) return;
        item = std::move(queue.front());
        queue.pop_front();
      }
      std::string result = process(item.text, item.lineno);
      {
        std::lock_guard lk(mu);
        ready.emplace(item.seq, std::move(result));
      }
      cv_out.notify_all();
    }
  };
  auto printer = [&] {
    std::unique_lock lk(mu);
    for (;;) {
      cv_out.wait(lk, [&] {
        return ready.count(next_out) || (total && next_out == *total);
      });
      if (total && next_out == *total) return;
      auto it = ready.find(next_out);
      if (it == ready.end()) continue;
      out << it->second << "\n";
      ready.erase(it);
      ++next_out;
      cv_space.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  std::thread print_thread(printer);

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::unique_lock lk(mu);
    cv_space.wait(lk, [&] { return assigned - next_out < window; });
    queue.push_back({assigned, lineno, line});
    ++assigned;
    cv_work.notify_one();
  }
  {
    std::lock_guard lk(mu);
    done = true;
    total = assigned;
  }
  cv_work.notify_all();
  cv_out.notify_all();
  for (auto& t : pool) t.join();
  cv_out.notify_all();
  print_thread.join();
}

int run_gen(int n, std::uint64_t seed,
            const std::optional<OperationProfile>& want,
            const std::string& format, int canon_budget, std::ostream& out) {
  GeneratedExtremal made = generate_extremal(n, seed, want);
  const std::string g6 = graph6_encode(made.graph);
  std::string canon;
  std::string canon_note;
  try {
    canon = canonical_graph6(made.graph, canon_budget);
  } catch (const BudgetError& e) {
    canon_note = e.what();
  }
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["seed"] = seed;
    j["n"] = n;
    j["profile"] = profile_json(made.profile);
    j["graph6"] = g6;
    j["canonical"] =
        canon.empty() ? nlohmann::json(nullptr) : nlohmann::json(canon);
    j["recipe"] = recipe_to_text(made.recipe);
    out << j.dump() << "\n";
  } else if (format == "graph6") {
    out << "# uniconn gen n=" << n << " seed=" << seed << " profile "
        << profile_text(made.profile) << "\n";
    out << g6 << "\n";
  } else {
    out << "# uniconn gen n=" << n << " seed=" << seed << " profile "
        << profile_text(made.profile) << "\n";
    out << "# graph6: " << g6 << "\n";
    if (!canon.empty()) {
      out << "# canonical: " << canon << "\n";
    } else if (!canon_note.empty()) {
      out << "# canonical skipped: " << canon_note << "\n";
    }
    out << recipe_to_text(made.recipe);
  }
  return 0;
}

int run_verify(std::istream& in, std::ostream& out, int jobs,
               const AnalyzeOptions& options) {
  std::atomic<bool> any_error{false};
  auto process = [&](const std::string& line, std::size_t lineno) {
    try {
      const Graph g = graph6_decode(line);
      return report_to_json(analyze(g, options));
    } catch (const std::invalid_argument& e) {
      any_error = true;
      nlohmann::json j;
      j["schema"] = 1;
      j["line"] = lineno;
      j["error"] = e.what();
      return j.dump();
    }
  };
  if (jobs <= 1) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      out << process(line, lineno) << "\n";
    }
  } else {
    ordered_lines(in, out, jobs, process);
  }
  return any_error ? 1 : 0;
}

int run_enumerate(int n, std::uint64_t seed, const std::string& format,
                  std::ostream& out) {
  const Enumeration e = enumerate_extremal(n);
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["seed"] = seed;
    j["n"] = e.n;
    j["bound"] = e.bound;
    j["classes"] = e.all.size();
    j["graphs"] = e.all;
    j["by_profile"] = nlohmann::json::array();
    for (const auto& pc : e.by_profile) {
      j["by_profile"].push_back(
          {{"profile", profile_json(pc.profile)}, {"graphs", pc.graphs}});
    }
    out << j.dump() << "\n";
  } else {
    out << "# uniconn enumerate n=" << e.n << " seed=" << seed
        << " bound=" << e.bound << " classes=" << e.all.size() << "\n";
    for (const auto& pc : e.by_profile) {
      out << "# profile " << profile_text(pc.profile)
          << " classes=" << pc.graphs.size() << "\n";
    }
    for (const auto& g6 : e.all) out << g6 << "\n";
  }
  return 0;
}

int run_probe_tw(int n_max, std::uint64_t seed, int jobs, int tw_budget,
                 const std::string& format, std::ostream& out) {
  if (n_max < 4) {
    throw std::invalid_argument("probe-tw: need --n-max >= 4");
  }
  struct Row {
    int n = 0;
    std::size_t classes = 0;
    int max_tw = 0;
  };
  std::vector<Row> rows;
  for (int n = 4; n <= n_max; ++n) {
    const Enumeration e = enumerate_extremal(n);
    std::vector<int> tw(e.all.size(), 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= e.all.size()) return;
        tw[i] = treewidth_exact(graph6_decode(e.all[i]), tw_budget).value;
      }
    };
    if (jobs > 1) {
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    } else {
      work();
    }
    Row row{n, e.all.size(), 0};
    for (int value : tw) row.max_tw = std::max(row.max_tw, value);
    rows.push_back(row);
  }
  bool all_ok = true;
  for (const Row& r : rows) all_ok = all_ok && r.max_tw <= 13;
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["seed"] = seed;
    j["rows"] = nlohmann::json::array();
    for (const Row& r : rows) {
      j["rows"].push_back(
          {{"n", r.n}, {"classes", r.classes}, {"max_treewidth", r.max_tw}});
    }
    j["all_within_bound"] = all_ok;
    out << j.dump() << "\n";
  } else {
    out << "# uniconn probe-tw seed=" << seed << "\n";
    out << "n classes max_treewidth\n";
    for (const Row& r : rows) {
      out << r.n << " " << r.classes << " " << r.max_tw << "\n";
    }
  }
  if (!all_ok) {
    throw std::logic_error("probe-tw: treewidth bound 13 violated");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uniformly 3-connected graph toolkit"};
  app.require_subcommand(1);

  int n = 0;
  int n_max = 13;
  std::uint64_t seed = 0;
  std::string profile_arg;
  int jobs = 1;
  std::string format;
  int tw_budget = kDefaultTreewidthBudget;
  int canon_budget = kDefaultCanonicalBudget;
  int crossing_budget = kDefaultCrossingBudget;
  std::string out_path;
  std::string input = "-";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker count (default 1)")
        ->envname("UNICONN_JOBS");
    cmd->add_option("--tw-budget", tw_budget, "treewidth size budget");
    cmd->add_option("--canon-budget", canon_budget,
                    "canonical form size budget");
    cmd->add_option("--crossing-budget", crossing_budget,
                    "crossing sweep size budget");
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  CLI::App* gen = app.add_subcommand(
      "gen", "generate a random extremal graph with its recipe");
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--seed", seed, "64-bit random seed");
  gen->add_option("--profile", profile_arg,
                  "operation counts j=..,t=..,p=..,s=..");
  gen->add_option("--format", format, "text | graph6 | json")
      ->check(CLI::IsMember({"text", "graph6", "json"}));
  add_common(gen);

  CLI::App* verify = app.add_subcommand(
      "verify", "analyze graph6 lines into JSON reports");
  verify->add_option("input", input, "graph6 file, or - for stdin");
  add_common(verify);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list all extremal graphs on n vertices");
  enumerate->add_option("--n", n, "vertex count")->required();
  enumerate->add_option("--seed", seed, "echoed into the header");
  enumerate->add_option("--format", format, "text | graph6 | json")
      ->check(CLI::IsMember({"text", "graph6", "json"}));
  add_common(enumerate);

  CLI::App* probe = app.add_subcommand(
      "probe-tw", "empirical max treewidth over extremal graphs per n");
  probe->add_option("--n-max", n_max, "largest n to enumerate (<= 13)");
  probe->add_option("--seed", seed, "echoed into the header");
  probe->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  add_common(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) {
      std::cerr << "uniconn: cannot open output file '" << out_path << "'\n";
      return 1;
    }
    out = &file_out;
  }

  try {
    if (gen->parsed()) {
      std::optional<OperationProfile> want;
      if (!profile_arg.empty()) want = parse_profile(profile_arg, n);
      return run_gen(n, seed, want, format.empty() ? "text" : format,
                     canon_budget, *out);
    }
    if (verify->parsed()) {
      AnalyzeOptions options;
      options.treewidth_budget = tw_budget;
      options.crossing_budget = crossing_budget;
      std::ifstream file_in;
      std::istream* in = &std::cin;
      if (input != "-") {
        file_in.open(input);
        if (!file_in) {
          std::cerr << "uniconn: cannot open input file '" << input << "'\n";
          return 1;
        }
        in = &file_in;
      }
      return run_verify(*in, *out, jobs, options);
    }
    if (enumerate->parsed()) {
      return run_enumerate(n, seed, format.empty() ? "graph6" : format, *out);
    }
    if (probe->parsed()) {
      return run_probe_tw(n_max, seed, jobs, tw_budget,
                          format.empty() ? "text" : format, *out);
    }
  } catch (const BudgetError& e) {
    std::cerr << "uniconn: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "uniconn: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "uniconn: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "uniconn: unexpected error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
