#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "uniconn/canonical.hpp"
#include "uniconn/constructions.hpp"
#include "uniconn/extremal.hpp"
#include "uniconn/graph.hpp"
#include "uniconn/graph6.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the installed CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const char* path = std::getenv("UNICONN_CLI_PATH");
  REQUIRE_MESSAGE(path != nullptr, "UNICONN_CLI_PATH must point at the CLI");
  const std::string cmd = std::string(path) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) {
    r.output.append(buf, got);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen base case") {
    const RunResult r = run_cli("gen --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("C~") != std::string::npos);
    CHECK(r.output.find("BASE C~") != std::string::npos);
  }

  TEST_CASE("gen output replays to the requested graph") {
    const RunResult r = run_cli("gen --n 10 --seed 7 --profile j=1,t=1,p=2,s=0");
    REQUIRE(r.exit_code == 0);
    std::string recipe_text;
    std::string promised_g6;
    for (const std::string& line : lines_of(r.output)) {
      if (line.rfind("# graph6: ", 0) == 0) {
        promised_g6 = line.substr(10);
      }
      if (line.empty() || line[0] == '#') continue;
      recipe_text += line + "\n";
    }
    REQUIRE(!promised_g6.empty());
    const uniconn::ReplayResult rr =
        uniconn::replay(uniconn::recipe_from_text(recipe_text));
    CHECK(rr.graph.vertex_count() == 10);
    CHECK(rr.profile.j == 1);
    CHECK(rr.profile.t == 1);
    CHECK(rr.profile.p == 2);
    CHECK(rr.profile.s == 0);
    CHECK(uniconn::graph6_encode(rr.graph) == promised_g6);
  }

  TEST_CASE("gen is deterministic in the seed") {
    const RunResult a = run_cli("gen --n 11 --seed 42");
    const RunResult b = run_cli("gen --n 11 --seed 42");
    const RunResult c = run_cli("gen --n 11 --seed 43");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output != c.output);
  }

  TEST_CASE("gen rejects an infeasible profile") {
    const RunResult r = run_cli("gen --n 10 --seed 1 --profile j=3,t=0,p=2,s=0");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("j=1,t=1,p=2,s=0") != std::string::npos);
    CHECK(r.output.find("j=2,t=0,p=2,s=0") != std::string::npos);
    CHECK(r.output.find("j=1,t=0,p=2,s=2") != std::string::npos);
  }

  TEST_CASE("gen json format") {
    const RunResult r = run_cli("gen --n 6 --seed 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"schema\":1") != std::string::npos);
    CHECK(r.output.find("\"graph6\"") != std::string::npos);
    CHECK(r.output.find("\"recipe\"") != std::string::npos);
  }

  TEST_CASE("enumerate matches the library") {
    const RunResult r = run_cli("enumerate --n 5");
    CHECK(r.exit_code == 0);
    const std::string want = uniconn::canonical_graph6(uniconn::wheel(5));
    bool found = false;
    int data_lines = 0;
    for (const std::string& line : lines_of(r.output)) {
      if (line.empty() || line[0] == '#') continue;
      ++data_lines;
      if (line == want) found = true;
    }
    CHECK(found);
    CHECK(data_lines == 1);
  }

  TEST_CASE("enumerate beyond the budget exits two") {
    const RunResult r = run_cli("enumerate --n 14");
    CHECK(r.exit_code == 2);
  }

  TEST_CASE("verify reports per line and flags bad input") {
    const fs::path in = temp_file("uniconn_cli_verify.g6", "C~\nBw\n!!\n");
    const RunResult r = run_cli("verify " + in.string());
    fs::remove(in);
    CHECK(r.exit_code == 1);
    const auto ls = lines_of(r.output);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].find("\"graph6\":\"C~\"") != std::string::npos);
    CHECK(ls[0].find("\"extremal\":true") != std::string::npos);
    CHECK(ls[2].find("\"line\":3") != std::string::npos);
    CHECK(ls[2].find("\"error\"") != std::string::npos);
  }

  TEST_CASE("verify accepts comments and succeeds on clean input") {
    const fs::path in =
        temp_file("uniconn_cli_clean.g6", "# corpus\nC~\n\nD]{\n");
    const RunResult r = run_cli("verify " + in.string());
    fs::remove(in);
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.output).size() == 2);
  }

  TEST_CASE("parallel verify output matches sequential byte for byte") {
    const uniconn::Enumeration e = uniconn::enumerate_extremal(9);
    std::string corpus;
    for (const std::string& g : e.all) corpus += g + "\n";
    const fs::path in = temp_file("uniconn_cli_par.g6", corpus);
    const RunResult seq = run_cli("verify --jobs 1 " + in.string());
    const RunResult par = run_cli("verify --jobs 4 " + in.string());
    fs::remove(in);
    CHECK(seq.exit_code == 0);
    CHECK(par.exit_code == 0);
    CHECK(seq.output == par.output);
    CHECK(lines_of(seq.output).size() == e.all.size());
  }

  TEST_CASE("jobs can come from the environment") {
    const fs::path in = temp_file("uniconn_cli_env.g6", "C~\nD]{\n");
    const RunResult seq = run_cli("verify --jobs 1 " + in.string());
    const char* cli = std::getenv("UNICONN_CLI_PATH");
    REQUIRE(cli != nullptr);
    const std::string cmd = std::string("UNICONN_JOBS=3 ") + cli + " verify " +
                            in.string() + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) {
      out.append(buf, got);
    }
    const int status = pclose(pipe);
    fs::remove(in);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out == seq.output);
  }

  TEST_CASE("output lands in the file named by --out") {
    const fs::path out = fs::temp_directory_path() / "uniconn_cli_out.txt";
    fs::remove(out);
    const RunResult r = run_cli("gen --n 5 --seed 2 --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream f(out);
    REQUIRE(f.good());
    std::stringstream buffer;
    buffer << f.rdbuf();
    CHECK(buffer.str().find("BASE") != std::string::npos);
    f.close();
    fs::remove(out);
  }

  TEST_CASE("treewidth probe prints the bounded table") {
    const RunResult r = run_cli("probe-tw --n-max 6");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.output);
    bool header = false;
    int rows = 0;
    for (const std::string& line : ls) {
      if (line.find("n classes max_treewidth") != std::string::npos) {
        header = true;
      }
      if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) {
        ++rows;
      }
    }
    CHECK(header);
    CHECK(rows == 3);
    CHECK(r.output.find("4 1 3") != std::string::npos);
    CHECK(r.output.find("5 1 3") != std::string::npos);
    CHECK(r.output.find("6 1 3") != std::string::npos);
  }

  TEST_CASE("usage errors exit one") {
    CHECK(run_cli("gen").exit_code == 1);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("gen --n 3").exit_code == 1);
    CHECK(run_cli("gen --n 10 --profile j=1").exit_code == 1);
  }
}
