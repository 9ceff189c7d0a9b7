#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "apsp/io.hpp"
#include "test_util.hpp"

// End-to-end runs of the installed binary (path injected by the build).

namespace fs = std::filesystem;
using nlohmann::json;
using namespace apsp;
using namespace apsp::testing;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "apsp_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = {}) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const fs::path err_file = work_dir() / "stderr.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + APSP_CLI_PATH + " " + args +
                          " > " + out_file.string() + " 2> " + err_file.string();
  const int status = std::system(cmd.c_str());
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli gen writes a parseable graph and reports m and seed") {
  const std::string out = (work_dir() / "g16.gr").string();
  const RunResult r = run_cli("gen --n 16 --m 40 --seed 3 --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "m=40 seed=3\n");

  std::ifstream in(out);
  const EdgeListGraph g = read_edge_list(in);
  CHECK(g.vertex_count() == 16);
  CHECK(g.edge_count() == 40);

  // Same seed, byte-identical file.
  const std::string out2 = (work_dir() / "g16b.gr").string();
  run_cli("gen --n 16 --m 40 --seed 3 --out " + out2);
  CHECK(read_file(out) == read_file(out2));
}

TEST_CASE("cli gen regime form") {
  const std::string out = (work_dir() / "gr.gr").string();
  const RunResult r = run_cli("gen --n 64 --regime n-half --seed 1 --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "m=32 seed=1\n");
}

TEST_CASE("cli gen rejects impossible edge counts") {
  const std::string out = (work_dir() / "bad.gr").string();
  const RunResult r = run_cli("gen --n 4 --m 99 --seed 0 --out " + out);
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run_cli("gen").exit_code == 2);              // missing required options
  CHECK(run_cli("frobnicate").exit_code == 2);       // unknown subcommand
  CHECK(run_cli("").exit_code == 2);                 // subcommand required
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli solve on the worked example") {
  const std::string matrix = write_file("example5.txt", example5_legacy_text());

  SUBCASE("improved min-product with stats") {
    const std::string out = (work_dir() / "solved.txt").string();
    const RunResult r =
        run_cli("solve --algo fw-improved --order minprod --matrix " + matrix +
                " --stats --out " + out);
    REQUIRE(r.exit_code == 0);

    std::istringstream solved(read_file(out));
    CHECK(read_matrix(solved, InfinityMode::canonical()) == example5_final());

    const json stats = json::parse(r.out);
    CHECK(stats["algorithm"] == "fw-improved-minprod");
    CHECK(stats["attempts_total"] == 46);
    CHECK(stats["useless_attempts"] == 0);
    CHECK(stats["k_order"] == json::array({5, 3, 1, 2, 4}));
    CHECK(stats["attempts_per_iteration"] == json::array({2, 4, 8, 16, 16}));
  }

  SUBCASE("classic fw attempts") {
    const RunResult r = run_cli("solve --algo fw --matrix " + matrix + " --stats");
    REQUIRE(r.exit_code == 0);
    // Matrix goes to stdout first, then the stats line.
    const auto last_newline = r.out.rfind('\n', r.out.size() - 2);
    const json stats = json::parse(r.out.substr(last_newline + 1));
    CHECK(stats["attempts_total"] == 125);
    std::istringstream matrix_text(r.out.substr(0, last_newline + 1));
    CHECK(read_matrix(matrix_text, InfinityMode::canonical()) == example5_final());
  }

  SUBCASE("dijkstra rejects the negative weights") {
    const RunResult r = run_cli("solve --algo dijkstra --matrix " + matrix);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("negative edge") != std::string::npos);
  }

  SUBCASE("johnson handles them") {
    const RunResult r = run_cli("solve --algo johnson --matrix " + matrix);
    REQUIRE(r.exit_code == 0);
    std::istringstream solved(r.out);
    CHECK(read_matrix(solved, InfinityMode::canonical()) == example5_final());
  }
}

TEST_CASE("cli solve from an edge-list file") {
  const std::string graph = (work_dir() / "solve_in.gr").string();
  run_cli("gen --n 12 --regime 2n --seed 9 --wmin 1 --wmax 9 --out " + graph);
  const RunResult fw = run_cli("solve --algo fw --edges " + graph);
  const RunResult dij = run_cli("solve --algo dijkstra --edges " + graph);
  REQUIRE(fw.exit_code == 0);
  REQUIRE(dij.exit_code == 0);
  CHECK(fw.out == dij.out);
}

TEST_CASE("cli solve reports negative cycles") {
  const std::string matrix = write_file("cycle.txt", "2\n0 1\n-3 0\n");
  const RunResult r = run_cli("solve --algo fw --matrix " + matrix);
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("negative cycle") != std::string::npos);
}

TEST_CASE("cli verify") {
  const RunResult r = run_cli("verify --n 16 --trials 4 --seed-base 42");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("4/4 agree") != std::string::npos);

  const RunResult neg = run_cli("verify --n 12 --trials 3 --negative --seed-base 7");
  CHECK(neg.exit_code == 0);
  CHECK(neg.out.find("dijkstra: skipped") != std::string::npos);
  CHECK(neg.out.find("3/3 agree") != std::string::npos);

  const RunResult one = run_cli("verify --n 1 --trials 1 --seed-base 0");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("1/1 agree") != std::string::npos);
}

TEST_CASE("cli verify honors APSP_SEED") {
  const RunResult via_env = run_cli("verify --n 8 --trials 2 --seed-base 1", "APSP_SEED=99");
  const RunResult via_flag = run_cli("verify --n 8 --trials 2 --seed-base 99");
  CHECK(via_env.exit_code == 0);
  CHECK(via_env.out == via_flag.out);
}

TEST_CASE("cli bench single-algorithm run") {
  const std::string csv = (work_dir() / "bench.csv").string();
  const RunResult r = run_cli("bench --n 16 --regimes n --trials 1 --algos fw --csv " +
                              csv + " --quiet");
  REQUIRE(r.exit_code == 0);

  std::istringstream rows(read_file(csv));
  std::string header, row, extra;
  REQUIRE(std::getline(rows, header));
  REQUIRE(std::getline(rows, row));
  CHECK(!std::getline(rows, extra));
  CHECK(row.starts_with("fw,16,16,n,0,"));
  CHECK(row.ends_with(",100.0000"));

  // Table goes to stdout.
  CHECK(r.out.find("| fw |") != std::string::npos);
  CHECK(r.out.find("100.0%") != std::string::npos);
}

TEST_CASE("cli bench validates algorithm names") {
  const RunResult r = run_cli("bench --n 8 --trials 1 --algos warshall --quiet");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("unknown algorithm") != std::string::npos);
}
