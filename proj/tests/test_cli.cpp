#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "charnet/csv.hpp"
#include "charnet/extract.hpp"
#include "charnet/genmodels.hpp"
#include "charnet/gexf.hpp"
#include "charnet/graph.hpp"

using namespace charnet;
namespace fs = std::filesystem;

namespace {

const std::string kCli = CHARNET_CLI_PATH;
const std::string kFixtures = FIXTURE_DIR;

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("charnet_cli_test_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
  int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("extract writes CSVs that reload to the pipeline graph") {
  TempDir dir;
  int code = run("extract " + kFixtures + "/story.txt " + kFixtures + "/aliases.csv --out-nodes " +
                 dir.file("nodes.csv") + " --out-edges " + dir.file("edges.csv") + " --gexf " +
                 dir.file("net.gexf"));
  REQUIRE(code == 0);

  Graph expected = extract_pipeline(read_file(kFixtures + "/story.txt"),
                                    AliasTable::from_csv_file(kFixtures + "/aliases.csv"), {15});
  Graph loaded = load_edge_csv(dir.file("nodes.csv"), dir.file("edges.csv"));
  REQUIRE(loaded.node_count() == expected.node_count());
  REQUIRE(loaded.edge_count() == expected.edge_count());
  for (std::size_t i = 0; i < loaded.edge_count(); ++i) {
    CHECK(loaded.edges()[i].u == expected.edges()[i].u);
    CHECK(loaded.edges()[i].weight == expected.edges()[i].weight);
  }
  for (int v = 0; v < loaded.node_count(); ++v) CHECK(loaded.label(v) == expected.label(v));

  Graph via_gexf = read_gexf(read_file(dir.file("net.gexf")));
  CHECK(via_gexf.edge_count() == expected.edge_count());
}

TEST_CASE("generate emits loadable numbered samples") {
  TempDir dir;
  write_file(dir.file("target.csv"), edge_csv(gen_er(15, 0.4, 3)));
  int code = run("generate --model er --match " + dir.file("target.csv") +
                 " --seed 4 --count 2 --out-dir " + (dir.path / "out").string());
  REQUIRE(code == 0);
  Graph a = load_edge_csv((dir.path / "out" / "nodes.csv").string(),
                          (dir.path / "out" / "er_000.csv").string());
  CHECK(a.node_count() == 15);
  Graph b = load_edges_only((dir.path / "out" / "er_001.csv").string());
  CHECK(b.edge_count() > 0);
}

TEST_CASE("analyze writes one row per node") {
  TempDir dir;
  write_file(dir.file("edges.csv"), edge_csv(gen_er(12, 0.4, 8)));
  REQUIRE(run("analyze " + dir.file("edges.csv") + " --out-dir " + (dir.path / "an").string()) == 0);
  for (const char* f : {"pagerank.csv", "closeness.csv", "communities.csv"}) {
    auto rows = read_csv_file((dir.path / "an" / f).string());
    CHECK(rows.size() == 13);  // header + 12 nodes
  }
}

TEST_CASE("select batch aggregates counts per classifier") {
  TempDir dir;
  fs::create_directories(dir.path / "batch");
  for (int i = 0; i < 2; ++i)
    write_file((dir.path / "batch" / ("g" + std::to_string(i) + ".csv")).string(),
               edge_csv(gen_er(18, 0.35, 50 + i)));
  REQUIRE(run("select --batch " + (dir.path / "batch").string() + " --seed 6 --samples 12 --out " +
              dir.file("agg.csv")) == 0);
  auto rows = read_csv_file(dir.file("agg.csv"));
  REQUIRE(rows.size() == 5);  // header + 4 classifiers
  for (std::size_t r = 1; r < rows.size(); ++r) {
    long sum = 0;
    for (int c = 1; c <= 4; ++c) sum += std::strtol(rows[r][c].c_str(), nullptr, 10);
    CHECK(sum == 2);  // every file got exactly one selection per classifier
  }
}

TEST_CASE("exit codes") {
  SUBCASE("usage error") { CHECK(run("frobnicate") == 2); }
  SUBCASE("missing file is a data error") { CHECK(run("stats /nonexistent/edges.csv") == 3); }
  SUBCASE("malformed CSV is a data error") {
    TempDir dir;
    write_file(dir.file("bad.csv"), "not,a,header\n1,2,3\n");
    CHECK(run("stats " + dir.file("bad.csv")) == 3);
  }
  SUBCASE("missing alias file") {
    CHECK(run("extract " + kFixtures + "/story.txt /nonexistent/aliases.csv") == 3);
  }
  SUBCASE("graph too small for selection") {
    TempDir dir;
    write_file(dir.file("tiny.csv"), "Source,Target,Weight\n0,1,1\n");
    CHECK(run("select " + dir.file("tiny.csv") + " --samples 12") == 3);
  }
}

TEST_CASE("CHARNET_SEED env var steers the default seed") {
  TempDir dir;
  write_file(dir.file("edges.csv"), edge_csv(gen_er(15, 0.4, 3)));
  auto gen_with_env = [&](const std::string& env, const std::string& out) {
    std::string cmd = env + " " + kCli + " generate --model er --match " + dir.file("edges.csv") +
                      " --count 1 --out-dir " + (dir.path / out).string() + " >/dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    return read_file((dir.path / out / "er_000.csv").string());
  };
  std::string a = gen_with_env("CHARNET_SEED=11", "a");
  std::string b = gen_with_env("CHARNET_SEED=11", "b");
  std::string c = gen_with_env("CHARNET_SEED=12", "c");
  CHECK(a == b);
  CHECK(a != c);
}
