// charnet: mine character networks from text, compute centrality/community
// analytics, generate matched random graphs, and decide which random-graph
// model fits a network best.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "charnet/centrality.hpp"
#include "charnet/common.hpp"
#include "charnet/community.hpp"
#include "charnet/csv.hpp"
#include "charnet/extract.hpp"
#include "charnet/features.hpp"
#include "charnet/genmodels.hpp"
#include "charnet/gexf.hpp"
#include "charnet/graph.hpp"
#include "charnet/learn/select.hpp"
#include "charnet/profiles.hpp"
#include "charnet/rng.hpp"
#include "charnet/spectrum.hpp"

namespace fs = std::filesystem;
using namespace charnet;

namespace {

// Default seed, fixed so that runs without --seed are reproducible.
// CHARNET_SEED overrides it; --seed overrides both.
constexpr std::uint64_t kDefaultSeed = 1729;

std::uint64_t env_default_seed() {
  if (const char* env = std::getenv("CHARNET_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw DataError("CHARNET_SEED is not an integer");
  }
  return kDefaultSeed;
}

Graph load_graph(const std::string& edge_path, const std::string& node_path) {
  if (!node_path.empty()) return load_edge_csv(node_path, edge_path);
  return load_edges_only(edge_path);
}

std::string stats_csv(const GraphStats& s) {
  std::string out =
      "Nodes,Edges,AvgDegree,AvgWeightedDegree,Diameter,EdgeDensity,AvgDistance,ClustCoeff,Connected\n";
  out += std::to_string(s.node_count);
  out += ',' + std::to_string(s.edge_count);
  out += ',' + format_double(s.avg_degree);
  out += ',' + format_double(s.avg_weighted_degree);
  out += ',' + std::to_string(s.diameter);
  out += ',' + format_double(s.edge_density);
  out += ',' + format_double(s.avg_distance);
  out += ',' + format_double(s.clustering_coeff);
  out += s.connected ? ",yes" : ",no";
  out += '\n';
  return out;
}

std::string scores_csv(const Graph& g, const CentralityScores& scores) {
  std::vector<int> order(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) order[v] = v;
  const bool ascending = scores.measure == Measure::closeness;  // low closeness = central
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores.values[a] != scores.values[b])
      return ascending ? scores.values[a] < scores.values[b] : scores.values[a] > scores.values[b];
    return a < b;
  });
  std::string out = "Id,Label,Score\n";
  for (int v : order) {
    out += std::to_string(v);
    out += ',' + csv_escape(g.label(v));
    out += ',' + format_double(scores.values[v]);
    out += '\n';
  }
  return out;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

int run(int argc, char** argv) {
  CLI::App app{"character network mining and random-graph model selection"};
  app.require_subcommand(1);

  // extract
  auto* extract_cmd = app.add_subcommand("extract", "build a character network from text");
  std::string text_path, alias_path, out_nodes = "nodes.csv", out_edges = "edges.csv", out_gexf;
  std::size_t distance = 15;
  extract_cmd->add_option("text", text_path, "UTF-8 text file")->required();
  extract_cmd->add_option("aliases", alias_path, "alias CSV: canonical name, then aliases")->required();
  extract_cmd->add_option("--distance", distance, "co-occurrence window in tokens (default 15)");
  extract_cmd->add_option("--out-nodes", out_nodes, "node CSV output path");
  extract_cmd->add_option("--out-edges", out_edges, "edge CSV output path");
  extract_cmd->add_option("--gexf", out_gexf, "optional GEXF output path");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "global metrics of a network");
  std::string edge_path, node_path;
  stats_cmd->add_option("edges", edge_path, "edge CSV")->required();
  stats_cmd->add_option("--nodes", node_path, "node CSV (optional)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "centrality measures and communities");
  std::string an_edges, an_nodes, an_outdir = ".", an_measure = "all";
  std::uint64_t an_seed = env_default_seed();
  analyze_cmd->add_option("edges", an_edges, "edge CSV")->required();
  analyze_cmd->add_option("--nodes", an_nodes, "node CSV (optional)");
  analyze_cmd->add_option("--out-dir", an_outdir, "output directory");
  analyze_cmd->add_option("--measure", an_measure,
                          "all|weighted_degree|closeness|betweenness|eigencentrality|pagerank");
  analyze_cmd->add_option("--seed", an_seed, "louvain sweep seed");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "sample random graphs matched to a network");
  std::string gen_model, gen_match, gen_nodes, gen_outdir = ".";
  std::uint64_t gen_seed = env_default_seed();
  int gen_count = 1;
  gen_cmd->add_option("--model", gen_model, "pa|er|cl|cfg")->required();
  gen_cmd->add_option("--match", gen_match, "edge CSV of the target network")->required();
  gen_cmd->add_option("--nodes", gen_nodes, "node CSV of the target (optional)");
  gen_cmd->add_option("--seed", gen_seed, "master seed");
  gen_cmd->add_option("--count", gen_count, "number of samples");
  gen_cmd->add_option("--out-dir", gen_outdir, "output directory");

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "3/4-profile and spectral feature vector");
  std::string pr_edges, pr_nodes, pr_mode = "full", pr_out;
  profile_cmd->add_option("edges", pr_edges, "edge CSV")->required();
  profile_cmd->add_option("--nodes", pr_nodes, "node CSV (optional)");
  profile_cmd->add_option("--mode", pr_mode, "full|profiles");
  profile_cmd->add_option("--out", pr_out, "output path (default stdout)");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "normalized Laplacian eigenvalues");
  std::string sp_edges, sp_nodes, sp_out;
  bool sp_hist = false;
  spectrum_cmd->add_option("edges", sp_edges, "edge CSV")->required();
  spectrum_cmd->add_option("--nodes", sp_nodes, "node CSV (optional)");
  spectrum_cmd->add_option("--out", sp_out, "output path (default stdout)");
  spectrum_cmd->add_flag("--hist", sp_hist, "emit the 5-bin histogram instead of eigenvalues");

  // select
  auto* select_cmd = app.add_subcommand("select", "random-graph model selection");
  std::string sel_edges, sel_nodes, sel_mode = "full", sel_out, sel_csv, sel_batch;
  std::uint64_t sel_seed = env_default_seed();
  int sel_samples = 100;
  select_cmd->add_option("edges", sel_edges, "edge CSV of the character network");
  select_cmd->add_option("--nodes", sel_nodes, "node CSV (optional)");
  select_cmd->add_option("--mode", sel_mode, "full|profiles");
  select_cmd->add_option("--seed", sel_seed, "master seed");
  select_cmd->add_option("--samples", sel_samples, "training samples per model (default 100)");
  select_cmd->add_option("--out", sel_out, "report path (JSON; batch: aggregate CSV)");
  select_cmd->add_option("--csv", sel_csv, "also write the score matrix as CSV");
  select_cmd->add_option("--batch", sel_batch, "run every edge CSV in a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (extract_cmd->parsed()) {
    AliasTable aliases = AliasTable::from_csv_file(alias_path);
    if (distance < 1) throw DataError("--distance must be >= 1");
    Graph g = extract_pipeline(read_file(text_path), aliases, WindowConfig{distance});
    write_file(out_nodes, node_csv(g));
    write_file(out_edges, edge_csv(g));
    if (!out_gexf.empty()) write_file(out_gexf, write_gexf(g));
    std::cout << stats_csv(global_stats(g));
    return 0;
  }

  if (stats_cmd->parsed()) {
    std::cout << stats_csv(global_stats(load_graph(edge_path, node_path)));
    return 0;
  }

  if (analyze_cmd->parsed()) {
    Graph g = load_graph(an_edges, an_nodes);
    fs::create_directories(an_outdir);
    auto want = [&](const char* name) { return an_measure == "all" || an_measure == name; };

    CentralityScores pr_scores = pagerank(g);
    if (want("weighted_degree"))
      write_file(an_outdir + "/weighted_degree.csv", scores_csv(g, weighted_degree(g)));
    if (want("closeness")) write_file(an_outdir + "/closeness.csv", scores_csv(g, closeness(g)));
    if (want("betweenness")) write_file(an_outdir + "/betweenness.csv", scores_csv(g, betweenness(g)));
    if (want("eigencentrality"))
      write_file(an_outdir + "/eigencentrality.csv", scores_csv(g, eigencentrality(g)));
    if (want("pagerank")) write_file(an_outdir + "/pagerank.csv", scores_csv(g, pr_scores));

    Partition part = louvain(g, an_seed);
    std::string comm = "Id,Label,Community\n";
    for (int v = 0; v < g.node_count(); ++v)
      comm += std::to_string(v) + ',' + csv_escape(g.label(v)) + ',' +
              std::to_string(part.assignment[v]) + '\n';
    write_file(an_outdir + "/communities.csv", comm);

    // Top twelve characters, listed by increasing PageRank.
    std::vector<int> order(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (pr_scores.values[a] != pr_scores.values[b])
        return pr_scores.values[a] > pr_scores.values[b];
      return a < b;
    });
    if (order.size() > 12) order.resize(12);
    std::reverse(order.begin(), order.end());
    std::cout << "Label,PageRank,Community\n";
    for (int v : order)
      std::cout << csv_escape(g.label(v)) << ',' << format_double(pr_scores.values[v]) << ','
                << part.assignment[v] << '\n';
    std::cout << "modularity," << format_double(part.q) << ",\n";
    return 0;
  }

  if (gen_cmd->parsed()) {
    Graph target = load_graph(gen_match, gen_nodes);
    ModelParams params = match_parameters(target, model_from_name(gen_model));
    fs::create_directories(gen_outdir);
    if (gen_count < 1) throw DataError("--count must be >= 1");
    for (int i = 0; i < gen_count; ++i) {
      Graph sampled = sample_model(params, derive_seed(gen_seed, static_cast<std::uint64_t>(i)));
      char name[64];
      std::snprintf(name, sizeof(name), "%s_%03d.csv", model_name(params.model), i);
      std::string lower = name;
      for (char& c : lower) c = c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
      write_file(gen_outdir + "/" + lower, edge_csv(sampled));
    }
    // One shared node file: every sample lives on the same 0..n-1 universe.
    write_file(gen_outdir + "/nodes.csv", node_csv(sample_model(params, derive_seed(gen_seed, 0))));
    return 0;
  }

  if (profile_cmd->parsed()) {
    Graph g = load_graph(pr_edges, pr_nodes);
    FeatureMode mode = feature_mode_from_name(pr_mode);
    FeatureVector fv = feature_vector(g, mode);
    auto names = feature_names(mode);
    std::string header, row;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) {
        header += ',';
        row += ',';
      }
      header += names[i];
      row += format_double(fv.values[i]);
    }
    emit(pr_out, header + '\n' + row + '\n');
    return 0;
  }

  if (spectrum_cmd->parsed()) {
    Graph g = load_graph(sp_edges, sp_nodes);
    auto eigs = laplacian_spectrum(g);
    if (sp_hist) {
      auto hist = spectral_histogram(eigs);
      std::string out = "B1,B2,B3,B4,B5\n";
      for (int b = 0; b < 5; ++b) out += (b ? "," : "") + std::to_string(hist.bins[b]);
      emit(sp_out, out + '\n');
    } else {
      std::string out = "Index,Eigenvalue\n";
      for (std::size_t i = 0; i < eigs.size(); ++i)
        out += std::to_string(i) + ',' + format_double(eigs[i]) + '\n';
      emit(sp_out, out);
    }
    return 0;
  }

  if (select_cmd->parsed()) {
    learn::SelectConfig config;
    config.mode = feature_mode_from_name(sel_mode);
    config.seed = sel_seed;
    config.samples = sel_samples;

    if (!sel_batch.empty()) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(sel_batch)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".csv") continue;
        if (entry.path().filename() == "nodes.csv") continue;
        files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) throw DataError("no edge CSVs in " + sel_batch);

      // per-file selections, gathered in file order (outer loop parallel,
      // inner pipelines run serially inside it)
      std::vector<std::array<ModelKind, 4>> selections(files.size());
      std::vector<std::string> errors(files.size());
#pragma omp parallel for schedule(dynamic)
      for (std::size_t f = 0; f < files.size(); ++f) {
        try {
          Graph g = sel_nodes.empty() ? load_edges_only(files[f].string())
                                      : load_edge_csv(sel_nodes, files[f].string());
          auto report = learn::select_model(g, config);
          for (int ci = 0; ci < 4; ++ci) selections[f][ci] = report.classifiers[ci].selected;
        } catch (const std::exception& e) {
          errors[f] = e.what();
        }
      }
      for (std::size_t f = 0; f < files.size(); ++f)
        if (!errors[f].empty())
          throw DataError(files[f].filename().string() + ": " + errors[f]);

      std::vector<std::array<long, 4>> counts(4, std::array<long, 4>{});
      for (const auto& selection : selections)
        for (int ci = 0; ci < 4; ++ci)
          for (int mi = 0; mi < 4; ++mi)
            if (selection[ci] == kModelOrder[mi]) ++counts[ci][mi];
      std::string out = "Classifier,PA,CL,ER,CFG\n";
      for (int ci = 0; ci < 4; ++ci) {
        out += learn::classifier_name(learn::kClassifierOrder[ci]);
        for (int mi = 0; mi < 4; ++mi) out += ',' + std::to_string(counts[ci][mi]);
        out += '\n';
      }
      emit(sel_out, out);
      return 0;
    }

    if (sel_edges.empty()) throw DataError("select needs an edge CSV (or --batch)");
    Graph g = load_graph(sel_edges, sel_nodes);
    auto report = learn::select_model(g, config);
    emit(sel_out, learn::report_json(report));
    if (!sel_csv.empty()) write_file(sel_csv, learn::report_csv(report));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
