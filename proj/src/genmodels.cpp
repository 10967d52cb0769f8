#include "charnet/genmodels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "charnet/common.hpp"
#include "charnet/rng.hpp"

namespace charnet {

const char* model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::PA: return "PA";
    case ModelKind::CL: return "CL";
    case ModelKind::ER: return "ER";
    case ModelKind::CFG: return "CFG";
  }
  return "?";
}

ModelKind model_from_name(const std::string& name) {
  std::string lower;
  for (char c : name) lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  if (lower == "pa") return ModelKind::PA;
  if (lower == "cl") return ModelKind::CL;
  if (lower == "er") return ModelKind::ER;
  if (lower == "cfg") return ModelKind::CFG;
  throw DataError("unknown model '" + name + "' (expected pa|cl|er|cfg)");
}

ModelParams match_parameters(const Graph& g, ModelKind model) {
  const int n = g.node_count();
  if (n < 2) throw DataError("need at least 2 nodes to match model parameters");
  const auto edges = static_cast<double>(g.edge_count());

  ModelParams params;
  params.model = model;
  params.n = n;
  switch (model) {
    case ModelKind::PA: {
      if (g.edge_count() == 0) throw DataError("cannot match PA to an edgeless graph");
      // 2/n + 2m = 2|E|/n  =>  m = (|E| - 1)/n
      params.m = std::max(1, static_cast<int>(std::llround((edges - 1.0) / n)));
      break;
    }
    case ModelKind::ER:
      params.p = edges / (0.5 * n * (n - 1));
      break;
    case ModelKind::CL:
    case ModelKind::CFG:
      params.w.resize(n);
      for (int v = 0; v < n; ++v) params.w[v] = g.degree(v);
      break;
  }
  return params;
}

Graph gen_pa(int n, int m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw DataError("PA requires 1 <= m < n");
  Rng rng(seed);
  GraphBuilder builder(n);

  // Stub list: node v appears once per unit of degree.
  std::vector<int> stubs;
  stubs.reserve(2 * (static_cast<std::size_t>(m + 1) * m / 2 + static_cast<std::size_t>(n) * m));
  for (int u = 0; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) {
      builder.add_edge(u, v);
      stubs.push_back(u);
      stubs.push_back(v);
    }

  std::vector<int> chosen;
  for (int v = m + 1; v < n; ++v) {
    chosen.clear();
    // Degrees are frozen at the state before v arrived.
    const std::size_t pool = stubs.size();
    while (static_cast<int>(chosen.size()) < m) {
      int target = stubs[rng.below(pool)];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) chosen.push_back(target);
    }
    for (int target : chosen) {
      builder.add_edge(v, target);
      stubs.push_back(v);
      stubs.push_back(target);
    }
  }
  return builder.build();
}

Graph gen_er(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DataError("ER probability must be in [0,1]");
  if (n < 0) throw DataError("negative node count");
  Rng rng(seed);
  GraphBuilder builder(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) builder.add_edge(u, v);
  return builder.build();
}

Graph gen_cl(std::span<const double> w, std::uint64_t seed) {
  const int n = static_cast<int>(w.size());
  double total = 0.0;
  for (double wi : w) {
    if (wi < 0.0) throw DataError("Chung-Lu expected degrees must be >= 0");
    total += wi;
  }
  Rng rng(seed);
  GraphBuilder builder(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double p = total > 0.0 ? std::min(1.0, w[u] * w[v] / total) : 0.0;
      if (rng.unit() < p) builder.add_edge(u, v);
    }
  return builder.build();
}

CfgResult gen_cfg(std::span<const int> degrees, std::uint64_t seed) {
  const int n = static_cast<int>(degrees.size());
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v) {
    if (degrees[v] < 0) throw DataError("negative degree in configuration model");
    if (degrees[v] > n - 1)
      throw DataError("degree " + std::to_string(degrees[v]) + " exceeds n-1");
    stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[v]), v);
  }
  if (stubs.size() % 2 != 0) throw DataError("configuration model needs an even stub sum");

  Rng rng(seed);
  rng.shuffle(stubs);  // uniform perfect matching of consecutive stub pairs

  CfgResult result;
  GraphBuilder builder(n);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u > v) std::swap(u, v);
    if (u == v || !seen.emplace(u, v).second) {
      ++result.discarded;
      continue;
    }
    builder.add_edge(u, v);
  }
  result.graph = builder.build();
  return result;
}

Graph sample_model(const ModelParams& params, std::uint64_t seed) {
  switch (params.model) {
    case ModelKind::PA:
      return gen_pa(params.n, params.m, seed);
    case ModelKind::ER:
      return gen_er(params.n, params.p, seed);
    case ModelKind::CL:
      return gen_cl(params.w, seed);
    case ModelKind::CFG: {
      std::vector<int> degrees(params.w.size());
      for (std::size_t i = 0; i < params.w.size(); ++i)
        degrees[i] = static_cast<int>(std::llround(params.w[i]));
      return gen_cfg(degrees, seed).graph;
    }
  }
  throw InternalError("unreachable model kind");
}

}  // namespace charnet
