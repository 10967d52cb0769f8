#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "charnet/graph.hpp"

namespace charnet {

enum class ModelKind { PA, CL, ER, CFG };

const char* model_name(ModelKind kind);
ModelKind model_from_name(const std::string& name);
// Table column order: PA, CL, ER, CFG.
inline constexpr ModelKind kModelOrder[4] = {ModelKind::PA, ModelKind::CL, ModelKind::ER,
                                             ModelKind::CFG};

struct ModelParams {
  ModelKind model = ModelKind::ER;
  int n = 0;
  int m = 0;              // PA: edges per arriving node
  double p = 0.0;         // ER: edge probability
  std::vector<double> w;  // CL: expected degrees; CFG: exact degrees
};

// Parameters matched to the target graph: PA m from 2/n + 2m = 2|E|/n
// (rounded, at least 1), ER p = |E|/C(n,2), CL/CFG w = the exact degree
// sequence. Model selection ignores weights, so degrees are unweighted.
ModelParams match_parameters(const Graph& g, ModelKind model);

// Preferential attachment: clique on m+1 seed nodes, then each arrival
// draws m distinct targets with probability proportional to degree
// (draw-and-reject). Edge count is C(m+1,2) + (n-m-1)*m deterministically.
Graph gen_pa(int n, int m, std::uint64_t seed);

// Every unordered pair appears independently with probability p.
Graph gen_er(int n, double p, std::uint64_t seed);

// Chung-Lu: pair (i,j) appears with probability min(1, w_i*w_j / sum(w)).
Graph gen_cl(std::span<const double> w, std::uint64_t seed);

struct CfgResult {
  Graph graph;
  std::size_t discarded = 0;  // stub pairs dropped as self-loops or duplicates
};

// Configuration model: degree stubs paired by a seeded uniform matching;
// self-loops and multi-edges are discarded, so degrees never exceed the
// targets. Requires an even stub sum.
CfgResult gen_cfg(std::span<const int> degrees, std::uint64_t seed);

// Dispatch on params.model (CFG rounds w to integers).
Graph sample_model(const ModelParams& params, std::uint64_t seed);

}  // namespace charnet
