#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "charnet/common.hpp"
#include "charnet/genmodels.hpp"
#include "charnet/graph.hpp"
#include "charnet/rng.hpp"
#include "test_util.hpp"

using namespace charnet;
using namespace charnet::testutil;

TEST_CASE("match_parameters") {
  // a 62-node network with 575 edges (average degree 18.55)
  GraphBuilder b(62);
  int added = 0;
  for (int u = 0; u < 62 && added < 575; ++u)
    for (int v = u + 1; v < 62 && added < 575; ++v) {
      b.add_edge(u, v);
      ++added;
    }
  Graph g = b.build();
  REQUIRE(g.edge_count() == 575);

  SUBCASE("PA m from the edge-balance equation") {
    CHECK(match_parameters(g, ModelKind::PA).m == 9);  // round(574/62)
  }
  SUBCASE("ER p equals the edge density") {
    double p = match_parameters(g, ModelKind::ER).p;
    CHECK(p == doctest::Approx(575.0 / 1891.0));
    CHECK(std::abs(p - 0.304) < 0.001);
  }
  SUBCASE("CL and CFG take the exact degree sequence") {
    auto params = match_parameters(g, ModelKind::CL);
    REQUIRE(params.w.size() == 62);
    for (int v = 0; v < 62; ++v) CHECK(params.w[v] == doctest::Approx(g.degree(v)));
  }
  SUBCASE("PA on an edgeless graph is an error") {
    CHECK_THROWS_AS(match_parameters(empty_graph(5), ModelKind::PA), DataError);
  }
}

TEST_CASE("preferential attachment") {
  SUBCASE("n=3, m=1 is a tree with two edges") {
    Graph g = gen_pa(3, 1, 5);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("deterministic edge count") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Graph g = gen_pa(100, 5, seed);
      CHECK(g.edge_count() == 15 + 94 * 5);  // C(6,2) + (n-m-1)m
    }
  }
  SUBCASE("simple graph, no duplicate targets") {
    Graph g = gen_pa(50, 7, 123);
    CHECK(g.edge_count() == 28 + 42 * 7);  // duplicates would have merged
  }
  SUBCASE("invalid m") {
    CHECK_THROWS_AS(gen_pa(5, 0, 1), DataError);
    CHECK_THROWS_AS(gen_pa(5, 5, 1), DataError);
  }
}

TEST_CASE("binomial random graph") {
  CHECK(gen_er(20, 0.0, 1).edge_count() == 0);
  CHECK(gen_er(20, 1.0, 1).edge_count() == 190);
  CHECK_THROWS_AS(gen_er(20, 1.5, 1), DataError);

  SUBCASE("mean edge count within 3 sigma") {
    const int samples = 60;
    double total = 0.0;
    for (int i = 0; i < samples; ++i)
      total += static_cast<double>(gen_er(50, 0.2, derive_seed(77, i)).edge_count());
    double mean = total / samples;
    double expected = 1225 * 0.2;
    double sigma = std::sqrt(1225 * 0.2 * 0.8 / samples);
    CHECK(std::abs(mean - expected) <= 3.0 * sigma);
  }
}

TEST_CASE("Chung-Lu") {
  SUBCASE("triangle degrees give pairwise probability 2/3") {
    // w = (2,2,2): p_ij = 4/6 for every pair; check the sampled mean
    const int samples = 600;
    double edges = 0.0;
    std::vector<double> w{2.0, 2.0, 2.0};
    for (int i = 0; i < samples; ++i)
      edges += static_cast<double>(gen_cl(w, derive_seed(3, i)).edge_count());
    double mean = edges / samples;
    double expected = 3.0 * (2.0 / 3.0);
    double sigma = std::sqrt(3.0 * (2.0 / 3.0) * (1.0 / 3.0) / samples);
    CHECK(std::abs(mean - expected) <= 3.0 * sigma);
  }
  SUBCASE("all-zero weights give the empty graph") {
    std::vector<double> w(6, 0.0);
    CHECK(gen_cl(w, 9).edge_count() == 0);
  }
  SUBCASE("negative weight is an error") {
    std::vector<double> w{1.0, -1.0};
    CHECK_THROWS_AS(gen_cl(w, 1), DataError);
  }
}

TEST_CASE("configuration model") {
  SUBCASE("two stubs force the single edge") {
    std::vector<int> w{1, 1};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto result = gen_cfg(w, seed);
      CHECK(result.graph.edge_count() == 1);
      CHECK(result.discarded == 0);
    }
  }
  SUBCASE("degrees never exceed targets; stub accounting balances") {
    std::vector<int> w{2, 2, 2};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto result = gen_cfg(w, seed);
      long degree_sum = 0;
      for (int v = 0; v < 3; ++v) {
        CHECK(result.graph.degree(v) <= w[v]);
        degree_sum += result.graph.degree(v);
      }
      CHECK(degree_sum == 6 - 2 * static_cast<long>(result.discarded));
      CHECK(result.graph.edge_count() <= 3);
    }
  }
  SUBCASE("odd stub sum is an error") {
    std::vector<int> w{1, 1, 1};
    CHECK_THROWS_AS(gen_cfg(w, 1), DataError);
  }
  SUBCASE("degree above n-1 is an error") {
    std::vector<int> w{3, 1};
    CHECK_THROWS_AS(gen_cfg(w, 1), DataError);
  }
}

TEST_CASE("generators are seed-deterministic") {
  auto same_edges = [](const Graph& a, const Graph& b) {
    if (a.edge_count() != b.edge_count()) return false;
    for (std::size_t i = 0; i < a.edge_count(); ++i)
      if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v) return false;
    return true;
  };
  CHECK(same_edges(gen_er(40, 0.3, 11), gen_er(40, 0.3, 11)));
  CHECK_FALSE(same_edges(gen_er(40, 0.3, 11), gen_er(40, 0.3, 12)));
  CHECK(same_edges(gen_pa(40, 3, 11), gen_pa(40, 3, 11)));
  std::vector<double> w(40, 5.0);
  CHECK(same_edges(gen_cl(w, 4), gen_cl(w, 4)));
  std::vector<int> wd(40, 4);
  CHECK(same_edges(gen_cfg(wd, 4).graph, gen_cfg(wd, 4).graph));
}

TEST_CASE("derived seeds decorrelate batch samples") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}
