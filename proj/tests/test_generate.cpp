#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "chunkpart/generate.hpp"
#include "chunkpart/graph.hpp"

using namespace chunkpart;

TEST_CASE("rmat emits the requested sample count, reproducibly") {
  RmatParams p;
  p.scale = 4;
  p.edge_factor = 8;
  p.seed = 1;
  const auto s1 = gen_rmat(p);
  const auto s2 = gen_rmat(p);
  CHECK(s1.size() == 128);
  CHECK(s1 == s2);
  for (const auto& [u, v] : s1) {
    CHECK(u < 16);
    CHECK(v < 16);
  }
  p.seed = 2;
  CHECK(gen_rmat(p) != s1);
}

TEST_CASE("rmat validates parameters") {
  RmatParams p;
  p.a = 0.5;
  p.b = 0.5;
  p.c = 0.5;
  p.d = 0.5;
  CHECK_THROWS_AS(gen_rmat(p), std::invalid_argument);
  RmatParams q;
  q.scale = 35;
  CHECK_THROWS_AS(gen_rmat(q), std::invalid_argument);
  RmatParams r;
  r.a = -0.1;
  r.b = 0.5;
  r.c = 0.3;
  r.d = 0.3;
  CHECK_THROWS_AS(gen_rmat(r), std::invalid_argument);
}

TEST_CASE("uniform quadrants look like uniform endpoint draws") {
  // Chi-square over endpoint sample counts, normal approximation on the
  // statistic; each fixed seed must stay below the 1% one-sided cut.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RmatParams p;
    p.scale = 10;
    p.edge_factor = 16;
    p.a = p.b = p.c = p.d = 0.25;
    p.seed = seed;
    const auto samples = gen_rmat(p);
    const std::uint64_t n = std::uint64_t(1) << p.scale;
    std::vector<std::uint64_t> count(n, 0);
    for (const auto& [u, v] : samples) {
      ++count[u];
      ++count[v];
    }
    const double expected =
        2.0 * static_cast<double>(samples.size()) / static_cast<double>(n);
    double chi2 = 0.0;
    for (const std::uint64_t c : count) {
      const double d = static_cast<double>(c) - expected;
      chi2 += d * d / expected;
    }
    const double df = static_cast<double>(n - 1);
    const double z = (chi2 - df) / std::sqrt(2.0 * df);
    CHECK(z < 2.326);  // p > 0.01
  }
}

TEST_CASE("skewed quadrants produce hub vertices") {
  RmatParams p;
  p.scale = 14;
  p.edge_factor = 8;
  p.seed = 3;
  const Graph g = canonicalize(gen_rmat(p));
  const double mean_degree =
      2.0 * static_cast<double>(g.edge_count()) /
      static_cast<double>(g.vertex_count());
  CHECK(static_cast<double>(g.max_degree()) > 10.0 * mean_degree);
}

TEST_CASE("er generates exactly m distinct simple edges") {
  const auto pairs = gen_er(100, 200, 5);
  CHECK(pairs.size() == 200);
  const Graph g = canonicalize(pairs);
  CHECK(g.edge_count() == 200);  // nothing was lost to dedup
  CHECK(gen_er(100, 200, 5) == pairs);
  CHECK(gen_er(100, 200, 6) != pairs);
}

TEST_CASE("er corner cases") {
  // Forced complete graph on three vertices.
  const Graph triangle = canonicalize(gen_er(3, 3, 42));
  CHECK(triangle.vertex_count() == 3);
  CHECK(triangle.edge_count() == 3);

  CHECK(gen_er(10, 0, 1).empty());
  CHECK_THROWS_AS(gen_er(3, 4, 1), std::invalid_argument);
}
