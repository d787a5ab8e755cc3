#include "chunkpart/partitioners.hpp"

#include <stdexcept>

#include "chunkpart/rng.hpp"

namespace chunkpart {

namespace {

void require_k(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("partitioner: k must be >= 1");
  if (k > 0xffffffffULL)
    throw std::invalid_argument("partitioner: k must fit in 32 bits");
}

}  // namespace

Assignment partition_hash1d(const Graph& g, std::uint64_t k,
                            std::uint64_t salt) {
  require_k(k);
  Assignment a;
  a.k = k;
  a.part_of.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const std::uint64_t h = mix64(mix64(e.a) * kGoldenGamma ^ mix64(e.b) ^ salt);
    a.part_of.push_back(static_cast<std::uint32_t>(h % k));
  }
  return a;
}

Assignment partition_hash2d(const Graph& g, std::uint64_t k) {
  require_k(k);
  std::uint64_t r = 1;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) r = d;
  }
  const std::uint64_t c = k / r;
  Assignment a;
  a.k = k;
  a.part_of.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const std::uint64_t part = (mix64(e.a) % r) * c + mix64(e.b) % c;
    a.part_of.push_back(static_cast<std::uint32_t>(part));
  }
  return a;
}

Assignment partition_dbh(const Graph& g, std::uint64_t k) {
  require_k(k);
  Assignment a;
  a.k = k;
  a.part_of.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const std::uint64_t da = g.degree(e.a);
    const std::uint64_t db = g.degree(e.b);
    const VertexId chosen = da < db ? e.a : db < da ? e.b : std::min(e.a, e.b);
    a.part_of.push_back(static_cast<std::uint32_t>(mix64(chosen) % k));
  }
  return a;
}

}  // namespace chunkpart
