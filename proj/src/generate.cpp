#include "chunkpart/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "chunkpart/rng.hpp"

namespace chunkpart {

std::vector<std::pair<std::uint64_t, std::uint64_t>> gen_rmat(
    const RmatParams& p) {
  if (p.scale > 34) throw std::invalid_argument("gen_rmat: scale must be <= 34");
  for (const double q : {p.a, p.b, p.c, p.d}) {
    if (!(q >= 0.0 && q <= 1.0))
      throw std::invalid_argument("gen_rmat: probabilities must be in [0,1]");
  }
  if (std::fabs(p.a + p.b + p.c + p.d - 1.0) > 1e-9)
    throw std::invalid_argument("gen_rmat: probabilities must sum to 1");

  const std::uint64_t samples = (std::uint64_t(1) << p.scale) * p.edge_factor;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(samples);
  const double ab = p.a + p.b;
  const double abc = p.a + p.b + p.c;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t row = 0, col = 0;
    for (std::uint32_t level = 0; level < p.scale; ++level) {
      const std::uint64_t counter = s * p.scale + level;
      const double u =
          static_cast<double>(CounterRng::value_at(p.seed, counter) >> 11) *
          0x1.0p-53;
      row <<= 1;
      col <<= 1;
      if (u < p.a) {
        // top-left
      } else if (u < ab) {
        col |= 1;
      } else if (u < abc) {
        row |= 1;
      } else {
        row |= 1;
        col |= 1;
      }
    }
    out.emplace_back(row, col);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> gen_er(std::uint64_t n,
                                                            std::uint64_t m,
                                                            std::uint64_t seed) {
  if (n > (std::uint64_t(1) << 32))
    throw std::invalid_argument("gen_er: n must be <= 2^32");
  using u128 = unsigned __int128;
  const u128 max_edges = n == 0 ? 0 : u128(n) * (n - 1) / 2;
  if (u128(m) > max_edges)
    throw std::invalid_argument("gen_er: m exceeds n(n-1)/2");

  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  CounterRng rng(seed);
  while (out.size() < m) {
    const std::uint64_t u = rng.next_below(n);
    const std::uint64_t v = rng.next_below(n);
    if (u == v) continue;
    const std::uint64_t key = (std::min(u, v) << 32) | std::max(u, v);
    if (!seen.insert(key).second) continue;
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace chunkpart
