#pragma once

#include <cstdint>
#include <vector>

#include "chunkpart/graph.hpp"

namespace chunkpart {

// Per-edge partition ids, indexed by canonical edge index.
struct Assignment {
  std::uint64_t k = 1;
  std::vector<std::uint32_t> part_of;
};

// 1D hash: part = mix64(mix64(a)*C1 ^ mix64(b) ^ salt) mod k with
// C1 = 0x9e3779b97f4a7c15. Deterministic for a fixed salt.
Assignment partition_hash1d(const Graph& g, std::uint64_t k,
                            std::uint64_t salt = 0);

// 2D grid hash over an r x c factorization of k, r the largest divisor of k
// with r <= sqrt(k): part = (mix64(a) mod r)*c + mix64(b) mod c.
Assignment partition_hash2d(const Graph& g, std::uint64_t k);

// Degree-based hashing: hash the endpoint with the smaller degree, ties
// broken towards the smaller id.
Assignment partition_dbh(const Graph& g, std::uint64_t k);

}  // namespace chunkpart
