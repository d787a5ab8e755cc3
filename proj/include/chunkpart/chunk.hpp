#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chunkpart {

// Chunk-based edge partitioning: an ordered edge list of edge_count edges is
// split into k contiguous chunks, chunk p holding floor((edge_count+p)/k)
// edges. All queries below are O(1) and independent of edge_count.

inline std::uint64_t chunk_width(std::uint64_t edge_count, std::uint64_t k,
                                 std::uint64_t p) {
  if (k == 0) throw std::invalid_argument("chunk_width: k must be >= 1");
  if (p >= k) throw std::invalid_argument("chunk_width: p must be < k");
  return (edge_count + p) / k;
}

// First order index of chunk p. p == k is allowed and yields edge_count,
// which makes half-open range construction uniform.
inline std::uint64_t chunk_start(std::uint64_t edge_count, std::uint64_t k,
                                 std::uint64_t p) {
  if (k == 0) throw std::invalid_argument("chunk_start: k must be >= 1");
  if (p > k) throw std::invalid_argument("chunk_start: p must be <= k");
  const std::uint64_t q = edge_count / k;
  const std::uint64_t full = k - edge_count % k;  // chunks below this have width q
  return p * q + (p > full ? p - full : 0);
}

// Order index -> partition id, by direct inversion of chunk_start.
inline std::uint64_t id2p(std::uint64_t edge_count, std::uint64_t k,
                          std::uint64_t i) {
  if (k == 0) throw std::invalid_argument("id2p: k must be >= 1");
  if (i >= edge_count) throw std::invalid_argument("id2p: edge id out of range");
  const std::uint64_t q = edge_count / k;
  const std::uint64_t full = k - edge_count % k;
  const std::uint64_t pivot = full * q;  // first index of the width-(q+1) chunks
  if (i < pivot) return i / q;
  return full + (i - pivot) / (q + 1);
}

struct PartitionSpec {
  std::uint64_t k = 1;
  std::uint64_t edge_count = 0;
  // k + 1 entries; chunk p covers [boundaries[p], boundaries[p+1]).
  std::vector<std::uint64_t> boundaries;

  std::uint64_t start(std::uint64_t p) const { return boundaries.at(p); }
  std::uint64_t width(std::uint64_t p) const {
    return boundaries.at(p + 1) - boundaries.at(p);
  }
};

inline PartitionSpec make_partition_spec(std::uint64_t edge_count,
                                         std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("make_partition_spec: k must be >= 1");
  PartitionSpec spec;
  spec.k = k;
  spec.edge_count = edge_count;
  spec.boundaries.reserve(k + 1);
  for (std::uint64_t p = 0; p <= k; ++p) {
    spec.boundaries.push_back(chunk_start(edge_count, k, p));
  }
  return spec;
}

}  // namespace chunkpart
