#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace chunkpart {

struct RmatParams {
  std::uint32_t scale = 14;       // log2 of the vertex id space
  std::uint64_t edge_factor = 16; // directed samples per vertex
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  std::uint64_t seed = 0;
};

// Emits 2^scale * edge_factor directed samples by recursive quadrant
// descent. Sample s consumes exactly `scale` counter values starting at
// s*scale, so generation is reproducible and shardable by sample range.
// Deduplication and symmetrization happen downstream in canonicalize.
std::vector<std::pair<std::uint64_t, std::uint64_t>> gen_rmat(
    const RmatParams& params);

// m distinct undirected edges over n vertices, no self loops, in draw order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> gen_er(std::uint64_t n,
                                                            std::uint64_t m,
                                                            std::uint64_t seed);

}  // namespace chunkpart
