#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chunkpart/graph.hpp"
#include "chunkpart/metrics.hpp"
#include "chunkpart/ordering.hpp"

namespace chunkpart {

struct ScalingStep {
  std::uint64_t k_before = 0;
  std::uint64_t k_after = 0;
  std::uint64_t migrated_exact = 0;
  double migrated_estimate = 0.0;
  double rf_bound = 0.0;  // (|V| + |E| + k_after) / |V|
  QualityReport quality_after;
};

// Number of order indices whose chunk id changes between a k_before-way and
// a k_after-way split. Evaluated per boundary interval; equals the per-edge
// definition exactly.
std::uint64_t migrated_exact(std::uint64_t edge_count, std::uint64_t k_before,
                             std::uint64_t k_after);

// Analytic estimate of the edges migrated when scaling k -> k + x.
// Scaling in (k + x -> k) has the same cost by reverse-operation symmetry.
double migrated_estimate(std::uint64_t edge_count, std::uint64_t k,
                         std::uint64_t x);

// The estimate assumes |E| >> k + x; callers should warn outside this regime.
inline bool migration_regime_ok(std::uint64_t edge_count, std::uint64_t k,
                                std::uint64_t x) {
  return edge_count > 0 &&
         static_cast<double>(k + x) / static_cast<double>(edge_count) <= 0.01;
}

// Replays a schedule of k values; one step per consecutive pair. An empty
// schedule is a domain error; a single entry yields no steps.
std::vector<ScalingStep> run_schedule(const Graph& g, const Ordering& ordering,
                                      std::span<const std::uint64_t> schedule);

}  // namespace chunkpart
