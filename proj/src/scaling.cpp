#include "chunkpart/scaling.hpp"

#include <algorithm>
#include <stdexcept>

#include "chunkpart/chunk.hpp"

namespace chunkpart {

std::uint64_t migrated_exact(std::uint64_t edge_count, std::uint64_t k_before,
                             std::uint64_t k_after) {
  if (k_before == 0 || k_after == 0)
    throw std::invalid_argument("migrated_exact: k must be >= 1");
  if (k_before == k_after || edge_count == 0) return 0;

  // Sweep the merged chunk boundaries; partition ids are constant between
  // consecutive boundaries.
  std::uint64_t total = 0;
  std::uint64_t i = 0, p_before = 0, p_after = 0;
  while (i < edge_count) {
    const std::uint64_t end_before = chunk_start(edge_count, k_before, p_before + 1);
    const std::uint64_t end_after = chunk_start(edge_count, k_after, p_after + 1);
    const std::uint64_t hi = std::min(end_before, end_after);
    if (p_before != p_after) total += hi - i;
    i = hi;
    if (hi == end_before) ++p_before;
    if (hi == end_after) ++p_after;
  }
  return total;
}

double migrated_estimate(std::uint64_t edge_count, std::uint64_t k,
                         std::uint64_t x) {
  if (k == 0 || x == 0)
    throw std::invalid_argument("migrated_estimate: k and x must be >= 1");
  const std::uint64_t c = (k + x - 1) / x;  // ceil(k / x)
  const double m = static_cast<double>(edge_count);
  const double first = m * static_cast<double>(x * c * (c + 1)) /
                       static_cast<double>(2 * k * (k + x));
  const double second = m / static_cast<double>(k) * static_cast<double>(k - c);
  return first + second;
}

std::vector<ScalingStep> run_schedule(const Graph& g, const Ordering& ordering,
                                      std::span<const std::uint64_t> schedule) {
  if (schedule.empty())
    throw std::invalid_argument("run_schedule: schedule is empty");
  for (const std::uint64_t k : schedule) {
    if (k == 0) throw std::invalid_argument("run_schedule: k must be >= 1");
  }
  if (ordering.perm.size() != g.edge_count())
    throw std::invalid_argument("run_schedule: ordering length != |E|");

  const std::uint64_t m = g.edge_count();
  std::vector<ScalingStep> steps;
  steps.reserve(schedule.size() - 1);
  for (std::size_t s = 0; s + 1 < schedule.size(); ++s) {
    ScalingStep step;
    step.k_before = schedule[s];
    step.k_after = schedule[s + 1];
    step.migrated_exact = migrated_exact(m, step.k_before, step.k_after);
    if (step.k_before == step.k_after) {
      step.migrated_estimate = 0.0;
    } else {
      // Scale-in reuses the scale-out formula with the roles swapped.
      const std::uint64_t lo = std::min(step.k_before, step.k_after);
      const std::uint64_t hi = std::max(step.k_before, step.k_after);
      step.migrated_estimate = migrated_estimate(m, lo, hi - lo);
    }
    step.rf_bound = g.vertex_count() == 0
                        ? 0.0
                        : rf_upper_bound(g.vertex_count(), m, step.k_after);
    step.quality_after = quality_report_cep(g, ordering, step.k_after);
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace chunkpart
