#include "chunkpart/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chunkpart/chunk.hpp"

namespace chunkpart {

namespace {

// Reusable visited-stamp counter for distinct-vertex counting.
class CoverCounter {
 public:
  explicit CoverCounter(std::uint64_t vertex_count)
      : stamp_(vertex_count, 0), epoch_(0) {}

  void begin_group() { ++epoch_; }

  std::uint64_t add(const Edge& e) {
    std::uint64_t added = 0;
    if (stamp_[e.a] != epoch_) {
      stamp_[e.a] = epoch_;
      ++added;
    }
    if (stamp_[e.b] != epoch_) {
      stamp_[e.b] = epoch_;
      ++added;
    }
    return added;
  }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_;
};

QualityReport report_from_counts(
    std::uint64_t k,
    std::vector<std::pair<std::uint64_t, std::uint64_t>> per_partition,
    std::uint64_t vertex_count) {
  QualityReport r;
  r.k = k;
  std::vector<std::uint64_t> edge_counts, cover_counts;
  edge_counts.reserve(per_partition.size());
  cover_counts.reserve(per_partition.size());
  std::uint64_t covered_total = 0;
  for (const auto& [edges, covered] : per_partition) {
    edge_counts.push_back(edges);
    cover_counts.push_back(covered);
    covered_total += covered;
  }
  r.rf = vertex_count == 0
             ? 0.0
             : static_cast<double>(covered_total) / static_cast<double>(vertex_count);
  r.eb = balance(edge_counts);
  r.vb = balance(cover_counts);
  r.per_partition = std::move(per_partition);
  return r;
}

}  // namespace

double balance(std::span<const std::uint64_t> values) {
  if (values.empty()) throw std::invalid_argument("balance: empty value list");
  std::uint64_t max = 0, sum = 0;
  for (const std::uint64_t x : values) {
    max = std::max(max, x);
    sum += x;
  }
  if (sum == 0) return 1.0;
  const double mean = static_cast<double>(sum) / static_cast<double>(values.size());
  return static_cast<double>(max) / mean;
}

QualityReport quality_report(const Graph& g, const Assignment& a) {
  if (a.part_of.size() != g.edge_count())
    throw std::invalid_argument("quality_report: assignment length != |E|");
  const std::uint64_t k = a.k;

  // Bucket edge indices by partition, then stamp-count each bucket.
  std::vector<std::uint64_t> offsets(k + 1, 0);
  for (const std::uint32_t p : a.part_of) {
    if (p >= k) throw std::invalid_argument("quality_report: partition id >= k");
    ++offsets[p + 1];
  }
  for (std::uint64_t p = 0; p < k; ++p) offsets[p + 1] += offsets[p];
  std::vector<std::uint64_t> by_part(g.edge_count());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::uint64_t e = 0; e < g.edge_count(); ++e) {
    by_part[cursor[a.part_of[e]]++] = e;
  }

  CoverCounter cover(g.vertex_count());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> per_partition(k);
  for (std::uint64_t p = 0; p < k; ++p) {
    cover.begin_group();
    std::uint64_t covered = 0;
    for (std::uint64_t i = offsets[p]; i < offsets[p + 1]; ++i) {
      covered += cover.add(g.edge(by_part[i]));
    }
    per_partition[p] = {offsets[p + 1] - offsets[p], covered};
  }
  return report_from_counts(k, std::move(per_partition), g.vertex_count());
}

double replication_factor(const Graph& g, const Assignment& a) {
  return quality_report(g, a).rf;
}

QualityReport quality_report_cep(const Graph& g, const Ordering& ordering,
                                 std::uint64_t k) {
  if (ordering.perm.size() != g.edge_count())
    throw std::invalid_argument("quality_report_cep: ordering length != |E|");
  if (k == 0) throw std::invalid_argument("quality_report_cep: k must be >= 1");
  CoverCounter cover(g.vertex_count());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> per_partition(k);
  for (std::uint64_t p = 0; p < k; ++p) {
    const std::uint64_t lo = chunk_start(g.edge_count(), k, p);
    const std::uint64_t hi = chunk_start(g.edge_count(), k, p + 1);
    cover.begin_group();
    std::uint64_t covered = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      covered += cover.add(g.edge(ordering.perm[i]));
    }
    per_partition[p] = {hi - lo, covered};
  }
  return report_from_counts(k, std::move(per_partition), g.vertex_count());
}

ObjectiveValue objective_def4(const Graph& g, const Ordering& ordering,
                              std::uint64_t k_min, std::uint64_t k_max) {
  if (k_min == 0 || k_min > k_max)
    throw std::invalid_argument("objective: need 1 <= k_min <= k_max");
  if (ordering.perm.size() != g.edge_count())
    throw std::invalid_argument("objective: ordering length != |E|");
  const std::uint64_t m = g.edge_count();
  CoverCounter cover(g.vertex_count());
  ObjectiveValue value;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    for (std::uint64_t p = 0; p < k; ++p) {
      const std::uint64_t lo = chunk_start(m, k, p);
      const std::uint64_t hi = chunk_start(m, k, p + 1);
      cover.begin_group();
      for (std::uint64_t i = lo; i < hi; ++i) {
        value.raw += cover.add(g.edge(ordering.perm[i]));
      }
    }
  }
  value.total = g.vertex_count() == 0 ? 0.0
                                      : static_cast<double>(value.raw) /
                                            static_cast<double>(g.vertex_count());
  return value;
}

ObjectiveValue objective_def5(const Graph& g, const Ordering& ordering,
                              std::uint64_t k_min, std::uint64_t k_max) {
  if (k_min == 0 || k_min > k_max)
    throw std::invalid_argument("objective: need 1 <= k_min <= k_max");
  if (ordering.perm.size() != g.edge_count())
    throw std::invalid_argument("objective: ordering length != |E|");
  const std::uint64_t m = g.edge_count();
  CoverCounter cover(g.vertex_count());
  ObjectiveValue value;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    for (std::uint64_t i = 0; i < m; ++i) {
      const std::uint64_t p = id2p(m, k, i);
      const bool split = (i == m - 1) || id2p(m, k, i + 1) != p;
      if (!split) continue;
      const std::uint64_t w = (m + p) / k;
      // Trailing chunk ending at i; a window reaching below index 0 is
      // clipped to the start of the list.
      const std::uint64_t lo = i + 1 >= w ? i + 1 - w : 0;
      cover.begin_group();
      for (std::uint64_t j = lo; j <= i; ++j) {
        value.raw += cover.add(g.edge(ordering.perm[j]));
      }
    }
  }
  value.total = g.vertex_count() == 0 ? 0.0
                                      : static_cast<double>(value.raw) /
                                            static_cast<double>(g.vertex_count());
  return value;
}

double rf_upper_bound(std::uint64_t vertex_count, std::uint64_t edge_count,
                      std::uint64_t k) {
  if (vertex_count == 0)
    throw std::invalid_argument("rf_upper_bound: vertex_count must be >= 1");
  return static_cast<double>(vertex_count + edge_count + k) /
         static_cast<double>(vertex_count);
}

double zeta(double s, double tolerance) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta: requires s > 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("zeta: tolerance must be > 0");
  // Sum N terms; approximate the tail by the integral N^(1-s)/(s-1) with a
  // trapezoidal half-term correction, so the error is below N^(-s)/2.
  const double n_needed = std::pow(1.0 / (2.0 * tolerance), 1.0 / s);
  const std::uint64_t n = std::max<std::uint64_t>(
      16, static_cast<std::uint64_t>(std::ceil(n_needed)) + 1);
  double sum = 0.0, carry = 0.0;  // Kahan, summing small terms first
  for (std::uint64_t i = n; i >= 1; --i) {
    const double term = std::pow(static_cast<double>(i), -s) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  const double nd = static_cast<double>(n);
  return sum + std::pow(nd, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(nd, -s);
}

double powerlaw_bound(double alpha_pl) {
  if (!(alpha_pl > 2.0))
    throw std::invalid_argument("powerlaw_bound: requires alpha > 2");
  const double tol = 1e-8;
  return 1.0 + zeta(alpha_pl - 1.0, tol) / (2.0 * zeta(alpha_pl, tol));
}

}  // namespace chunkpart
