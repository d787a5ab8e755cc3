#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chunkpart/graph.hpp"
#include "chunkpart/ordering.hpp"
#include "chunkpart/partitioners.hpp"

namespace chunkpart {

struct QualityReport {
  std::uint64_t k = 1;
  double rf = 0.0;  // sum of covered-vertex counts / |V|
  double eb = 0.0;  // max edge count / mean edge count
  double vb = 0.0;  // max covered-vertex count / mean covered-vertex count
  std::vector<std::pair<std::uint64_t, std::uint64_t>>
      per_partition;  // (edge count, covered vertex count)
};

// max / arithmetic mean. All-zero input counts as perfectly balanced.
double balance(std::span<const std::uint64_t> values);

double replication_factor(const Graph& g, const Assignment& a);

QualityReport quality_report(const Graph& g, const Assignment& a);

// CEP quality at k: partitions are the contiguous chunks of the ordered
// edge list; nothing is materialized.
QualityReport quality_report_cep(const Graph& g, const Ordering& ordering,
                                 std::uint64_t k);

struct ObjectiveValue {
  std::uint64_t raw = 0;  // sum over k of per-chunk covered-vertex counts
  double total = 0.0;     // raw / |V|
};

// Ordering objective, chunk form: for each k in [k_min, k_max] partition via
// chunk boundaries and sum the covered-vertex count of every chunk.
ObjectiveValue objective_def4(const Graph& g, const Ordering& ordering,
                              std::uint64_t k_min, std::uint64_t k_max);

// Same objective in per-edge-index form: walk order indices and materialize
// the trailing chunk only at split points. Equal to objective_def4.
ObjectiveValue objective_def5(const Graph& g, const Ordering& ordering,
                              std::uint64_t k_min, std::uint64_t k_max);

// Analytic quality bound (|V| + |E| + k) / |V|.
double rf_upper_bound(std::uint64_t vertex_count, std::uint64_t edge_count,
                      std::uint64_t k);

// Riemann zeta for s > 1: truncated series plus integral tail bound, with the
// absolute error kept below tolerance.
double zeta(double s, double tolerance);

// Expected RF bound 1 + zeta(alpha-1) / (2 zeta(alpha)) for a power-law graph
// with exponent alpha > 2 and minimum degree 1.
double powerlaw_bound(double alpha_pl);

}  // namespace chunkpart
