#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chunkpart/graph.hpp"

namespace chunkpart {

// Bijection between order indices and edge indices.
struct Ordering {
  std::vector<std::uint64_t> perm;  // order index -> edge index
  std::vector<std::uint64_t> inv;   // edge index -> order index
};

// Builds the inverse and verifies perm is a bijection on [0, perm.size()).
Ordering make_ordering(std::vector<std::uint64_t> perm);

// "never ordered" sentinel for the M bookkeeping below.
inline constexpr std::uint64_t kNeverOrdered =
    std::numeric_limits<std::uint64_t>::max();

struct OrderingParams {
  std::uint64_t k_min = 4;
  std::uint64_t k_max = 128;
  // Two-hop window length; defaults to default_delta(|E|, k_max).
  std::optional<std::uint64_t> delta;
  std::uint64_t seed = 0;
  // Restart on the lowest-id unprocessed vertex instead of a seeded draw.
  bool deterministic_restart = false;
  // Refusal guard for the quadratic baseline.
  std::uint64_t baseline_edge_cap = 5000;
};

struct OrderingStats {
  std::uint64_t iterations = 0;
  std::uint64_t restarts = 0;
  std::uint64_t max_edges_per_iteration = 0;
  std::uint64_t two_hop_edges = 0;
  // Populated when verify_two_hop_window is set: count of two-hop
  // assignments whose far endpoint was not actually covered by the
  // materialized trailing window. Must stay zero.
  std::uint64_t two_hop_window_violations = 0;
};

// State handed to the test observer at the top of each expansion iteration.
struct ExpansionSnapshot {
  std::span<const std::uint64_t> order_prefix;        // edge ids, order sequence
  std::span<const std::uint64_t> remaining_degree;    // D[v] = |N(v) \ X|
  std::span<const std::uint64_t> latest_order_index;  // M[v] or kNeverOrdered
  std::span<const VertexId> frontier;                 // touched, unexpanded, D > 0
};
using SnapshotObserver = std::function<void(const ExpansionSnapshot&)>;

// alpha = sum_{k=k_min}^{k_max} floor(edge_count / k), beta = k_max - k_min.
std::pair<std::uint64_t, std::uint64_t> priority_weights(
    std::uint64_t edge_count, std::uint64_t k_min, std::uint64_t k_max);

// p(v) = alpha * D[v] - beta * M[v]; the expansion dequeues the minimum.
inline std::int64_t priority(std::uint64_t alpha, std::uint64_t beta,
                             std::uint64_t d_v, std::uint64_t m_v) {
  return static_cast<std::int64_t>(alpha * d_v) -
         static_cast<std::int64_t>(beta * m_v);
}

inline std::uint64_t default_delta(std::uint64_t edge_count,
                                   std::uint64_t k_max) {
  return k_max == 0 ? 0 : edge_count / k_max;
}

// Priority-queue greedy expansion.
Ordering order_geo_fast(const Graph& g, const OrderingParams& params,
                        OrderingStats* stats = nullptr,
                        const SnapshotObserver& observer = {},
                        bool verify_two_hop_window = false);

// Desk-scale greedy that evaluates the partial ordering objective for every
// frontier vertex. Refuses graphs above params.baseline_edge_cap.
Ordering order_geo_baseline(const Graph& g, const OrderingParams& params);

enum class TrivialOrder { input_order, random_shuffle, bfs };

Ordering order_trivial(const Graph& g, TrivialOrder strategy,
                       std::uint64_t seed);

}  // namespace chunkpart
