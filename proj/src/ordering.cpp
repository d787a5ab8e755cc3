#include "chunkpart/ordering.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "chunkpart/chunk.hpp"
#include "chunkpart/rng.hpp"

namespace chunkpart {

namespace {

struct ResolvedParams {
  std::uint64_t k_min;
  std::uint64_t k_max;
  std::uint64_t delta;
  std::uint64_t alpha;
  std::uint64_t beta;
};

ResolvedParams resolve(const Graph& g, const OrderingParams& params) {
  if (params.k_min < 2) throw std::invalid_argument("ordering: k_min must be >= 2");
  if (params.k_min > params.k_max)
    throw std::invalid_argument("ordering: k_min must be <= k_max");
  const std::uint64_t m = g.edge_count();

  ResolvedParams r;
  // The objective is defined over 2 <= k_min <= k_max <= |E|; clamp to the
  // graph at hand so tiny fixtures still order.
  if (m < 2) {
    r.k_min = r.k_max = 1;
  } else {
    r.k_max = std::min(params.k_max, m);
    r.k_min = std::min(params.k_min, r.k_max);
  }
  r.delta = std::min(params.delta.value_or(default_delta(m, params.k_max)), m);

  auto [alpha, beta] = priority_weights(std::max<std::uint64_t>(m, 1),
                                        r.k_min, r.k_max);
  r.alpha = alpha;
  r.beta = beta;

  // Priorities must stay inside int64: alpha*d_max and beta*max_index.
  using u128 = unsigned __int128;
  const u128 limit = u128(1) << 62;
  if (u128(r.alpha) * std::max<std::uint64_t>(g.max_degree(), 1) >= limit ||
      u128(r.beta) * std::max<std::uint64_t>(m, 1) >= limit) {
    throw std::invalid_argument("ordering: priority weights overflow int64");
  }
  return r;
}

// Shared greedy-expansion state: the ordered prefix, the per-vertex
// remaining degree D, and the latest incident order index M.
struct Expansion {
  const Graph& g;
  std::uint64_t delta;
  std::vector<std::uint64_t> perm;
  std::vector<char> ordered;
  std::vector<std::uint64_t> d;
  std::vector<std::uint64_t> m;
  bool verify_window = false;
  std::uint64_t window_violations = 0;
  std::uint64_t two_hop_edges = 0;

  Expansion(const Graph& graph, std::uint64_t delta_arg)
      : g(graph),
        delta(delta_arg),
        ordered(graph.edge_count(), 0),
        d(graph.vertex_count()),
        m(graph.vertex_count(), kNeverOrdered) {
    perm.reserve(graph.edge_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) d[v] = graph.degree(v);
  }

  bool in_window(VertexId w) const {
    return m[w] != kNeverOrdered && m[w] + delta >= perm.size();
  }

  // Exact but O(delta) re-check of the window rule against the materialized
  // trailing chunk; used only under verify_window.
  bool in_window_materialized(VertexId w) const {
    const std::uint64_t hi = perm.size();
    const std::uint64_t lo = hi >= delta ? hi - delta : 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Edge& e = g.edge(perm[i]);
      if (e.a == w || e.b == w) return true;
    }
    return false;
  }

  void assign(std::uint64_t e, VertexId x, VertexId y) {
    perm.push_back(e);
    ordered[e] = 1;
    const std::uint64_t idx = perm.size() - 1;
    --d[x];
    --d[y];
    m[x] = idx;
    m[y] = idx;
  }

  // Orders all remaining one-hop edges of vmin in ascending neighbor order,
  // pulling in two-hop edges whose far endpoint sits inside the trailing
  // delta-window. Touch(x) is called for every endpoint whose D/M changed
  // on the far side (the PQ upsert hook).
  template <typename Touch>
  std::uint64_t expand(VertexId vmin, Touch&& touch) {
    std::uint64_t added = 0;
    for (const AdjEntry& one : g.neighbors(vmin)) {
      if (ordered[one.edge]) continue;
      const VertexId u = one.neighbor;
      assign(one.edge, vmin, u);
      ++added;
      for (const AdjEntry& two : g.neighbors(u)) {
        if (ordered[two.edge]) continue;
        const VertexId w = two.neighbor;
        if (!in_window(w)) continue;
        if (verify_window && !in_window_materialized(w)) ++window_violations;
        assign(two.edge, u, w);
        ++added;
        ++two_hop_edges;
        touch(w);
      }
      touch(u);
    }
    return added;
  }
};

// Unprocessed-vertex pool supporting O(1) seeded uniform draws and
// lowest-id draws for the deterministic restart mode.
struct RestartPool {
  std::vector<VertexId> items;
  std::vector<std::uint64_t> pos;
  std::uint64_t cursor = 0;  // lowest possibly-unprocessed id
  std::vector<char> alive;

  explicit RestartPool(std::uint64_t n) : items(n), pos(n), alive(n, 1) {
    for (std::uint64_t v = 0; v < n; ++v) items[v] = pos[v] = v;
  }

  bool empty() const { return items.empty(); }
  std::uint64_t size() const { return items.size(); }

  void remove(VertexId v) {
    const std::uint64_t p = pos[v];
    const VertexId last = items.back();
    items[p] = last;
    pos[last] = p;
    items.pop_back();
    alive[v] = 0;
  }

  VertexId draw_seeded(CounterRng& rng) const {
    return items[rng.next_below(items.size())];
  }

  VertexId draw_lowest() {
    while (!alive[cursor]) ++cursor;
    return cursor;
  }
};

}  // namespace

Ordering make_ordering(std::vector<std::uint64_t> perm) {
  Ordering o;
  o.inv.assign(perm.size(), kNeverOrdered);
  for (std::uint64_t i = 0; i < perm.size(); ++i) {
    const std::uint64_t e = perm[i];
    if (e >= perm.size() || o.inv[e] != kNeverOrdered)
      throw std::invalid_argument("ordering: permutation is not a bijection");
    o.inv[e] = i;
  }
  o.perm = std::move(perm);
  return o;
}

std::pair<std::uint64_t, std::uint64_t> priority_weights(
    std::uint64_t edge_count, std::uint64_t k_min, std::uint64_t k_max) {
  if (k_min < 1 || k_min > k_max || k_max > edge_count)
    throw std::invalid_argument("priority_weights: need 1 <= k_min <= k_max <= |E|");
  std::uint64_t alpha = 0;
  for (std::uint64_t k = k_min; k <= k_max; ++k) alpha += edge_count / k;
  return {alpha, k_max - k_min};
}

Ordering order_geo_fast(const Graph& g, const OrderingParams& params,
                        OrderingStats* stats, const SnapshotObserver& observer,
                        bool verify_two_hop_window) {
  const ResolvedParams r = resolve(g, params);
  OrderingStats local;
  Expansion ex(g, r.delta);
  ex.verify_window = verify_two_hop_window;

  // Lazy min-heap over (priority, vertex id); stale entries are detected by
  // comparing against the latest pushed priority.
  using Entry = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  std::vector<std::int64_t> latest_prio(g.vertex_count(), 0);
  std::vector<char> processed(g.vertex_count(), 0);
  RestartPool pool(g.vertex_count());
  CounterRng rng(params.seed);

  const auto touch = [&](VertexId x) {
    // Vertices with no remaining edges are dropped rather than upserted.
    if (processed[x] || ex.d[x] == 0) return;
    const std::int64_t p = priority(r.alpha, r.beta, ex.d[x], ex.m[x]);
    latest_prio[x] = p;
    pq.emplace(p, x);
  };

  std::vector<VertexId> frontier_scratch;
  while (!pool.empty()) {
    if (observer) {
      frontier_scratch.clear();
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!processed[v] && ex.m[v] != kNeverOrdered && ex.d[v] > 0)
          frontier_scratch.push_back(v);
      }
      observer(ExpansionSnapshot{ex.perm, ex.d, ex.m, frontier_scratch});
    }

    VertexId vmin = 0;
    bool have = false;
    while (!pq.empty()) {
      const auto [p, v] = pq.top();
      if (processed[v] || p != latest_prio[v]) {
        pq.pop();
        continue;
      }
      if (ex.d[v] == 0) {
        // Every incident edge was ordered through two-hop pulls; nothing
        // left to expand.
        pq.pop();
        processed[v] = 1;
        pool.remove(v);
        continue;
      }
      vmin = v;
      have = true;
      pq.pop();
      break;
    }
    if (pool.empty()) break;
    if (!have) {
      vmin = params.deterministic_restart ? pool.draw_lowest()
                                          : pool.draw_seeded(rng);
      if (ex.d[vmin] == 0) {
        // Leftover vertex whose edges were all ordered from the far side.
        processed[vmin] = 1;
        pool.remove(vmin);
        continue;
      }
      ++local.restarts;
    }

    ++local.iterations;
    const std::uint64_t added = ex.expand(vmin, touch);
    local.max_edges_per_iteration =
        std::max(local.max_edges_per_iteration, added);
    processed[vmin] = 1;
    pool.remove(vmin);
  }

  local.two_hop_edges = ex.two_hop_edges;
  local.two_hop_window_violations = ex.window_violations;
  if (stats) *stats = local;
  return make_ordering(std::move(ex.perm));
}

namespace {

// Partial ordering objective over the prefix Xv = perm + appended edges of a
// candidate vertex: for every k and every chunk of the full |E|-edge
// partition, count the distinct vertices covered by the prefix part of that
// chunk. Chunk geometry always uses the full edge count.
class PartialObjective {
 public:
  PartialObjective(const Graph& g, std::uint64_t k_min, std::uint64_t k_max)
      : g_(g),
        k_min_(k_min),
        k_max_(k_max),
        stamp_(g.vertex_count(), kNeverOrdered),
        epoch_(0) {}

  std::uint64_t evaluate(std::span<const std::uint64_t> prefix,
                         std::span<const std::uint64_t> appended) {
    const std::uint64_t m = g_.edge_count();
    const std::uint64_t len = prefix.size() + appended.size();
    std::uint64_t total = 0;
    for (std::uint64_t k = k_min_; k <= k_max_; ++k) {
      for (std::uint64_t p = 0; p < k; ++p) {
        const std::uint64_t lo = chunk_start(m, k, p);
        if (lo >= len) break;
        const std::uint64_t hi = std::min(chunk_start(m, k, p + 1), len);
        ++epoch_;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const std::uint64_t e =
              i < prefix.size() ? prefix[i] : appended[i - prefix.size()];
          const Edge& ed = g_.edge(e);
          if (stamp_[ed.a] != epoch_) {
            stamp_[ed.a] = epoch_;
            ++total;
          }
          if (stamp_[ed.b] != epoch_) {
            stamp_[ed.b] = epoch_;
            ++total;
          }
        }
      }
    }
    return total;
  }

 private:
  const Graph& g_;
  std::uint64_t k_min_;
  std::uint64_t k_max_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_;
};

}  // namespace

Ordering order_geo_baseline(const Graph& g, const OrderingParams& params) {
  if (g.edge_count() > params.baseline_edge_cap) {
    throw std::domain_error(
        "order_geo_baseline: graph has " + std::to_string(g.edge_count()) +
        " edges, above the cap of " + std::to_string(params.baseline_edge_cap));
  }
  const ResolvedParams r = resolve(g, params);
  Expansion ex(g, r.delta);
  PartialObjective objective(g, r.k_min, r.k_max);

  std::vector<char> processed(g.vertex_count(), 0);
  RestartPool pool(g.vertex_count());
  CounterRng rng(params.seed);

  std::vector<std::uint64_t> appended;
  while (!pool.empty()) {
    VertexId vmin = 0;
    bool have = false;
    std::uint64_t best = 0;
    // Frontier scan in ascending id; strict improvement keeps ties on the
    // lowest id.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (processed[v] || ex.m[v] == kNeverOrdered) continue;
      appended.clear();
      for (const AdjEntry& ae : g.neighbors(v)) {
        if (!ex.ordered[ae.edge]) appended.push_back(ae.edge);
      }
      const std::uint64_t f = objective.evaluate(ex.perm, appended);
      if (!have || f < best) {
        have = true;
        best = f;
        vmin = v;
      }
    }
    if (!have) {
      vmin = params.deterministic_restart ? pool.draw_lowest()
                                          : pool.draw_seeded(rng);
    }
    ex.expand(vmin, [](VertexId) {});
    processed[vmin] = 1;
    pool.remove(vmin);
  }
  return make_ordering(std::move(ex.perm));
}

Ordering order_trivial(const Graph& g, TrivialOrder strategy,
                       std::uint64_t seed) {
  const std::uint64_t m = g.edge_count();
  std::vector<std::uint64_t> perm(m);
  switch (strategy) {
    case TrivialOrder::input_order: {
      for (std::uint64_t i = 0; i < m; ++i) perm[i] = i;
      break;
    }
    case TrivialOrder::random_shuffle: {
      CounterRng rng(seed);
      for (std::uint64_t i = 0; i < m; ++i) perm[i] = i;
      for (std::uint64_t i = m; i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.next_below(i)]);
      }
      break;
    }
    case TrivialOrder::bfs: {
      CounterRng rng(seed);
      std::vector<char> visited(g.vertex_count(), 0);
      std::vector<char> ordered(m, 0);
      RestartPool pool(g.vertex_count());
      std::queue<VertexId> queue;
      std::uint64_t next = 0;
      while (!pool.empty()) {
        if (queue.empty()) {
          const VertexId s = pool.draw_seeded(rng);
          visited[s] = 1;
          pool.remove(s);
          queue.push(s);
        }
        while (!queue.empty()) {
          const VertexId v = queue.front();
          queue.pop();
          for (const AdjEntry& ae : g.neighbors(v)) {
            if (!ordered[ae.edge]) {
              ordered[ae.edge] = 1;
              perm[next++] = ae.edge;
            }
            if (!visited[ae.neighbor]) {
              visited[ae.neighbor] = 1;
              pool.remove(ae.neighbor);
              queue.push(ae.neighbor);
            }
          }
        }
      }
      break;
    }
  }
  return make_ordering(std::move(perm));
}

}  // namespace chunkpart
