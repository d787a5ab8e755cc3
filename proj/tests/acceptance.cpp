// Acceptance suite: one self-checking scenario per shipped guarantee, each
// printed as a single [PASS]/[FAIL] line. Returns nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chunkpart/chunk.hpp"
#include "chunkpart/generate.hpp"
#include "chunkpart/graph.hpp"
#include "chunkpart/io.hpp"
#include "chunkpart/metrics.hpp"
#include "chunkpart/ordering.hpp"
#include "chunkpart/partitioners.hpp"
#include "chunkpart/rng.hpp"
#include "chunkpart/scaling.hpp"

using namespace chunkpart;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && passed) {
      passed = false;
      detail = message;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1. Chunk boundaries of 14 edges over 4 parts: sizes 3,3,4,4 at 0,3,6,10.

Outcome criterion_boundaries() {
  Outcome out;
  const auto start = Clock::now();
  const PartitionSpec spec = make_partition_spec(14, 4);
  const double ms = seconds_since(start) * 1e3;
  out.require(spec.boundaries == std::vector<std::uint64_t>{0, 3, 6, 10, 14},
              "boundaries mismatch");
  for (std::uint64_t p = 0; p < 4; ++p) {
    out.require(spec.width(p) == std::vector<std::uint64_t>{3, 3, 4, 4}[p],
                "width mismatch at p=" + std::to_string(p));
  }
  out.require(ms < 1.0, "construction took " + std::to_string(ms) + " ms");
  if (out.passed) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "sizes 3+3+4+4 at 0,3,6,10 in %.4f ms", ms);
    out.detail = buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// 2. Closed-form chunk starts equal the naive summation on 1e5 random triples.

Outcome criterion_closed_form() {
  Outcome out;
  CounterRng rng(2024);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t m = rng.next_below(1000001);
    const std::uint64_t k = 1 + rng.next_below(512);
    const std::uint64_t p = rng.next_below(k + 1);
    std::uint64_t naive = 0;
    for (std::uint64_t x = 0; x < p; ++x) naive += (m + x) / k;
    if (chunk_start(m, k, p) != naive) {
      out.require(false, "mismatch at m=" + std::to_string(m) +
                             " k=" + std::to_string(k) +
                             " p=" + std::to_string(p));
      return out;
    }
  }
  out.detail = "100000 random triples, exact";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Boundary queries cost the same regardless of edge count.

double median_query_ns(std::uint64_t m) {
  const std::uint64_t k = 37;
  CounterRng rng(777);
  const std::size_t batch_size = 50000;
  const std::size_t batches = 22;  // first two are warmup
  std::vector<std::uint64_t> indices(batch_size);
  std::vector<double> per_call;
  volatile std::uint64_t sink = 0;
  for (std::size_t b = 0; b < batches; ++b) {
    for (auto& i : indices) i = rng.next_below(m);
    const auto start = Clock::now();
    std::uint64_t acc = 0;
    for (const std::uint64_t i : indices) acc += id2p(m, k, i);
    const double ns =
        std::chrono::duration<double, std::nano>(Clock::now() - start).count();
    sink = sink + acc;
    if (b >= 2) per_call.push_back(ns / static_cast<double>(batch_size));
  }
  std::sort(per_call.begin(), per_call.end());
  return per_call[per_call.size() / 2];
}

Outcome criterion_constant_time() {
  Outcome out;
  const double small = median_query_ns(10000);
  const double large = median_query_ns(100000000);
  const double ratio = std::max(small, large) / std::min(small, large);
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "|E|=1e4: %.2f ns/query, |E|=1e8: %.2f ns/query, ratio %.3f",
                small, large, ratio);
  out.detail = buf;
  out.require(ratio < 2.0, std::string("latency ratio too large: ") + buf);
  return out;
}

// ---------------------------------------------------------------------------
// 4. Migration estimate: |E|/2 for x=1, exact on divisible fixtures, within
//    2% of the exact count in the |E| >> (k+x)^2 regime.

Outcome criterion_migration_estimate() {
  Outcome out;
  for (const std::uint64_t m : {14ULL, 1000ULL, 123457ULL, 999999ULL}) {
    for (std::uint64_t k = 2; k <= 64; ++k) {
      if (migrated_estimate(m, k, 1) != static_cast<double>(m) / 2.0) {
        out.require(false, "estimate != |E|/2 at m=" + std::to_string(m) +
                               " k=" + std::to_string(k));
        return out;
      }
    }
  }
  // Divisible fixtures: |E| a multiple of k(k+1).
  for (const std::uint64_t k : {2ULL, 3ULL, 4ULL, 7ULL, 12ULL}) {
    const std::uint64_t m = k * (k + 1) * 100;
    const std::uint64_t exact = migrated_exact(m, k, k + 1);
    out.require(static_cast<double>(exact) == migrated_estimate(m, k, 1),
                "divisible fixture mismatch at k=" + std::to_string(k));
  }
  // Random regimes.
  CounterRng rng(44);
  int tested = 0;
  double worst = 0.0;
  while (tested < 300) {
    const std::uint64_t m = 100000 + rng.next_below(9900001);
    const std::uint64_t k = 2 + rng.next_below(63);
    const std::uint64_t x = 1 + rng.next_below(k);
    const double kx = static_cast<double>(k + x);
    if (kx * kx / static_cast<double>(m) >= 1e-3) continue;
    ++tested;
    const double err = std::abs(migrated_estimate(m, k, x) -
                                static_cast<double>(migrated_exact(m, k, k + x))) /
                       static_cast<double>(m);
    worst = std::max(worst, err);
    if (err >= 0.02) {
      out.require(false, "relative error " + std::to_string(err) + " at m=" +
                             std::to_string(m) + " k=" + std::to_string(k) +
                             " x=" + std::to_string(x));
      return out;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "x=1 exact, 300 regime samples, worst error %.4f", worst);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------------------
// 5. Both objective evaluations agree exactly on 1e3 fuzzed inputs.

Outcome criterion_objective_equality() {
  Outcome out;
  CounterRng rng(55);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t n = 5 + rng.next_below(20);
    const std::uint64_t m =
        std::min(2 + rng.next_below(48), n * (n - 1) / 2);
    const Graph g = canonicalize(gen_er(n, m, trial));
    Ordering o;
    switch (trial % 3) {
      case 0:
        o = order_trivial(g, TrivialOrder::random_shuffle, trial);
        break;
      case 1:
        o = order_trivial(g, TrivialOrder::bfs, trial);
        break;
      default: {
        OrderingParams params;
        params.seed = trial;
        o = order_geo_fast(g, params);
      }
    }
    const std::uint64_t k_min = 1 + rng.next_below(4);
    const std::uint64_t k_max =
        k_min + rng.next_below(std::max<std::uint64_t>(g.edge_count(), 1));
    const ObjectiveValue a = objective_def4(g, o, k_min, k_max);
    const ObjectiveValue b = objective_def5(g, o, k_min, k_max);
    if (a.raw != b.raw) {
      out.require(false, "raw mismatch at trial " + std::to_string(trial));
      return out;
    }
  }
  out.detail = "1000 fuzzed (graph, ordering, k-range) triples, exact";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Closed form of the appended-coverage sum on 100 fuzzed graphs.

struct SnapshotCopy {
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> d;
  std::vector<std::uint64_t> m;
  std::vector<VertexId> frontier;
};

std::uint64_t cover_count(const Graph& g,
                          const std::vector<std::uint64_t>& list,
                          std::int64_t lo, std::int64_t hi) {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(list.size()));
  std::set<VertexId> seen;
  for (std::int64_t i = lo; i < hi; ++i) {
    seen.insert(g.edge(list[i]).a);
    seen.insert(g.edge(list[i]).b);
  }
  return seen.size();
}

Outcome criterion_delta_v_closed_form() {
  Outcome out;
  CounterRng rng(66);
  int graphs_done = 0;
  std::uint64_t states_checked = 0;
  while (graphs_done < 100) {
    const std::uint64_t k = 2 + rng.next_below(5);
    const std::uint64_t w = 6 + rng.next_below(10);
    const std::uint64_t m = k * w;
    const Graph g = canonicalize(gen_er(m / 2 + 2, m, rng.next()));
    if (g.edge_count() != m || g.max_degree() >= w) continue;
    ++graphs_done;

    std::vector<SnapshotCopy> snapshots;
    OrderingParams params;
    params.seed = graphs_done;
    params.k_min = 2;
    params.k_max = std::min<std::uint64_t>(k, g.edge_count());
    const SnapshotObserver observer = [&](const ExpansionSnapshot& s) {
      snapshots.push_back(SnapshotCopy{
          {s.order_prefix.begin(), s.order_prefix.end()},
          {s.remaining_degree.begin(), s.remaining_degree.end()},
          {s.latest_order_index.begin(), s.latest_order_index.end()},
          {s.frontier.begin(), s.frontier.end()}});
    };
    order_geo_fast(g, params, nullptr, observer);

    for (const SnapshotCopy& s : snapshots) {
      const std::int64_t n = static_cast<std::int64_t>(s.prefix.size());
      if (n == 0) continue;
      std::vector<char> ordered(g.edge_count(), 0);
      for (const std::uint64_t e : s.prefix) ordered[e] = 1;
      for (const VertexId v : s.frontier) {
        const std::uint64_t d = s.d[v];
        const std::uint64_t m_v = s.m[v];
        const std::int64_t wi = static_cast<std::int64_t>(w);
        if (d == 0 || d >= w) continue;
        if (static_cast<std::int64_t>(m_v) + wi < n) continue;
        if (n + static_cast<std::int64_t>(d) + wi >
            static_cast<std::int64_t>(m))
          continue;
        std::vector<std::uint64_t> appended;
        for (const AdjEntry& ae : g.neighbors(v)) {
          if (!ordered[ae.edge]) appended.push_back(ae.edge);
        }
        bool fresh = true;
        for (std::size_t j = 0; j < appended.size(); ++j) {
          const Edge& e = g.edge(appended[j]);
          const VertexId far = e.a == v ? e.b : e.a;
          if (s.m[far] == kNeverOrdered) continue;
          if (static_cast<std::int64_t>(s.m[far]) >=
              n + static_cast<std::int64_t>(j) - wi + 1) {
            fresh = false;
            break;
          }
        }
        if (!fresh) continue;

        std::vector<std::uint64_t> extended = s.prefix;
        extended.insert(extended.end(), appended.begin(), appended.end());
        std::uint64_t enumerated = 0;
        for (std::int64_t i = n; i < static_cast<std::int64_t>(m); ++i) {
          enumerated += cover_count(g, extended, i - wi + 1, i + 1) -
                        cover_count(g, s.prefix, i - wi + 1, i + 1);
        }
        const std::uint64_t closed = w * d + s.prefix.size() + d - (m_v + 1);
        if (enumerated != closed) {
          out.require(false,
                      "mismatch: enumerated " + std::to_string(enumerated) +
                          " vs closed " + std::to_string(closed));
          return out;
        }
        ++states_checked;
      }
    }
  }
  out.require(states_checked >= 300, "too few sampled states to be meaningful");
  if (out.passed) {
    out.detail = "100 graphs, " + std::to_string(states_checked) +
                 " mid-run frontier states, exact";
  }
  return out;
}

// ---------------------------------------------------------------------------
// 7. Analytic bound on realized replication factors, hypothesis-instrumented.

Outcome criterion_rf_bound() {
  Outcome out;
  struct Fixture {
    std::string name;
    Graph graph;
  };
  std::vector<Fixture> fixtures;
  {
    RmatParams p;
    p.scale = 14;
    p.edge_factor = 16;
    p.seed = 1;
    fixtures.push_back({"rmat-s14", canonicalize(gen_rmat(p))});
    fixtures.push_back({"er-30k", canonicalize(gen_er(30000, 300000, 2))});
  }

  int checked = 0, skipped = 0;
  std::string skips;
  for (const Fixture& f : fixtures) {
    const Graph& g = f.graph;
    OrderingParams params;
    params.k_min = 4;
    params.k_max = 128;
    const std::uint64_t base = default_delta(g.edge_count(), params.k_max);
    params.delta = base > 0 ? base - 1 : 0;
    params.seed = 3;
    OrderingStats stats;
    const Ordering o = order_geo_fast(g, params, &stats);

    bool fixture_checked = false;
    for (const std::uint64_t k : {4, 8, 16, 32, 64, 128}) {
      const std::uint64_t smallest_chunk = g.edge_count() / k;
      if (stats.max_edges_per_iteration >= smallest_chunk) {
        ++skipped;
        skips += " " + f.name + ":k=" + std::to_string(k);
        continue;
      }
      fixture_checked = true;
      ++checked;
      const double rf = quality_report_cep(g, o, k).rf;
      const double bound = rf_upper_bound(g.vertex_count(), g.edge_count(), k);
      if (rf > bound) {
        out.require(false, f.name + " k=" + std::to_string(k) + ": rf " +
                               std::to_string(rf) + " exceeds bound " +
                               std::to_string(bound));
        return out;
      }
    }
    out.require(fixture_checked,
                f.name + ": hypothesis never held, nothing checked");
  }
  if (out.passed) {
    out.detail = std::to_string(checked) + " (fixture,k) pairs within bound, " +
                 std::to_string(skipped) + " skipped (hypothesis)" +
                 (skips.empty() ? "" : ":" + skips);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 8. Power-law bound row: alpha in {2.2, 2.4, 2.6, 2.8}.

Outcome criterion_powerlaw_row() {
  Outcome out;
  const double alphas[] = {2.2, 2.4, 2.6, 2.8};
  const double expected[] = {2.88, 2.12, 1.88, 1.75};
  std::string values;
  for (int i = 0; i < 4; ++i) {
    const double bound = powerlaw_bound(alphas[i]);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%.4f", i ? ", " : "", bound);
    values += buf;
    out.require(std::abs(bound - expected[i]) <= 0.01,
                "alpha " + std::to_string(alphas[i]) + " gave " +
                    std::to_string(bound));
  }
  if (out.passed) out.detail = values;
  return out;
}

// ---------------------------------------------------------------------------
// 9. Ordering + chunking beats 1D hashing and degree hashing on skewed graphs.

Outcome criterion_quality_ranking() {
  Outcome out;
  const std::uint64_t ks[] = {4, 8, 16, 32, 64, 128};
  int wins = 0, pairs = 0;
  for (int i = 0; i < 20; ++i) {
    RmatParams p;
    p.scale = static_cast<std::uint32_t>(14 + i % 3);
    p.edge_factor = 16;
    p.seed = 100 + i;
    const Graph g = canonicalize(gen_rmat(p));

    OrderingParams params;
    params.seed = 500 + i;
    const Ordering o = order_geo_fast(g, params);

    for (const std::uint64_t k : ks) {
      const double rf_cep = quality_report_cep(g, o, k).rf;
      const double rf_1d = replication_factor(g, partition_hash1d(g, k, 0));
      const double rf_dbh = replication_factor(g, partition_dbh(g, k));
      ++pairs;
      if (rf_cep < rf_1d && rf_cep < rf_dbh) ++wins;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "wins in %d of %d (graph,k) pairs (%.1f%%)",
                wins, pairs, 100.0 * wins / pairs);
  out.detail = buf;
  out.require(wins * 10 >= pairs * 9, std::string("below 90%: ") + buf);
  return out;
}

// ---------------------------------------------------------------------------
// 10. Chunk migration always beats random reassignment.

Outcome criterion_migration_vs_random() {
  Outcome out;
  const std::uint64_t ns[] = {10000,  17783,  31623,  56234,  100000,
                              177828, 316228, 562341, 1000000};
  for (const std::uint64_t n : ns) {
    for (std::uint64_t k = 2; k <= 64; ++k) {
      const std::uint64_t moved = migrated_exact(n, k, k + 1);
      if (!(moved * (k + 1) < n * k)) {
        out.require(false, "n=" + std::to_string(n) +
                               " k=" + std::to_string(k) + ": moved " +
                               std::to_string(moved));
        return out;
      }
    }
  }
  out.detail = "9 sizes x 63 k values, strict inequality";
  return out;
}

// ---------------------------------------------------------------------------
// 11. Byte-reproducibility of every algorithm under a fixed seed.

template <typename Fn>
bool bytes_reproducible(Fn&& produce) {
  std::ostringstream a, b;
  produce(a);
  produce(b);
  return a.str() == b.str() && !a.str().empty();
}

Outcome criterion_determinism() {
  Outcome out;
  RmatParams rp;
  rp.scale = 10;
  rp.edge_factor = 8;
  rp.seed = 11;
  const Graph skewed = canonicalize(gen_rmat(rp));
  const Graph small = canonicalize(gen_er(60, 150, 12));

  out.require(bytes_reproducible([&](std::ostream& os) {
                OrderingParams params;
                params.seed = 21;
                write_ordered_edges(os, skewed, order_geo_fast(skewed, params));
              }),
              "geo ordering not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                OrderingParams params;
                params.seed = 22;
                params.baseline_edge_cap = 5000;
                write_ordered_edges(os, small,
                                    order_geo_baseline(small, params));
              }),
              "baseline ordering not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                write_ordered_edges(
                    os, skewed,
                    order_trivial(skewed, TrivialOrder::random_shuffle, 23));
              }),
              "shuffle not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                write_ordered_edges(os, skewed,
                                    order_trivial(skewed, TrivialOrder::bfs, 24));
              }),
              "bfs not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                write_assignment(os, partition_hash1d(skewed, 13, 25));
              }),
              "hash1d not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                write_assignment(os, partition_hash2d(skewed, 12));
              }),
              "hash2d not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                write_assignment(os, partition_dbh(skewed, 7));
              }),
              "dbh not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                write_edge_list(os, gen_rmat(rp));
              }),
              "rmat not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                write_edge_list(os, gen_er(500, 900, 26));
              }),
              "er not reproducible");
  out.require(bytes_reproducible([&](std::ostream& os) {
                OrderingParams params;
                params.seed = 27;
                const Ordering o = order_geo_fast(small, params);
                const std::vector<std::uint64_t> schedule{4, 5, 6, 5, 4};
                for (const ScalingStep& s : run_schedule(small, o, schedule)) {
                  os << s.k_before << ',' << s.k_after << ','
                     << s.migrated_exact << ',' << s.migrated_estimate << ','
                     << s.quality_after.rf << '\n';
                }
              }),
              "schedule replay not reproducible");
  if (out.passed) out.detail = "10 algorithm outputs byte-identical";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "chunk boundaries of 14 edges over 4 parts", 5.0,
       criterion_boundaries},
      {2, "closed-form chunk starts vs naive summation", 5.0,
       criterion_closed_form},
      {3, "boundary-query latency independent of |E|", 60.0,
       criterion_constant_time},
      {4, "migration estimate accuracy", 30.0, criterion_migration_estimate},
      {5, "objective evaluations agree exactly", 120.0,
       criterion_objective_equality},
      {6, "appended-coverage closed form mid-run", 300.0,
       criterion_delta_v_closed_form},
      {7, "replication factor within analytic bound", 600.0,
       criterion_rf_bound},
      {8, "power-law bound row", 1.0, criterion_powerlaw_row},
      {9, "ordering+chunking beats hash baselines", 1800.0,
       criterion_quality_ranking},
      {10, "chunk migration beats random reassignment", 60.0,
       criterion_migration_vs_random},
      {11, "byte-reproducibility under fixed seeds", 300.0,
       criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= c.budget_seconds && outcome.passed) {
      outcome.passed = false;
      outcome.detail = "over time budget (" + std::to_string(elapsed) + " s)";
    }
    if (!outcome.passed) ++failures;
    std::printf("[%s] %2d. %s (%.2f s)%s%s\n",
                outcome.passed ? "PASS" : "FAIL", c.id, c.name, elapsed,
                outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
