#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chunkpart/chunk.hpp"
#include "chunkpart/generate.hpp"
#include "chunkpart/graph.hpp"
#include "chunkpart/io.hpp"
#include "chunkpart/metrics.hpp"
#include "chunkpart/ordering.hpp"
#include "chunkpart/partitioners.hpp"
#include "chunkpart/rng.hpp"
#include "chunkpart/scaling.hpp"

using json = nlohmann::json;
using namespace chunkpart;

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

std::vector<std::uint64_t> parse_k_list(const std::string& text) {
  std::vector<std::uint64_t> ks;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    if (!token.empty()) {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(token, &used);
      if (used != token.size())
        throw std::invalid_argument("invalid k value '" + token + "'");
      ks.push_back(value);
    }
    pos = comma + 1;
  }
  if (ks.empty()) throw std::invalid_argument("empty k list");
  return ks;
}

unsigned thread_cap(std::size_t work_items) {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("CHUNKPART_THREADS")) {
    const unsigned long parsed = std::strtoul(env, nullptr, 10);
    if (parsed >= 1) threads = std::min<unsigned long>(threads, parsed);
  }
  return static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(work_items, 1)));
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned threads = thread_cap(n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

struct GenOptions {
  std::string model = "rmat";
  std::uint32_t scale = 14;
  std::uint64_t edge_factor = 16;
  double a = 0.57, b = 0.19, c = 0.19, d = 0.05;
  std::uint64_t n = 0, m = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string cache_out;
};

int run_gen(const GenOptions& opt) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (opt.model == "rmat") {
    RmatParams params;
    params.scale = opt.scale;
    params.edge_factor = opt.edge_factor;
    params.a = opt.a;
    params.b = opt.b;
    params.c = opt.c;
    params.d = opt.d;
    params.seed = opt.seed;
    pairs = gen_rmat(params);
  } else if (opt.model == "er") {
    pairs = gen_er(opt.n, opt.m, opt.seed);
  } else {
    throw std::invalid_argument("unknown model '" + opt.model + "'");
  }
  auto out = open_out(opt.out);
  write_edge_list(out, pairs);
  std::cout << "wrote " << pairs.size() << " raw pairs to " << opt.out << "\n";
  if (!opt.cache_out.empty()) {
    const Graph g = canonicalize(pairs);
    auto cache = open_out(opt.cache_out);
    write_graph_cache(cache, g);
    std::cout << "cached canonical graph (" << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges) to " << opt.cache_out << "\n";
  }
  return 0;
}

struct OrderOptions {
  std::string in;
  std::string out;
  std::string algo = "geo";
  std::uint64_t k_min = 4;
  std::uint64_t k_max = 128;
  std::optional<std::uint64_t> delta;
  std::uint64_t seed = 0;
  bool deterministic_restart = false;
  std::uint64_t baseline_cap = 5000;
};

int run_order(const OrderOptions& opt) {
  const Graph g = load_graph_file(opt.in);
  OrderingParams params;
  params.k_min = opt.k_min;
  params.k_max = opt.k_max;
  params.delta = opt.delta;
  params.seed = opt.seed;
  params.deterministic_restart = opt.deterministic_restart;
  params.baseline_edge_cap = opt.baseline_cap;

  const auto start = std::chrono::steady_clock::now();
  Ordering ordering;
  if (opt.algo == "geo") {
    ordering = order_geo_fast(g, params);
  } else if (opt.algo == "geo-baseline") {
    ordering = order_geo_baseline(g, params);
  } else if (opt.algo == "input") {
    ordering = order_trivial(g, TrivialOrder::input_order, opt.seed);
  } else if (opt.algo == "random") {
    ordering = order_trivial(g, TrivialOrder::random_shuffle, opt.seed);
  } else if (opt.algo == "bfs") {
    ordering = order_trivial(g, TrivialOrder::bfs, opt.seed);
  } else {
    throw std::invalid_argument("unknown ordering algorithm '" + opt.algo + "'");
  }
  const double ms = elapsed_ms(start);

  auto out = open_out(opt.out);
  write_ordered_edges(out, g, ordering);
  std::cout << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
            << " algo=" << opt.algo << " elapsed_ms=" << fmt(ms) << "\n";
  return 0;
}

struct PartitionOptions {
  std::string in;
  std::string method = "cep";
  std::uint64_t k = 0;
  std::uint64_t salt = 0;
  std::string format = "json";
  std::string out;  // optional materialized assignment
};

void write_assignment_file(const std::string& path, const Assignment& a) {
  auto out = open_out(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    write_assignment_csv(out, a);
  } else {
    write_assignment(out, a);
  }
}

int run_partition(const PartitionOptions& opt) {
  if (opt.k == 0) throw std::invalid_argument("--k must be >= 1");
  if (opt.method == "cep") {
    const OrderedEdgeList list = load_ordered_edges_file(opt.in);
    const std::uint64_t m = list.edges.size();
    const PartitionSpec spec = make_partition_spec(m, opt.k);

    // Boundary-query latency over a fixed probe set.
    double query_ns = 0.0;
    if (m > 0) {
      CounterRng rng(1);
      std::vector<std::uint64_t> probes(100000);
      for (auto& p : probes) p = rng.next_below(m);
      volatile std::uint64_t sink = 0;
      const auto start = std::chrono::steady_clock::now();
      std::uint64_t acc = 0;
      for (const std::uint64_t i : probes) acc += id2p(m, opt.k, i);
      const double ns =
          std::chrono::duration<double, std::nano>(
              std::chrono::steady_clock::now() - start)
              .count();
      sink = acc;
      (void)sink;
      query_ns = ns / static_cast<double>(probes.size());
    }

    if (!opt.out.empty()) {
      // Materialized assignments are indexed by canonical edge id.
      const auto [g, ordering] = list.to_graph_and_ordering();
      Assignment a;
      a.k = opt.k;
      a.part_of.resize(m);
      for (std::uint64_t i = 0; i < m; ++i) {
        a.part_of[ordering.perm[i]] =
            static_cast<std::uint32_t>(id2p(m, opt.k, i));
      }
      write_assignment_file(opt.out, a);
    }

    if (opt.format == "json") {
      json report{{"schema", 1},
                  {"method", "cep"},
                  {"k", opt.k},
                  {"edge_count", m},
                  {"boundaries", spec.boundaries},
                  {"query_ns", query_ns}};
      std::cout << report.dump() << "\n";
    } else {
      std::cout << "p,start,width\n";
      for (std::uint64_t p = 0; p < opt.k; ++p) {
        std::cout << p << ',' << spec.start(p) << ',' << spec.width(p) << "\n";
      }
      std::cerr << "query_ns=" << fmt(query_ns) << "\n";
    }
    return 0;
  }

  const Graph g = load_graph_file(opt.in);
  Assignment a;
  if (opt.method == "hash1d") {
    a = partition_hash1d(g, opt.k, opt.salt);
  } else if (opt.method == "hash2d") {
    a = partition_hash2d(g, opt.k);
  } else if (opt.method == "dbh") {
    a = partition_dbh(g, opt.k);
  } else {
    throw std::invalid_argument("unknown method '" + opt.method + "'");
  }
  if (!opt.out.empty()) write_assignment_file(opt.out, a);
  if (opt.format == "json") {
    json report{{"schema", 1},
                {"method", opt.method},
                {"k", opt.k},
                {"edge_count", g.edge_count()}};
    std::cout << report.dump() << "\n";
  } else {
    std::cout << "method,k,edge_count\n"
              << opt.method << ',' << opt.k << ',' << g.edge_count() << "\n";
  }
  return 0;
}

struct EvaluateOptions {
  std::string in;          // ordered edge list
  std::string graph;       // graph path for assignment mode
  std::string assignment;  // assignment path
  std::string k_list = "4,8,16,32,64,128";
  std::string format = "json";
};

json report_to_json(const QualityReport& r,
                    const std::optional<ObjectiveValue>& objective) {
  json entry{{"k", r.k}, {"rf", r.rf}, {"eb", r.eb}, {"vb", r.vb}};
  json parts = json::array();
  for (const auto& [edges, covered] : r.per_partition) {
    parts.push_back(json::array({edges, covered}));
  }
  entry["per_partition"] = parts;
  if (objective) {
    entry["objective_raw"] = objective->raw;
    entry["objective"] = objective->total;
  }
  return entry;
}

void print_reports(
    const std::vector<std::pair<QualityReport, std::optional<ObjectiveValue>>>&
        reports,
    const std::string& format) {
  if (format == "json") {
    json out{{"schema", 1}, {"reports", json::array()}};
    for (const auto& [report, objective] : reports) {
      out["reports"].push_back(report_to_json(report, objective));
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "k,rf,eb,vb,objective\n";
    for (const auto& [report, objective] : reports) {
      std::cout << report.k << ',' << fmt(report.rf) << ',' << fmt(report.eb)
                << ',' << fmt(report.vb) << ','
                << (objective ? fmt(objective->total) : "") << "\n";
    }
  }
}

int run_evaluate(const EvaluateOptions& opt) {
  std::vector<std::pair<QualityReport, std::optional<ObjectiveValue>>> reports;
  if (!opt.assignment.empty()) {
    if (opt.graph.empty())
      throw std::invalid_argument("--assignment requires --graph");
    const Graph g = load_graph_file(opt.graph);
    std::ifstream in(opt.assignment, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + opt.assignment);
    const Assignment a = file_has_magic(opt.assignment, "CPAS")
                             ? read_assignment(in)
                             : read_assignment_csv(in);
    reports.emplace_back(quality_report(g, a), std::nullopt);
  } else {
    if (opt.in.empty())
      throw std::invalid_argument("need --in (ordered edges) or --assignment");
    const auto [g, ordering] =
        load_ordered_edges_file(opt.in).to_graph_and_ordering();
    const std::vector<std::uint64_t> ks = parse_k_list(opt.k_list);
    reports.resize(ks.size());
    parallel_for(ks.size(), [&](std::size_t i) {
      reports[i] = {quality_report_cep(g, ordering, ks[i]),
                    objective_def4(g, ordering, ks[i], ks[i])};
    });
  }
  print_reports(reports, opt.format);
  return 0;
}

struct ScaleOptions {
  std::string in;
  std::string schedule;
  std::string schedule_file;
  std::string format = "json";
};

int run_scale(const ScaleOptions& opt) {
  std::vector<std::uint64_t> schedule;
  if (!opt.schedule_file.empty()) {
    std::ifstream in(opt.schedule_file);
    if (!in) throw std::runtime_error("cannot open " + opt.schedule_file);
    std::uint64_t k;
    while (in >> k) schedule.push_back(k);
  } else if (!opt.schedule.empty()) {
    schedule = parse_k_list(opt.schedule);
  }
  if (schedule.size() < 2)
    throw std::invalid_argument("schedule needs at least two k values");

  const auto [g, ordering] =
      load_ordered_edges_file(opt.in).to_graph_and_ordering();
  for (std::size_t i = 0; i + 1 < schedule.size(); ++i) {
    const std::uint64_t lo = std::min(schedule[i], schedule[i + 1]);
    const std::uint64_t hi = std::max(schedule[i], schedule[i + 1]);
    if (lo != hi && !migration_regime_ok(g.edge_count(), lo, hi - lo)) {
      std::cerr << "warning: step " << schedule[i] << "->" << schedule[i + 1]
                << " is outside the |E| >> k+x regime; the estimate may be "
                   "inaccurate\n";
    }
  }
  const auto steps = run_schedule(g, ordering, schedule);

  std::uint64_t total_exact = 0;
  double total_estimate = 0.0;
  for (const ScalingStep& s : steps) {
    total_exact += s.migrated_exact;
    total_estimate += s.migrated_estimate;
  }

  if (opt.format == "json") {
    json out{{"schema", 1}, {"steps", json::array()}};
    for (const ScalingStep& s : steps) {
      out["steps"].push_back(json{{"k_before", s.k_before},
                                  {"k_after", s.k_after},
                                  {"migrated_exact", s.migrated_exact},
                                  {"migrated_estimate", s.migrated_estimate},
                                  {"rf_bound", s.rf_bound},
                                  {"rf", s.quality_after.rf},
                                  {"eb", s.quality_after.eb},
                                  {"vb", s.quality_after.vb}});
    }
    out["totals"] = json{{"migrated_exact", total_exact},
                         {"migrated_estimate", total_estimate}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "k_before,k_after,migrated_exact,migrated_estimate,rf,eb,vb,"
                 "rf_bound\n";
    for (const ScalingStep& s : steps) {
      std::cout << s.k_before << ',' << s.k_after << ',' << s.migrated_exact
                << ',' << fmt(s.migrated_estimate) << ','
                << fmt(s.quality_after.rf) << ',' << fmt(s.quality_after.eb)
                << ',' << fmt(s.quality_after.vb) << ',' << fmt(s.rf_bound)
                << "\n";
    }
    std::cout << "TOTAL,," << total_exact << ',' << fmt(total_estimate)
              << ",,,,\n";
  }
  return 0;
}

struct BoundOptions {
  std::string alphas;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t k = 0;
  std::string format = "json";
};

int run_bound(const BoundOptions& opt) {
  const bool have_alphas = !opt.alphas.empty();
  const bool have_graph = opt.vertices > 0;
  if (!have_alphas && !have_graph)
    throw std::invalid_argument("need --alphas and/or --vertices/--edges/--k");

  std::vector<std::pair<double, double>> rows;
  if (have_alphas) {
    std::size_t pos = 0;
    while (pos < opt.alphas.size()) {
      std::size_t comma = opt.alphas.find(',', pos);
      if (comma == std::string::npos) comma = opt.alphas.size();
      const std::string token = opt.alphas.substr(pos, comma - pos);
      if (!token.empty()) {
        const double alpha = std::stod(token);
        rows.emplace_back(alpha, powerlaw_bound(alpha));
      }
      pos = comma + 1;
    }
  }
  std::optional<double> rf_bound_value;
  if (have_graph) {
    if (opt.k == 0) throw std::invalid_argument("--k must be >= 1");
    rf_bound_value = rf_upper_bound(opt.vertices, opt.edges, opt.k);
  }

  if (opt.format == "json") {
    json out{{"schema", 1}};
    if (!rows.empty()) {
      json pl = json::array();
      for (const auto& [alpha, bound] : rows) {
        pl.push_back(json{{"alpha", alpha}, {"bound", bound}});
      }
      out["powerlaw"] = pl;
    }
    if (rf_bound_value) {
      out["rf_bound"] = json{{"vertices", opt.vertices},
                             {"edges", opt.edges},
                             {"k", opt.k},
                             {"bound", *rf_bound_value}};
    }
    std::cout << out.dump() << "\n";
  } else {
    if (!rows.empty()) {
      std::cout << "alpha,bound\n";
      for (const auto& [alpha, bound] : rows) {
        std::cout << fmt(alpha) << ',' << fmt(bound) << "\n";
      }
    }
    if (rf_bound_value) {
      std::cout << "vertices,edges,k,bound\n"
                << opt.vertices << ',' << opt.edges << ',' << opt.k << ','
                << fmt(*rf_bound_value) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph edge ordering and chunk-based edge partitioning toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a synthetic graph");
  gen_cmd->add_option("--model", gen.model, "rmat or er");
  gen_cmd->add_option("--scale", gen.scale, "rmat: log2 vertex count");
  gen_cmd->add_option("--edge-factor", gen.edge_factor, "rmat: samples per vertex");
  gen_cmd->add_option("--a", gen.a, "rmat quadrant probability");
  gen_cmd->add_option("--b", gen.b, "rmat quadrant probability");
  gen_cmd->add_option("--c", gen.c, "rmat quadrant probability");
  gen_cmd->add_option("--d", gen.d, "rmat quadrant probability");
  gen_cmd->add_option("--n", gen.n, "er: vertex count");
  gen_cmd->add_option("--m", gen.m, "er: edge count");
  gen_cmd->add_option("--seed", gen.seed, "rng seed");
  gen_cmd->add_option("--out", gen.out, "output edge list path")->required();
  gen_cmd->add_option("--cache-out", gen.cache_out,
                      "also write the canonical binary graph cache (CPGR)");

  OrderOptions order;
  CLI::App* order_cmd = app.add_subcommand("order", "compute an edge ordering");
  order_cmd->add_option("--in", order.in, "input graph (text or CPGR)")
      ->required();
  order_cmd->add_option("--out", order.out, "output ordered edge list (CPEO)")
      ->required();
  order_cmd->add_option("--algo", order.algo,
                        "geo | geo-baseline | input | random | bfs");
  order_cmd->add_option("--kmin", order.k_min, "smallest target k");
  order_cmd->add_option("--kmax", order.k_max, "largest target k");
  std::uint64_t delta_value = 0;
  CLI::Option* delta_opt =
      order_cmd->add_option("--delta", delta_value, "two-hop window override");
  order_cmd->add_option("--seed", order.seed, "rng seed");
  order_cmd->add_flag("--deterministic-restart", order.deterministic_restart,
                      "restart on the lowest unprocessed vertex id");
  order_cmd->add_option("--baseline-cap", order.baseline_cap,
                        "edge cap for geo-baseline");

  PartitionOptions partition;
  CLI::App* partition_cmd =
      app.add_subcommand("partition", "split an ordered edge list");
  partition_cmd->add_option("--in", partition.in, "input file")->required();
  partition_cmd->add_option("--method", partition.method,
                            "cep | hash1d | hash2d | dbh");
  partition_cmd->add_option("--k", partition.k, "partition count")->required();
  partition_cmd->add_option("--salt", partition.salt, "hash1d salt");
  partition_cmd->add_option("--format", partition.format, "json | csv");
  partition_cmd->add_option("--out", partition.out,
                            "materialized assignment path (.csv for text)");

  EvaluateOptions evaluate;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "quality metrics per k");
  evaluate_cmd->add_option("--in", evaluate.in, "ordered edge list (CPEO)");
  evaluate_cmd->add_option("--graph", evaluate.graph,
                           "graph path (assignment mode)");
  evaluate_cmd->add_option("--assignment", evaluate.assignment,
                           "assignment path (CPAS or csv)");
  evaluate_cmd->add_option("--k-list", evaluate.k_list, "comma-separated ks");
  evaluate_cmd->add_option("--format", evaluate.format, "json | csv");

  ScaleOptions scale;
  CLI::App* scale_cmd =
      app.add_subcommand("scale", "replay a dynamic scaling schedule");
  scale_cmd->add_option("--in", scale.in, "ordered edge list (CPEO)")
      ->required();
  scale_cmd->add_option("--schedule", scale.schedule, "comma-separated ks");
  scale_cmd->add_option("--schedule-file", scale.schedule_file,
                        "file with one k per line");
  scale_cmd->add_option("--format", scale.format, "json | csv");

  BoundOptions bound;
  CLI::App* bound_cmd =
      app.add_subcommand("bound", "analytic replication-factor bounds");
  bound_cmd->add_option("--alphas", bound.alphas,
                        "comma-separated power-law exponents (> 2)");
  bound_cmd->add_option("--vertices", bound.vertices, "vertex count");
  bound_cmd->add_option("--edges", bound.edges, "edge count");
  bound_cmd->add_option("--k", bound.k, "partition count");
  bound_cmd->add_option("--format", bound.format, "json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*delta_opt) order.delta = delta_value;
    if (gen_cmd->parsed()) return run_gen(gen);
    if (order_cmd->parsed()) return run_order(order);
    if (partition_cmd->parsed()) return run_partition(partition);
    if (evaluate_cmd->parsed()) return run_evaluate(evaluate);
    if (scale_cmd->parsed()) return run_scale(scale);
    if (bound_cmd->parsed()) return run_bound(bound);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
