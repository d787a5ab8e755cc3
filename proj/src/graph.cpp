#include "chunkpart/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>

namespace chunkpart {

namespace {

bool parse_u64(std::string_view token, std::uint64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_edge_list(
    std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::string_view rest(line);
    std::uint64_t values[2];
    int count = 0;
    while (true) {
      const auto begin = rest.find_first_not_of(" \t");
      if (begin == std::string_view::npos) break;
      rest.remove_prefix(begin);
      if (count == 0 && rest.front() == '#') {
        count = -1;  // comment line
        break;
      }
      auto end = rest.find_first_of(" \t");
      if (end == std::string_view::npos) end = rest.size();
      const std::string_view token = rest.substr(0, end);
      if (count >= 2) throw ParseError(line_no, "expected two fields");
      if (!parse_u64(token, values[count]))
        throw ParseError(line_no, "invalid vertex id '" + std::string(token) + "'");
      ++count;
      rest.remove_prefix(end);
    }
    if (count == -1 || count == 0) continue;
    if (count != 2) throw ParseError(line_no, "expected two fields");
    pairs.emplace_back(values[0], values[1]);
  }
  return pairs;
}

Graph canonicalize(std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs) {
  // Normalize endpoint order, drop loops, dedupe in either direction.
  std::size_t kept = 0;
  for (auto& [u, v] : pairs) {
    if (u == v) continue;
    pairs[kept++] = {std::min(u, v), std::max(u, v)};
  }
  pairs.resize(kept);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  // Dense ids in ascending order of the original ids.
  std::vector<std::uint64_t> ids;
  ids.reserve(pairs.size() * 2);
  for (const auto& [u, v] : pairs) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto dense = [&ids](std::uint64_t original) {
    return static_cast<VertexId>(
        std::lower_bound(ids.begin(), ids.end(), original) - ids.begin());
  };

  Graph g;
  g.vertex_count_ = ids.size();
  g.edges_.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    g.edges_.push_back(Edge{dense(u), dense(v)});
  }
  // Already sorted: densification preserves the order of (u, v) pairs.

  g.adj_offsets_.assign(g.vertex_count_ + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.adj_offsets_[e.a + 1];
    ++g.adj_offsets_[e.b + 1];
  }
  for (std::uint64_t v = 0; v < g.vertex_count_; ++v) {
    g.adj_offsets_[v + 1] += g.adj_offsets_[v];
    g.max_degree_ = std::max(g.max_degree_, g.degree(v));
  }
  g.adj_.resize(g.edges_.size() * 2);
  std::vector<std::uint64_t> cursor(g.adj_offsets_.begin(),
                                    g.adj_offsets_.end() - 1);
  for (std::uint64_t e = 0; e < g.edges_.size(); ++e) {
    const Edge& ed = g.edges_[e];
    g.adj_[cursor[ed.a]++] = AdjEntry{ed.b, e};
    g.adj_[cursor[ed.b]++] = AdjEntry{ed.a, e};
  }
  for (std::uint64_t v = 0; v < g.vertex_count_; ++v) {
    auto* first = g.adj_.data() + g.adj_offsets_[v];
    auto* last = g.adj_.data() + g.adj_offsets_[v + 1];
    std::sort(first, last, [](const AdjEntry& x, const AdjEntry& y) {
      return x.neighbor < y.neighbor;
    });
  }
  return g;
}

std::uint64_t Graph::find_edge(VertexId a, VertexId b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edge_count();
  return static_cast<std::uint64_t>(it - edges_.begin());
}

}  // namespace chunkpart
