#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chunkpart {

using VertexId = std::uint64_t;

// Canonical undirected edge: a < b, no self loops.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct AdjEntry {
  VertexId neighbor;
  std::uint64_t edge;  // index into Graph::edges()
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line_arg, const std::string& what_arg)
      : std::runtime_error("line " + std::to_string(line_arg) + ": " + what_arg),
        line(line_arg) {}
  std::size_t line;
};

// Simple undirected graph with dense vertex ids, a lexicographically sorted
// edge list, and CSR adjacency carrying the incident edge index. Immutable
// after construction; safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  std::uint64_t vertex_count() const { return vertex_count_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::uint64_t e) const { return edges_[e]; }

  std::uint64_t degree(VertexId v) const {
    return adj_offsets_[v + 1] - adj_offsets_[v];
  }

  std::uint64_t max_degree() const { return max_degree_; }

  // Sorted ascending by neighbor id.
  std::span<const AdjEntry> neighbors(VertexId v) const {
    return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
  }

  // Index of the canonical edge (a,b), or edge_count() if absent.
  std::uint64_t find_edge(VertexId a, VertexId b) const;

 private:
  friend Graph canonicalize(std::vector<std::pair<std::uint64_t, std::uint64_t>>);

  std::uint64_t vertex_count_ = 0;
  std::uint64_t max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_offsets_;  // vertex_count_ + 1 entries
  std::vector<AdjEntry> adj_;
};

// Reads whitespace-separated "u v" lines. Lines starting with '#' are
// comments; blank lines are skipped. Throws ParseError with a 1-based line
// number on a non-integer token or wrong arity.
std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_edge_list(
    std::istream& in);

// Drops self loops, deduplicates edges regardless of direction, densifies
// vertex ids preserving their numeric order, and builds the CSR adjacency.
// An empty edge set yields the valid empty graph.
Graph canonicalize(std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs);

}  // namespace chunkpart
