#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chunkpart/graph.hpp"
#include "chunkpart/ordering.hpp"
#include "chunkpart/partitioners.hpp"

namespace chunkpart {

// Binary container formats (all integers little-endian):
//   graph cache    "CPGR" | version u16 | |V| u64 | |E| u64 | |E| x (a, b) u64
//   ordered edges  "CPEO" | version u16 | |V| u64 | |E| u64 | |E| x (u, v) u64
//                  records follow the order-index sequence
//   assignment     "CPAS" | k u32 | |E| u64 | |E| x id u32

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint16_t kFormatVersion = 1;

void write_graph_cache(std::ostream& out, const Graph& g);
Graph read_graph_cache(std::istream& in);

void write_ordered_edges(std::ostream& out, const Graph& g,
                         const Ordering& ordering);

struct OrderedEdgeList {
  std::uint64_t vertex_count = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // order sequence

  // Rebuilds the canonical graph and the ordering over it.
  std::pair<Graph, Ordering> to_graph_and_ordering() const;
};

OrderedEdgeList read_ordered_edges(std::istream& in);

void write_assignment(std::ostream& out, const Assignment& a);
Assignment read_assignment(std::istream& in);

// CSV with header "edge_index,partition".
void write_assignment_csv(std::ostream& out, const Assignment& a);
Assignment read_assignment_csv(std::istream& in);

void write_edge_list(std::ostream& out,
                     const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs);

// Loads a graph from a path holding either a text edge list or a CPGR cache
// (detected by magic).
Graph load_graph_file(const std::string& path);

OrderedEdgeList load_ordered_edges_file(const std::string& path);

// True when the file starts with the given 4-byte magic.
bool file_has_magic(const std::string& path, const char magic[4]);

}  // namespace chunkpart
