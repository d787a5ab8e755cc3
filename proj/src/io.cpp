#include "chunkpart/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace chunkpart {

namespace {

void put_u16(std::ostream& out, std::uint16_t x) {
  const char bytes[2] = {static_cast<char>(x & 0xff),
                         static_cast<char>((x >> 8) & 0xff)};
  out.write(bytes, 2);
}

void put_u32(std::ostream& out, std::uint32_t x) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((x >> (8 * i)) & 0xff);
  out.write(bytes, 4);
}

void put_u64(std::ostream& out, std::uint64_t x) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((x >> (8 * i)) & 0xff);
  out.write(bytes, 8);
}

std::uint16_t get_u16(std::istream& in) {
  unsigned char bytes[2];
  in.read(reinterpret_cast<char*>(bytes), 2);
  if (!in) throw FormatError("truncated file");
  return static_cast<std::uint16_t>(bytes[0] | (bytes[1] << 8));
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  if (!in) throw FormatError("truncated file");
  std::uint32_t x = 0;
  for (int i = 3; i >= 0; --i) x = (x << 8) | bytes[i];
  return x;
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char bytes[8];
  in.read(reinterpret_cast<char*>(bytes), 8);
  if (!in) throw FormatError("truncated file");
  std::uint64_t x = 0;
  for (int i = 7; i >= 0; --i) x = (x << 8) | bytes[i];
  return x;
}

void expect_magic(std::istream& in, const char magic[4]) {
  char buf[4];
  in.read(buf, 4);
  if (!in || std::memcmp(buf, magic, 4) != 0)
    throw FormatError(std::string("bad magic, expected ") +
                      std::string(magic, 4));
}

void expect_version(std::istream& in) {
  const std::uint16_t version = get_u16(in);
  if (version != kFormatVersion)
    throw FormatError("unsupported format version " + std::to_string(version));
}

}  // namespace

void write_graph_cache(std::ostream& out, const Graph& g) {
  out.write("CPGR", 4);
  put_u16(out, kFormatVersion);
  put_u64(out, g.vertex_count());
  put_u64(out, g.edge_count());
  for (const Edge& e : g.edges()) {
    put_u64(out, e.a);
    put_u64(out, e.b);
  }
}

Graph read_graph_cache(std::istream& in) {
  expect_magic(in, "CPGR");
  expect_version(in);
  const std::uint64_t vertex_count = get_u64(in);
  const std::uint64_t edge_count = get_u64(in);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  pairs.reserve(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    const std::uint64_t a = get_u64(in);
    const std::uint64_t b = get_u64(in);
    if (a >= b) throw FormatError("graph cache edge is not canonical");
    pairs.emplace_back(a, b);
  }
  Graph g = canonicalize(std::move(pairs));
  if (g.vertex_count() != vertex_count || g.edge_count() != edge_count)
    throw FormatError("graph cache header does not match edge records");
  return g;
}

void write_ordered_edges(std::ostream& out, const Graph& g,
                         const Ordering& ordering) {
  out.write("CPEO", 4);
  put_u16(out, kFormatVersion);
  put_u64(out, g.vertex_count());
  put_u64(out, g.edge_count());
  for (const std::uint64_t e : ordering.perm) {
    put_u64(out, g.edge(e).a);
    put_u64(out, g.edge(e).b);
  }
}

OrderedEdgeList read_ordered_edges(std::istream& in) {
  expect_magic(in, "CPEO");
  expect_version(in);
  OrderedEdgeList list;
  list.vertex_count = get_u64(in);
  const std::uint64_t edge_count = get_u64(in);
  list.edges.reserve(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    const std::uint64_t u = get_u64(in);
    const std::uint64_t v = get_u64(in);
    list.edges.emplace_back(u, v);
  }
  return list;
}

std::pair<Graph, Ordering> OrderedEdgeList::to_graph_and_ordering() const {
  Graph g = canonicalize(edges);
  if (g.vertex_count() != vertex_count || g.edge_count() != edges.size())
    throw FormatError("ordered edge list is not a canonical edge sequence");
  std::vector<std::uint64_t> perm;
  perm.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    const std::uint64_t e = g.find_edge(u, v);
    if (e == g.edge_count())
      throw FormatError("ordered edge list contains an unknown edge");
    perm.push_back(e);
  }
  return {std::move(g), make_ordering(std::move(perm))};
}

void write_assignment(std::ostream& out, const Assignment& a) {
  out.write("CPAS", 4);
  put_u32(out, static_cast<std::uint32_t>(a.k));
  put_u64(out, a.part_of.size());
  for (const std::uint32_t p : a.part_of) put_u32(out, p);
}

Assignment read_assignment(std::istream& in) {
  expect_magic(in, "CPAS");
  Assignment a;
  a.k = get_u32(in);
  const std::uint64_t edge_count = get_u64(in);
  a.part_of.reserve(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    const std::uint32_t p = get_u32(in);
    if (p >= a.k) throw FormatError("assignment id out of range");
    a.part_of.push_back(p);
  }
  return a;
}

void write_assignment_csv(std::ostream& out, const Assignment& a) {
  out << "edge_index,partition\n";
  for (std::uint64_t e = 0; e < a.part_of.size(); ++e) {
    out << e << ',' << a.part_of[e] << '\n';
  }
}

Assignment read_assignment_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty assignment csv");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "edge_index,partition")
    throw FormatError("assignment csv header mismatch");
  Assignment a;
  std::uint64_t expected = 0;
  std::uint32_t max_part = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw FormatError("assignment csv row missing comma");
    std::uint64_t index = 0;
    std::uint32_t part = 0;
    const char* s = line.data();
    auto r1 = std::from_chars(s, s + comma, index);
    auto r2 = std::from_chars(s + comma + 1, s + line.size(), part);
    if (r1.ec != std::errc() || r2.ec != std::errc() ||
        r1.ptr != s + comma || r2.ptr != s + line.size())
      throw FormatError("assignment csv row is not numeric");
    if (index != expected)
      throw FormatError("assignment csv rows must be dense and in order");
    ++expected;
    max_part = std::max(max_part, part);
    a.part_of.push_back(part);
  }
  a.k = a.part_of.empty() ? 1 : std::uint64_t(max_part) + 1;
  return a;
}

void write_edge_list(
    std::ostream& out,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
  for (const auto& [u, v] : pairs) out << u << ' ' << v << '\n';
}

bool file_has_magic(const std::string& path, const char magic[4]) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  char buf[4];
  in.read(buf, 4);
  return in && std::memcmp(buf, magic, 4) == 0;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  if (file_has_magic(path, "CPGR")) return read_graph_cache(in);
  if (file_has_magic(path, "CPEO")) {
    return canonicalize(read_ordered_edges(in).edges);
  }
  return canonicalize(parse_edge_list(in));
}

OrderedEdgeList load_ordered_edges_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_ordered_edges(in);
}

}  // namespace chunkpart
