#ifndef TRAAG_MIXED_GRAPH_H
#define TRAAG_MIXED_GRAPH_H

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "traag/signed_word.h"

namespace traag {

inline constexpr std::size_t kMaxVertices = 64;

// An edge {first, second}. When `directed`, first is the origin and second the terminus.
struct MixedEdge {
  VertexId first;
  VertexId second;
  bool directed = false;

  VertexId origin() const { return first; }
  VertexId terminus() const { return second; }

  friend bool operator==(const MixedEdge&, const MixedEdge&) = default;
};

// Parse and validation failures. `line` is 1-based, or 0 when not tied to input text.
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A simplicial graph some of whose edges carry a direction. Defines a twisted
// right-angled Artin group: an undirected edge {x,y} gives xy = yx, a directed edge
// with origin x gives xyx = y.
class MixedGraph {
 public:
  MixedGraph() = default;
  // Throws GraphError on loops, multi-edges, out-of-range vertices, duplicate names or
  // more than kMaxVertices vertices. `order` defaults to declaration order.
  MixedGraph(std::vector<std::string> names, std::vector<MixedEdge> edges,
             std::optional<AlphabetOrder> order = std::nullopt);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v.index); }
  std::optional<VertexId> find(std::string_view name) const;

  const std::vector<MixedEdge>& edges() const { return edges_; }
  std::size_t undirected_edge_count() const;
  std::size_t directed_edge_count() const;

  const AlphabetOrder& default_order() const { return order_; }

  bool adjacent(VertexId u, VertexId v) const { return (adjacency_[u.index] >> v.index) & 1u; }
  std::uint64_t neighbours(VertexId v) const { return adjacency_[v.index]; }
  // The edge joining u and v, if any.
  const MixedEdge* edge_between(VertexId u, VertexId v) const;

  bool is_origin(VertexId v) const;
  // Vertices that are the origin of at least one directed edge, in declaration order.
  std::vector<VertexId> origins() const;

  MixedGraph with_order(AlphabetOrder order) const;

 private:
  std::vector<std::string> names_;
  std::vector<MixedEdge> edges_;
  AlphabetOrder order_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::int32_t> edge_index_;  // n*n table into edges_, -1 when absent
};

// Line-based format, `#` starts a comment:
//   vertices: a b c
//   edge a b        (undirected)
//   edge a -> b     (directed, origin a)
//   order: b a c    (optional)
MixedGraph parse_graph(std::istream& in);
MixedGraph parse_graph_text(std::string_view text);
MixedGraph load_graph(const std::string& path);
std::string format_graph(const MixedGraph& g);

bool is_valid_vertex_name(std::string_view name);

// Same vertices and order, every edge undirected: the defining graph of the underlying
// right-angled Artin group.
MixedGraph underlying(const MixedGraph& g);

// True iff the vertices are pairwise adjacent. Throws std::out_of_range on unknown ids.
bool is_clique(const MixedGraph& g, std::span<const VertexId> vertices);

// A directed cycle a1 -> a2 -> ... -> an -> a1 (n >= 3) through directed edges whose
// vertices form a clique. Picks the shortest such cycle, then the lexicographically least
// by the graph's default order, rotated to start at its least vertex.
std::optional<std::vector<VertexId>> find_clique_directed_cycle(const MixedGraph& g);

}  // namespace traag

#endif  // TRAAG_MIXED_GRAPH_H
