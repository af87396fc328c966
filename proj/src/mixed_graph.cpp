#include "traag/mixed_graph.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <sstream>

namespace traag {

bool is_valid_vertex_name(std::string_view name) {
  if (name.empty() || name == "1") return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name[0])) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

MixedGraph::MixedGraph(std::vector<std::string> names, std::vector<MixedEdge> edges,
                       std::optional<AlphabetOrder> order)
    : names_(std::move(names)), edges_(std::move(edges)) {
  const std::size_t n = names_.size();
  if (n > kMaxVertices) {
    throw GraphError("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_valid_vertex_name(names_[i])) throw GraphError("invalid vertex name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw GraphError("duplicate vertex '" + names_[i] + "'");
    }
  }
  adjacency_.assign(n, 0);
  edge_index_.assign(n * n, -1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto u = edges_[k].first.index;
    auto v = edges_[k].second.index;
    if (u >= n || v >= n) throw GraphError("edge refers to an unknown vertex");
    if (u == v) throw GraphError("self-loop at vertex '" + names_[u] + "'");
    if (edge_index_[u * n + v] >= 0) {
      throw GraphError("duplicate edge between '" + names_[u] + "' and '" + names_[v] + "'");
    }
    edge_index_[u * n + v] = edge_index_[v * n + u] = static_cast<std::int32_t>(k);
    adjacency_[u] |= std::uint64_t{1} << v;
    adjacency_[v] |= std::uint64_t{1} << u;
  }
  if (order) {
    if (order->vertex_count() != n) throw GraphError("order does not cover the vertices");
    order_ = std::move(*order);
  } else {
    order_ = AlphabetOrder::identity(n);
  }
}

std::optional<VertexId> MixedGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return VertexId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::size_t MixedGraph::undirected_edge_count() const {
  return std::count_if(edges_.begin(), edges_.end(), [](const MixedEdge& e) { return !e.directed; });
}

std::size_t MixedGraph::directed_edge_count() const {
  return edges_.size() - undirected_edge_count();
}

const MixedEdge* MixedGraph::edge_between(VertexId u, VertexId v) const {
  auto n = names_.size();
  if (u.index >= n || v.index >= n) return nullptr;
  auto k = edge_index_[u.index * n + v.index];
  return k < 0 ? nullptr : &edges_[k];
}

bool MixedGraph::is_origin(VertexId v) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [v](const MixedEdge& e) { return e.directed && e.origin() == v; });
}

std::vector<VertexId> MixedGraph::origins() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (is_origin(VertexId{i})) out.push_back(VertexId{i});
  }
  return out;
}

MixedGraph MixedGraph::with_order(AlphabetOrder order) const {
  return MixedGraph(names_, edges_, std::move(order));
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

MixedGraph parse_graph(std::istream& in) {
  std::vector<std::string> names;
  std::vector<MixedEdge> edges;
  std::optional<AlphabetOrder> order;
  bool have_vertices = false;

  auto vertex = [&](const std::string& name, std::size_t line_no) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return VertexId{static_cast<std::uint32_t>(i)};
    }
    throw GraphError("unknown vertex '" + name + "'", line_no);
  };

  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    // Allow `vertices:a b` as well as `vertices: a b`.
    for (const char* key : {"vertices:", "order:"}) {
      auto pos = line.find(key);
      if (pos != std::string::npos) line.insert(pos + std::string_view(key).size(), " ");
    }
    auto tokens = split(line);
    if (tokens.empty()) continue;

    const std::string& head = tokens[0];
    if (!have_vertices) {
      if (head != "vertices:") throw GraphError("expected 'vertices:' first", line_no);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!is_valid_vertex_name(tokens[i])) {
          throw GraphError("invalid vertex name '" + tokens[i] + "'", line_no);
        }
        if (std::find(names.begin(), names.end(), tokens[i]) != names.end()) {
          throw GraphError("duplicate vertex '" + tokens[i] + "'", line_no);
        }
        names.push_back(tokens[i]);
      }
      if (names.size() > kMaxVertices) {
        throw GraphError("at most " + std::to_string(kMaxVertices) + " vertices are supported",
                         line_no);
      }
      have_vertices = true;
    } else if (head == "vertices:") {
      throw GraphError("'vertices:' given twice", line_no);
    } else if (head == "edge") {
      MixedEdge e;
      if (tokens.size() == 3) {
        e = {vertex(tokens[1], line_no), vertex(tokens[2], line_no), false};
      } else if (tokens.size() == 4 && tokens[2] == "->") {
        e = {vertex(tokens[1], line_no), vertex(tokens[3], line_no), true};
      } else {
        throw GraphError("malformed edge line", line_no);
      }
      if (e.first == e.second) throw GraphError("self-loop at vertex '" + tokens[1] + "'", line_no);
      for (const MixedEdge& f : edges) {
        if ((f.first == e.first && f.second == e.second) ||
            (f.first == e.second && f.second == e.first)) {
          throw GraphError("duplicate edge between '" + names[e.first.index] + "' and '" +
                               names[e.second.index] + "'",
                           line_no);
        }
      }
      edges.push_back(e);
    } else if (head == "order:") {
      if (order) throw GraphError("'order:' given twice", line_no);
      std::vector<VertexId> perm;
      for (std::size_t i = 1; i < tokens.size(); ++i) perm.push_back(vertex(tokens[i], line_no));
      try {
        if (perm.size() != names.size()) throw std::invalid_argument("size");
        order = AlphabetOrder(std::move(perm));
      } catch (const std::invalid_argument&) {
        throw GraphError("'order:' must be a permutation of the vertices", line_no);
      }
    } else {
      throw GraphError("unrecognised line '" + head + "'", line_no);
    }
  }
  if (!have_vertices) throw GraphError("missing 'vertices:' line");
  return MixedGraph(std::move(names), std::move(edges), std::move(order));
}

MixedGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

MixedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const MixedGraph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& name : g.names()) out << ' ' << name;
  out << '\n';
  for (const MixedEdge& e : g.edges()) {
    out << "edge " << g.name(e.first) << (e.directed ? " -> " : " ") << g.name(e.second) << '\n';
  }
  if (g.default_order() != AlphabetOrder::identity(g.vertex_count())) {
    out << "order:";
    for (VertexId v : g.default_order().vertices()) out << ' ' << g.name(v);
    out << '\n';
  }
  return out.str();
}

MixedGraph underlying(const MixedGraph& g) {
  std::vector<MixedEdge> edges = g.edges();
  for (MixedEdge& e : edges) e.directed = false;
  return MixedGraph(g.names(), std::move(edges), g.default_order());
}

bool is_clique(const MixedGraph& g, std::span<const VertexId> vertices) {
  for (VertexId v : vertices) {
    if (v.index >= g.vertex_count()) throw std::out_of_range("is_clique: unknown vertex");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j] && !g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

// Strongly connected components of the directed-edge subgraph (Tarjan).
std::vector<int> directed_components(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> out(n);
  for (const MixedEdge& e : g.edges()) {
    if (e.directed) out[e.origin().index].push_back(e.terminus().index);
  }
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  int counter = 0, components = 0;
  std::function<void(std::uint32_t)> visit = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : out[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return comp;
}

}  // namespace

std::optional<std::vector<VertexId>> find_clique_directed_cycle(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  const AlphabetOrder& order = g.default_order();
  auto comp = directed_components(g);

  // Directed successors of each vertex, ascending by order rank.
  std::vector<std::vector<VertexId>> succ(n);
  for (const MixedEdge& e : g.edges()) {
    if (e.directed && comp[e.origin().index] == comp[e.terminus().index]) {
      succ[e.origin().index].push_back(e.terminus());
    }
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end(),
              [&](VertexId a, VertexId b) { return order.rank(a) < order.rank(b); });
  }
  auto directed = [&](VertexId from, VertexId to) {
    const MixedEdge* e = g.edge_between(from, to);
    return e && e->directed && e->origin() == from;
  };

  std::vector<VertexId> path;
  // Extends `path` to exactly `length` vertices; every vertex after the first ranks above
  // the start, so the start is the least vertex of the cycle.
  std::function<bool(std::size_t, std::uint64_t)> extend = [&](std::size_t length,
                                                               std::uint64_t clique) -> bool {
    VertexId start = path.front();
    VertexId last = path.back();
    if (path.size() == length) return directed(last, start);
    for (VertexId next : succ[last.index]) {
      if (order.rank(next) <= order.rank(start)) continue;
      std::uint64_t bit = std::uint64_t{1} << next.index;
      if (clique & bit) continue;
      if ((g.neighbours(next) & clique) != clique) continue;
      path.push_back(next);
      if (extend(length, clique | bit)) return true;
      path.pop_back();
    }
    return false;
  };

  for (std::size_t length = 3; length <= n; ++length) {
    for (VertexId start : order.vertices()) {
      path.assign(1, start);
      if (extend(length, std::uint64_t{1} << start.index)) return path;
    }
  }
  return std::nullopt;
}

}  // namespace traag
