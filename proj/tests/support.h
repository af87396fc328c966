// Shared fixtures and brute-force oracles for the test suites. The oracles deliberately
// avoid the library's own algorithms where an independent route exists.
#ifndef TRAAG_TESTS_SUPPORT_H
#define TRAAG_TESTS_SUPPORT_H

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "traag/analysis.h"
#include "traag/growth.h"
#include "traag/mixed_graph.h"
#include "traag/presentation.h"
#include "traag/rewriting.h"
#include "traag/signed_word.h"

namespace test {

using namespace traag;

inline std::string data_path(const std::string& file) {
  return std::string(TRAAG_DATA_DIR) + "/" + file;
}

inline MixedGraph graph(std::string_view text) { return parse_graph_text(text); }

inline SignedWord word(const MixedGraph& g, std::string_view text) {
  return parse_word(text, g.names());
}

inline std::string show(const MixedGraph& g, const SignedWord& w) {
  return format_word(w, g.names());
}

inline const char* kZ2 = "vertices: a b\nedge a b\n";
inline const char* kKlein = "vertices: a b\nedge a -> b\n";
inline const char* kDelta = "vertices: a b c\nedge a -> b\nedge b -> c\nedge c -> a\n";
inline const char* kK3 = "vertices: a b c\nedge a b\nedge b c\nedge c a\n";
inline const char* kPath = "vertices: a b c\nedge a b\nedge b -> c\n";
inline const char* kPathOrdered = "vertices: a b c\nedge a b\nedge b -> c\norder: b a c\n";
inline const char* kPentagon =
    "vertices: a b c d e\nedge a b\nedge b c\nedge c d\nedge d e\nedge e a\n";
inline const char* kGamma1 = "vertices: a b c\nedge a b\nedge b -> c\norder: b a c\n";
inline const char* kGamma2 = "vertices: x y z\nedge y -> x\nedge y -> z\norder: y x z\n";

// A presentation together with a finite completion.
struct Group {
  Presentation p;
  CompletionReport crs;

  SignedWord nf(const SignedWord& w) const { return normal_form(p, crs, w).word; }
};

// Completes with the graph's own order, falling back to the first permutation that gives
// a finite system. Returns nullopt if none is found.
inline std::optional<Group> try_group(const MixedGraph& g,
                                      CompletionBudget budget = {200, 200000}) {
  auto order = find_finite_order(g, budget);
  if (!order) return std::nullopt;
  Group grp{build_r0(g, *order), {}};
  grp.crs = complete(grp.p, budget);
  if (!grp.crs.finite()) return std::nullopt;
  return grp;
}

inline Group group(const MixedGraph& g, CompletionBudget budget = {200, 200000}) {
  auto grp = try_group(g, budget);
  if (!grp) throw std::runtime_error("no finite completion found");
  return std::move(*grp);
}

inline Group group(std::string_view text) { return group(graph(text)); }

// Every mixed graph on n labelled vertices: each pair is absent, undirected, or directed
// one of two ways.
inline std::vector<MixedGraph> all_mixed_graphs(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 4;
  std::vector<MixedGraph> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<MixedEdge> edges;
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      switch (c % 4) {
        case 1: edges.push_back({VertexId{i}, VertexId{j}, false}); break;
        case 2: edges.push_back({VertexId{i}, VertexId{j}, true}); break;
        case 3: edges.push_back({VertexId{j}, VertexId{i}, true}); break;
        default: break;
      }
      c /= 4;
    }
    out.emplace_back(names, edges);
  }
  return out;
}

// Complete graph on n vertices with each edge undirected or directed either way, as
// `kinds[k]` in {0, 1, 2} over the pairs (i < j) in lexicographic order.
inline MixedGraph complete_mixed_graph(std::size_t n, const std::vector<int>& kinds) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  std::vector<MixedEdge> edges;
  std::size_t k = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j, ++k) {
      if (kinds[k] == 0) edges.push_back({VertexId{i}, VertexId{j}, false});
      if (kinds[k] == 1) edges.push_back({VertexId{i}, VertexId{j}, true});
      if (kinds[k] == 2) edges.push_back({VertexId{j}, VertexId{i}, true});
    }
  }
  return MixedGraph(names, edges);
}

inline MixedGraph random_mixed_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  std::vector<MixedEdge> edges;
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      switch (kind(rng)) {
        case 1: edges.push_back({VertexId{i}, VertexId{j}, false}); break;
        case 2: edges.push_back({VertexId{i}, VertexId{j}, true}); break;
        case 3: edges.push_back({VertexId{j}, VertexId{i}, true}); break;
        default: break;
      }
    }
  }
  return MixedGraph(names, edges);
}

inline SignedWord random_word(std::mt19937_64& rng, std::size_t vertices, std::size_t length) {
  std::uniform_int_distribution<std::uint32_t> v(0, static_cast<std::uint32_t>(vertices - 1));
  std::bernoulli_distribution s(0.5);
  SignedWord w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(letter(v(rng), s(rng) ? 1 : -1));
  return w;
}

// All words of exactly `length` letters over v^{+-1}, v < vertices.
inline std::vector<SignedWord> all_words(std::size_t vertices, std::size_t length) {
  std::vector<SignedWord> out{SignedWord{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<SignedWord> next;
    for (const auto& w : out) {
      for (std::uint32_t v = 0; v < vertices; ++v) {
        for (int s : {1, -1}) {
          SignedWord x = w;
          x.push_back(letter(v, s));
          next.push_back(std::move(x));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

// ---- Oracles ------------------------------------------------------------------------

// Number of lattice points of Z^2 at l1 distance exactly n.
inline std::uint64_t z2_sphere(int n) {
  std::uint64_t count = 0;
  for (int x = -n; x <= n; ++x)
    for (int y = -n; y <= n; ++y)
      if (std::abs(x) + std::abs(y) == n) ++count;
  return count;
}

// The Klein bottle group as Z x| Z: a^m b^n is (m, n), b acts on a by inversion.
struct KleinElement {
  long m = 0;
  long n = 0;

  KleinElement operator*(const KleinElement& o) const {
    return {m + ((n % 2 == 0) ? o.m : -o.m), n + o.n};
  }
  friend bool operator==(const KleinElement&, const KleinElement&) = default;
};

// Vertex 0 is a (origin), vertex 1 is b.
inline KleinElement klein_eval(const SignedWord& w) {
  KleinElement g;
  for (Letter l : w) {
    KleinElement x = l.vertex.index == 0 ? KleinElement{l.sign, 0} : KleinElement{0, l.sign};
    g = g * x;
  }
  return g;
}

// Breadth-first search of the Cayley graph, elements keyed by normal form. Returns the
// distance of every element within `radius`.
inline std::unordered_map<SignedWord, std::size_t, WordHash> bfs_distances(const Group& grp,
                                                                         std::size_t radius) {
  std::unordered_map<SignedWord, std::size_t, WordHash> dist{{SignedWord{}, 0}};
  std::deque<SignedWord> queue{SignedWord{}};
  const auto gens = grp.p.order.letters();
  while (!queue.empty()) {
    SignedWord g = queue.front();
    queue.pop_front();
    std::size_t d = dist.at(g);
    if (d == radius) continue;
    for (Letter s : gens) {
      SignedWord h = grp.crs.system.reduce(concat(g, SignedWord{s}));
      if (dist.emplace(h, d + 1).second) queue.push_back(std::move(h));
    }
  }
  return dist;
}

// a(n) and gamma(n) by enumerating every word of length n and keeping those whose
// element sits at BFS distance n.
inline GrowthTable brute_force_growth(const Group& grp, std::size_t radius) {
  auto dist = bfs_distances(grp, radius);
  GrowthTable t;
  for (std::size_t n = 0; n <= radius; ++n) {
    std::unordered_set<SignedWord, WordHash> elements;
    std::uint64_t geodesic_words = 0;
    for (const SignedWord& w : all_words(grp.p.graph.vertex_count(), n)) {
      SignedWord h = grp.nf(w);
      if (dist.at(h) == n) {
        ++geodesic_words;
        elements.insert(h);
      }
    }
    t.spheres.push_back(elements.size());
    t.geodesics.push_back(geodesic_words);
  }
  return t;
}

// Directed cycles on cliques by trying every vertex subset of size >= 3 and every cyclic
// arrangement starting at its least vertex.
inline std::vector<std::vector<VertexId>> brute_force_clique_cycles(const MixedGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::size_t n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<VertexId> vs;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1) vs.push_back(VertexId{i});
    if (vs.size() < 3) continue;
    bool clique = true;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) clique = clique && g.adjacent(vs[i], vs[j]);
    if (!clique) continue;
    std::sort(vs.begin() + 1, vs.end());
    do {
      bool ok = true;
      for (std::size_t i = 0; i < vs.size() && ok; ++i) {
        const MixedEdge* e = g.edge_between(vs[i], vs[(i + 1) % vs.size()]);
        ok = e && e->directed && e->origin() == vs[i];
      }
      if (ok) out.push_back(vs);
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return out;
}

// Invariant factors of an integer matrix (rows = relators, columns = generators) by
// elimination; returns (free rank, list of nontrivial torsion coefficients).
inline std::pair<std::size_t, std::vector<long>> smith_invariants(std::vector<std::vector<long>> m,
                                                                 std::size_t columns) {
  std::size_t rank = 0;
  std::vector<long> torsion;
  std::size_t rows = m.size();
  for (std::size_t t = 0; t < std::min(rows, columns); ++t) {
    // pivot: smallest nonzero absolute value in the remaining block
    for (;;) {
      long best = 0;
      std::size_t pr = 0, pc = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < columns; ++j)
          if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
            best = std::abs(m[i][j]);
            pr = i;
            pc = j;
          }
      if (best == 0) return {columns - rank, torsion};
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < columns; ++j) m[i][j] -= q * m[t][j];
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        long q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < columns && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < columns; ++k) m[t][k] += m[i][k];
            divides = false;
          }
      if (!divides) continue;
      ++rank;
      if (std::abs(m[t][t]) > 1) torsion.push_back(std::abs(m[t][t]));
      break;
    }
  }
  return {columns - rank, torsion};
}

// Abelianization from the exponent-sum matrix of the defining relators.
inline std::pair<std::size_t, std::vector<long>> abelian_invariants(const MixedGraph& g) {
  std::vector<std::vector<long>> m;
  for (const SignedWord& r : defining_relators(g)) {
    std::vector<long> row(g.vertex_count(), 0);
    for (Letter l : r) row[l.vertex.index] += l.sign;
    m.push_back(row);
  }
  return smith_invariants(m, g.vertex_count());
}

// Exponent sum of `v` in w.
inline long exponent_sum(const SignedWord& w, VertexId v) {
  long s = 0;
  for (Letter l : w)
    if (l.vertex == v) s += l.sign;
  return s;
}

// The ten graphs used by the property suites.
inline std::vector<std::pair<std::string, std::string>> graph_suite() {
  return {
      {"Z2", kZ2},
      {"Klein", kKlein},
      {"Delta", kDelta},
      {"K3", kK3},
      {"path", kPathOrdered},
      {"Gamma2", kGamma2},
      {"Z", "vertices: a\n"},
      {"free2", "vertices: a b\n"},
      {"star", "vertices: s a b c\nedge s -> a\nedge s b\nedge c -> s\n"},
      {"K4 twisted", "vertices: a b c d\nedge a -> b\nedge b -> c\nedge c -> d\nedge d -> a\n"
                     "edge a c\nedge b d\n"},
  };
}

}  // namespace test

#endif  // TRAAG_TESTS_SUPPORT_H
