#include "traag/presentation.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace traag {

Presentation build_r0(const MixedGraph& g) { return build_r0(g, g.default_order()); }

Presentation build_r0(const MixedGraph& g, const AlphabetOrder& order) {
  if (order.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("alphabet order does not match the graph's vertices");
  }
  RewriteSystem r0(order);
  for (const MixedEdge& e : g.edges()) {
    bool first_smaller = order.rank(e.first) < order.rank(e.second);
    VertexId x = first_smaller ? e.first : e.second;
    VertexId y = first_smaller ? e.second : e.first;
    bool flip_x = e.directed && e.origin() == x;
    bool flip_y = e.directed && e.origin() == y;
    for (int alpha : {1, -1}) {
      for (int beta : {1, -1}) {
        SignedWord lhs{letter(y.index, beta), letter(x.index, alpha)};
        SignedWord rhs{letter(x.index, flip_x ? -alpha : alpha),
                       letter(y.index, flip_y ? -beta : beta)};
        r0.add({std::move(lhs), std::move(rhs)});
      }
    }
  }
  for (VertexId z : order.vertices()) {
    for (int gamma : {1, -1}) {
      r0.add({{letter(z.index, gamma), letter(z.index, -gamma)}, {}});
    }
  }
  return Presentation{g.with_order(order), order, std::move(r0)};
}

CompletionReport complete(const Presentation& p, CompletionBudget budget) {
  return knuth_bendix(p.r0, budget);
}

std::optional<AlphabetOrder> find_finite_order(const MixedGraph& g, CompletionBudget budget,
                                               std::size_t max_vertices) {
  if (complete(build_r0(g), budget).finite()) return g.default_order();
  if (g.vertex_count() > max_vertices) return std::nullopt;
  std::vector<std::uint32_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    std::vector<VertexId> ids;
    for (auto i : perm) ids.push_back(VertexId{i});
    AlphabetOrder order(std::move(ids));
    if (order == g.default_order()) continue;
    if (complete(build_r0(g, order), budget).finite()) return order;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<SignedWord> defining_relators(const MixedGraph& g) {
  std::vector<SignedWord> out;
  for (const MixedEdge& e : g.edges()) {
    auto x = e.first.index;
    auto y = e.second.index;
    if (e.directed) {
      out.push_back({letter(x), letter(y), letter(x), letter(y, -1)});
    } else {
      out.push_back({letter(x), letter(y), letter(x, -1), letter(y, -1)});
    }
  }
  return out;
}

NormalForm normal_form(const Presentation& p, const CompletionReport& crs, const SignedWord& w) {
  if (!crs.finite()) {
    throw IncompleteSystemError("normal forms need a finite complete rewriting system");
  }
  for (Letter l : w) {
    if (l.vertex.index >= p.graph.vertex_count()) {
      throw std::invalid_argument("word letter outside the graph's vertices");
    }
  }
  return {crs.system.reduce(free_reduce(w))};
}

bool word_problem(const Presentation& p, const CompletionReport& crs, const SignedWord& w) {
  return normal_form(p, crs, w).word.empty();
}

ShuffleResult shuffle_left(const MixedGraph& g, const SignedWord& w, Letter x) {
  ShuffleResult out{x, w};
  for (auto it = out.word.rbegin(); it != out.word.rend(); ++it) {
    const MixedEdge* e = g.edge_between(it->vertex, x.vertex);
    if (e == nullptr) {
      throw std::invalid_argument("shuffle_left: '" + g.name(it->vertex) +
                                  "' is not adjacent to '" + g.name(x.vertex) + "'");
    }
    if (!e->directed) continue;
    if (e->origin() == x.vertex) {
      out.moved = out.moved.inverse();
    } else {
      *it = it->inverse();
    }
  }
  return out;
}

bool RuleShapeReport::all_pass() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleShape& r) { return r.passes(); });
}

std::size_t RuleShapeReport::failures() const {
  return std::count_if(rules.begin(), rules.end(), [](const RuleShape& r) { return !r.passes(); });
}

namespace {

// Vertex pairs (p, q) with a rule <p, q> -> <q, p> in R0.
std::set<std::pair<std::uint32_t, std::uint32_t>> swap_pairs(const RewriteSystem& r0) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const Rule& r : r0.rules()) {
    if (r.lhs.size() == 2 && r.rhs.size() == 2 && r.lhs[0].vertex == r.rhs[1].vertex &&
        r.lhs[1].vertex == r.rhs[0].vertex) {
      out.emplace(r.lhs[0].vertex.index, r.lhs[1].vertex.index);
    }
  }
  return out;
}

RuleShape shape_of(const std::set<std::pair<std::uint32_t, std::uint32_t>>& swaps,
                   const Rule& rule, std::size_t step) {
  RuleShape s;
  s.rule = rule;
  s.step = step;
  const auto& lhs = rule.lhs;
  const auto& rhs = rule.rhs;
  s.length_preserving = lhs.size() == rhs.size();
  s.length_matches_step = lhs.size() == step + 2;
  if (!s.length_preserving || lhs.size() < 2) return s;

  VertexId moved = lhs.back().vertex;
  s.last_letter_moved_to_front = rhs.front().vertex == moved;
  s.vertex_sequence_rotated = true;
  for (std::size_t i = 0; i + 1 < lhs.size(); ++i) {
    if (rhs[i + 1].vertex != lhs[i].vertex) s.vertex_sequence_rotated = false;
  }
  // <g1, x> -> <x, g1> and <x, gi> -> <gi, x> for i >= 2 must all be rules of R0.
  s.prefix_condition = swaps.count({lhs[0].vertex.index, moved.index}) > 0;
  for (std::size_t i = 1; i + 1 < lhs.size(); ++i) {
    if (!swaps.count({moved.index, lhs[i].vertex.index})) s.prefix_condition = false;
  }
  return s;
}

}  // namespace

RuleShape check_rule_shape(const Presentation& p, const Rule& rule, std::size_t step) {
  return shape_of(swap_pairs(p.r0), rule, step);
}

RuleShapeReport rule_shape_trace(const Presentation& p, const CompletionReport& crs) {
  auto swaps = swap_pairs(p.r0);
  RuleShapeReport report;
  for (const AddedRule& a : crs.added) report.rules.push_back(shape_of(swaps, a.rule, a.step));
  return report;
}

RuleShapeReport rule_shape_report(const Presentation& p, const CompletionReport& crs) {
  if (!crs.finite()) {
    throw IncompleteSystemError("rule shape report needs a finite complete rewriting system");
  }
  return rule_shape_trace(p, crs);
}

}  // namespace traag
