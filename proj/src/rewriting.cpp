#include "traag/rewriting.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace traag {

RewriteSystem::RewriteSystem(AlphabetOrder order) : order_(std::move(order)) {}

RewriteSystem::RewriteSystem(AlphabetOrder order, std::vector<Rule> rules)
    : order_(std::move(order)) {
  for (Rule& r : rules) add(std::move(r));
}

std::vector<Rule> RewriteSystem::sorted_rules() const {
  std::vector<Rule> out = rules_;
  std::sort(out.begin(), out.end(), [this](const Rule& a, const Rule& b) {
    return shortlex_compare(a.lhs, b.lhs, order_) < 0;
  });
  return out;
}

std::uint32_t RewriteSystem::child(std::uint32_t node, std::uint32_t code) const {
  for (auto [c, next] : trie_[node].children) {
    if (c == code) return next;
  }
  return 0;
}

std::uint32_t RewriteSystem::find_node(std::span<const Letter> lhs) const {
  std::uint32_t node = 0;
  for (Letter l : lhs) {
    node = child(node, l.code());
    if (node == 0) return 0;
  }
  return node;
}

void RewriteSystem::add(Rule rule) {
  if (rule.lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
  for (const SignedWord* w : {&rule.lhs, &rule.rhs}) {
    for (Letter l : *w) {
      if (l.vertex.index >= order_.vertex_count()) {
        throw std::invalid_argument("rule letter outside the alphabet");
      }
    }
  }
  if (shortlex_compare(rule.lhs, rule.rhs, order_) <= 0) {
    throw std::invalid_argument("rule is not shortlex-decreasing");
  }
  std::uint32_t node = 0;
  for (Letter l : rule.lhs) {
    std::uint32_t next = child(node, l.code());
    if (next == 0) {
      next = static_cast<std::uint32_t>(trie_.size());
      trie_.push_back(Node{});
      trie_[node].children.emplace_back(l.code(), next);
    }
    node = next;
  }
  if (trie_[node].rule >= 0) throw std::invalid_argument("duplicate left-hand side");
  trie_[node].rule = static_cast<std::int32_t>(rules_.size());
  max_lhs_ = std::max(max_lhs_, rule.lhs.size());
  rules_.push_back(std::move(rule));
  rule_node_.push_back(node);
}

bool RewriteSystem::remove(std::span<const Letter> lhs) {
  std::uint32_t node = find_node(lhs);
  if (node == 0 || trie_[node].rule < 0) return false;
  auto idx = static_cast<std::size_t>(trie_[node].rule);
  trie_[node].rule = -1;
  std::size_t last = rules_.size() - 1;
  if (idx != last) {
    rules_[idx] = std::move(rules_[last]);
    rule_node_[idx] = rule_node_[last];
    trie_[rule_node_[idx]].rule = static_cast<std::int32_t>(idx);
  }
  rules_.pop_back();
  rule_node_.pop_back();
  return true;
}

void RewriteSystem::replace_rhs(std::span<const Letter> lhs, SignedWord rhs) {
  std::uint32_t node = find_node(lhs);
  if (node == 0 || trie_[node].rule < 0) throw std::invalid_argument("no rule with this lhs");
  if (shortlex_compare(lhs, rhs, order_) <= 0) {
    throw std::invalid_argument("rule is not shortlex-decreasing");
  }
  rules_[trie_[node].rule].rhs = std::move(rhs);
}

const SignedWord* RewriteSystem::rhs_of(std::span<const Letter> lhs) const {
  std::uint32_t node = find_node(lhs);
  if (node == 0 || trie_[node].rule < 0) return nullptr;
  return &rules_[trie_[node].rule].rhs;
}

std::int32_t RewriteSystem::longest_match_at(std::span<const Letter> w,
                                             std::size_t position) const {
  std::int32_t found = -1;
  std::uint32_t node = 0;
  for (std::size_t i = position; i < w.size(); ++i) {
    node = child(node, w[i].code());
    if (node == 0) break;
    if (trie_[node].rule >= 0) found = trie_[node].rule;
  }
  return found;
}

std::optional<Redex> RewriteSystem::find_redex(std::span<const Letter> w, Strategy strategy,
                                               std::size_t from) const {
  if (strategy == Strategy::LeftmostLongest) {
    for (std::size_t i = from; i < w.size(); ++i) {
      if (auto r = longest_match_at(w, i); r >= 0) return Redex{i, static_cast<std::size_t>(r)};
    }
  } else {
    for (std::size_t i = w.size(); i-- > from;) {
      if (auto r = longest_match_at(w, i); r >= 0) return Redex{i, static_cast<std::size_t>(r)};
    }
  }
  return std::nullopt;
}

namespace {

void rewrite_at(SignedWord& w, const Redex& redex, const Rule& rule) {
  auto first = w.begin() + static_cast<std::ptrdiff_t>(redex.position);
  auto it = w.erase(first, first + static_cast<std::ptrdiff_t>(rule.lhs.size()));
  w.insert(it, rule.rhs.begin(), rule.rhs.end());
}

}  // namespace

std::optional<SignedWord> RewriteSystem::apply_once(std::span<const Letter> w,
                                                    Strategy strategy) const {
  auto redex = find_redex(w, strategy);
  if (!redex) return std::nullopt;
  SignedWord out(w.begin(), w.end());
  rewrite_at(out, *redex, rules_[redex->rule]);
  return out;
}

SignedWord RewriteSystem::reduce(std::span<const Letter> w, Strategy strategy) const {
  SignedWord cur(w.begin(), w.end());
  if (rules_.empty()) return cur;
  std::size_t from = 0;
  while (auto redex = find_redex(cur, strategy, from)) {
    rewrite_at(cur, *redex, rules_[redex->rule]);
    if (strategy == Strategy::LeftmostLongest) {
      // Everything ending before the rewritten region was already irreducible.
      std::size_t back = max_lhs_ - 1;
      from = redex->position > back ? redex->position - back : 0;
    }
  }
  return cur;
}

namespace {

bool occurs_at(std::span<const Letter> haystack, std::size_t pos, std::span<const Letter> needle) {
  return std::equal(needle.begin(), needle.end(), haystack.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool contains(std::span<const Letter> haystack, std::span<const Letter> needle) {
  if (needle.size() > haystack.size()) return false;
  for (std::size_t p = 0; p + needle.size() <= haystack.size(); ++p) {
    if (occurs_at(haystack, p, needle)) return true;
  }
  return false;
}

template <typename F>
void enumerate_pairs(const Rule& outer, const Rule& inner, bool same_rule, F&& emit) {
  const auto& l1 = outer.lhs;
  const auto& l2 = inner.lhs;
  // Overlaps: a proper nonempty suffix of l1 equals a proper prefix of l2.
  for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
    if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
    CriticalPair cp;
    cp.kind = CriticalPair::Kind::Overlap;
    cp.peak = l1;
    cp.peak.insert(cp.peak.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
    cp.left_descendant = outer.rhs;
    cp.left_descendant.insert(cp.left_descendant.end(),
                              l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
    cp.right_descendant.assign(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
    cp.right_descendant.insert(cp.right_descendant.end(), inner.rhs.begin(), inner.rhs.end());
    emit(std::move(cp));
  }
  // Inclusions: l2 occurs inside l1.
  if (l2.size() > l1.size()) return;
  for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
    if (same_rule && p == 0) continue;
    if (!occurs_at(l1, p, l2)) continue;
    CriticalPair cp;
    cp.kind = CriticalPair::Kind::Inclusion;
    cp.peak = l1;
    cp.left_descendant = outer.rhs;
    cp.right_descendant.assign(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(p));
    cp.right_descendant.insert(cp.right_descendant.end(), inner.rhs.begin(), inner.rhs.end());
    cp.right_descendant.insert(cp.right_descendant.end(),
                               l1.begin() + static_cast<std::ptrdiff_t>(p + l2.size()), l1.end());
    emit(std::move(cp));
  }
}

void sort_pairs(std::vector<CriticalPair>& pairs, const AlphabetOrder& order) {
  std::stable_sort(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
    auto c = shortlex_compare(a.peak, b.peak, order);
    if (c != 0) return c < 0;
    return std::tie(a.left_rule, a.right_rule) < std::tie(b.left_rule, b.right_rule);
  });
}

}  // namespace

std::vector<CriticalPair> critical_pairs_between(const RewriteSystem& sys, std::size_t outer,
                                                 std::size_t inner) {
  std::vector<CriticalPair> out;
  enumerate_pairs(sys.rules().at(outer), sys.rules().at(inner), outer == inner,
                  [&](CriticalPair cp) {
                    cp.left_rule = outer;
                    cp.right_rule = inner;
                    out.push_back(std::move(cp));
                  });
  return out;
}

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys) {
  std::vector<CriticalPair> out;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = 0; j < sys.size(); ++j) {
      auto part = critical_pairs_between(sys, i, j);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  }
  sort_pairs(out, sys.order());
  return out;
}

ConfluenceCheck is_locally_confluent(const RewriteSystem& sys) {
  for (CriticalPair& cp : critical_pairs(sys)) {
    if (sys.reduce(cp.left_descendant) != sys.reduce(cp.right_descendant)) {
      return {false, std::move(cp)};
    }
  }
  return {true, std::nullopt};
}

std::string_view to_string(CompletionStatus status) {
  return status == CompletionStatus::Finite ? "Finite" : "BudgetExhausted";
}

std::vector<std::vector<Rule>> CompletionReport::added_by_step() const {
  std::vector<std::vector<Rule>> out(steps);
  for (const AddedRule& a : added) {
    if (a.step >= 1 && a.step <= out.size()) out[a.step - 1].push_back(a.rule);
  }
  return out;
}

namespace {

// Working state of a completion run. Entries are never erased so ids stay stable; the
// mirror system holds exactly the alive entries for matching.
class Completion {
 public:
  Completion(const RewriteSystem& input, CompletionBudget budget)
      : budget_(budget), mirror_(input.order()) {
    for (const Rule& r : input.rules()) {
      entries_.push_back({r, true, true});
      mirror_.add(r);
    }
  }

  CompletionReport run() {
    std::vector<std::size_t> fresh = alive_ids();
    while (true) {
      if (fresh.empty()) {
        if (is_locally_confluent(mirror_).confluent) return finish(CompletionStatus::Finite);
        fresh = alive_ids();
      }
      ++steps_;
      auto candidates = collect(fresh);
      if (exhausted_) return finish(CompletionStatus::BudgetExhausted);
      fresh.clear();
      for (Candidate& c : candidates) {
        add_equation(std::move(c.left), std::move(c.right), c.peak, c.left_rule, c.right_rule,
                     fresh);
        if (exhausted_) return finish(CompletionStatus::BudgetExhausted);
      }
      std::erase_if(fresh, [this](std::size_t id) { return !entries_[id].alive; });
    }
  }

 private:
  struct Entry {
    Rule rule;
    bool alive;
    bool from_input;
  };

  struct Candidate {
    SignedWord peak;
    SignedWord left;
    SignedWord right;
    std::size_t left_rule;
    std::size_t right_rule;
  };

  std::vector<std::size_t> alive_ids() const {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].alive) ids.push_back(i);
    }
    return ids;
  }

  std::vector<Candidate> collect(const std::vector<std::size_t>& fresh) {
    std::vector<bool> is_fresh(entries_.size(), false);
    for (auto id : fresh) is_fresh[id] = true;
    auto alive = alive_ids();
    std::vector<Candidate> out;
    for (auto i : alive) {
      for (auto j : alive) {
        if (!is_fresh[i] && !is_fresh[j]) continue;
        if (++pairs_examined_ > budget_.max_steps) {
          exhausted_ = true;
          return out;
        }
        enumerate_pairs(entries_[i].rule, entries_[j].rule, i == j, [&](CriticalPair cp) {
          SignedWord a = mirror_.reduce(cp.left_descendant);
          SignedWord b = mirror_.reduce(cp.right_descendant);
          if (a != b) out.push_back({std::move(cp.peak), std::move(a), std::move(b), i, j});
        });
      }
    }
    const auto& order = mirror_.order();
    std::stable_sort(out.begin(), out.end(), [&](const Candidate& x, const Candidate& y) {
      return shortlex_compare(x.peak, y.peak, order) < 0;
    });
    return out;
  }

  void add_equation(SignedWord left, SignedWord right, const SignedWord& peak,
                    std::size_t left_rule, std::size_t right_rule,
                    std::vector<std::size_t>& fresh) {
    std::vector<std::pair<SignedWord, SignedWord>> pending;
    pending.emplace_back(std::move(left), std::move(right));
    bool from_pair = true;
    while (!pending.empty() && !exhausted_) {
      auto [a, b] = std::move(pending.back());
      pending.pop_back();
      a = mirror_.reduce(a);
      b = mirror_.reduce(b);
      if (a == b) {
        from_pair = false;
        continue;
      }
      if (shortlex_compare(a, b, mirror_.order()) < 0) std::swap(a, b);
      Rule rule{std::move(a), std::move(b)};

      AddedRule record{rule, steps_, {}, false, false};
      if (from_pair) {
        record.peak = peak;
        record.left_from_input = entries_[left_rule].from_input;
        record.right_from_input = entries_[right_rule].from_input;
      }
      from_pair = false;

      std::size_t id = entries_.size();
      entries_.push_back({rule, true, false});
      mirror_.add(rule);
      added_.push_back(std::move(record));
      fresh.push_back(id);
      if (added_.size() > budget_.max_new_rules) {
        exhausted_ = true;
        return;
      }
      interreduce(id, pending);
    }
  }

  // Drops rules whose lhs the new rule rewrites (their equations are re-queued) and
  // normalises right-hand sides.
  void interreduce(std::size_t id, std::vector<std::pair<SignedWord, SignedWord>>& pending) {
    const SignedWord& lhs = entries_[id].rule.lhs;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      Entry& e = entries_[k];
      if (k == id || !e.alive) continue;
      if (contains(e.rule.lhs, lhs)) {
        e.alive = false;
        mirror_.remove(e.rule.lhs);
        pending.emplace_back(e.rule.lhs, e.rule.rhs);
      } else if (contains(e.rule.rhs, lhs)) {
        e.rule.rhs = mirror_.reduce(e.rule.rhs);
        mirror_.replace_rhs(e.rule.lhs, e.rule.rhs);
      }
    }
  }

  CompletionReport finish(CompletionStatus status) {
    CompletionReport report;
    report.status = status;
    report.steps = steps_;
    report.pairs_examined = pairs_examined_;
    report.added = std::move(added_);
    RewriteSystem system(mirror_.order());
    for (const Entry& e : entries_) {
      if (e.alive) system.add(e.rule);
    }
    report.system = std::move(system);
    return report;
  }

  CompletionBudget budget_;
  RewriteSystem mirror_;
  std::vector<Entry> entries_;
  std::vector<AddedRule> added_;
  std::size_t steps_ = 0;
  std::size_t pairs_examined_ = 0;
  bool exhausted_ = false;
};

}  // namespace

CompletionReport knuth_bendix(const RewriteSystem& sys, CompletionBudget budget) {
  if (budget.max_new_rules == 0 || budget.max_steps == 0) {
    throw std::invalid_argument("completion budgets must be positive");
  }
  return Completion(sys, budget).run();
}

std::string format_rules(const RewriteSystem& sys, std::span<const std::string> names) {
  std::ostringstream out;
  for (const Rule& r : sys.sorted_rules()) {
    out << format_word(r.lhs, names) << " -> " << format_word(r.rhs, names) << '\n';
  }
  return out.str();
}

RewriteSystem parse_rules(std::string_view text, std::span<const std::string> names,
                          const AlphabetOrder& order) {
  RewriteSystem sys(order);
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'LHS -> RHS'");
    }
    try {
      sys.add({parse_word(line.substr(0, arrow), names), parse_word(line.substr(arrow + 2), names)});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return sys;
}

}  // namespace traag
