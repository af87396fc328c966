#ifndef TRAAG_REWRITING_H
#define TRAAG_REWRITING_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "traag/signed_word.h"

namespace traag {

struct Rule {
  SignedWord lhs;
  SignedWord rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

enum class Strategy {
  LeftmostLongest,  // leftmost start position, longest lhs at that position
  Rightmost,        // rightmost start position, longest lhs at that position
};

struct Redex {
  std::size_t position = 0;
  std::size_t rule = 0;  // index into RewriteSystem::rules()
};

// A finite string rewriting system over the doubled alphabet, oriented by shortlex.
// Left-hand sides are unique and kept in a trie for substring matching.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(AlphabetOrder order);
  RewriteSystem(AlphabetOrder order, std::vector<Rule> rules);

  const AlphabetOrder& order() const { return order_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  // Rules in storage order. Removal moves the last rule into the freed slot.
  const std::vector<Rule>& rules() const { return rules_; }
  // Rules sorted by shortlex of their left-hand sides.
  std::vector<Rule> sorted_rules() const;

  // Throws std::invalid_argument unless lhs > rhs in shortlex and lhs is new.
  void add(Rule rule);
  bool remove(std::span<const Letter> lhs);
  // Throws std::invalid_argument if the new rhs does not keep the rule decreasing.
  void replace_rhs(std::span<const Letter> lhs, SignedWord rhs);
  const SignedWord* rhs_of(std::span<const Letter> lhs) const;
  std::size_t max_lhs_length() const { return max_lhs_; }

  std::optional<Redex> find_redex(std::span<const Letter> w,
                                  Strategy strategy = Strategy::LeftmostLongest,
                                  std::size_t from = 0) const;
  std::optional<SignedWord> apply_once(std::span<const Letter> w,
                                       Strategy strategy = Strategy::LeftmostLongest) const;
  // Rewrites to an irreducible word. Terminates since every rule is shortlex-decreasing.
  SignedWord reduce(std::span<const Letter> w, Strategy strategy = Strategy::LeftmostLongest) const;
  bool is_irreducible(std::span<const Letter> w) const { return !find_redex(w); }

 private:
  struct Node {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> children;  // letter code -> node
    std::int32_t rule = -1;
  };

  std::uint32_t child(std::uint32_t node, std::uint32_t code) const;
  std::uint32_t find_node(std::span<const Letter> lhs) const;  // 0 when absent
  // Longest lhs matching w at `position`, or -1.
  std::int32_t longest_match_at(std::span<const Letter> w, std::size_t position) const;

  AlphabetOrder order_;
  std::vector<Rule> rules_;
  std::vector<std::uint32_t> rule_node_;
  std::vector<Node> trie_{Node{}};
  std::size_t max_lhs_ = 0;
};

struct CriticalPair {
  enum class Kind { Overlap, Inclusion };

  Kind kind = Kind::Overlap;
  SignedWord peak;
  SignedWord left_descendant;   // peak rewritten by the outer (left) rule
  SignedWord right_descendant;  // peak rewritten by the inner (right) rule
  std::size_t left_rule = 0;
  std::size_t right_rule = 0;
};

// Overlaps lhs1 = us, lhs2 = sv (u, s, v nonempty) and inclusions lhs1 = usv, lhs2 = s, over
// all ordered rule pairs including a rule with itself. Sorted by shortlex of the peak,
// then by rule indices.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys);
// Pairs in which `outer` plays the left role and `inner` the right role.
std::vector<CriticalPair> critical_pairs_between(const RewriteSystem& sys, std::size_t outer,
                                                 std::size_t inner);

struct ConfluenceCheck {
  bool confluent = true;
  std::optional<CriticalPair> witness;  // first unresolved pair
};

ConfluenceCheck is_locally_confluent(const RewriteSystem& sys);

struct CompletionBudget {
  std::size_t max_new_rules = 10000;
  std::size_t max_steps = 1000000;  // ordered rule pairs examined for critical pairs
};

enum class CompletionStatus { Finite, BudgetExhausted };

std::string_view to_string(CompletionStatus status);

struct AddedRule {
  Rule rule;
  std::size_t step = 0;  // 1-based completion pass
  SignedWord peak;       // critical peak that produced it; empty for re-oriented rules
  bool left_from_input = false;
  bool right_from_input = false;
};

struct CompletionReport {
  RewriteSystem system;
  CompletionStatus status = CompletionStatus::BudgetExhausted;
  std::size_t steps = 0;
  std::size_t pairs_examined = 0;
  std::vector<AddedRule> added;

  bool finite() const { return status == CompletionStatus::Finite; }
  std::size_t added_count() const { return added.size(); }
  std::vector<std::vector<Rule>> added_by_step() const;
};

// Knuth-Bendix completion with shortlex orientation and inter-reduction. Each pass
// examines the critical pairs involving rules created in the previous pass, reduces both
// descendants, and adjoins the unresolved ones in shortlex order of their peaks.
// Throws std::invalid_argument if a budget value is zero.
CompletionReport knuth_bendix(const RewriteSystem& sys, CompletionBudget budget = {});

// `LHS -> RHS` per line, rules in shortlex order of lhs.
std::string format_rules(const RewriteSystem& sys, std::span<const std::string> names);
// Reads the format above. Blank lines and `#` comments are skipped.
RewriteSystem parse_rules(std::string_view text, std::span<const std::string> names,
                          const AlphabetOrder& order);

}  // namespace traag

#endif  // TRAAG_REWRITING_H
