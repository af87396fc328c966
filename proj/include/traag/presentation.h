#ifndef TRAAG_PRESENTATION_H
#define TRAAG_PRESENTATION_H

#include <optional>
#include <stdexcept>
#include <vector>

#include "traag/mixed_graph.h"
#include "traag/rewriting.h"
#include "traag/signed_word.h"

namespace traag {

// The monoid presentation of the group of a mixed graph together with its length-2
// rewriting system R0:
//   y^b x^a -> x^a y^b     for an undirected edge {x, y}
//   y^b x^a -> x^-a y^b    for a directed edge with origin x
//   y^b x^a -> x^a y^-b    for a directed edge with origin y
//   z^c z^-c -> 1
// where x < y in the alphabet order and a, b, c range over {-1, 1}.
struct Presentation {
  MixedGraph graph;
  AlphabetOrder order;
  RewriteSystem r0;
};

// Thrown when an operation needs a complete rewriting system but completion stopped on
// its budget.
class IncompleteSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Presentation build_r0(const MixedGraph& g);
// Throws std::invalid_argument if `order` does not cover exactly the graph's vertices.
Presentation build_r0(const MixedGraph& g, const AlphabetOrder& order);

CompletionReport complete(const Presentation& p, CompletionBudget budget = {});

// Tries the graph's own order first, then every vertex permutation in lexicographic
// order, and returns the first one whose completion is finite within `budget`. Only
// attempted for graphs with at most `max_vertices` vertices.
std::optional<AlphabetOrder> find_finite_order(const MixedGraph& g, CompletionBudget budget = {},
                                               std::size_t max_vertices = 7);

// Defining relators: [x,y] = x y x^-1 y^-1 for undirected edges, x y x y^-1 for a directed
// edge with origin x and terminus y.
std::vector<SignedWord> defining_relators(const MixedGraph& g);

struct NormalForm {
  SignedWord word;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// The unique irreducible word equal to `w` in the group. Throws IncompleteSystemError
// unless `crs` is a finite completion.
NormalForm normal_form(const Presentation& p, const CompletionReport& crs, const SignedWord& w);
// True iff `w` represents the identity.
bool word_problem(const Presentation& p, const CompletionReport& crs, const SignedWord& w);

struct ShuffleResult {
  Letter moved;
  SignedWord word;
};

// Rewrites w x^e as x^e' w' for a word w over the link of x. Crossing a letter whose edge
// to x has origin x flips e; a letter that is itself the origin of its edge to x is
// inverted; undirected edges change nothing.
// Throws std::invalid_argument if some letter of w is not adjacent to x.
ShuffleResult shuffle_left(const MixedGraph& g, const SignedWord& w, Letter x);

struct RuleShape {
  Rule rule;
  std::size_t step = 0;
  bool length_preserving = false;
  bool last_letter_moved_to_front = false;
  bool vertex_sequence_rotated = false;
  bool prefix_condition = false;
  bool length_matches_step = false;  // |lhs| = step + 2

  bool passes() const {
    return length_preserving && last_letter_moved_to_front && vertex_sequence_rotated &&
           prefix_condition;
  }
};

struct RuleShapeReport {
  std::vector<RuleShape> rules;

  bool all_pass() const;
  std::size_t failures() const;
};

// Shape of a single rule against R0. `step` is only recorded.
RuleShape check_rule_shape(const Presentation& p, const Rule& rule, std::size_t step = 0);
// Shapes of every rule added by completion. Throws IncompleteSystemError unless finite.
RuleShapeReport rule_shape_report(const Presentation& p, const CompletionReport& crs);
// Same checks without the finiteness requirement, for budget-limited traces.
RuleShapeReport rule_shape_trace(const Presentation& p, const CompletionReport& crs);

}  // namespace traag

#endif  // TRAAG_PRESENTATION_H
