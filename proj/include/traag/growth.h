#ifndef TRAAG_GROWTH_H
#define TRAAG_GROWTH_H

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "traag/mixed_graph.h"
#include "traag/presentation.h"
#include "traag/rewriting.h"

namespace traag {

// Elements of the Cayley graph (generators V and V^-1) within `radius` of the identity,
// keyed by normal form.
struct CayleyBall {
  struct Entry {
    std::size_t layer = 0;
    std::uint64_t geodesics = 0;  // number of geodesic words ending at the element
  };

  std::size_t radius = 0;
  std::vector<std::vector<SignedWord>> layers;  // each layer sorted by shortlex
  std::unordered_map<SignedWord, Entry, WordHash> elements;

  std::size_t size() const { return elements.size(); }
  const Entry* find(const SignedWord& normal_form) const;
};

// Layer n+1 holds the new normal forms of g*s for g in layer n. Geodesic counts follow by
// summing over the products that land one layer further out. Products within a layer are
// computed on up to `threads` threads and merged in a fixed order.
CayleyBall cayley_ball(const Presentation& p, const CompletionReport& crs, std::size_t radius,
                       unsigned threads = 1);

// Spherical growth a(n) and geodesic growth gamma(n) for n = 0..radius.
struct GrowthTable {
  std::vector<std::uint64_t> spheres;
  std::vector<std::uint64_t> geodesics;

  friend bool operator==(const GrowthTable&, const GrowthTable&) = default;
};

GrowthTable growth_table(const CayleyBall& ball);

struct GrowthComparison {
  bool equal = false;
  GrowthTable twisted;
  GrowthTable raag;  // underlying right-angled Artin group
};

// Both groups use the graph's default order. Throws IncompleteSystemError if either
// completion exhausts `budget`.
GrowthComparison compare_with_underlying_raag(const MixedGraph& g, std::size_t radius,
                                              CompletionBudget budget = {},
                                              unsigned threads = 1);

struct CayleyCorrespondence {
  bool bijective = false;
  bool adjacency_preserved = false;
};

// How a twisted normal form w = l1 ... lk is sent into the underlying RAAG.
enum class CorrespondenceMap {
  // w read as a RAAG word.
  Reinterpret,
  // lj is inverted once for every earlier li joined to it by a directed edge with origin
  // lj. Undoes the sign flips that shuffling through such edges introduces.
  SignCorrected,
};

// Maps each element of the twisted ball into the underlying RAAG and checks that this is
// a bijection onto the RAAG ball and that generator neighbours within the ball go to
// generator neighbours.
CayleyCorrespondence check_cayley_correspondence(
    const MixedGraph& g, std::size_t radius, CompletionBudget budget = {},
    CorrespondenceMap map = CorrespondenceMap::Reinterpret);

// Image of a twisted normal-form word under `map`, before RAAG reduction.
SignedWord correspondence_image(const MixedGraph& g, const SignedWord& normal_form,
                                CorrespondenceMap map);

// The ball as an undirected graph: nodes numbered by layer, then shortlex; an edge for
// each pair of elements one generator apart, as (lower id, higher id) in ascending order.
struct BallGraph {
  std::vector<SignedWord> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

BallGraph ball_graph(const CayleyBall& ball, const Presentation& p, const CompletionReport& crs);

// Undirected DOT graph of the ball: one node per element labelled by its normal form, one
// edge per pair of elements a generator apart. Nodes are numbered by layer, then shortlex.
std::string export_cayley_dot(const CayleyBall& ball, const Presentation& p,
                              const CompletionReport& crs);

}  // namespace traag

#endif  // TRAAG_GROWTH_H
