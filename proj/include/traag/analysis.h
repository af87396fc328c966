#ifndef TRAAG_ANALYSIS_H
#define TRAAG_ANALYSIS_H

#include <istream>
#include <optional>
#include <string_view>
#include <vector>

#include "traag/mixed_graph.h"
#include "traag/presentation.h"
#include "traag/rewriting.h"
#include "traag/signed_word.h"

namespace traag {

// G^ab = Z^free_rank x (Z/2)^z2_rank, where z2_rank counts the vertices that are the
// origin of some directed edge.
struct AbelianizationResult {
  std::size_t free_rank = 0;
  std::size_t z2_rank = 0;

  friend bool operator==(const AbelianizationResult&, const AbelianizationResult&) = default;
};

AbelianizationResult abelianization(const MixedGraph& g);

// A vertex that is the origin of no directed edge (least in the graph's order). Sending
// it to 1 and every other vertex to 0 is a surjection onto Z. None iff no such map exists.
std::optional<VertexId> is_indicable(const MixedGraph& g);

struct TorsionWitness {
  std::vector<VertexId> cycle;
  SignedWord element;  // product of the cycle vertices in cycle order; squares to 1
};

// Looks for a directed cycle on a clique and verifies that the product of its vertices
// squares to the identity. Throws std::logic_error if that verification fails, and
// IncompleteSystemError if `crs` is not finite.
std::optional<TorsionWitness> torsion(const Presentation& p, const CompletionReport& crs);

// Sum of |exponent| over the syllables of the normal form: the word length of the element.
std::size_t geodesic_length(const Presentation& p, const CompletionReport& crs,
                            const SignedWord& w);

// Vertices used by the normal form, ascending by id.
std::vector<VertexId> support(const Presentation& p, const CompletionReport& crs,
                              const SignedWord& w);

// Images of the source generators as words over the target's vertices.
struct GeneratorMap {
  std::size_t target_vertices = 0;
  std::vector<SignedWord> images;  // indexed by source vertex id
};

GeneratorMap identity_map(const MixedGraph& g);
GeneratorMap trivial_map(const MixedGraph& source, const MixedGraph& target);

// Lines `source_vertex -> word` with the word over target names. Every source vertex
// needs exactly one line. Throws std::invalid_argument with the line number on errors.
GeneratorMap parse_generator_map(std::istream& in, const MixedGraph& source,
                                 const MixedGraph& target);
GeneratorMap parse_generator_map_text(std::string_view text, const MixedGraph& source,
                                      const MixedGraph& target);
GeneratorMap load_generator_map(const std::string& path, const MixedGraph& source,
                                const MixedGraph& target);

// Image of a source word. Throws std::invalid_argument on letters outside the map.
SignedWord apply_map(const GeneratorMap& map, const SignedWord& w);

struct HomCheck {
  bool is_hom = true;
  std::optional<SignedWord> violated_relator;  // source relator whose image is nontrivial
  SignedWord image;                            // normal form of that image
};

// Checks that every defining relator of the source maps to the identity of the target.
// Throws std::invalid_argument if an image uses a vertex the target does not have.
HomCheck check_hom(const GeneratorMap& map, const Presentation& source,
                   const CompletionReport& source_crs, const Presentation& target,
                   const CompletionReport& target_crs);

// True iff g(f(v)) = v in the source for every source generator v and f(g(w)) = w in the
// target for every target generator w.
bool check_mutually_inverse(const GeneratorMap& f, const GeneratorMap& g,
                            const Presentation& source, const CompletionReport& source_crs,
                            const Presentation& target, const CompletionReport& target_crs);

}  // namespace traag

#endif  // TRAAG_ANALYSIS_H
