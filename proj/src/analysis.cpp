#include "traag/analysis.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace traag {

AbelianizationResult abelianization(const MixedGraph& g) {
  std::size_t origins = g.origins().size();
  return {g.vertex_count() - origins, origins};
}

std::optional<VertexId> is_indicable(const MixedGraph& g) {
  for (VertexId v : g.default_order().vertices()) {
    if (!g.is_origin(v)) return v;
  }
  return std::nullopt;
}

std::optional<TorsionWitness> torsion(const Presentation& p, const CompletionReport& crs) {
  if (!crs.finite()) {
    throw IncompleteSystemError("torsion verification needs a finite complete rewriting system");
  }
  auto cycle = find_clique_directed_cycle(p.graph);
  if (!cycle) return std::nullopt;

  TorsionWitness witness{*cycle, {}};
  for (VertexId v : *cycle) witness.element.push_back({v, 1});
  if (witness.element.empty() || word_problem(p, crs, witness.element)) {
    throw std::logic_error("torsion witness is trivial");
  }
  if (!word_problem(p, crs, power(witness.element, 2))) {
    throw std::logic_error("torsion witness does not square to the identity");
  }
  auto supp = support(p, crs, witness.element);
  if (!is_clique(p.graph, supp)) {
    throw std::logic_error("support of the torsion witness is not a clique");
  }
  return witness;
}

std::size_t geodesic_length(const Presentation& p, const CompletionReport& crs,
                            const SignedWord& w) {
  std::size_t length = 0;
  for (const Syllable& s : to_syllables(normal_form(p, crs, w).word)) {
    length += static_cast<std::size_t>(std::abs(s.exponent));
  }
  return length;
}

std::vector<VertexId> support(const Presentation& p, const CompletionReport& crs,
                              const SignedWord& w) {
  std::vector<VertexId> out;
  for (Letter l : normal_form(p, crs, w).word) out.push_back(l.vertex);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GeneratorMap identity_map(const MixedGraph& g) {
  GeneratorMap map{g.vertex_count(), {}};
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) map.images.push_back({letter(v)});
  return map;
}

GeneratorMap trivial_map(const MixedGraph& source, const MixedGraph& target) {
  return {target.vertex_count(), std::vector<SignedWord>(source.vertex_count())};
}

GeneratorMap parse_generator_map(std::istream& in, const MixedGraph& source,
                                 const MixedGraph& target) {
  std::vector<std::optional<SignedWord>> images(source.vertex_count());
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
    };
    auto arrow = line.find("->");
    if (arrow == std::string::npos) fail("expected 'vertex -> word'");
    std::istringstream head(line.substr(0, arrow));
    std::string name, extra;
    if (!(head >> name) || (head >> extra)) fail("expected a single source vertex");
    auto v = source.find(name);
    if (!v) fail("unknown source vertex '" + name + "'");
    if (images[v->index]) fail("vertex '" + name + "' mapped twice");
    try {
      images[v->index] = parse_word(line.substr(arrow + 2), target.names());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  GeneratorMap map{target.vertex_count(), {}};
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) {
      throw std::invalid_argument("no image given for vertex '" + source.names()[i] + "'");
    }
    map.images.push_back(std::move(*images[i]));
  }
  return map;
}

GeneratorMap parse_generator_map_text(std::string_view text, const MixedGraph& source,
                                      const MixedGraph& target) {
  std::istringstream in{std::string(text)};
  return parse_generator_map(in, source, target);
}

GeneratorMap load_generator_map(const std::string& path, const MixedGraph& source,
                                const MixedGraph& target) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_generator_map(in, source, target);
}

SignedWord apply_map(const GeneratorMap& map, const SignedWord& w) {
  SignedWord out;
  for (Letter l : w) {
    if (l.vertex.index >= map.images.size()) {
      throw std::invalid_argument("apply_map: letter outside the map's source");
    }
    const SignedWord& image = map.images[l.vertex.index];
    if (l.sign > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      SignedWord inv = invert(image);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

namespace {

void validate(const GeneratorMap& map, const Presentation& source, const Presentation& target) {
  if (map.images.size() != source.graph.vertex_count()) {
    throw std::invalid_argument("generator map does not cover the source vertices");
  }
  for (const SignedWord& image : map.images) {
    for (Letter l : image) {
      if (l.vertex.index >= target.graph.vertex_count()) {
        throw std::invalid_argument("generator map image uses an unknown target vertex");
      }
    }
  }
}

}  // namespace

HomCheck check_hom(const GeneratorMap& map, const Presentation& source,
                   const CompletionReport& source_crs, const Presentation& target,
                   const CompletionReport& target_crs) {
  validate(map, source, target);
  if (!source_crs.finite()) {
    throw IncompleteSystemError("source needs a finite complete rewriting system");
  }
  for (const SignedWord& relator : defining_relators(source.graph)) {
    NormalForm image = normal_form(target, target_crs, apply_map(map, relator));
    if (!image.word.empty()) return {false, relator, std::move(image.word)};
  }
  return {};
}

bool check_mutually_inverse(const GeneratorMap& f, const GeneratorMap& g,
                            const Presentation& source, const CompletionReport& source_crs,
                            const Presentation& target, const CompletionReport& target_crs) {
  validate(f, source, target);
  validate(g, target, source);
  for (std::uint32_t v = 0; v < source.graph.vertex_count(); ++v) {
    SignedWord back = apply_map(g, apply_map(f, {letter(v)}));
    if (normal_form(source, source_crs, back).word != SignedWord{letter(v)}) return false;
  }
  for (std::uint32_t v = 0; v < target.graph.vertex_count(); ++v) {
    SignedWord back = apply_map(f, apply_map(g, {letter(v)}));
    if (normal_form(target, target_crs, back).word != SignedWord{letter(v)}) return false;
  }
  return true;
}

}  // namespace traag
