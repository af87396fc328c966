#ifndef TRAAG_SIGNED_WORD_H
#define TRAAG_SIGNED_WORD_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace traag {

// Position of a vertex in the owning graph's declaration order.
struct VertexId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

// A generator or its inverse: v^{+1} or v^{-1}.
struct Letter {
  VertexId vertex;
  std::int8_t sign = 1;

  constexpr Letter inverse() const { return {vertex, static_cast<std::int8_t>(-sign)}; }
  // Order-independent code, 2*v for v and 2*v+1 for v^-1.
  constexpr std::uint32_t code() const { return 2 * vertex.index + (sign < 0 ? 1 : 0); }

  // Structural order (vertex, then sign), for use as a container key. Not shortlex.
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

constexpr Letter letter(std::uint32_t vertex, int sign = 1) {
  return {VertexId{vertex}, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
}

// The empty word is the identity.
using SignedWord = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const SignedWord& w) const noexcept;
};

// Maximal power v^k inside a word.
struct Syllable {
  VertexId vertex;
  int exponent = 0;

  friend constexpr bool operator==(const Syllable&, const Syllable&) = default;
};

// Total order on generators: v1 < v1^-1 < v2 < v2^-1 < ... following a permutation of
// the vertices.
class AlphabetOrder {
 public:
  AlphabetOrder() = default;
  // Throws std::invalid_argument unless `vertex_order` is a permutation of 0..n-1.
  explicit AlphabetOrder(std::vector<VertexId> vertex_order);

  static AlphabetOrder identity(std::size_t vertex_count);

  std::size_t vertex_count() const { return order_.size(); }
  const std::vector<VertexId>& vertices() const { return order_; }

  std::uint32_t rank(VertexId v) const { return rank_.at(v.index); }
  std::uint32_t rank(Letter l) const { return 2 * rank(l.vertex) + (l.sign < 0 ? 1 : 0); }

  // Every letter of the doubled alphabet, ascending.
  std::vector<Letter> letters() const;

  friend bool operator==(const AlphabetOrder& a, const AlphabetOrder& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> rank_;
};

SignedWord free_reduce(std::span<const Letter> w);
bool is_freely_reduced(std::span<const Letter> w);

std::strong_ordering shortlex_compare(std::span<const Letter> u, std::span<const Letter> v,
                                      const AlphabetOrder& order);

// Throws std::invalid_argument if `w` is not freely reduced.
std::vector<Syllable> to_syllables(std::span<const Letter> w);
SignedWord from_syllables(std::span<const Syllable> syllables);

SignedWord invert(std::span<const Letter> w);
SignedWord concat(std::span<const Letter> u, std::span<const Letter> v);
SignedWord power(std::span<const Letter> w, int exponent);

// Word syntax: whitespace separated tokens `name`, `name^k`, `name^-k`; `1` alone is the
// empty word. Throws std::invalid_argument on unknown names or malformed tokens.
SignedWord parse_word(std::string_view text, std::span<const std::string> names);
// Space separated tokens, one per letter; `1` for the empty word.
std::string format_word(std::span<const Letter> w, std::span<const std::string> names);
// Letter tokens joined without separators (`abc^-1`). For display only.
std::string format_compact(std::span<const Letter> w, std::span<const std::string> names);

}  // namespace traag

#endif  // TRAAG_SIGNED_WORD_H
