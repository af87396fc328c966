#include "traag/signed_word.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace traag {

std::size_t WordHash::operator()(const SignedWord& w) const noexcept {
  // FNV-1a over letter codes.
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l.code() + 1;
    h *= 1099511628211ull;
  }
  return h;
}

AlphabetOrder::AlphabetOrder(std::vector<VertexId> vertex_order)
    : order_(std::move(vertex_order)), rank_(order_.size(), 0) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    auto v = order_[i].index;
    if (v >= order_.size() || seen[v]) {
      throw std::invalid_argument("alphabet order is not a permutation of the vertices");
    }
    seen[v] = true;
    rank_[v] = static_cast<std::uint32_t>(i);
  }
}

AlphabetOrder AlphabetOrder::identity(std::size_t vertex_count) {
  std::vector<VertexId> order(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) {
    order[i] = VertexId{static_cast<std::uint32_t>(i)};
  }
  return AlphabetOrder(std::move(order));
}

std::vector<Letter> AlphabetOrder::letters() const {
  std::vector<Letter> out;
  out.reserve(2 * order_.size());
  for (VertexId v : order_) {
    out.push_back({v, 1});
    out.push_back({v, -1});
  }
  return out;
}

SignedWord free_reduce(std::span<const Letter> w) {
  SignedWord stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

bool is_freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

std::strong_ordering shortlex_compare(std::span<const Letter> u, std::span<const Letter> v,
                                      const AlphabetOrder& order) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == v[i]) continue;
    return order.rank(u[i]) <=> order.rank(v[i]);
  }
  return std::strong_ordering::equal;
}

std::vector<Syllable> to_syllables(std::span<const Letter> w) {
  if (!is_freely_reduced(w)) {
    throw std::invalid_argument("to_syllables: word is not freely reduced");
  }
  std::vector<Syllable> out;
  for (Letter l : w) {
    if (!out.empty() && out.back().vertex == l.vertex) {
      out.back().exponent += l.sign;
    } else {
      out.push_back({l.vertex, l.sign});
    }
  }
  return out;
}

SignedWord from_syllables(std::span<const Syllable> syllables) {
  SignedWord out;
  for (const Syllable& s : syllables) {
    int sign = s.exponent < 0 ? -1 : 1;
    for (int i = 0; i < std::abs(s.exponent); ++i) {
      out.push_back({s.vertex, static_cast<std::int8_t>(sign)});
    }
  }
  return out;
}

SignedWord invert(std::span<const Letter> w) {
  SignedWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

SignedWord concat(std::span<const Letter> u, std::span<const Letter> v) {
  SignedWord out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

SignedWord power(std::span<const Letter> w, int exponent) {
  SignedWord base = exponent < 0 ? invert(w) : SignedWord(w.begin(), w.end());
  SignedWord out;
  for (int i = 0; i < std::abs(exponent); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

namespace {

std::uint32_t lookup(std::string_view name, std::span<const std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<std::uint32_t>(i);
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

}  // namespace

SignedWord parse_word(std::string_view text, std::span<const std::string> names) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "1") return {};

  SignedWord out;
  for (const std::string& tok : tokens) {
    auto caret = tok.find('^');
    std::string_view name = std::string_view(tok).substr(0, caret);
    int exponent = 1;
    if (caret != std::string::npos) {
      std::string_view exp = std::string_view(tok).substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size() || exponent == 0) {
        throw std::invalid_argument("malformed exponent in token '" + tok + "'");
      }
    }
    if (name.empty()) throw std::invalid_argument("malformed token '" + tok + "'");
    VertexId v{lookup(name, names)};
    std::int8_t sign = exponent < 0 ? -1 : 1;
    for (int i = 0; i < std::abs(exponent); ++i) out.push_back({v, sign});
  }
  return out;
}

std::string format_word(std::span<const Letter> w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += names[w[i].vertex.index];
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

std::string format_compact(std::span<const Letter> w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    out += names[l.vertex.index];
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace traag
