#include "traag/growth.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace traag {

const CayleyBall::Entry* CayleyBall::find(const SignedWord& normal_form) const {
  auto it = elements.find(normal_form);
  return it == elements.end() ? nullptr : &it->second;
}

namespace {

// normal_form(g * s) for every g in `layer` and s in `gens`, row-major.
std::vector<SignedWord> products(const RewriteSystem& crs, const std::vector<SignedWord>& layer,
                                 const std::vector<Letter>& gens, unsigned threads) {
  std::vector<SignedWord> out(layer.size() * gens.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      SignedWord w = layer[k / gens.size()];
      w.push_back(gens[k % gens.size()]);
      out[k] = crs.reduce(w);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || out.size() < 256) {
    work(0, out.size());
    return out;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (out.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < out.size(); begin += chunk) {
    pool.emplace_back(work, begin, std::min(out.size(), begin + chunk));
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

CayleyBall cayley_ball(const Presentation& p, const CompletionReport& crs, std::size_t radius,
                       unsigned threads) {
  if (!crs.finite()) {
    throw IncompleteSystemError("Cayley ball enumeration needs a finite complete rewriting system");
  }
  const auto gens = p.order.letters();
  CayleyBall ball;
  ball.radius = radius;
  ball.layers.push_back({SignedWord{}});
  ball.elements.emplace(SignedWord{}, CayleyBall::Entry{0, 1});

  for (std::size_t n = 0; n < radius; ++n) {
    const auto& layer = ball.layers[n];
    auto next = products(crs.system, layer, gens, threads);
    std::vector<SignedWord> fresh;
    for (std::size_t k = 0; k < next.size(); ++k) {
      std::uint64_t paths = ball.elements.at(layer[k / gens.size()]).geodesics;
      auto [it, inserted] = ball.elements.try_emplace(next[k], CayleyBall::Entry{n + 1, 0});
      if (inserted) fresh.push_back(next[k]);
      if (it->second.layer == n + 1) it->second.geodesics += paths;
    }
    std::sort(fresh.begin(), fresh.end(), [&](const SignedWord& a, const SignedWord& b) {
      return shortlex_compare(a, b, p.order) < 0;
    });
    ball.layers.push_back(std::move(fresh));
  }
  return ball;
}

GrowthTable growth_table(const CayleyBall& ball) {
  GrowthTable table;
  for (const auto& layer : ball.layers) {
    std::uint64_t count = 0;
    for (const auto& w : layer) count += ball.elements.at(w).geodesics;
    table.spheres.push_back(layer.size());
    table.geodesics.push_back(count);
  }
  return table;
}

namespace {

struct Completed {
  Presentation presentation;
  CompletionReport completion;
};

Completed complete_or_throw(const MixedGraph& g, CompletionBudget budget) {
  Completed c{build_r0(g), {}};
  c.completion = complete(c.presentation, budget);
  if (!c.completion.finite()) {
    throw IncompleteSystemError("completion exhausted its budget");
  }
  return c;
}

}  // namespace

GrowthComparison compare_with_underlying_raag(const MixedGraph& g, std::size_t radius,
                                              CompletionBudget budget, unsigned threads) {
  auto twisted = complete_or_throw(g, budget);
  auto raag = complete_or_throw(underlying(g), budget);
  GrowthComparison out;
  out.twisted =
      growth_table(cayley_ball(twisted.presentation, twisted.completion, radius, threads));
  out.raag = growth_table(cayley_ball(raag.presentation, raag.completion, radius, threads));
  out.equal = out.twisted == out.raag;
  return out;
}

SignedWord correspondence_image(const MixedGraph& g, const SignedWord& normal_form,
                                CorrespondenceMap map) {
  SignedWord out = normal_form;
  if (map == CorrespondenceMap::Reinterpret) return out;
  for (std::size_t j = 0; j < out.size(); ++j) {
    bool flip = false;
    for (std::size_t i = 0; i < j; ++i) {
      const MixedEdge* e = g.edge_between(normal_form[i].vertex, normal_form[j].vertex);
      if (e && e->directed && e->origin() == normal_form[j].vertex) flip = !flip;
    }
    if (flip) out[j] = out[j].inverse();
  }
  return out;
}

CayleyCorrespondence check_cayley_correspondence(const MixedGraph& g, std::size_t radius,
                                                 CompletionBudget budget, CorrespondenceMap map) {
  auto twisted = complete_or_throw(g, budget);
  auto raag = complete_or_throw(underlying(g), budget);
  auto tball = cayley_ball(twisted.presentation, twisted.completion, radius);
  auto rball = cayley_ball(raag.presentation, raag.completion, radius);
  const RewriteSystem& rsys = raag.completion.system;

  std::unordered_map<SignedWord, SignedWord, WordHash> phi;
  std::unordered_set<SignedWord, WordHash> image;
  bool in_ball = true;
  for (const auto& [word, entry] : tball.elements) {
    SignedWord mapped = rsys.reduce(correspondence_image(g, word, map));
    if (!rball.find(mapped)) in_ball = false;
    image.insert(mapped);
    phi.emplace(word, std::move(mapped));
  }

  CayleyCorrespondence out;
  out.bijective = in_ball && image.size() == tball.size() && image.size() == rball.size();
  out.adjacency_preserved = true;
  const auto gens = twisted.presentation.order.letters();
  for (std::size_t n = 0; n + 1 < tball.layers.size(); ++n) {
    for (const SignedWord& w : tball.layers[n]) {
      for (Letter s : gens) {
        SignedWord ws = w;
        ws.push_back(s);
        SignedWord h = twisted.completion.system.reduce(ws);
        SignedWord step = rsys.reduce(concat(invert(phi.at(w)), phi.at(h)));
        if (step.size() != 1) out.adjacency_preserved = false;
      }
    }
  }
  return out;
}

BallGraph ball_graph(const CayleyBall& ball, const Presentation& p, const CompletionReport& crs) {
  BallGraph out;
  std::unordered_map<SignedWord, std::size_t, WordHash> id;
  for (const auto& layer : ball.layers) {
    for (const auto& w : layer) {
      id.emplace(w, out.nodes.size());
      out.nodes.push_back(w);
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  const auto gens = p.order.letters();
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    for (Letter s : gens) {
      SignedWord ws = out.nodes[i];
      ws.push_back(s);
      auto it = id.find(crs.system.reduce(ws));
      if (it == id.end() || it->second == i) continue;
      edges.emplace(std::min(i, it->second), std::max(i, it->second));
    }
  }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

std::string export_cayley_dot(const CayleyBall& ball, const Presentation& p,
                              const CompletionReport& crs) {
  BallGraph graph = ball_graph(ball, p, crs);
  std::ostringstream out;
  out << "graph cayley {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << format_word(graph.nodes[i], p.graph.names()) << "\"];\n";
  }
  for (auto [a, b] : graph.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace traag
