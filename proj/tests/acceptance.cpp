// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.h"

using namespace traag;
using test::graph;
using test::word;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure, keeps going.
struct Checker {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = "failed: " + what;
    }
  }
};

Outcome worked_examples() {
  Checker c;
  const std::vector<std::string> ab{"a", "b"};
  RewriteSystem sys(AlphabetOrder::identity(2));
  sys.add({parse_word("b a", ab), parse_word("a b", ab)});
  c.expect(sys.apply_once(parse_word("b a b a", ab)) == parse_word("a b b a", ab), "baba -> abba");
  c.expect(sys.reduce(parse_word("b a b a", ab)) == parse_word("a a b b", ab), "baba ->* aabb");
  c.expect(sys.is_irreducible(parse_word("a a b b", ab)), "aabb is reduced");

  Presentation z2 = build_r0(graph(test::kZ2));
  std::size_t joined = 0;
  for (const CriticalPair& cp : critical_pairs(z2.r0)) {
    // peaks b^e a^f a^-f
    if (cp.peak.size() != 3 || cp.peak[0].vertex.index != 1 || cp.peak[1].vertex.index != 0 ||
        cp.peak[2] != cp.peak[1].inverse())
      continue;
    SignedWord target{cp.peak[0]};
    c.expect(z2.r0.reduce(cp.left_descendant) == target &&
                 z2.r0.reduce(cp.right_descendant) == target,
             "Z^2 pair joins to b^e");
    ++joined;
  }
  c.expect(joined >= 4, "all four sign choices of the Z^2 peak present");

  Presentation klein = build_r0(graph(test::kKlein));
  for (int a : {1, -1})
    for (int b : {1, -1})
      c.expect(klein.r0.reduce(SignedWord{letter(1, b), letter(0, a)}) ==
                   SignedWord{letter(0, -a), letter(1, b)},
               "Klein b^e a^f -> a^-f b^e");
  if (c.out.pass) c.out.detail = "baba ->* aabb; " + std::to_string(joined) +
                                 " Z^2 peaks join; Klein rule reproduced";
  return c.out;
}

Outcome complete_and_bipartite() {
  Checker c;
  std::size_t complete_graphs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t pairs = n * (n - 1) / 2, total = 1;
    for (std::size_t k = 0; k < pairs; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<int> kinds(pairs);
      std::size_t x = code;
      for (int& k : kinds) {
        k = static_cast<int>(x % 3);
        x /= 3;
      }
      auto report = complete(build_r0(test::complete_mixed_graph(n, kinds)));
      c.expect(report.finite() && report.added_count() == 0,
               "complete graph on " + std::to_string(n) + " vertices, case " + std::to_string(code));
      ++complete_graphs;
    }
  }

  std::mt19937_64 rng(2024);
  std::size_t bipartite = 0;
  for (; bipartite < 250; ++bipartite) {
    std::size_t p = 1 + rng() % 3, q = 1 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p; ++i) names.push_back("a" + std::to_string(i));
    for (std::size_t j = 0; j < q; ++j) names.push_back("b" + std::to_string(j));
    std::vector<MixedEdge> edges;
    for (std::uint32_t i = 0; i < p; ++i) {
      for (std::uint32_t j = 0; j < q; ++j) {
        VertexId u{i}, v{static_cast<std::uint32_t>(p + j)};
        switch (rng() % 4) {
          case 1: edges.push_back({u, v, false}); break;
          case 2: edges.push_back({u, v, true}); break;
          case 3: edges.push_back({v, u, true}); break;
          default: break;
        }
      }
    }
    auto report = complete(build_r0(MixedGraph(names, edges)));
    c.expect(report.finite() && report.added_count() == 0,
             "bipartite case " + std::to_string(bipartite));
  }
  if (c.out.pass) {
    c.out.detail = std::to_string(complete_graphs) + " complete and " + std::to_string(bipartite) +
                   " bipartite graphs: Finite, 0 added";
  }
  return c.out;
}

Outcome pentagon() {
  auto report = complete(build_r0(graph(test::kPentagon)), {500, 1000000});
  return {report.status == CompletionStatus::BudgetExhausted,
          std::string(to_string(report.status)) + " after " +
              std::to_string(report.added_count()) + " added rules"};
}

Outcome added_rule_shape() {
  Checker c;
  std::mt19937_64 rng(99);
  std::size_t finite = 0, attempts = 0, added = 0;
  while (finite < 100 && attempts < 5000) {
    ++attempts;
    MixedGraph g = test::random_mixed_graph(rng, 2 + rng() % 4);
    Presentation p = build_r0(g);
    auto report = complete(p, {200, 200000});
    if (!report.finite()) continue;
    ++finite;
    auto shapes = rule_shape_report(p, report);
    added += shapes.rules.size();
    c.expect(shapes.all_pass(), "rule shape on a finite completion");
  }
  c.expect(finite == 100, "found 100 graphs with finite completion");

  // Finite completions of R0 add nothing, so also check the rules produced by the first
  // completion pass on the path a - b, b -> c.
  Presentation path = build_r0(graph(test::kPath));
  auto trace = rule_shape_trace(path, complete(path, {40, 100000}));
  std::size_t first_pass = 0;
  for (const RuleShape& s : trace.rules) {
    if (s.step != 1) continue;
    ++first_pass;
    c.expect(s.passes() && s.length_matches_step, "path first-pass rule shape");
  }
  c.expect(first_pass == 8, "path first pass adds 8 rules");
  if (c.out.pass) {
    c.out.detail = std::to_string(finite) + " finite graphs, " + std::to_string(added) +
                   " added rules (all pass); path first pass " + std::to_string(first_pass) +
                   "/8 pass";
  }
  return c.out;
}

Outcome normal_form_soundness() {
  Checker c;
  std::mt19937_64 rng(7);
  std::size_t checks = 0;
  for (const auto& [name, text] : test::graph_suite()) {
    test::Group grp = test::group(text);
    std::size_t n = grp.p.graph.vertex_count();
    auto relators = defining_relators(grp.p.graph);
    for (int i = 0; i < 1000; ++i) {
      SignedWord u = test::random_word(rng, n, rng() % 12);
      SignedWord v = test::random_word(rng, n, rng() % 12);
      SignedWord nf = grp.nf(u);
      if (!relators.empty()) {
        const SignedWord& r = relators[rng() % relators.size()];
        c.expect(grp.nf(concat(concat(u, r), v)) == grp.nf(concat(u, v)), name + " relator");
      }
      c.expect(grp.nf(concat(u, invert(u))).empty(), name + " inverse law");
      c.expect(grp.nf(concat(invert(nf), u)).empty(), name + " inverse of normal form");
      c.expect(grp.crs.system.reduce(u, Strategy::Rightmost) == grp.crs.system.reduce(u),
               name + " strategy independence");
      c.expect(grp.nf(nf) == nf, name + " idempotence");
      for (const MixedEdge& e : grp.p.graph.edges()) {
        int m = static_cast<int>(rng() % 7) - 3, k = static_cast<int>(rng() % 7) - 3;
        SignedWord x{letter(e.first.index)}, y{letter(e.second.index)};
        int twisted = (e.directed && k % 2 != 0) ? -m : m;
        c.expect(grp.nf(concat(power(x, m), power(y, k))) ==
                     grp.nf(concat(power(y, k), power(x, twisted))),
                 name + " relation law");
      }
      ++checks;
    }
  }
  if (c.out.pass) c.out.detail = std::to_string(checks) + " random words over 10 graphs, 0 failures";
  return c.out;
}

Outcome growth_equality() {
  Checker c;
  std::ostringstream detail;
  struct Case {
    const char* name;
    const char* text;
    std::size_t radius;
  };
  for (Case k : {Case{"Klein/Z^2", test::kKlein, 6}, Case{"Delta/K3", test::kDelta, 5},
                 Case{"path/path RAAG", test::kPathOrdered, 5}}) {
    auto cmp = compare_with_underlying_raag(graph(k.text), k.radius);
    c.expect(cmp.equal, k.name);
    if (std::string(k.name) == "Klein/Z^2") {
      std::vector<std::uint64_t> lattice;
      for (int n = 0; n <= 6; ++n) lattice.push_back(test::z2_sphere(n));
      c.expect(cmp.twisted.spheres == lattice, "Klein spheres equal lattice oracle");
      c.expect(lattice == std::vector<std::uint64_t>{1, 4, 8, 12, 16, 20, 24},
               "lattice oracle values");
    }
    detail << k.name << " r" << k.radius << (cmp.equal ? " equal; " : " differ; ");
  }
  if (c.out.pass) c.out.detail = detail.str() + "Klein spheres [1,4,8,12,16,20,24]";
  return c.out;
}

Outcome cayley_correspondence() {
  Checker c;
  std::ostringstream detail;
  for (auto [name, text] : {std::pair{"Klein", test::kKlein}, std::pair{"Delta", test::kDelta},
                            std::pair{"path", test::kPathOrdered}}) {
    auto r = check_cayley_correspondence(graph(text), 4);
    auto fixed = check_cayley_correspondence(graph(text), 4, {}, CorrespondenceMap::SignCorrected);
    c.expect(r.bijective, std::string(name) + " bijective");
    c.expect(r.adjacency_preserved, std::string(name) + " adjacency");
    if (detail.tellp() > 0) detail << ' ';
    detail << name << ": re-interpretation " << (r.bijective ? "bijective" : "not bijective")
           << (r.adjacency_preserved ? ", adjacent" : ", adjacency broken")
           << "; sign-corrected "
           << (fixed.bijective && fixed.adjacency_preserved ? "isomorphic" : "fails") << ".";
  }
  c.out.detail = (c.out.pass ? "" : c.out.detail + "; ") + detail.str();
  return c.out;
}

// Some nontrivial element of the radius-r ball has order 2 or 3.
bool ball_has_torsion(const test::Group& grp, std::size_t radius) {
  CayleyBall ball = cayley_ball(grp.p, grp.crs, radius);
  for (const auto& [w, entry] : ball.elements) {
    if (w.empty()) continue;
    if (grp.nf(power(w, 2)).empty() || grp.nf(power(w, 3)).empty()) return true;
  }
  return false;
}

Outcome torsion_criterion() {
  Checker c;
  test::Group delta = test::group(test::kDelta);
  auto w = torsion(delta.p, delta.crs);
  c.expect(w && w->element == word(delta.p.graph, "a b c") && delta.nf(power(w->element, 2)).empty(),
           "Delta witness abc");
  test::Group z2 = test::group(test::kZ2), klein = test::group(test::kKlein);
  c.expect(!torsion(z2.p, z2.crs), "Z^2 torsion-free");
  c.expect(!torsion(klein.p, klein.crs), "Klein torsion-free");

  std::size_t graphs = 0, with_torsion = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const MixedGraph& g : test::all_mixed_graphs(n)) {
      auto grp = test::try_group(g);
      c.expect(grp.has_value(), "finite completion for a small graph");
      if (!grp) continue;
      bool predicate = torsion(grp->p, grp->crs).has_value();
      bool oracle = ball_has_torsion(*grp, 6);
      c.expect(predicate == oracle, "oracle agrees on graph " + format_graph(g));
      ++graphs;
      with_torsion += predicate;
    }
  }
  if (c.out.pass) {
    c.out.detail = "Delta: abc, (abc)^2 = 1; Z^2, Klein: none; oracle agrees on " +
                   std::to_string(graphs) + " graphs (" + std::to_string(with_torsion) +
                   " with torsion)";
  }
  return c.out;
}

Outcome abelianization_criterion() {
  Checker c;
  for (const auto& [name, text] : test::graph_suite()) {
    MixedGraph g = graph(text);
    auto [free_rank, torsion] = test::abelian_invariants(g);
    auto ab = abelianization(g);
    c.expect(ab.free_rank == free_rank && ab.z2_rank == torsion.size(), name + " abelianization");
  }
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const MixedGraph& g : test::all_mixed_graphs(n)) {
      auto witness = is_indicable(g);
      c.expect(witness.has_value() == (abelianization(g).free_rank >= 1),
               "indicable iff free rank >= 1");
      if (witness) {
        for (const SignedWord& r : defining_relators(g))
          c.expect(test::exponent_sum(r, *witness) == 0, "witness map kills relators");
      }
      ++graphs;
    }
  }
  if (c.out.pass) {
    c.out.detail = "formula matches Smith form on the suite; equivalence holds on " +
                   std::to_string(graphs) + " graphs";
  }
  return c.out;
}

Outcome isomorphism_certificate() {
  Checker c;
  test::Group g1 = test::group(load_graph(test::data_path("gamma1.g")));
  test::Group g2 = test::group(load_graph(test::data_path("gamma2.g")));
  GeneratorMap f = load_generator_map(test::data_path("f.map"), g1.p.graph, g2.p.graph);
  GeneratorMap g = load_generator_map(test::data_path("g.map"), g2.p.graph, g1.p.graph);
  c.expect(check_hom(f, g1.p, g1.crs, g2.p, g2.crs).is_hom, "f is a homomorphism");
  c.expect(check_hom(g, g2.p, g2.crs, g1.p, g1.crs).is_hom, "g is a homomorphism");
  c.expect(check_mutually_inverse(f, g, g1.p, g1.crs, g2.p, g2.crs), "f, g mutually inverse");
  if (c.out.pass) c.out.detail = "f, g homomorphisms and mutually inverse: G1 = G2";
  return c.out;
}

Outcome geodesic_length_criterion() {
  Checker c;
  std::size_t elements = 0;
  for (const auto& [name, text] : test::graph_suite()) {
    test::Group grp = test::group(text);
    for (const auto& [w, d] : test::bfs_distances(grp, 5)) {
      c.expect(geodesic_length(grp.p, grp.crs, w) == d, name + " geodesic length");
      ++elements;
    }
  }
  if (c.out.pass) c.out.detail = std::to_string(elements) + " elements, all match BFS distance";
  return c.out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
    // Set when the criterion is known not to hold as stated; its FAIL line is still
    // printed but does not change the exit status.
    const char* known_failure = nullptr;
  };
  std::vector<Criterion> criteria{
      {1, "worked examples", 1, worked_examples},
      {2, "finite complete systems for complete and bipartite graphs", 60, complete_and_bipartite},
      {3, "pentagon completion exhausts its budget", 30, pentagon},
      {4, "added-rule shape", 300, added_rule_shape},
      {5, "normal-form soundness", 120, normal_form_soundness},
      {6, "growth equals the underlying RAAG", 120, growth_equality},
      {7, "Cayley graph correspondence", 120, cayley_correspondence,
       "the re-interpretation map does not preserve adjacency when an edge's origin is the "
       "larger vertex"},
      {8, "torsion", 300, torsion_criterion},
      {9, "abelianization and indicability", 60, abelianization_criterion},
      {10, "isomorphism certificate", 1, isomorphism_certificate},
      {11, "geodesic length", 120, geodesic_length_criterion},
  };
  int failures = 0, known = 0, passed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.limit_seconds;
    bool pass = o.pass && in_time;
    if (!in_time) o.detail += "; over time limit";
    if (!pass) (c.known_failure ? known : failures) += 1;
    passed += pass;
    std::printf("[%s] %2d %s (%.2fs, limit %.0fs): %s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                seconds, c.limit_seconds, o.detail.c_str());
    if (!pass && c.known_failure) std::printf("       known failure: %s\n", c.known_failure);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed, %d known failure(s), %d unexpected failure(s)\n", passed,
              criteria.size(), known, failures);
  return failures == 0 ? 0 : 1;
}
