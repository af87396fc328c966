#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "traag/analysis.h"
#include "traag/growth.h"
#include "traag/mixed_graph.h"
#include "traag/presentation.h"
#include "traag/rewriting.h"

namespace traag::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string graph_path;
  std::string target_path;
  std::string word;
  std::string map_path;
  std::string inverse_map_path;
  std::string order;
  std::string format = "text";
  std::string cayley_format = "dot";
  std::size_t radius = 3;
  std::size_t max_rules = CompletionBudget{}.max_new_rules;
  std::size_t max_steps = CompletionBudget{}.max_steps;
  unsigned threads = 1;
  bool geodesic = false;
  bool compare_raag = false;

  CompletionBudget budget() const { return {max_rules, max_steps}; }
};

// Non-zero exit after the message has been written.
struct Exit {
  int code;
};

std::string count_of(std::size_t n, const std::string& one, const std::string& many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

std::string join_names(const MixedGraph& g, const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += g.name(vs[i]);
  }
  return out;
}

std::string list_text(const std::vector<std::uint64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "]";
}

json table_json(const GrowthTable& t, std::size_t radius) {
  return json{{"radius", radius}, {"spheres", t.spheres}, {"geodesics", t.geodesics}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

MixedGraph load(const Config& cfg, const std::string& path) {
  MixedGraph g = load_graph(path);
  if (cfg.order.empty()) return g;
  std::istringstream in(cfg.order);
  std::vector<VertexId> ids;
  for (std::string name; in >> name;) {
    auto v = g.find(name);
    if (!v) throw GraphError("--order names unknown vertex '" + name + "'");
    ids.push_back(*v);
  }
  try {
    if (ids.size() != g.vertex_count()) throw std::invalid_argument("size");
    return g.with_order(AlphabetOrder(std::move(ids)));
  } catch (const std::invalid_argument&) {
    throw GraphError("--order must be a permutation of the vertices");
  }
}

struct Group {
  Presentation presentation;
  CompletionReport completion;
};

Group completed(const MixedGraph& g, const Config& cfg, std::ostream& err) {
  Group grp{build_r0(g), {}};
  grp.completion = complete(grp.presentation, cfg.budget());
  if (!grp.completion.finite()) {
    err << "BudgetExhausted, " << grp.completion.added_count() << " added\n";
    throw Exit{kBudgetExhausted};
  }
  return grp;
}

SignedWord word_arg(const Config& cfg, const MixedGraph& g) {
  return parse_word(cfg.word, g.names());
}

int cmd_parse(const Config& cfg, std::ostream& out) {
  MixedGraph g = load(cfg, cfg.graph_path);
  auto origins = g.origins();
  if (cfg.format == "json") {
    json names = json::array();
    for (VertexId v : origins) names.push_back(g.name(v));
    emit_json(out, json{{"vertices", g.vertex_count()},
                        {"undirected_edges", g.undirected_edge_count()},
                        {"directed_edges", g.directed_edge_count()},
                        {"origins", names}});
    return kOk;
  }
  std::string edges;
  if (g.undirected_edge_count()) {
    edges = count_of(g.undirected_edge_count(), "undirected edge", "undirected edges");
  }
  if (g.directed_edge_count()) {
    if (!edges.empty()) edges += ", ";
    edges += count_of(g.directed_edge_count(), "directed edge", "directed edges");
  }
  if (edges.empty()) edges = "0 edges";
  out << count_of(g.vertex_count(), "vertex", "vertices") << ", " << edges
      << "; origins: " << (origins.empty() ? "none" : join_names(g, origins)) << '\n';
  return kOk;
}

int cmd_complete(const Config& cfg, std::ostream& out) {
  MixedGraph g = load(cfg, cfg.graph_path);
  Presentation p = build_r0(g);
  CompletionReport report = complete(p, cfg.budget());
  std::string status = std::string(to_string(report.status));
  if (cfg.format == "json") {
    json j{{"status", status}, {"steps", report.steps}, {"added", report.added_count()}};
    if (report.finite()) {
      json rules = json::array();
      for (const Rule& r : report.system.sorted_rules()) {
        rules.push_back(json{{"lhs", format_word(r.lhs, g.names())},
                             {"rhs", format_word(r.rhs, g.names())}});
      }
      j["rules"] = std::move(rules);
    }
    emit_json(out, j);
  } else {
    if (report.finite()) {
      out << format_rules(report.system, g.names());
      out << count_of(report.system.size(), "rule", "rules") << '\n';
    }
    out << status << ", " << report.added_count() << " added\n";
  }
  return report.finite() ? kOk : kBudgetExhausted;
}

int cmd_reduce(const Config& cfg, std::ostream& out, std::ostream& err) {
  MixedGraph g = load(cfg, cfg.graph_path);
  SignedWord w = word_arg(cfg, g);
  Group grp = completed(g, cfg, err);
  NormalForm nf = normal_form(grp.presentation, grp.completion, w);
  std::size_t length = geodesic_length(grp.presentation, grp.completion, w);
  if (cfg.format == "json") {
    emit_json(out, json{{"normal_form", format_word(nf.word, g.names())}, {"length", length}});
  } else {
    out << format_word(nf.word, g.names()) << '\n';
  }
  return kOk;
}

int cmd_wp(const Config& cfg, std::ostream& out, std::ostream& err) {
  MixedGraph g = load(cfg, cfg.graph_path);
  SignedWord w = word_arg(cfg, g);
  Group grp = completed(g, cfg, err);
  bool trivial = word_problem(grp.presentation, grp.completion, w);
  if (cfg.format == "json") {
    emit_json(out, json{{"trivial", trivial}});
  } else {
    out << (trivial ? "trivial" : "nontrivial") << '\n';
  }
  return kOk;
}

int cmd_growth(const Config& cfg, std::ostream& out, std::ostream& err) {
  MixedGraph g = load(cfg, cfg.graph_path);
  if (!cfg.compare_raag) {
    Group grp = completed(g, cfg, err);
    GrowthTable t = growth_table(
        cayley_ball(grp.presentation, grp.completion, cfg.radius, cfg.threads));
    if (cfg.format == "json") {
      emit_json(out, table_json(t, cfg.radius));
    } else {
      out << "spheres " << list_text(t.spheres);
      if (cfg.geodesic) out << "; geodesics " << list_text(t.geodesics);
      out << '\n';
    }
    return kOk;
  }
  completed(g, cfg, err);
  completed(underlying(g), cfg, err);
  GrowthComparison cmp = compare_with_underlying_raag(g, cfg.radius, cfg.budget(), cfg.threads);
  if (cfg.format == "json") {
    emit_json(out, json{{"equal", cmp.equal},
                        {"twisted", table_json(cmp.twisted, cfg.radius)},
                        {"raag", table_json(cmp.raag, cfg.radius)}});
  } else {
    out << "equal: " << (cmp.equal ? "true" : "false") << "; spheres "
        << list_text(cmp.twisted.spheres);
    if (cfg.geodesic) out << "; geodesics " << list_text(cmp.twisted.geodesics);
    if (!cmp.equal) {
      out << "; raag spheres " << list_text(cmp.raag.spheres) << "; raag geodesics "
          << list_text(cmp.raag.geodesics);
    }
    out << '\n';
  }
  return cmp.equal ? kOk : kVerificationFailure;
}

int cmd_torsion(const Config& cfg, std::ostream& out, std::ostream& err) {
  MixedGraph g = load(cfg, cfg.graph_path);
  Group grp = completed(g, cfg, err);
  auto witness = torsion(grp.presentation, grp.completion);
  if (cfg.format == "json") {
    json j{{"torsion", witness.has_value()}};
    if (witness) {
      json cycle = json::array();
      for (VertexId v : witness->cycle) cycle.push_back(g.name(v));
      j["cycle"] = std::move(cycle);
      j["element"] = format_word(witness->element, g.names());
    }
    emit_json(out, j);
  } else if (witness) {
    std::string element = format_compact(witness->element, g.names());
    out << "torsion: yes; witness cycle " << join_names(g, witness->cycle) << "; element "
        << element << "; (" << element << ")^2 = 1\n";
  } else {
    out << "torsion: no\n";
  }
  return kOk;
}

int cmd_abel(const Config& cfg, std::ostream& out) {
  MixedGraph g = load(cfg, cfg.graph_path);
  AbelianizationResult ab = abelianization(g);
  if (cfg.format == "json") {
    emit_json(out, json{{"free_rank", ab.free_rank}, {"z2_rank", ab.z2_rank}});
  } else {
    out << "abelianization: Z^" << ab.free_rank << " x Z_2^" << ab.z2_rank << '\n';
  }
  return kOk;
}

int cmd_indicable(const Config& cfg, std::ostream& out) {
  MixedGraph g = load(cfg, cfg.graph_path);
  auto witness = is_indicable(g);
  if (cfg.format == "json") {
    json j{{"indicable", witness.has_value()}};
    if (witness) j["witness"] = g.name(*witness);
    emit_json(out, j);
  } else if (witness) {
    out << "indicable: yes; witness " << g.name(*witness) << '\n';
  } else {
    out << "indicable: no\n";
  }
  return kOk;
}

int cmd_homcheck(const Config& cfg, std::ostream& out, std::ostream& err) {
  MixedGraph source = load_graph(cfg.graph_path);
  MixedGraph target = load_graph(cfg.target_path);
  GeneratorMap f = load_generator_map(cfg.map_path, source, target);
  Group src = completed(source, cfg, err);
  Group tgt = completed(target, cfg, err);

  json j;
  bool ok = true;
  HomCheck hf = check_hom(f, src.presentation, src.completion, tgt.presentation, tgt.completion);
  j["hom"] = hf.is_hom;
  std::ostringstream text;
  text << "hom: " << (hf.is_hom ? "yes" : "no");
  if (!hf.is_hom) {
    ok = false;
    j["violated_relator"] = format_word(*hf.violated_relator, source.names());
    j["image"] = format_word(hf.image, target.names());
    text << "; violated relator " << format_word(*hf.violated_relator, source.names())
         << "; image " << format_word(hf.image, target.names());
  }
  text << '\n';

  if (!cfg.inverse_map_path.empty()) {
    GeneratorMap g = load_generator_map(cfg.inverse_map_path, target, source);
    HomCheck hg =
        check_hom(g, tgt.presentation, tgt.completion, src.presentation, src.completion);
    j["inverse_hom"] = hg.is_hom;
    text << "inverse hom: " << (hg.is_hom ? "yes" : "no");
    if (!hg.is_hom) {
      ok = false;
      j["inverse_violated_relator"] = format_word(*hg.violated_relator, target.names());
      text << "; violated relator " << format_word(*hg.violated_relator, target.names());
    }
    text << '\n';
    bool iso = hf.is_hom && hg.is_hom &&
               check_mutually_inverse(f, g, src.presentation, src.completion, tgt.presentation,
                                      tgt.completion);
    ok = ok && iso;
    j["isomorphism"] = iso;
    text << "isomorphism: " << (iso ? "yes" : "no") << '\n';
  }
  if (cfg.format == "json") {
    emit_json(out, j);
  } else {
    out << text.str();
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_cayley(const Config& cfg, std::ostream& out, std::ostream& err) {
  MixedGraph g = load(cfg, cfg.graph_path);
  Group grp = completed(g, cfg, err);
  CayleyBall ball = cayley_ball(grp.presentation, grp.completion, cfg.radius, cfg.threads);
  if (cfg.cayley_format == "dot") {
    out << export_cayley_dot(ball, grp.presentation, grp.completion);
    return kOk;
  }
  BallGraph graph = ball_graph(ball, grp.presentation, grp.completion);
  json nodes = json::array();
  for (const SignedWord& w : graph.nodes) nodes.push_back(format_word(w, g.names()));
  json edges = json::array();
  for (auto [a, b] : graph.edges) edges.push_back(json::array({a, b}));
  emit_json(out, json{{"radius", cfg.radius}, {"nodes", nodes}, {"edges", edges}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Twisted right-angled Artin groups: rewriting, normal forms and growth"};
  app.require_subcommand(1);

  auto budget_opts = [&](CLI::App* sub) {
    sub->add_option("--max-rules", cfg.max_rules, "Completion budget: new rules")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-steps", cfg.max_steps, "Completion budget: rule pairs examined")
        ->check(CLI::PositiveNumber);
  };
  auto graph_cmd = [&](const std::string& name, const std::string& help, bool word = false) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", cfg.graph_path, "Graph file")->required();
    if (word) sub->add_option("word", cfg.word, "Word, e.g. \"a b^-1\"")->required();
    sub->add_option("--order", cfg.order, "Vertex order, e.g. \"b a c\"");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    budget_opts(sub);
    return sub;
  };

  auto* parse = graph_cmd("parse", "Validate a graph file");
  auto* complete_cmd = graph_cmd("complete", "Run Knuth-Bendix completion on R0");
  auto* reduce = graph_cmd("reduce", "Normal form of a word", true);
  auto* wp = graph_cmd("wp", "Decide whether a word is trivial", true);
  auto* growth = graph_cmd("growth", "Spherical and geodesic growth");
  growth->add_option("--radius", cfg.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  growth->add_flag("--geodesic", cfg.geodesic, "Also print geodesic growth");
  growth->add_flag("--compare-raag", cfg.compare_raag, "Compare with the underlying RAAG");
  growth->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* torsion_cmd = graph_cmd("torsion", "Decide torsion, with witness");
  auto* abel = graph_cmd("abel", "Abelianization");
  auto* indicable = graph_cmd("indicable", "Surjection onto Z, with witness vertex");

  auto* homcheck = app.add_subcommand("homcheck", "Verify a homomorphism certificate");
  homcheck->add_option("source", cfg.graph_path, "Source graph file")->required();
  homcheck->add_option("target", cfg.target_path, "Target graph file")->required();
  homcheck->add_option("map", cfg.map_path, "Generator map file")->required();
  homcheck->add_option("--inverse", cfg.inverse_map_path,
                       "Map target -> source; also check the two are mutually inverse");
  homcheck->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  budget_opts(homcheck);

  auto* cayley = app.add_subcommand("cayley", "Export a Cayley ball");
  cayley->add_option("graph", cfg.graph_path, "Graph file")->required();
  cayley->add_option("--radius", cfg.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  cayley->add_option("--order", cfg.order, "Vertex order");
  cayley->add_option("--format", cfg.cayley_format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  cayley->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  budget_opts(cayley);

  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  try {
    if (parse->parsed()) return cmd_parse(cfg, out);
    if (complete_cmd->parsed()) return cmd_complete(cfg, out);
    if (reduce->parsed()) return cmd_reduce(cfg, out, err);
    if (wp->parsed()) return cmd_wp(cfg, out, err);
    if (growth->parsed()) return cmd_growth(cfg, out, err);
    if (torsion_cmd->parsed()) return cmd_torsion(cfg, out, err);
    if (abel->parsed()) return cmd_abel(cfg, out);
    if (indicable->parsed()) return cmd_indicable(cfg, out);
    if (homcheck->parsed()) return cmd_homcheck(cfg, out, err);
    if (cayley->parsed()) return cmd_cayley(cfg, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const IncompleteSystemError& e) {
    err << "BudgetExhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kParseError;
}

}  // namespace traag::cli
