#include "hatsplit_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "hatsplit/collapse.hpp"
#include "hatsplit/errors.hpp"
#include "hatsplit/link_graph.hpp"
#include "hatsplit/presets.hpp"
#include "hatsplit/split_search.hpp"
#include "hatsplit/triangulate.hpp"
#include "hatsplit/word_model.hpp"

namespace hatsplit::cli {
namespace {

using Status = CommandResult::Status;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

SimplicialComplex load_complex(const std::string& source) {
  if (is_preset(source)) return preset(source);
  return complex_from_json(read_json_file(source));
}

std::optional<TargetGraph> target_option(const std::string& rose, const std::string& target_file) {
  if (!target_file.empty()) return target_from_json(read_json_file(target_file));
  if (rose.empty()) return std::nullopt;
  std::vector<std::string> labels;
  for (char ch : rose) labels.emplace_back(1, ch);
  return TargetGraph::rose(std::move(labels));
}

struct WordArgs {
  std::string word;
  std::string rose;
  std::string target;
};

void add_word_args(CLI::App* cmd, WordArgs& a) {
  cmd->add_option("word", a.word, "attaching word, e.g. aaA")->required();
  cmd->add_option("--rose", a.rose, "edge labels of the rose target, e.g. ab (default: letters used)");
  cmd->add_option("--target", a.target, "JSON file describing a non-rose target graph");
}

Presentation presentation(const WordArgs& a) { return parse_word(a.word, target_option(a.rose, a.target)); }

CommandResult ok(Json payload) { return {Status::Ok, std::move(payload), {}, 0}; }

Json sequence_summary(const CollapseSequence& s) { return to_json(s); }

// --- props ------------------------------------------------------------------------

struct PropOutcome {
  bool passed = false;
  std::string detail;
};

PropOutcome check_instance(InstanceKind kind, int size, std::uint64_t seed) {
  const RandomInstance inst = random_instance(kind, size, seed);
  const Multigraph& g = inst.graph;
  int degree_sum = 0;
  for (int d : degrees(g)) degree_sum += d;
  if (degree_sum != 2 * g.num_edges()) return {false, "handshake"};
  switch (kind) {
    case InstanceKind::Lemma1: {
      const auto r = check_lemma1(g);
      return {r.holds, r.holds ? "" : "endpoints do not exceed internal vertices by 2 per tree"};
    }
    case InstanceKind::Lemma2: {
      const auto r = check_lemma2(g);
      return {r.holds, r.holds ? "" : "cycle vertices do not outnumber the rest"};
    }
    case InstanceKind::Prop4: {
      const int v = find_prop4_vertex(g, *inst.alpha);
      const auto deg = degrees(g);
      const auto on = cycle_vertices(g);
      const bool any_high = std::any_of(deg.begin(), deg.end(), [](int d) { return d > 2; });
      const bool good = std::binary_search(on.begin(), on.end(), v) &&
                        std::binary_search(on.begin(), on.end(), inst.alpha->pairing[static_cast<std::size_t>(v)]) &&
                        (!any_high || deg[static_cast<std::size_t>(v)] > 2);
      return {good, good ? "" : "returned vertex violates the Proposition 4 conditions"};
    }
  }
  return {false, "unknown kind"};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  const auto started = std::chrono::steady_clock::now();
  CommandResult result;

  CLI::App app{"Splittability tools for taut one-relator presentation complexes", "hatsplit"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "print tool and schema versions");

  WordArgs classify_args, link_args, tri_args;
  auto* classify_cmd = app.add_subcommand("classify", "classify a rose presentation");
  add_word_args(classify_cmd, classify_args);

  auto* link_cmd = app.add_subcommand("link", "link graph of the wedge vertex");
  add_word_args(link_cmd, link_args);

  int k = 3;
  std::string out_file;
  auto* tri_cmd = app.add_subcommand("triangulate", "simplicial model of the presentation complex");
  add_word_args(tri_cmd, tri_args);
  tri_cmd->add_option("--k", k, "segments per letter (>= 3)");
  tri_cmd->add_option("--out", out_file, "write the complex JSON here instead of stdout");

  std::string source;
  auto* hom_cmd = app.add_subcommand("homology", "integer homology of a complex");
  hom_cmd->add_option("complex", source, "complex JSON file or preset name")->required();

  bool exact = false;
  std::uint64_t seed = 0;
  auto* col_cmd = app.add_subcommand("collapse", "greedy or exact collapse");
  col_cmd->add_option("complex", source, "complex JSON file or preset name")->required();
  col_cmd->add_flag("--exact", exact, "exact collapsibility search");
  col_cmd->add_option("--seed", seed, "seed for the greedy collapse");

  CoverQuery query;
  std::string predicate = "finite-h1";
  std::string intersection;
  int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  auto* split_cmd = app.add_subcommand("split", "search for a cover by proper subcomplexes");
  split_cmd->add_option("complex", source, "complex JSON file or preset name")->required();
  split_cmd->add_option("--pieces", query.pieces, "2 or 3")->check(CLI::IsMember({2, 3}));
  split_cmd->add_option("--predicate", predicate, "finite-h1 | trivial-h1 | collapsible")
      ->check(CLI::IsMember({"finite-h1", "trivial-h1", "collapsible"}));
  split_cmd->add_option("--intersection", intersection, "predicate for the intersection of two pieces")
      ->check(CLI::IsMember({"finite-h1", "trivial-h1", "collapsible"}));
  split_cmd->add_option("--max-subdiv", query.max_subdiv, "barycentric subdivision rounds to try after the input");
  split_cmd->add_option("--seed", query.seed, "seed for the heuristic mode");
  split_cmd->add_option("--threads", threads, "worker threads for enumeration");

  std::string cert_file;
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate against a complex");
  verify_cmd->add_option("complex", source, "complex JSON file or preset name")->required();
  verify_cmd->add_option("certificate", cert_file, "certificate JSON file")->required();

  std::string check;
  int count = 1;
  int size = 10;
  std::uint64_t props_seed = 0;
  auto* props_cmd = app.add_subcommand("props", "seeded property checks of the graph lemmas");
  props_cmd->add_option("--check", check, "lemma1 | lemma2 | prop4")->required()->check(CLI::IsMember({"lemma1", "lemma2", "prop4"}));
  props_cmd->add_option("--count", count, "number of instances")->check(CLI::PositiveNumber);
  props_cmd->add_option("--size", size, "vertices per instance");
  props_cmd->add_option("--seed", props_seed, "first seed; instance i uses seed + i");

  std::vector<std::string> argv_store{"hatsplit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      result = {Status::Ok, nullptr, app.help(), 0};
      return result;
    } catch (const CLI::ParseError& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }

    if (version) {
      result = ok(Json{{"tool_version", std::string(kToolVersion)},
                       {"schemas", Json{{"complex", kComplexSchema}, {"graph", kGraphSchema}, {"certificate", kCertificateSchema}}}});
    } else if (*classify_cmd) {
      const Presentation p = presentation(classify_args);
      const Classification c = classify(p);
      Json counts = Json::object();
      const auto occ = occurrence_counts(p);
      for (std::size_t i = 0; i < occ.size(); ++i) counts[p.target().edges()[i].label] = occ[i];
      result = ok(Json{{"verdict", std::string(verdict_name(c.verdict))}, {"reason", classification_reason(p, c)}, {"counts", counts}});
    } else if (*link_cmd) {
      const Presentation p = presentation(link_args);
      const LinkGraph link = build_link(p);
      Json j = to_json(link);
      int components = 0;
      component_ids(link.graph, &components);
      j["components"] = components;
      result = ok(std::move(j));
    } else if (*tri_cmd) {
      const Presentation p = presentation(tri_args);
      const Triangulation t = triangulate(p, k);
      Json doc = to_json(t.complex);
      if (out_file.empty()) {
        result = ok(std::move(doc));
      } else {
        std::ofstream out(out_file);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write " + out_file);
        out << doc.dump() << '\n';
        result = ok(Json{{"out", out_file},
                         {"vertices", t.complex.num_vertices()},
                         {"edges", t.complex.num_edges()},
                         {"triangles", t.complex.num_triangles()},
                         {"euler", t.complex.euler_characteristic()},
                         {"subdivision_rounds", t.quotient.subdivision_rounds}});
      }
    } else if (*hom_cmd) {
      result = ok(to_json(homology(load_complex(source))));
    } else if (*col_cmd) {
      const SimplicialComplex c = load_complex(source);
      if (exact) {
        const auto r = is_collapsible(c);
        Json j{{"collapsible", r.collapsible}, {"states_explored", r.states_explored}};
        if (r.sequence) j["sequence"] = sequence_summary(*r.sequence);
        result = {r.collapsible ? Status::Ok : Status::NoneFound, std::move(j), {}, 0};
      } else {
        const auto g = collapse_greedy(c, seed);
        const auto& t = g.terminal;
        result = ok(Json{{"seed", seed},
                         {"steps", g.sequence.steps.size()},
                         {"terminal", Json{{"vertices", t.num_vertices()}, {"edges", t.num_edges()}, {"triangles", t.num_triangles()}}},
                         {"reached_point", t.num_vertices() == 1 && t.num_edges() == 0},
                         {"sequence", sequence_summary(g.sequence)}});
      }
    } else if (*split_cmd) {
      query.predicate = *parse_predicate(predicate);
      if (!intersection.empty()) query.intersection = *parse_predicate(intersection);
      query.threads = threads;
      const SimplicialComplex c = load_complex(source);
      const CoverResult r = find_cover(c, query);
      Json j{{"found", r.certificate.has_value()}};
      if (r.certificate) j["certificate"] = to_json(*r.certificate);
      j["report"] = to_json(r.report);
      result = {r.certificate ? Status::Ok : Status::NoneFound, std::move(j), {}, 0};
      if (!r.certificate) {
        result.message = r.report.exhausted ? "search exhausted: no cover exists among the enumerated subcomplexes"
                                            : "heuristic search found no cover (not exhaustive)";
      }
    } else if (*verify_cmd) {
      const SimplicialComplex c = load_complex(source);
      const bool valid = verify_certificate(c, certificate_from_json(read_json_file(cert_file)));
      result = {valid ? Status::Ok : Status::NoneFound, Json{{"valid", valid}}, {}, 0};
    } else if (*props_cmd) {
      const InstanceKind kind = *parse_instance_kind(check);
      int passed = 0;
      Json failures = Json::array();
      for (int i = 0; i < count; ++i) {
        const std::uint64_t s = props_seed + static_cast<std::uint64_t>(i);
        PropOutcome o;
        try {
          o = check_instance(kind, size, s);
        } catch (const InvariantViolation& e) {
          o = {false, e.what()};
        }
        if (o.passed) {
          ++passed;
        } else if (failures.size() < 10) {
          failures.push_back(Json{{"seed", s}, {"detail", o.detail}});
        }
      }
      result = {passed == count ? Status::Ok : Status::NoneFound,
                Json{{"check", check}, {"count", count}, {"size", size}, {"seed", props_seed}, {"passed", passed},
                     {"failed", count - passed}, {"failures", failures}},
                {},
                0};
    } else {
      result = {Status::InputError, nullptr, app.help(), 0};
    }
  } catch (const Error& e) {
    result = {Status::InputError, Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}, e.what(), 0};
  }
  result.elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace hatsplit::cli
