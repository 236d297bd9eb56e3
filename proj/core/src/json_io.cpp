#include "hatsplit/json_io.hpp"

#include <map>

#include "hatsplit/errors.hpp"

namespace hatsplit {
namespace {

Json integer_json(const Integer& x) {
  if (x <= std::numeric_limits<long long>::max()) return x.convert_to<long long>();
  return x.str();
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer");
}

template <class F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json ref_json(SimplexRef s) { return Json::array({s.dim, s.index}); }

std::string label_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::ParseError, "labels must be strings or integers");
}

}  // namespace

Json to_json(const HomologySummary& h) {
  Json t = Json::array();
  for (const auto& x : h.torsion1) t.push_back(integer_json(x));
  return Json{{"betti0", h.betti0}, {"betti1", h.betti1}, {"betti2", h.betti2}, {"torsion1", t}};
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(Json{{"id", e.id}, {"ends", Json::array({g.label(e.u), g.label(e.v)})}});
  }
  return Json{{"vertices", g.labels()}, {"edges", edges}};
}

Json to_json(const Multigraph& g, const VertexInvolution& alpha) {
  Json pairs = Json::array();
  for (int v = 0; v < static_cast<int>(alpha.pairing.size()); ++v) {
    const int w = alpha.pairing[static_cast<std::size_t>(v)];
    if (v < w) pairs.push_back(Json::array({g.label(v), g.label(w)}));
  }
  return Json{{"pairs", pairs}};
}

Json to_json(const LinkGraph& link) {
  Json j = to_json(link.graph);
  j["provenance"] = link.provenance;
  j["involution"] = to_json(link.graph, link.alpha);
  return j;
}

Json to_json(const SimplicialComplex& c) {
  const auto& labels = c.labels();
  auto l = [&](Vertex v) { return labels[static_cast<std::size_t>(v)]; };
  Json tris = Json::array();
  for (const auto& t : c.triangles()) tris.push_back(Json::array({l(t.a), l(t.b), l(t.c)}));
  Json extra = Json::array();
  for (int e : c.leftover_edges()) {
    const Edge& ed = c.edges()[static_cast<std::size_t>(e)];
    extra.push_back(Json::array({l(ed.a), l(ed.b)}));
  }
  Json j{{"vertices", labels}, {"triangles", tris}, {"extra_edges", extra}};
  if (!c.marks().empty()) {
    Json je = Json::array();
    for (const auto& e : c.marks().j_edges) je.push_back(Json::array({l(e.a), l(e.b)}));
    Json marks{{"J_edges", je}};
    if (c.marks().wedge) marks["wedge"] = l(*c.marks().wedge);
    j["marks"] = marks;
  }
  return j;
}

Json to_json(const CollapseSequence& s) {
  Json steps = Json::array();
  for (const auto& p : s.steps) steps.push_back(Json::array({ref_json(p.face), ref_json(p.coface)}));
  return steps;
}

namespace {

Json generators_json(const Generators& g) {
  return Json{{"triangles", g.triangles}, {"edges", g.edges}, {"vertices", g.vertices}};
}

Json evidence_json(const PieceEvidence& ev) {
  Json j = Json::object();
  if (ev.homology) j["homology"] = to_json(*ev.homology);
  if (ev.collapse) j["collapse"] = to_json(*ev.collapse);
  return j;
}

}  // namespace

Json to_json(const SplitCertificate& cert) {
  Json pieces = Json::array();
  Json evidence = Json::array();
  for (const auto& p : cert.pieces) pieces.push_back(generators_json(p));
  for (const auto& e : cert.evidence) evidence.push_back(evidence_json(e));
  Json j{{"schema", kCertificateSchema},
         {"tool_version", std::string(kToolVersion)},
         {"subdivision_rounds", cert.subdivision_rounds},
         {"predicate", std::string(predicate_name(cert.predicate))},
         {"intersection", cert.intersection ? Json(std::string(predicate_name(*cert.intersection))) : Json(nullptr)},
         {"pieces", pieces},
         {"evidence", evidence}};
  if (cert.intersection_evidence) j["intersection_evidence"] = evidence_json(*cert.intersection_evidence);
  return j;
}

Json to_json(const SearchReport& r) {
  return Json{{"exhausted", r.exhausted},
              {"mode", r.mode},
              {"generators", r.generators},
              {"subdivision_rounds", r.subdivision_rounds},
              {"candidates_examined", r.candidates_examined},
              {"good_subcomplexes", r.good_subcomplexes},
              {"seed", r.seed}};
}

Multigraph multigraph_from_json(const Json& j) {
  return parsing([&] {
    Multigraph g;
    std::map<std::string, int> index;
    for (const auto& v : j.at("vertices")) {
      const std::string l = label_text(v);
      if (index.contains(l)) throw Error(ErrorCode::InvalidGraph, "duplicate vertex " + l);
      index[l] = g.add_vertex(l);
    }
    auto lookup = [&](const Json& v) {
      auto it = index.find(label_text(v));
      if (it == index.end()) throw Error(ErrorCode::UnknownVertex, label_text(v));
      return it->second;
    };
    for (const auto& e : j.at("edges")) {
      const auto& ends = e.at("ends");
      if (ends.size() != 2) throw Error(ErrorCode::ParseError, "edge ends must be a pair");
      g.add_edge_with_id(e.at("id").get<int>(), lookup(ends[0]), lookup(ends[1]));
    }
    return g;
  });
}

VertexInvolution involution_from_json(const Multigraph& g, const Json& j) {
  return parsing([&] {
    VertexInvolution a;
    a.pairing.assign(static_cast<std::size_t>(g.num_vertices()), -1);
    for (const auto& p : j.at("pairs")) {
      auto u = g.find_vertex(label_text(p.at(0)));
      auto v = g.find_vertex(label_text(p.at(1)));
      if (!u || !v) throw Error(ErrorCode::UnknownVertex, "involution names an unknown vertex");
      a.pairing[static_cast<std::size_t>(*u)] = *v;
      a.pairing[static_cast<std::size_t>(*v)] = *u;
    }
    return a;
  });
}

SimplicialComplex complex_from_json(const Json& j) {
  return parsing([&] {
    std::vector<long long> labels;
    std::map<long long, int> index;
    for (const auto& v : j.at("vertices")) {
      const long long l = v.get<long long>();
      if (index.contains(l)) throw Error(ErrorCode::InvalidComplex, "duplicate vertex " + std::to_string(l));
      index[l] = static_cast<int>(labels.size());
      labels.push_back(l);
    }
    auto vertex = [&](const Json& v) {
      auto it = index.find(v.get<long long>());
      if (it == index.end()) throw Error(ErrorCode::InvalidComplex, "undeclared vertex " + v.dump());
      return it->second;
    };
    std::vector<Triangle> tris;
    for (const auto& t : j.at("triangles")) {
      if (t.size() != 3) throw Error(ErrorCode::ParseError, "triangles need three vertices");
      tris.push_back({vertex(t[0]), vertex(t[1]), vertex(t[2])});
    }
    std::vector<Edge> extra;
    if (j.contains("extra_edges")) {
      for (const auto& e : j.at("extra_edges")) {
        if (e.size() != 2) throw Error(ErrorCode::ParseError, "edges need two vertices");
        extra.push_back(Edge::make(vertex(e[0]), vertex(e[1])));
      }
    }
    Marks marks;
    if (j.contains("marks") && !j.at("marks").is_null()) {
      const auto& m = j.at("marks");
      if (m.contains("J_edges")) {
        for (const auto& e : m.at("J_edges")) marks.j_edges.push_back(Edge::make(vertex(e.at(0)), vertex(e.at(1))));
      }
      if (m.contains("wedge") && !m.at("wedge").is_null()) marks.wedge = vertex(m.at("wedge"));
    }
    const int n = static_cast<int>(labels.size());
    return SimplicialComplex::from_simplices(n, std::move(tris), std::move(extra), std::move(marks), std::move(labels));
  });
}

TargetGraph target_from_json(const Json& j) {
  return parsing([&] {
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(label_text(v));
    auto index = [&](const Json& v) {
      const std::string l = label_text(v);
      auto it = std::find(vertices.begin(), vertices.end(), l);
      if (it == vertices.end()) throw Error(ErrorCode::InvalidTarget, "undeclared vertex " + l);
      return static_cast<int>(it - vertices.begin());
    };
    std::vector<TargetEdge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({label_text(e.at("label")), index(e.at("tail")), index(e.at("head"))});
    const int wedge = j.contains("wedge") ? index(j.at("wedge")) : 0;
    return TargetGraph(std::move(vertices), std::move(edges), wedge);
  });
}

CollapseSequence collapse_from_json(const Json& j) {
  return parsing([&] {
    CollapseSequence s;
    for (const auto& step : j) {
      s.steps.push_back({{step.at(0).at(0).get<int>(), step.at(0).at(1).get<int>()},
                         {step.at(1).at(0).get<int>(), step.at(1).at(1).get<int>()}});
    }
    return s;
  });
}

namespace {

PieceEvidence evidence_from(const Json& j) {
  PieceEvidence ev;
  if (j.contains("homology")) {
    const auto& h = j.at("homology");
    HomologySummary s;
    s.betti0 = h.at("betti0").get<int>();
    s.betti1 = h.at("betti1").get<int>();
    s.betti2 = h.at("betti2").get<int>();
    for (const auto& t : h.at("torsion1")) s.torsion1.push_back(integer_from(t));
    ev.homology = s;
  }
  if (j.contains("collapse")) ev.collapse = collapse_from_json(j.at("collapse"));
  return ev;
}

Predicate predicate_from(const Json& j) {
  auto p = parse_predicate(j.get<std::string>());
  if (!p) throw Error(ErrorCode::ParseError, "unknown predicate " + j.dump());
  return *p;
}

}  // namespace

SplitCertificate certificate_from_json(const Json& j) {
  return parsing([&] {
    SplitCertificate cert;
    cert.subdivision_rounds = j.value("subdivision_rounds", 0);
    cert.predicate = predicate_from(j.at("predicate"));
    if (j.contains("intersection") && !j.at("intersection").is_null()) cert.intersection = predicate_from(j.at("intersection"));
    for (const auto& p : j.at("pieces")) {
      Generators g;
      g.triangles = p.value("triangles", std::vector<int>{});
      g.edges = p.value("edges", std::vector<int>{});
      g.vertices = p.value("vertices", std::vector<int>{});
      cert.pieces.push_back(std::move(g));
    }
    for (const auto& e : j.at("evidence")) cert.evidence.push_back(evidence_from(e));
    if (j.contains("intersection_evidence")) cert.intersection_evidence = evidence_from(j.at("intersection_evidence"));
    return cert;
  });
}

}  // namespace hatsplit
