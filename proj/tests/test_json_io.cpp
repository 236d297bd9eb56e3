#include <doctest.h>

#include "hatsplit/errors.hpp"
#include "hatsplit/homology.hpp"
#include "hatsplit/json_io.hpp"
#include "hatsplit/link_graph.hpp"
#include "hatsplit/presets.hpp"
#include "hatsplit/split_search.hpp"
#include "hatsplit/triangulate.hpp"

using namespace hatsplit;

TEST_CASE("complex JSON round trip") {
  for (const auto& name : preset_names()) {
    const auto c = preset(name);
    const auto back = complex_from_json(Json::parse(to_json(c).dump()));
    CHECK(back.triangles() == c.triangles());
    CHECK(back.edges() == c.edges());
    CHECK(back.marks() == c.marks());
  }
  const auto naked = triangulate(parse_word("aaa", TargetGraph::rose({"a", "b"})), 3).complex;
  const auto back = complex_from_json(to_json(naked));
  CHECK(back.edges() == naked.edges());
  CHECK(back.num_vertices() == naked.num_vertices());
}

TEST_CASE("complex JSON: external labels") {
  const auto c = complex_from_json(Json::parse(R"({"vertices":[10,20,30],"triangles":[[30,10,20]]})"));
  CHECK(c.num_triangles() == 1);
  CHECK(to_json(c)["vertices"] == Json::parse("[10,20,30]"));
  try {
    complex_from_json(Json::parse(R"({"vertices":[1],"triangles":[[1,2,3]]})"));
    FAIL("expected InvalidComplex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidComplex);
  }
  try {
    complex_from_json(Json::parse(R"({"triangles":[]})"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("graph and link JSON") {
  const auto l = build_link(parse_word("aaA"));
  const auto j = to_json(l);
  CHECK(j.dump() ==
        R"({"vertices":["a.start","a.end"],"edges":[{"id":0,"ends":["a.end","a.start"]},{"id":1,"ends":["a.end","a.end"]},{"id":2,"ends":["a.start","a.start"]}],"provenance":[1,2,3],"involution":{"pairs":[["a.start","a.end"]]}})");
  const auto g = multigraph_from_json(j);
  CHECK(g == l.graph);
  CHECK(involution_from_json(g, j["involution"]).pairing == l.alpha.pairing);
}

TEST_CASE("target JSON") {
  const auto g = target_from_json(Json::parse(
      R"({"vertices":["p","q"],"edges":[{"label":"a","tail":"p","head":"q"},{"label":"b","tail":"q","head":"p"}],"wedge":"p"})"));
  CHECK(g.num_vertices() == 2);
  CHECK(g.edges()[1].tail == 1);
  CHECK_FALSE(g.is_rose());
}

TEST_CASE("certificate JSON round trip") {
  const auto sphere = triangulate(parse_word("aA"), 3).complex;
  CoverQuery q;
  q.predicate = Predicate::Collapsible;
  const auto cert = *find_cover(sphere, q).certificate;
  const auto j = to_json(cert);
  CHECK(j["schema"] == kCertificateSchema);
  CHECK(j["tool_version"] == std::string(kToolVersion));
  const auto back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back.pieces == cert.pieces);
  CHECK(back.evidence == cert.evidence);
  CHECK(verify_certificate(sphere, back));
}

TEST_CASE("homology JSON") {
  CHECK(to_json(homology(preset("rp2_6"))).dump() == R"({"betti0":1,"betti1":0,"betti2":0,"torsion1":[2]})");
}
