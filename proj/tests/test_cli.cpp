#include <doctest.h>

#include <fstream>

#include "corpus.hpp"
#include "hatsplit/json_io.hpp"
#include "hatsplit_cli/cli.hpp"

using hatsplit::Json;
using hatsplit::cli::CommandResult;
using hatsplit::cli::run;

namespace {

std::string tmp(const std::string& name) { return std::string(HATSPLIT_TEST_TMPDIR) + "/" + name; }

}  // namespace

TEST_CASE("classify: exact payload") {
  const auto r = run({"classify", "aaA"});
  CHECK(r.exit_code() == 0);
  CHECK(r.payload.dump() == R"({"verdict":"finitely-unsplittable","reason":"unexposed, not exceptional","counts":{"a":3}})");
  CHECK(run({"classify", "aaa", "--rose", "ab"}).payload.dump() ==
        R"({"verdict":"outside-theorem-naked-edge","reason":"naked edge b","counts":{"a":3,"b":0}})");
  CHECK(run({"classify", "aA"}).payload["verdict"] == "exceptional-sphere-two-points");
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"classify", ""}).exit_code() == 2);
  CHECK(run({"classify", "a1"}).exit_code() == 2);
  CHECK(run({"homology", "no_such_preset_or_file"}).exit_code() == 2);
  CHECK(run({"split", "disk", "--pieces", "4"}).exit_code() == 2);
  CHECK(run({"frobnicate"}).exit_code() == 2);
  CHECK(run({}).exit_code() == 2);
  CHECK(run({"triangulate", "aa", "--k", "2"}).exit_code() == 2);
  CHECK(run({"props", "--check", "lemma1", "--count", "3", "--size", "1"}).exit_code() == 2);
}

TEST_CASE("version echoes schemas") {
  const auto r = run({"--version"});
  CHECK(r.exit_code() == 0);
  CHECK(r.payload["tool_version"] == "1.0.0");
  CHECK(r.payload["schemas"]["certificate"] == hatsplit::kCertificateSchema);
}

TEST_CASE("split: exhausted negative exits 1") {
  const auto r = run({"split", "dunce_min", "--pieces", "2", "--predicate", "finite-h1", "--threads", "1"});
  CHECK(r.exit_code() == 1);
  CHECK(r.payload["found"] == false);
  CHECK(r.payload["report"]["exhausted"] == true);
}

TEST_CASE("split, then verify the certificate") {
  const auto out = tmp("sphere.json");
  REQUIRE(run({"triangulate", "aA", "--k", "3", "--out", out}).exit_code() == 0);
  const auto r = run({"split", out, "--pieces", "2", "--predicate", "collapsible"});
  REQUIRE(r.exit_code() == 0);
  const auto cert = tmp("sphere_cert.json");
  std::ofstream(cert) << r.payload["certificate"].dump();
  const auto v = run({"verify", out, cert});
  CHECK(v.exit_code() == 0);
  CHECK(v.payload["valid"] == true);
}

TEST_CASE("collapse: exact negative exits 1") {
  CHECK(run({"collapse", "dunce_min", "--exact"}).exit_code() == 1);
  CHECK(run({"collapse", "disk", "--exact"}).payload["collapsible"] == true);
  CHECK(run({"collapse", "disk", "--seed", "3"}).payload["reached_point"] == true);
}

TEST_CASE("props: prop4 1000 of 1000") {
  const auto r = run({"props", "--check", "prop4", "--count", "1000", "--size", "12", "--seed", "9"});
  CHECK(r.exit_code() == 0);
  CHECK(r.payload["passed"] == 1000);
  CHECK(r.payload["failed"] == 0);
}

TEST_CASE("round trip: triangulate then homology matches the word") {
  for (const auto& w : hatsplit::testing::rose_corpus(5)) {
    const auto out = tmp("rt.json");
    REQUIRE(run({"triangulate", w, "--k", "3", "--out", out}).exit_code() == 0);
    const auto h = run({"homology", out});
    REQUIRE(h.exit_code() == 0);
    const auto expect = hatsplit::to_json(hatsplit::abelianized_h1(hatsplit::parse_word(w)));
    CHECK(h.payload["betti1"] == expect["betti1"]);
    CHECK(h.payload["torsion1"] == expect["torsion1"]);
    CHECK(h.payload["betti0"] == 1);
  }
}

TEST_CASE("replay determinism: identical argv gives identical payload") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"link", "abAB"}, {"collapse", "jester_seam", "--seed", "4"},
        {"split", "dunce_min", "--pieces", "3", "--predicate", "collapsible"},
        {"props", "--check", "lemma2", "--count", "50", "--size", "10", "--seed", "2"}}) {
    CHECK(run(args).payload.dump() == run(args).payload.dump());
  }
}

TEST_CASE("non-rose target through --target") {
  const auto target = tmp("target.json");
  std::ofstream(target) << R"({"vertices":["p","q"],"edges":[{"label":"a","tail":"p","head":"q"},{"label":"b","tail":"q","head":"p"}],"wedge":"p"})";
  const auto out = tmp("nonrose.json");
  CHECK(run({"triangulate", "ab", "--target", target, "--k", "3", "--out", out}).exit_code() == 0);
  CHECK(run({"homology", out}).payload["betti1"] == 0);
  CHECK(run({"classify", "ab", "--target", target}).exit_code() == 2);
}
