#include <doctest.h>

#include <random>

#include "hatsplit/collapse.hpp"
#include "hatsplit/complex.hpp"
#include "hatsplit/errors.hpp"
#include "hatsplit/homology.hpp"
#include "hatsplit/presets.hpp"

using namespace hatsplit;

namespace {

// Cone from apex n over a simple graph on vertices 0..n-1.
SimplicialComplex cone(int n, const std::vector<Edge>& graph) {
  std::vector<Triangle> tris;
  std::vector<Edge> extra;
  for (const auto& e : graph) tris.push_back(Triangle::make(e.a, e.b, n));
  for (int v = 0; v < n; ++v) extra.push_back(Edge::make(v, n));
  return SimplicialComplex::from_simplices(n + 1, tris, extra);
}

std::vector<Edge> random_connected_graph(std::mt19937_64& rng, int n, int extra_edges) {
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) edges.insert(Edge::make(v, static_cast<int>(rng() % static_cast<unsigned>(v))));
  for (int i = 0; i < extra_edges && n > 2; ++i) {
    const int a = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int b = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (a != b) edges.insert(Edge::make(a, b));
  }
  return {edges.begin(), edges.end()};
}

Subcomplex random_closure(std::mt19937_64& rng, const SimplicialComplex& c, int max_tris) {
  std::vector<int> tris;
  for (int t = 0; t < c.num_triangles(); ++t) {
    if (static_cast<int>(tris.size()) < max_tris && rng() % 3 == 0) tris.push_back(t);
  }
  std::vector<int> edges;
  for (int e = 0; e < c.num_edges(); ++e) {
    if (rng() % 9 == 0) edges.push_back(e);
  }
  return closure(c, tris, edges);
}

}  // namespace

TEST_CASE("free_faces: examples") {
  const auto disk = preset("disk");
  const auto ff = free_faces(disk);
  REQUIRE(ff.size() == 3);
  for (int e = 0; e < 3; ++e) {
    CHECK(ff[static_cast<std::size_t>(e)].face == SimplexRef{1, e});
    CHECK(ff[static_cast<std::size_t>(e)].coface == SimplexRef{2, 0});
  }
  CHECK(free_faces(preset("dunce_min")).empty());
  CHECK(free_faces(preset("jester_seam")).empty());

  const auto edge = SimplicialComplex::from_simplices(2, {}, {{0, 1}});
  const auto ve = free_faces(edge);
  REQUIRE(ve.size() == 2);
  CHECK(ve[0].face == SimplexRef{0, 0});
  CHECK(ve[1].face == SimplexRef{0, 1});
  CHECK(ve[0].coface == SimplexRef{1, 0});
}

TEST_CASE("collapse_greedy: examples") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = collapse_greedy(preset("disk"), seed);
    CHECK(g.terminal.num_vertices() == 1);
    CHECK(g.terminal.num_edges() == 0);
    CHECK(replay_collapse(preset("disk"), g.sequence) == g.remaining);
  }
  const auto dunce = collapse_greedy(preset("dunce_min"), 5);
  CHECK(dunce.sequence.steps.empty());
  CHECK(dunce.terminal.simplex_count() == preset("dunce_min").simplex_count());

  const auto two = SimplicialComplex::from_simplices(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(collapse_greedy(two, 9).terminal.num_vertices() == 1);
  CHECK(collapse_greedy(two, 9).sequence == collapse_greedy(two, 9).sequence);
}

TEST_CASE("is_collapsible: examples") {
  const auto disk = is_collapsible(preset("disk"));
  CHECK(disk.collapsible);
  REQUIRE(disk.sequence.has_value());
  CHECK(sequence_reaches_point(preset("disk"), Subcomplex::all(preset("disk")), *disk.sequence));

  const auto dunce = is_collapsible(preset("dunce_min"));
  CHECK_FALSE(dunce.collapsible);
  CHECK_FALSE(dunce.sequence.has_value());
  CHECK_FALSE(is_collapsible(preset("jester_seam")).collapsible);
  CHECK_FALSE(is_collapsible(preset("rp2_6")).collapsible);

  // Cone over a 4-cycle.
  CHECK(is_collapsible(cone(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).collapsible);

  // A bare cycle and two points are not collapsible.
  CHECK_FALSE(is_collapsible(SimplicialComplex::from_simplices(3, {}, {{0, 1}, {1, 2}, {0, 2}})).collapsible);
  CHECK_FALSE(is_collapsible(SimplicialComplex::from_simplices(2, {})).collapsible);
  CHECK(is_collapsible(SimplicialComplex::from_simplices(1, {})).collapsible);

  CollapseSearchOptions tiny;
  tiny.max_simplices = 10;
  try {
    is_collapsible(preset("dunce_min"), tiny);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("replay_collapse rejects a non-free step") {
  const auto disk = preset("disk");
  CollapseSequence bad{{FreePair{{0, 0}, {1, 0}}}};
  CHECK_FALSE(replay_collapse(disk, bad).has_value());
}

TEST_CASE("property: pruned, unpruned and peeling agree on small subcomplexes") {
  std::mt19937_64 rng(42);
  CollapseSearchOptions unpruned;
  unpruned.prune_commuting_moves = false;
  for (const auto& name : {"dunce_min", "jester_seam", "torus_7", "rp2_6"}) {
    const auto c = preset(name);
    PeelingTester peel(c);
    for (int trial = 0; trial < 150; ++trial) {
      const auto s = random_closure(rng, c, 6);
      const auto pruned = is_collapsible(c, s);
      const auto full = is_collapsible(c, s, unpruned);
      CHECK(pruned.collapsible == full.collapsible);
      CHECK(peel.collapsible(s) == pruned.collapsible);
      for (const auto* r : {&pruned, &full}) {
        if (r->collapsible) CHECK(sequence_reaches_point(c, s, *r->sequence));
      }
      const auto ps = peel.sequence(s);
      CHECK(ps.has_value() == pruned.collapsible);
      if (ps) {
        CHECK(sequence_reaches_point(c, s, *ps));
        CHECK(homology(c, s) == HomologySummary{1, 0, 0, {}});
      }
    }
  }
}

TEST_CASE("property: peeling agrees with exact search on whole-complex pieces") {
  std::mt19937_64 rng(8);
  for (const auto& name : {"dunce_min", "jester_seam"}) {
    const auto c = preset(name);
    PeelingTester peel(c);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = random_closure(rng, c, c.num_triangles());
      CHECK(peel.collapsible(s) == is_collapsible(c, s).collapsible);
    }
  }
}

TEST_CASE("property: cones over connected graphs are collapsible") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto g = random_connected_graph(rng, n, static_cast<int>(rng() % 5));
    const auto c = cone(n, g);
    if (c.simplex_count() > 40) continue;
    const auto r = is_collapsible(c);
    CHECK(r.collapsible);
    REQUIRE(r.sequence.has_value());
    CHECK(sequence_reaches_point(c, Subcomplex::all(c), *r.sequence));
  }
}
