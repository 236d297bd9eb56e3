#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hatsplit/errors.hpp"
#include "hatsplit/multigraph.hpp"

using namespace hatsplit;

namespace {

Multigraph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

// Vertices on some simple closed curve: union of the vertex sets of edge
// subsets that form a single cycle (connected, all degrees exactly 2).
std::vector<int> brute_force_cycle_vertices(const Multigraph& g) {
  const int m = g.num_edges();
  REQUIRE(m <= 12);
  std::set<int> on;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
    for (int i = 0; i < g.num_vertices(); ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1U)) continue;
      const auto& ed = g.edges()[static_cast<std::size_t>(e)];
      ++deg[static_cast<std::size_t>(ed.u)];
      ++deg[static_cast<std::size_t>(ed.v)];
      parent[static_cast<std::size_t>(find(ed.u))] = find(ed.v);
    }
    std::set<int> roots;
    bool cycle = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
      const int d = deg[static_cast<std::size_t>(v)];
      if (d == 0) continue;
      if (d != 2) cycle = false;
      roots.insert(find(v));
    }
    if (!cycle || roots.size() != 1) continue;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (deg[static_cast<std::size_t>(v)] > 0) on.insert(v);
    }
  }
  return {on.begin(), on.end()};
}

Multigraph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_edges) {
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices));
  const int m = static_cast<int>(rng() % static_cast<unsigned>(max_edges + 1));
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int e = 0; e < m; ++e) {
    g.add_edge(static_cast<int>(rng() % static_cast<unsigned>(n)), static_cast<int>(rng() % static_cast<unsigned>(n)));
  }
  return g;
}

// Deletes components in which every vertex has degree 2 (pure cycles).
Multigraph drop_cycle_components(const Multigraph& g) {
  int count = 0;
  const auto comp = component_ids(g, &count);
  const auto deg = degrees(g);
  std::vector<char> keep(static_cast<std::size_t>(count), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] != 2) keep[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = 1;
  }
  Multigraph out;
  std::vector<int> id(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (keep[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]) id[static_cast<std::size_t>(v)] = out.add_vertex(g.label(v));
  }
  for (const auto& e : g.edges()) {
    if (id[static_cast<std::size_t>(e.u)] >= 0) out.add_edge(id[static_cast<std::size_t>(e.u)], id[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

std::map<int, int> census_without_two(const Multigraph& g) {
  auto c = degree_census(g);
  c.erase(2);
  return c;
}

std::multiset<int> betti_multiset(const Multigraph& g) {
  const auto betti = betti_by_component(g);
  return {betti.begin(), betti.end()};
}

void check_consolidation(const Multigraph& g) {
  const auto r = consolidate(g);
  for (int d : degrees(r.graph)) CHECK(d != 2);
  CHECK(census_without_two(r.graph) == census_without_two(g));
  CHECK(betti_multiset(r.graph) == betti_multiset(g));
  // Every original edge appears in exactly one trace.
  std::vector<int> used(static_cast<std::size_t>(g.num_edges()), 0);
  REQUIRE(r.traces.size() == static_cast<std::size_t>(r.graph.num_edges()));
  for (const auto& t : r.traces) {
    for (int e : t) ++used[static_cast<std::size_t>(e)];
  }
  CHECK(std::all_of(used.begin(), used.end(), [](int x) { return x == 1; }));
  // Idempotent on the census and Betti data.
  const auto twice = consolidate(r.graph);
  CHECK(degree_census(twice.graph) == degree_census(r.graph));
  CHECK(betti_multiset(twice.graph) == betti_multiset(r.graph));
  CHECK(twice.graph.num_edges() == r.graph.num_edges());
}

}  // namespace

TEST_CASE("degree: examples") {
  Multigraph iso = make(1, {});
  CHECK(degree(iso, 0) == 0);
  Multigraph loop = make(1, {{0, 0}});
  CHECK(degree(loop, 0) == 2);
  Multigraph dumbbell = make(2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(degree(dumbbell, 0) == 3);
  CHECK(degree(dumbbell, "v1") == 3);
  CHECK(code_of([&] { degree(dumbbell, "zz"); }) == ErrorCode::UnknownVertex);
  CHECK(code_of([&] { degree(dumbbell, 7); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("cycle_vertices: examples") {
  CHECK(cycle_vertices(make(4, {{0, 1}, {1, 2}, {1, 3}})).empty());
  CHECK(cycle_vertices(make(2, {{0, 0}, {0, 1}, {1, 1}})) == std::vector<int>{0, 1});
  CHECK(cycle_vertices(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == std::vector<int>{0, 1, 2, 3});
  // Parallel pair is a cycle; the pendant edge is a bridge.
  CHECK(cycle_vertices(make(3, {{0, 1}, {0, 1}, {1, 2}})) == std::vector<int>{0, 1});
  CHECK(bridges(make(3, {{0, 1}, {0, 1}, {1, 2}})) == std::vector<int>{2});
}

TEST_CASE("cycle_vertices agrees with a brute-force simple-cycle oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1500; ++trial) {
    const Multigraph g = random_multigraph(rng, 7, 10);
    CHECK(cycle_vertices(g) == brute_force_cycle_vertices(g));
  }
}

TEST_CASE("consolidate: examples") {
  const auto path = consolidate(make(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(path.graph.num_vertices() == 2);
  CHECK(path.graph.num_edges() == 1);
  CHECK(path.kept == std::vector<int>{0, -1, -1, 1});
  CHECK(path.traces == std::vector<std::vector<int>>{{0, 1, 2}});

  // Triangle x,y,z with pendant path z-p-q.
  const auto tri = consolidate(make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}));
  CHECK(tri.graph.num_vertices() == 2);
  CHECK(tri.graph.num_edges() == 2);
  const int z = tri.kept[2];
  const int q = tri.kept[4];
  REQUIRE(z >= 0);
  REQUIRE(q >= 0);
  int loops = 0;
  for (const auto& e : tri.graph.edges()) loops += e.u == e.v ? 1 : 0;
  CHECK(loops == 1);
  CHECK(degree(tri.graph, z) == 3);
  CHECK(degree(tri.graph, q) == 1);

  CHECK(code_of([] { consolidate(make(3, {{0, 1}, {1, 2}, {2, 0}})); }) == ErrorCode::CycleComponent);
  CHECK(code_of([] { consolidate(make(1, {{0, 0}})); }) == ErrorCode::CycleComponent);
}

TEST_CASE("property: consolidation invariants on random multigraphs") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Multigraph g = drop_cycle_components(random_multigraph(rng, 9, 14));
    check_consolidation(g);
    ++checked;
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    check_consolidation(drop_cycle_components(random_instance(InstanceKind::Prop4, 12, seed).graph));
  }
  CHECK(checked == 2000);
}

TEST_CASE("check_lemma1: examples and errors") {
  const auto edge = check_lemma1(make(2, {{0, 1}}));
  CHECK(edge.endpoints == 2);
  CHECK(edge.internal == 0);
  CHECK(edge.holds);
  CHECK(edge.per_tree_margins == std::vector<int>{2});
  const auto star = check_lemma1(make(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.endpoints == 3);
  CHECK(star.internal == 1);
  CHECK(star.holds);
  CHECK(star.per_tree_margins == std::vector<int>{2});
  const auto forest = check_lemma1(make(6, {{0, 1}, {2, 3}, {2, 4}, {2, 5}}));
  CHECK(forest.per_tree_margins == std::vector<int>{2, 2});

  CHECK(code_of([] { check_lemma1(make(3, {{0, 1}, {1, 2}, {2, 0}})); }) == ErrorCode::NotForest);
  CHECK(code_of([] { check_lemma1(make(3, {{0, 1}, {1, 2}})); }) == ErrorCode::Degree2VertexPresent);
  CHECK(code_of([] { check_lemma1(make(3, {{0, 1}})); }) == ErrorCode::IsolatedVertex);
}

TEST_CASE("check_lemma2: examples and errors") {
  const auto k4 = check_lemma2(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(k4.on_cycles == 4);
  CHECK(k4.off_cycles == 0);
  CHECK(k4.holds);
  const auto prism = check_lemma2(make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}));
  CHECK(prism.on_cycles == 6);
  CHECK(prism.off_cycles == 0);
  // Two loop-ended dumbbell halves joined through a degree-3 tree vertex.
  const auto mixed = check_lemma2(make(4, {{0, 0}, {1, 1}, {2, 2}, {0, 3}, {1, 3}, {2, 3}}));
  CHECK(mixed.on_cycles == 3);
  CHECK(mixed.off_cycles == 1);
  CHECK(mixed.holds);
  CHECK(code_of([] { check_lemma2(make(2, {{0, 1}, {0, 1}})); }) == ErrorCode::DegreeTooSmall);
}

TEST_CASE("find_prop4_vertex: examples") {
  Multigraph dumbbell = make(2, {{0, 0}, {0, 1}, {1, 1}});
  VertexInvolution swap{{1, 0}};
  CHECK(swap.valid_for(dumbbell, true));
  CHECK(find_prop4_vertex(dumbbell, swap) == 0);

  Multigraph cycles = make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  VertexInvolution across{{3, 4, 5, 0, 1, 2}};
  const int v = find_prop4_vertex(cycles, across);
  CHECK(v >= 0);
  CHECK(v < 6);

  // Doubled theta graph: vertices 0,1 and 2,3; alpha swaps the copies.
  Multigraph theta = make(6, {{0, 4}, {4, 1}, {0, 1}, {0, 1}, {2, 5}, {5, 3}, {2, 3}, {2, 3}});
  VertexInvolution copies{{2, 3, 0, 1, 5, 4}};
  CHECK(copies.valid_for(theta, true));
  const int t = find_prop4_vertex(theta, copies);
  CHECK(degree(theta, t) == 3);
  CHECK(t == 0);

  VertexInvolution fixed{{0, 1}};
  CHECK_FALSE(fixed.valid_for(dumbbell, false));
  CHECK(code_of([&] { find_prop4_vertex(dumbbell, fixed); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("random_instance: generator contracts") {
  const auto l1 = random_instance(InstanceKind::Lemma1, 10, 7);
  CHECK(l1.graph.num_vertices() > 0);
  for (int d : degrees(l1.graph)) CHECK((d == 1 || d >= 3));
  CHECK(bridges(l1.graph).size() == static_cast<std::size_t>(l1.graph.num_edges()));

  const auto p4 = random_instance(InstanceKind::Prop4, 8, 1);
  REQUIRE(p4.alpha.has_value());
  CHECK(p4.alpha->valid_for(p4.graph, true));

  const auto l2 = random_instance(InstanceKind::Lemma2, 12, 3);
  for (int d : degrees(l2.graph)) CHECK(d >= 3);

  // Deterministic per seed.
  CHECK(random_instance(InstanceKind::Prop4, 10, 4).graph == random_instance(InstanceKind::Prop4, 10, 4).graph);
  CHECK(code_of([] { random_instance(InstanceKind::Lemma1, 1, 0); }) == ErrorCode::SizeTooSmall);
  CHECK(code_of([] { random_instance(InstanceKind::Prop4, 7, 0); }) == ErrorCode::SizeTooSmall);

  CHECK(parse_instance_kind("lemma2") == InstanceKind::Lemma2);
  CHECK_FALSE(parse_instance_kind("lemma3").has_value());
}

TEST_CASE("property: handshake and checkers on seeded instances") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    for (auto kind : {InstanceKind::Lemma1, InstanceKind::Lemma2, InstanceKind::Prop4}) {
      const auto inst = random_instance(kind, 4 + static_cast<int>(seed % 20) * 2, seed);
      int sum = 0;
      for (int d : degrees(inst.graph)) sum += d;
      CHECK(sum == 2 * inst.graph.num_edges());
      if (kind == InstanceKind::Lemma1) {
        const auto r = check_lemma1(inst.graph);
        CHECK(r.holds);
        for (int margin : r.per_tree_margins) CHECK(margin >= 2);
      } else if (kind == InstanceKind::Lemma2) {
        CHECK(check_lemma2(inst.graph).holds);
      } else {
        const int v = find_prop4_vertex(inst.graph, *inst.alpha);
        const auto on = cycle_vertices(inst.graph);
        CHECK(std::binary_search(on.begin(), on.end(), v));
        CHECK(std::binary_search(on.begin(), on.end(), inst.alpha->pairing[static_cast<std::size_t>(v)]));
      }
    }
  }
}
