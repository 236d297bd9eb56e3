#include "hatsplit/link_graph.hpp"

#include <algorithm>
#include <deque>

#include "hatsplit/errors.hpp"

namespace hatsplit {
namespace {

int leave_vertex(const OrientedLetter& l) {
  return sidepoint_vertex(l.edge, l.direction == Direction::Forward ? Side::Start : Side::End);
}

int return_vertex(const OrientedLetter& l) {
  return sidepoint_vertex(l.edge, l.direction == Direction::Forward ? Side::End : Side::Start);
}

}  // namespace

LinkGraph build_link(const Presentation& p) {
  if (!p.target().is_rose()) throw Error(ErrorCode::NonRoseTarget, "link graphs are built at the wedge of a rose");
  LinkGraph link;
  const int n = p.target().num_edges();
  link.alpha.pairing.resize(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    const auto& label = p.target().edges()[static_cast<std::size_t>(i)].label;
    link.graph.add_vertex(label + ".start");
    link.graph.add_vertex(label + ".end");
    link.alpha.pairing[static_cast<std::size_t>(2 * i)] = 2 * i + 1;
    link.alpha.pairing[static_cast<std::size_t>(2 * i + 1)] = 2 * i;
  }
  const int m = p.length();
  for (int j = 0; j < m; ++j) {
    link.graph.add_edge(return_vertex(p.word()[j]), leave_vertex(p.word()[(j + 1) % m]));
    link.provenance.push_back(j + 1);
  }
  return link;
}

Case1Report link_component_count(const Presentation& p) {
  const auto counts = occurrence_counts(p);
  if (!std::all_of(counts.begin(), counts.end(), [](int c) { return c == 2; })) {
    throw Error(ErrorCode::Case1HypothesisFails, "some edge does not occur exactly twice");
  }
  const LinkGraph link = build_link(p);
  Case1Report r;
  component_ids(link.graph, &r.components);
  r.euler = r.components - p.target().num_edges() + 1;
  return r;
}

std::vector<int> cycle_through(const Multigraph& g, int v) {
  std::vector<char> is_bridge(static_cast<std::size_t>(g.num_edges()), 0);
  for (int b : bridges(g)) is_bridge[static_cast<std::size_t>(b)] = 1;
  for (int pos : g.incident(v)) {
    if (is_bridge[static_cast<std::size_t>(pos)]) continue;
    const auto& e = g.edges()[static_cast<std::size_t>(pos)];
    if (e.is_loop()) return {pos};
    // Non-bridge edge v-w: a shortest w-to-v path avoiding it closes a simple cycle.
    const int w = e.u == v ? e.v : e.u;
    std::vector<int> via(static_cast<std::size_t>(g.num_vertices()), -2);
    via[static_cast<std::size_t>(w)] = -1;
    std::deque<int> queue{w};
    while (!queue.empty() && via[static_cast<std::size_t>(v)] == -2) {
      const int x = queue.front();
      queue.pop_front();
      for (int q : g.incident(x)) {
        if (q == pos) continue;
        const auto& f = g.edges()[static_cast<std::size_t>(q)];
        const int y = f.u == x ? f.v : f.u;
        if (via[static_cast<std::size_t>(y)] != -2) continue;
        via[static_cast<std::size_t>(y)] = q;
        queue.push_back(y);
      }
    }
    std::vector<int> cycle{pos};
    for (int x = v; x != w;) {
      const int q = via[static_cast<std::size_t>(x)];
      cycle.push_back(q);
      const auto& f = g.edges()[static_cast<std::size_t>(q)];
      x = f.u == x ? f.v : f.u;
    }
    return cycle;
  }
  return {};
}

Case2Selection select_case2_edge(const Presentation& p) {
  if (!p.target().is_rose()) throw Error(ErrorCode::NonRoseTarget, "Case 2 selection needs a rose target");
  if (!is_unexposed(p)) throw Error(ErrorCode::NotUnexposed, "some edge occurs at most once");
  const auto counts = occurrence_counts(p);
  if (std::none_of(counts.begin(), counts.end(), [](int c) { return c >= 3; })) {
    throw Error(ErrorCode::Case2HypothesisFails, "every edge occurs exactly twice");
  }
  const LinkGraph link = build_link(p);
  const int v = find_prop4_vertex(link.graph, link.alpha);
  Case2Selection s;
  s.edge = v / 2;
  s.start_cycle = cycle_through(link.graph, sidepoint_vertex(s.edge, Side::Start));
  s.end_cycle = cycle_through(link.graph, sidepoint_vertex(s.edge, Side::End));
  if (counts[static_cast<std::size_t>(s.edge)] < 3 || s.start_cycle.empty() || s.end_cycle.empty()) {
    throw InvariantViolation("Proposition 4 vertex does not give a Case 2 edge");
  }
  return s;
}

}  // namespace hatsplit
