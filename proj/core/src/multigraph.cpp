#include "hatsplit/multigraph.hpp"

#include <algorithm>
#include <numeric>

#include "hatsplit/errors.hpp"

namespace hatsplit {

Multigraph::Multigraph(std::vector<std::string> labels) : labels_(std::move(labels)), incident_(labels_.size()) {}

int Multigraph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  incident_.emplace_back();
  return num_vertices() - 1;
}

void Multigraph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
}

int Multigraph::add_edge(int u, int v) {
  const int id = next_id_;
  add_edge_with_id(id, u, v);
  return id;
}

void Multigraph::add_edge_with_id(int id, int u, int v) {
  check_vertex(u);
  check_vertex(v);
  for (const auto& e : edges_) {
    if (e.id == id) throw Error(ErrorCode::InvalidGraph, "duplicate edge id " + std::to_string(id));
  }
  const int pos = num_edges();
  edges_.push_back({id, u, v});
  incident_[static_cast<std::size_t>(u)].push_back(pos);
  if (v != u) incident_[static_cast<std::size_t>(v)].push_back(pos);
  next_id_ = std::max(next_id_, id + 1);
}

const std::string& Multigraph::label(int v) const {
  check_vertex(v);
  return labels_[static_cast<std::size_t>(v)];
}

std::optional<int> Multigraph::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

const std::vector<int>& Multigraph::incident(int v) const {
  check_vertex(v);
  return incident_[static_cast<std::size_t>(v)];
}

int degree(const Multigraph& g, int v) {
  int d = 0;
  for (int pos : g.incident(v)) d += g.edges()[static_cast<std::size_t>(pos)].is_loop() ? 2 : 1;
  return d;
}

int degree(const Multigraph& g, std::string_view label) {
  auto v = g.find_vertex(label);
  if (!v) throw Error(ErrorCode::UnknownVertex, std::string(label));
  return degree(g, *v);
}

std::vector<int> degrees(const Multigraph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const auto& e : g.edges()) {
    ++out[static_cast<std::size_t>(e.u)];
    ++out[static_cast<std::size_t>(e.v)];
  }
  return out;
}

std::map<int, int> degree_census(const Multigraph& g) {
  std::map<int, int> census;
  for (int d : degrees(g)) ++census[d];
  return census;
}

std::vector<int> component_ids(const Multigraph& g, int* count) {
  const int n = g.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int pos : g.incident(x)) {
        const auto& e = g.edges()[static_cast<std::size_t>(pos)];
        const int y = e.u == x ? e.v : e.u;
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

std::vector<int> betti_by_component(const Multigraph& g) {
  int count = 0;
  const auto comp = component_ids(g, &count);
  std::vector<int> betti(static_cast<std::size_t>(count), 1);
  for (int c : comp) --betti[static_cast<std::size_t>(c)];
  for (const auto& e : g.edges()) ++betti[static_cast<std::size_t>(comp[static_cast<std::size_t>(e.u)])];
  return betti;
}

std::vector<int> bridges(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> out;
  int timer = 0;

  struct Frame {
    int vertex;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.vertex);
      if (f.next < inc.size()) {
        const int pos = inc[f.next++];
        const auto& e = g.edges()[static_cast<std::size_t>(pos)];
        if (e.is_loop() || pos == f.parent_edge) continue;
        const int y = e.u == f.vertex ? e.v : e.u;
        if (disc[static_cast<std::size_t>(y)] < 0) {
          disc[static_cast<std::size_t>(y)] = low[static_cast<std::size_t>(y)] = timer++;
          stack.push_back({y, pos, 0});
        } else {
          low[static_cast<std::size_t>(f.vertex)] =
              std::min(low[static_cast<std::size_t>(f.vertex)], disc[static_cast<std::size_t>(y)]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) continue;
      const int parent = stack.back().vertex;
      low[static_cast<std::size_t>(parent)] =
          std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.vertex)]);
      if (low[static_cast<std::size_t>(done.vertex)] > disc[static_cast<std::size_t>(parent)]) {
        out.push_back(done.parent_edge);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> cycle_vertices(const Multigraph& g) {
  std::vector<char> is_bridge(static_cast<std::size_t>(g.num_edges()), 0);
  for (int b : bridges(g)) is_bridge[static_cast<std::size_t>(b)] = 1;
  std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int pos = 0; pos < g.num_edges(); ++pos) {
    if (is_bridge[static_cast<std::size_t>(pos)]) continue;
    const auto& e = g.edges()[static_cast<std::size_t>(pos)];
    on[static_cast<std::size_t>(e.u)] = on[static_cast<std::size_t>(e.v)] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (on[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

ConsolidationResult consolidate(const Multigraph& g) {
  const auto deg = degrees(g);
  int count = 0;
  const auto comp = component_ids(g, &count);
  std::vector<char> has_other(static_cast<std::size_t>(count), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] != 2) has_other[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = 1;
  }
  for (int c = 0; c < count; ++c) {
    if (!has_other[static_cast<std::size_t>(c)]) {
      throw Error(ErrorCode::CycleComponent, "a component is a simple closed curve of degree-2 vertices");
    }
  }

  ConsolidationResult r;
  r.kept.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] != 2) r.kept[static_cast<std::size_t>(v)] = r.graph.add_vertex(g.label(v));
  }

  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (r.kept[static_cast<std::size_t>(v)] < 0) continue;
    for (int start : g.incident(v)) {
      if (used[static_cast<std::size_t>(start)]) continue;
      std::vector<int> trace;
      int at = v;
      int pos = start;
      for (;;) {
        used[static_cast<std::size_t>(pos)] = 1;
        trace.push_back(pos);
        const auto& e = g.edges()[static_cast<std::size_t>(pos)];
        at = e.u == at ? e.v : e.u;
        if (r.kept[static_cast<std::size_t>(at)] >= 0) break;
        // Degree-2 vertex: leave through its other edge.
        const auto& inc = g.incident(at);
        pos = inc[0] == pos ? inc[1] : inc[0];
      }
      r.graph.add_edge(r.kept[static_cast<std::size_t>(v)], r.kept[static_cast<std::size_t>(at)]);
      r.traces.push_back(std::move(trace));
    }
  }
  return r;
}

namespace {

bool is_forest(const Multigraph& g) {
  int count = 0;
  component_ids(g, &count);
  return g.num_edges() == g.num_vertices() - count;
}

}  // namespace

Lemma1Report check_lemma1(const Multigraph& g) {
  if (!is_forest(g)) throw Error(ErrorCode::NotForest, "graph has a cycle");
  const auto deg = degrees(g);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] == 0) throw Error(ErrorCode::IsolatedVertex, g.label(v));
    if (deg[static_cast<std::size_t>(v)] == 2) throw Error(ErrorCode::Degree2VertexPresent, g.label(v));
  }
  int count = 0;
  const auto comp = component_ids(g, &count);
  Lemma1Report r;
  r.per_tree_margins.assign(static_cast<std::size_t>(count), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const bool end = deg[static_cast<std::size_t>(v)] == 1;
    (end ? r.endpoints : r.internal) += 1;
    r.per_tree_margins[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] += end ? 1 : -1;
  }
  r.holds = r.endpoints > r.internal &&
            std::all_of(r.per_tree_margins.begin(), r.per_tree_margins.end(), [](int m) { return m >= 2; });
  return r;
}

Lemma2Report check_lemma2(const Multigraph& g) {
  const auto deg = degrees(g);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] < 3) {
      throw Error(ErrorCode::DegreeTooSmall, g.label(v) + " has degree " + std::to_string(deg[static_cast<std::size_t>(v)]));
    }
  }
  Lemma2Report r;
  r.on_cycles = static_cast<int>(cycle_vertices(g).size());
  r.off_cycles = g.num_vertices() - r.on_cycles;
  r.holds = r.on_cycles > r.off_cycles;
  return r;
}

bool VertexInvolution::valid_for(const Multigraph& g, bool degree_preserving) const {
  const int n = g.num_vertices();
  if (static_cast<int>(pairing.size()) != n) return false;
  const auto deg = degrees(g);
  for (int v = 0; v < n; ++v) {
    const int w = pairing[static_cast<std::size_t>(v)];
    if (w < 0 || w >= n || w == v || pairing[static_cast<std::size_t>(w)] != v) return false;
    if (degree_preserving && deg[static_cast<std::size_t>(w)] != deg[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

int find_prop4_vertex(const Multigraph& g, const VertexInvolution& alpha) {
  const auto deg = degrees(g);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] < 2) {
      throw Error(ErrorCode::PreconditionViolation, g.label(v) + " has degree below 2");
    }
  }
  if (!alpha.valid_for(g, true)) {
    throw Error(ErrorCode::PreconditionViolation, "involution is not fixed-point-free and degree-preserving");
  }
  const bool any_high = std::any_of(deg.begin(), deg.end(), [](int d) { return d > 2; });
  std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : cycle_vertices(g)) on[static_cast<std::size_t>(v)] = 1;

  int best = -1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int d = deg[static_cast<std::size_t>(v)];
    if (!on[static_cast<std::size_t>(v)] || !on[static_cast<std::size_t>(alpha.pairing[static_cast<std::size_t>(v)])]) continue;
    if (any_high && d <= 2) continue;
    if (best < 0 || d > deg[static_cast<std::size_t>(best)] ||
        (d == deg[static_cast<std::size_t>(best)] && g.label(v) < g.label(best))) {
      best = v;
    }
  }
  if (best < 0) throw InvariantViolation("no vertex satisfies Proposition 4 on a valid instance");
  return best;
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  if (name == "lemma1") return InstanceKind::Lemma1;
  if (name == "lemma2") return InstanceKind::Lemma2;
  if (name == "prop4") return InstanceKind::Prop4;
  return std::nullopt;
}

}  // namespace hatsplit
