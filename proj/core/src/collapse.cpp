#include "hatsplit/collapse.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hatsplit/errors.hpp"
#include "hatsplit/rng.hpp"

namespace hatsplit {

std::vector<FreePair> free_faces(const SimplicialComplex& c, const Subcomplex& s) {
  std::vector<FreePair> out;
  for (int e = 0; e < c.num_edges(); ++e) {
    if (!s.edges[static_cast<std::size_t>(e)]) continue;
    int count = 0;
    int last = -1;
    for (int t : c.edge_cofaces(e)) {
      if (s.triangles[static_cast<std::size_t>(t)]) {
        ++count;
        last = t;
      }
    }
    if (count == 1) out.push_back({{1, e}, {2, last}});
  }
  for (int v = 0; v < c.num_vertices(); ++v) {
    if (!s.vertices[static_cast<std::size_t>(v)]) continue;
    int count = 0;
    int last = -1;
    for (int e : c.vertex_cofaces(v)) {
      if (s.edges[static_cast<std::size_t>(e)]) {
        ++count;
        last = e;
      }
    }
    if (count == 1) out.push_back({{0, v}, {1, last}});
  }
  return out;
}

std::vector<FreePair> free_faces(const SimplicialComplex& c) { return free_faces(c, Subcomplex::all(c)); }

GreedyCollapse collapse_greedy(const SimplicialComplex& c, std::uint64_t seed) {
  Rng rng(seed);
  GreedyCollapse g;
  g.remaining = Subcomplex::all(c);
  for (;;) {
    const auto pairs = free_faces(c, g.remaining);
    if (pairs.empty()) break;
    const auto& p = pairs[static_cast<std::size_t>(rng.below(static_cast<int>(pairs.size())))];
    g.remaining.set(p.face, false);
    g.remaining.set(p.coface, false);
    g.sequence.steps.push_back(p);
  }
  g.terminal = materialize(c, g.remaining);
  return g;
}

namespace {

bool is_face_of(const SimplicialComplex& c, SimplexRef face, SimplexRef coface) {
  if (face.dim + 1 != coface.dim) return false;
  if (face.dim == 1) {
    const auto& es = c.triangle_edges(coface.index);
    return std::find(es.begin(), es.end(), face.index) != es.end();
  }
  const Edge& e = c.edges()[static_cast<std::size_t>(coface.index)];
  return e.a == face.index || e.b == face.index;
}

bool in_range(const SimplicialComplex& c, SimplexRef s) {
  switch (s.dim) {
    case 0: return s.index >= 0 && s.index < c.num_vertices();
    case 1: return s.index >= 0 && s.index < c.num_edges();
    case 2: return s.index >= 0 && s.index < c.num_triangles();
    default: return false;
  }
}

}  // namespace

std::optional<Subcomplex> replay_collapse(const SimplicialComplex& c, const Subcomplex& s, const CollapseSequence& seq) {
  Subcomplex cur = s;
  for (const auto& step : seq.steps) {
    if (!in_range(c, step.face) || !in_range(c, step.coface)) return std::nullopt;
    if (!cur.contains(step.face) || !cur.contains(step.coface) || !is_face_of(c, step.face, step.coface)) {
      return std::nullopt;
    }
    int cofaces = 0;
    if (step.face.dim == 1) {
      for (int t : c.edge_cofaces(step.face.index)) cofaces += cur.triangles[static_cast<std::size_t>(t)] ? 1 : 0;
    } else {
      for (int e : c.vertex_cofaces(step.face.index)) cofaces += cur.edges[static_cast<std::size_t>(e)] ? 1 : 0;
    }
    if (cofaces != 1) return std::nullopt;
    cur.set(step.face, false);
    cur.set(step.coface, false);
  }
  return cur;
}

std::optional<Subcomplex> replay_collapse(const SimplicialComplex& c, const CollapseSequence& seq) {
  return replay_collapse(c, Subcomplex::all(c), seq);
}

bool sequence_reaches_point(const SimplicialComplex& c, const Subcomplex& s, const CollapseSequence& seq) {
  const auto end = replay_collapse(c, s, seq);
  return end && end->num_vertices() == 1 && end->num_edges() == 0 && end->num_triangles() == 0;
}

// --- exact search -------------------------------------------------------------

namespace {

class ExactSearch {
 public:
  ExactSearch(const SimplicialComplex& c, const CollapseSearchOptions& opts) : c_(c), opts_(opts) {}

  bool run(Subcomplex& s, CollapseSequence& path) {
    const int alive = s.simplex_count();
    if (alive == 1 && s.num_vertices() == 1) return true;
    std::string key = fingerprint(s);
    if (dead_.contains(key)) return false;
    if (++states_ > opts_.max_states) {
      throw Error(ErrorCode::BudgetExceeded, "collapse search visited more than " + std::to_string(opts_.max_states) + " states");
    }

    auto moves = free_faces(c_, s);
    if (opts_.prune_commuting_moves) {
      const bool triangles_left = s.num_triangles() > 0;
      const auto first_triangle_move =
          std::find_if(moves.begin(), moves.end(), [](const FreePair& p) { return p.coface.dim == 2; });
      if (first_triangle_move != moves.end()) {
        moves = {*first_triangle_move};
      } else if (triangles_left) {
        moves.clear();  // edges under a triangle can never become free again
      } else if (!moves.empty()) {
        moves.resize(1);
      }
    }
    for (const auto& m : moves) {
      s.set(m.face, false);
      s.set(m.coface, false);
      path.steps.push_back(m);
      if (run(s, path)) return true;
      path.steps.pop_back();
      s.set(m.face, true);
      s.set(m.coface, true);
    }
    dead_.insert(std::move(key));
    return false;
  }

  [[nodiscard]] std::uint64_t states() const noexcept { return states_; }

 private:
  static std::string fingerprint(const Subcomplex& s) {
    std::string key;
    key.reserve(s.vertices.size() + s.edges.size() + s.triangles.size());
    key.append(s.vertices.begin(), s.vertices.end());
    key.append(s.edges.begin(), s.edges.end());
    key.append(s.triangles.begin(), s.triangles.end());
    return key;
  }

  const SimplicialComplex& c_;
  const CollapseSearchOptions& opts_;
  std::unordered_set<std::string> dead_;
  std::uint64_t states_ = 0;
};

}  // namespace

CollapsibilityResult is_collapsible(const SimplicialComplex& c, const Subcomplex& s, const CollapseSearchOptions& opts) {
  if (s.simplex_count() > opts.max_simplices) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(s.simplex_count()) + " simplices exceed the exact-search bound of " +
                                               std::to_string(opts.max_simplices));
  }
  CollapsibilityResult r;
  if (s.simplex_count() == 0) return r;
  ExactSearch search(c, opts);
  Subcomplex cur = s;
  CollapseSequence path;
  r.collapsible = search.run(cur, path);
  r.states_explored = search.states();
  if (r.collapsible) r.sequence = std::move(path);
  return r;
}

CollapsibilityResult is_collapsible(const SimplicialComplex& c, const CollapseSearchOptions& opts) {
  return is_collapsible(c, Subcomplex::all(c), opts);
}

// --- peeling ------------------------------------------------------------------

PeelingTester::PeelingTester(const SimplicialComplex& c)
    : c_(&c),
      cof_(static_cast<std::size_t>(c.num_edges())),
      tri_alive_(static_cast<std::size_t>(c.num_triangles())),
      edge_alive_(static_cast<std::size_t>(c.num_edges())),
      vdeg_(static_cast<std::size_t>(c.num_vertices())) {}

bool PeelingTester::collapsible(const Subcomplex& s) { return run(s, nullptr); }

std::optional<CollapseSequence> PeelingTester::sequence(const Subcomplex& s) {
  CollapseSequence seq;
  if (!run(s, &seq)) return std::nullopt;
  return seq;
}

bool PeelingTester::run(const Subcomplex& s, CollapseSequence* out) {
  const SimplicialComplex& c = *c_;
  const int ne = c.num_edges();
  const int nt = c.num_triangles();
  queue_.clear();
  int tris = 0;
  for (int e = 0; e < ne; ++e) {
    cof_[static_cast<std::size_t>(e)] = 0;
    edge_alive_[static_cast<std::size_t>(e)] = s.edges[static_cast<std::size_t>(e)];
  }
  for (int t = 0; t < nt; ++t) {
    tri_alive_[static_cast<std::size_t>(t)] = s.triangles[static_cast<std::size_t>(t)];
    if (!s.triangles[static_cast<std::size_t>(t)]) continue;
    ++tris;
    for (int e : c.triangle_edges(t)) ++cof_[static_cast<std::size_t>(e)];
  }
  for (int e = 0; e < ne; ++e) {
    if (edge_alive_[static_cast<std::size_t>(e)] && cof_[static_cast<std::size_t>(e)] == 1) queue_.push_back(e);
  }
  for (std::size_t head = 0; head < queue_.size() && tris > 0; ++head) {
    const int e = queue_[head];
    if (!edge_alive_[static_cast<std::size_t>(e)] || cof_[static_cast<std::size_t>(e)] != 1) continue;
    int t = -1;
    for (int x : c.edge_cofaces(e)) {
      if (tri_alive_[static_cast<std::size_t>(x)]) {
        t = x;
        break;
      }
    }
    tri_alive_[static_cast<std::size_t>(t)] = 0;
    edge_alive_[static_cast<std::size_t>(e)] = 0;
    --tris;
    if (out) out->steps.push_back({{1, e}, {2, t}});
    for (int f : c.triangle_edges(t)) {
      if (--cof_[static_cast<std::size_t>(f)] == 1 && f != e) queue_.push_back(f);
    }
  }
  if (tris > 0) return false;

  // The rest is a graph; it collapses to a point iff pruning leaves one vertex.
  int vertices = 0;
  int edges = 0;
  queue_.clear();
  for (int v = 0; v < c.num_vertices(); ++v) {
    if (!s.vertices[static_cast<std::size_t>(v)]) continue;
    ++vertices;
    int d = 0;
    for (int e : c.vertex_cofaces(v)) d += edge_alive_[static_cast<std::size_t>(e)] ? 1 : 0;
    vdeg_[static_cast<std::size_t>(v)] = d;
    edges += d;
    if (d == 1) queue_.push_back(v);
  }
  edges /= 2;
  if (vertices - edges != 1) return false;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int v = queue_[head];
    if (vdeg_[static_cast<std::size_t>(v)] != 1) continue;
    int e = -1;
    for (int x : c.vertex_cofaces(v)) {
      if (edge_alive_[static_cast<std::size_t>(x)]) {
        e = x;
        break;
      }
    }
    edge_alive_[static_cast<std::size_t>(e)] = 0;
    vdeg_[static_cast<std::size_t>(v)] = 0;
    --vertices;
    --edges;
    if (out) out->steps.push_back({{0, v}, {1, e}});
    const Edge& ed = c.edges()[static_cast<std::size_t>(e)];
    const int w = ed.a == v ? ed.b : ed.a;
    if (--vdeg_[static_cast<std::size_t>(w)] == 1) queue_.push_back(w);
  }
  return vertices == 1 && edges == 0;
}

}  // namespace hatsplit
