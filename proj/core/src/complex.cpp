#include "hatsplit/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hatsplit/errors.hpp"

namespace hatsplit {

Triangle Triangle::make(Vertex u, Vertex v, Vertex w) noexcept {
  std::array<Vertex, 3> xs{u, v, w};
  std::sort(xs.begin(), xs.end());
  return {xs[0], xs[1], xs[2]};
}

SimplicialComplex SimplicialComplex::from_simplices(int num_vertices, std::vector<Triangle> triangles,
                                                    std::vector<Edge> extra_edges, Marks marks,
                                                    std::vector<long long> labels) {
  if (num_vertices < 0) throw Error(ErrorCode::InvalidComplex, "negative vertex count");
  auto in_range = [&](Vertex v) { return v >= 0 && v < num_vertices; };

  SimplicialComplex c;
  c.num_vertices_ = num_vertices;

  for (auto& t : triangles) {
    t = Triangle::make(t.a, t.b, t.c);
    if (!in_range(t.a) || !in_range(t.c)) throw Error(ErrorCode::InvalidComplex, "triangle vertex out of range");
    if (t.a == t.b || t.b == t.c) throw Error(ErrorCode::InvalidComplex, "degenerate triangle");
  }
  std::sort(triangles.begin(), triangles.end());
  if (std::adjacent_find(triangles.begin(), triangles.end()) != triangles.end()) {
    throw Error(ErrorCode::InvalidComplex, "two triangles share a vertex set");
  }

  std::vector<Edge> edges;
  edges.reserve(triangles.size() * 3 + extra_edges.size());
  for (const auto& t : triangles) {
    for (const auto& e : t.edges()) edges.push_back(e);
  }
  for (auto e : extra_edges) {
    e = Edge::make(e.a, e.b);
    if (!in_range(e.a) || !in_range(e.b)) throw Error(ErrorCode::InvalidComplex, "edge vertex out of range");
    if (e.a == e.b) throw Error(ErrorCode::InvalidComplex, "degenerate edge");
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  c.edges_ = std::move(edges);
  c.triangles_ = std::move(triangles);

  c.triangle_edges_.resize(c.triangles_.size());
  c.edge_cofaces_.assign(c.edges_.size(), {});
  c.vertex_cofaces_.assign(static_cast<std::size_t>(num_vertices), {});
  for (std::size_t t = 0; t < c.triangles_.size(); ++t) {
    auto es = c.triangles_[t].edges();
    for (std::size_t i = 0; i < 3; ++i) {
      int e = *c.find_edge(es[i].a, es[i].b);
      c.triangle_edges_[t][i] = e;
      c.edge_cofaces_[static_cast<std::size_t>(e)].push_back(static_cast<int>(t));
    }
  }
  for (std::size_t e = 0; e < c.edges_.size(); ++e) {
    c.vertex_cofaces_[static_cast<std::size_t>(c.edges_[e].a)].push_back(static_cast<int>(e));
    c.vertex_cofaces_[static_cast<std::size_t>(c.edges_[e].b)].push_back(static_cast<int>(e));
  }

  for (auto& e : marks.j_edges) {
    e = Edge::make(e.a, e.b);
    if (!c.find_edge(e.a, e.b)) throw Error(ErrorCode::InvalidComplex, "marked edge is not an edge of the complex");
  }
  std::sort(marks.j_edges.begin(), marks.j_edges.end());
  marks.j_edges.erase(std::unique(marks.j_edges.begin(), marks.j_edges.end()), marks.j_edges.end());
  if (marks.wedge && !in_range(*marks.wedge)) throw Error(ErrorCode::InvalidComplex, "wedge out of range");
  c.marks_ = std::move(marks);

  if (labels.empty()) {
    labels.resize(static_cast<std::size_t>(num_vertices));
    std::iota(labels.begin(), labels.end(), 0LL);
  } else if (labels.size() != static_cast<std::size_t>(num_vertices)) {
    throw Error(ErrorCode::InvalidComplex, "label count does not match vertex count");
  }
  c.labels_ = std::move(labels);
  return c;
}

std::optional<int> SimplicialComplex::find_edge(Vertex u, Vertex v) const {
  const Edge e = Edge::make(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> SimplicialComplex::find_triangle(const Triangle& t) const {
  const Triangle s = Triangle::make(t.a, t.b, t.c);
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), s);
  if (it == triangles_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - triangles_.begin());
}

std::vector<char> SimplicialComplex::marked_edge_mask() const {
  std::vector<char> mask(edges_.size(), 0);
  for (const auto& e : marks_.j_edges) mask[static_cast<std::size_t>(*find_edge(e.a, e.b))] = 1;
  return mask;
}

std::vector<char> SimplicialComplex::marked_vertex_mask() const {
  std::vector<char> mask(static_cast<std::size_t>(num_vertices_), 0);
  for (const auto& e : marks_.j_edges) {
    mask[static_cast<std::size_t>(e.a)] = 1;
    mask[static_cast<std::size_t>(e.b)] = 1;
  }
  if (marks_.wedge) mask[static_cast<std::size_t>(*marks_.wedge)] = 1;
  return mask;
}

std::vector<int> SimplicialComplex::leftover_edges() const {
  std::vector<int> out;
  for (int e = 0; e < num_edges(); ++e) {
    if (edge_cofaces(e).empty()) out.push_back(e);
  }
  return out;
}

std::vector<int> SimplicialComplex::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices_; ++v) {
    if (vertex_cofaces(v).empty()) out.push_back(v);
  }
  return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return num_vertices_ == other.num_vertices_ && edges_ == other.edges_ && triangles_ == other.triangles_ &&
         marks_ == other.marks_;
}

// --- Subcomplex ---------------------------------------------------------------

Subcomplex Subcomplex::none(const SimplicialComplex& c) {
  return {std::vector<char>(static_cast<std::size_t>(c.num_vertices()), 0),
          std::vector<char>(static_cast<std::size_t>(c.num_edges()), 0),
          std::vector<char>(static_cast<std::size_t>(c.num_triangles()), 0)};
}

Subcomplex Subcomplex::all(const SimplicialComplex& c) {
  return {std::vector<char>(static_cast<std::size_t>(c.num_vertices()), 1),
          std::vector<char>(static_cast<std::size_t>(c.num_edges()), 1),
          std::vector<char>(static_cast<std::size_t>(c.num_triangles()), 1)};
}

bool Subcomplex::contains(SimplexRef s) const {
  const auto i = static_cast<std::size_t>(s.index);
  switch (s.dim) {
    case 0: return i < vertices.size() && vertices[i];
    case 1: return i < edges.size() && edges[i];
    case 2: return i < triangles.size() && triangles[i];
    default: return false;
  }
}

void Subcomplex::set(SimplexRef s, bool value) {
  const auto i = static_cast<std::size_t>(s.index);
  switch (s.dim) {
    case 0: vertices.at(i) = value; break;
    case 1: edges.at(i) = value; break;
    case 2: triangles.at(i) = value; break;
    default: break;
  }
}

namespace {
int count_set(const std::vector<char>& xs) { return static_cast<int>(std::count(xs.begin(), xs.end(), 1)); }

void check_index(int i, int n, const char* what) {
  if (i < 0 || i >= n) throw Error(ErrorCode::UnknownSimplex, std::string(what) + " index " + std::to_string(i));
}
}  // namespace

int Subcomplex::num_vertices() const { return count_set(vertices); }
int Subcomplex::num_edges() const { return count_set(edges); }
int Subcomplex::num_triangles() const { return count_set(triangles); }

Subcomplex closure(const SimplicialComplex& c, std::span<const int> triangles, std::span<const int> edges,
                   std::span<const int> vertices) {
  Subcomplex s = Subcomplex::none(c);
  for (int t : triangles) {
    check_index(t, c.num_triangles(), "triangle");
    s.triangles[static_cast<std::size_t>(t)] = 1;
    for (int e : c.triangle_edges(t)) s.edges[static_cast<std::size_t>(e)] = 1;
    for (Vertex v : c.triangles()[static_cast<std::size_t>(t)].vertices()) s.vertices[static_cast<std::size_t>(v)] = 1;
  }
  for (int e : edges) {
    check_index(e, c.num_edges(), "edge");
    s.edges[static_cast<std::size_t>(e)] = 1;
    const Edge& ed = c.edges()[static_cast<std::size_t>(e)];
    s.vertices[static_cast<std::size_t>(ed.a)] = 1;
    s.vertices[static_cast<std::size_t>(ed.b)] = 1;
  }
  for (int v : vertices) {
    check_index(v, c.num_vertices(), "vertex");
    s.vertices[static_cast<std::size_t>(v)] = 1;
  }
  return s;
}

bool is_downward_closed(const SimplicialComplex& c, const Subcomplex& s) {
  for (int t = 0; t < c.num_triangles(); ++t) {
    if (!s.triangles[static_cast<std::size_t>(t)]) continue;
    for (int e : c.triangle_edges(t)) {
      if (!s.edges[static_cast<std::size_t>(e)]) return false;
    }
  }
  for (int e = 0; e < c.num_edges(); ++e) {
    if (!s.edges[static_cast<std::size_t>(e)]) continue;
    const Edge& ed = c.edges()[static_cast<std::size_t>(e)];
    if (!s.vertices[static_cast<std::size_t>(ed.a)] || !s.vertices[static_cast<std::size_t>(ed.b)]) return false;
  }
  return true;
}

bool is_proper(const SimplicialComplex& c, const Subcomplex& s) {
  return s.simplex_count() < c.simplex_count();
}

Subcomplex intersect(const Subcomplex& x, const Subcomplex& y) {
  Subcomplex out = x;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) out.vertices[i] = x.vertices[i] && y.vertices[i];
  for (std::size_t i = 0; i < out.edges.size(); ++i) out.edges[i] = x.edges[i] && y.edges[i];
  for (std::size_t i = 0; i < out.triangles.size(); ++i) out.triangles[i] = x.triangles[i] && y.triangles[i];
  return out;
}

Subcomplex unite(const Subcomplex& x, const Subcomplex& y) {
  Subcomplex out = x;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) out.vertices[i] = x.vertices[i] || y.vertices[i];
  for (std::size_t i = 0; i < out.edges.size(); ++i) out.edges[i] = x.edges[i] || y.edges[i];
  for (std::size_t i = 0; i < out.triangles.size(); ++i) out.triangles[i] = x.triangles[i] || y.triangles[i];
  return out;
}

Generators generators(const SimplicialComplex& c, const Subcomplex& s) {
  Generators g;
  std::vector<char> covered_edges(static_cast<std::size_t>(c.num_edges()), 0);
  std::vector<char> covered_vertices(static_cast<std::size_t>(c.num_vertices()), 0);
  for (int t = 0; t < c.num_triangles(); ++t) {
    if (!s.triangles[static_cast<std::size_t>(t)]) continue;
    g.triangles.push_back(t);
    for (int e : c.triangle_edges(t)) covered_edges[static_cast<std::size_t>(e)] = 1;
  }
  for (int e = 0; e < c.num_edges(); ++e) {
    if (!s.edges[static_cast<std::size_t>(e)]) continue;
    const Edge& ed = c.edges()[static_cast<std::size_t>(e)];
    covered_vertices[static_cast<std::size_t>(ed.a)] = 1;
    covered_vertices[static_cast<std::size_t>(ed.b)] = 1;
    if (!covered_edges[static_cast<std::size_t>(e)]) g.edges.push_back(e);
  }
  for (int v = 0; v < c.num_vertices(); ++v) {
    if (s.vertices[static_cast<std::size_t>(v)] && !covered_vertices[static_cast<std::size_t>(v)]) g.vertices.push_back(v);
  }
  return g;
}

SimplicialComplex materialize(const SimplicialComplex& c, const Subcomplex& s) {
  std::vector<Vertex> new_id(static_cast<std::size_t>(c.num_vertices()), -1);
  std::vector<long long> labels;
  int n = 0;
  for (int v = 0; v < c.num_vertices(); ++v) {
    if (!s.vertices[static_cast<std::size_t>(v)]) continue;
    new_id[static_cast<std::size_t>(v)] = n++;
    labels.push_back(c.labels()[static_cast<std::size_t>(v)]);
  }
  auto map_vertex = [&](Vertex v) {
    const Vertex w = new_id[static_cast<std::size_t>(v)];
    if (w < 0) throw Error(ErrorCode::InvalidComplex, "subcomplex is not downward closed");
    return w;
  };
  std::vector<Triangle> tris;
  for (int t = 0; t < c.num_triangles(); ++t) {
    if (!s.triangles[static_cast<std::size_t>(t)]) continue;
    const auto& tr = c.triangles()[static_cast<std::size_t>(t)];
    tris.push_back(Triangle::make(map_vertex(tr.a), map_vertex(tr.b), map_vertex(tr.c)));
  }
  std::vector<Edge> edges;
  const auto marked = c.marked_edge_mask();
  Marks marks;
  for (int e = 0; e < c.num_edges(); ++e) {
    if (!s.edges[static_cast<std::size_t>(e)]) continue;
    const auto& ed = c.edges()[static_cast<std::size_t>(e)];
    const Edge mapped = Edge::make(map_vertex(ed.a), map_vertex(ed.b));
    edges.push_back(mapped);
    if (marked[static_cast<std::size_t>(e)]) marks.j_edges.push_back(mapped);
  }
  if (c.marks().wedge && s.vertices[static_cast<std::size_t>(*c.marks().wedge)]) {
    marks.wedge = new_id[static_cast<std::size_t>(*c.marks().wedge)];
  }
  return SimplicialComplex::from_simplices(n, std::move(tris), std::move(edges), std::move(marks), std::move(labels));
}

SimplicialComplex subcomplex(const SimplicialComplex& c, std::span<const int> triangles,
                             std::span<const int> extra_edges, std::span<const int> extra_vertices) {
  return materialize(c, closure(c, triangles, extra_edges, extra_vertices));
}

Subdivision barycentric_subdivision(const SimplicialComplex& c) {
  const int nv = c.num_vertices();
  const int ne = c.num_edges();
  const int nt = c.num_triangles();

  Subdivision out;
  out.carrier.reserve(static_cast<std::size_t>(nv + ne + nt));
  for (int v = 0; v < nv; ++v) out.carrier.push_back({0, v});
  out.edge_midpoint.resize(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) {
    out.edge_midpoint[static_cast<std::size_t>(e)] = nv + e;
    out.carrier.push_back({1, e});
  }
  for (int t = 0; t < nt; ++t) out.carrier.push_back({2, t});

  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(6 * nt));
  for (int t = 0; t < nt; ++t) {
    const Vertex bary = nv + ne + t;
    const auto& tr = c.triangles()[static_cast<std::size_t>(t)];
    const auto es = tr.edges();
    const auto& eidx = c.triangle_edges(t);
    for (std::size_t i = 0; i < 3; ++i) {
      const Vertex mid = out.edge_midpoint[static_cast<std::size_t>(eidx[i])];
      tris.push_back(Triangle::make(es[i].a, mid, bary));
      tris.push_back(Triangle::make(es[i].b, mid, bary));
    }
  }
  std::vector<Edge> extra;
  for (int e : c.leftover_edges()) {
    const auto& ed = c.edges()[static_cast<std::size_t>(e)];
    const Vertex mid = out.edge_midpoint[static_cast<std::size_t>(e)];
    extra.push_back(Edge::make(ed.a, mid));
    extra.push_back(Edge::make(mid, ed.b));
  }
  Marks marks;
  for (const auto& e : c.marks().j_edges) {
    const Vertex mid = out.edge_midpoint[static_cast<std::size_t>(*c.find_edge(e.a, e.b))];
    marks.j_edges.push_back(Edge::make(e.a, mid));
    marks.j_edges.push_back(Edge::make(mid, e.b));
  }
  marks.wedge = c.marks().wedge;
  out.complex = SimplicialComplex::from_simplices(nv + ne + nt, std::move(tris), std::move(extra), std::move(marks));
  return out;
}

}  // namespace hatsplit
