#include "hatsplit/triangulate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hatsplit/errors.hpp"

namespace hatsplit {

Vertex target_point(const TargetGraph& g, int segments, int edge, int t) {
  const auto& e = g.edges()[static_cast<std::size_t>(edge)];
  if (t == 0) return e.tail;
  if (t == segments) return e.head;
  return g.num_vertices() + edge * (segments - 1) + (t - 1);
}

namespace {

constexpr int kMaxRounds = 3;  // one planned subdivision plus two fallbacks

struct Glued {
  bool ok = false;
  SimplicialComplex complex;
  std::vector<Vertex> image;
};

Glued glue(const Presentation& p, const SimplicialComplex& disk, const std::vector<Vertex>& boundary, int s) {
  const TargetGraph& g = p.target();
  const int m = p.length();
  const int target_ids = g.num_vertices() + g.num_edges() * (s - 1);

  Glued out;
  out.image.assign(static_cast<std::size_t>(disk.num_vertices()), -1);
  std::vector<char> on_boundary(static_cast<std::size_t>(disk.num_vertices()), 0);
  for (int j = 0; j < m; ++j) {
    const auto& l = p.word()[j];
    for (int t = 0; t < s; ++t) {
      const int along = l.direction == Direction::Forward ? t : s - t;
      const Vertex dv = boundary[static_cast<std::size_t>(j * s + t)];
      out.image[static_cast<std::size_t>(dv)] = target_point(g, s, l.edge, along);
      on_boundary[static_cast<std::size_t>(dv)] = 1;
    }
  }
  int next = target_ids;
  for (int v = 0; v < disk.num_vertices(); ++v) {
    if (out.image[static_cast<std::size_t>(v)] < 0) out.image[static_cast<std::size_t>(v)] = next++;
  }

  auto img = [&](Vertex v) { return out.image[static_cast<std::size_t>(v)]; };
  std::vector<Triangle> tris;
  for (const auto& t : disk.triangles()) {
    const Vertex a = img(t.a), b = img(t.b), c = img(t.c);
    if (a == b || b == c || a == c) return out;
    tris.push_back(Triangle::make(a, b, c));
  }
  std::set<Triangle> seen;
  for (const auto& t : tris) {
    if (!seen.insert(t).second) return out;
  }
  // Only boundary edges are meant to be identified with each other.
  std::map<Edge, int> owner;
  for (int e = 0; e < disk.num_edges(); ++e) {
    const Edge& de = disk.edges()[static_cast<std::size_t>(e)];
    const Edge ie = Edge::make(img(de.a), img(de.b));
    const bool boundary_edge = on_boundary[static_cast<std::size_t>(de.a)] && on_boundary[static_cast<std::size_t>(de.b)] &&
                               disk.edge_cofaces(e).size() == 1;
    auto [it, fresh] = owner.emplace(ie, boundary_edge ? -1 : e);
    if (!fresh && (!boundary_edge || it->second != -1)) return out;
  }

  std::vector<Edge> j_edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    for (int t = 0; t < s; ++t) j_edges.push_back(Edge::make(target_point(g, s, e, t), target_point(g, s, e, t + 1)));
  }
  for (const auto& e : j_edges) {
    if (e.a == e.b) throw Error(ErrorCode::InvalidTarget, "target loop subdivides into a degenerate edge");
  }
  Marks marks{j_edges, g.wedge()};
  out.complex = SimplicialComplex::from_simplices(next, std::move(tris), j_edges, std::move(marks));
  out.ok = true;
  return out;
}

}  // namespace

Triangulation triangulate(const Presentation& p, int k) {
  if (k < 3) throw Error(ErrorCode::PreconditionViolation, "k must be at least 3");
  const int m = p.length();
  const int n = m * k;

  // Cone over the n-gon 0..n-1 from apex n.
  std::vector<Triangle> cone;
  for (int i = 0; i < n; ++i) cone.push_back(Triangle::make(i, (i + 1) % n, n));
  SimplicialComplex disk = SimplicialComplex::from_simplices(n + 1, std::move(cone));
  std::vector<Vertex> boundary(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) boundary[static_cast<std::size_t>(i)] = i;
  int s = k;

  for (int round = 1; round <= kMaxRounds; ++round) {
    Subdivision sd = barycentric_subdivision(disk);
    std::vector<Vertex> refined;
    refined.reserve(boundary.size() * 2);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      const Vertex a = boundary[i];
      const Vertex b = boundary[(i + 1) % boundary.size()];
      refined.push_back(a);
      refined.push_back(sd.edge_midpoint[static_cast<std::size_t>(*disk.find_edge(a, b))]);
    }
    disk = std::move(sd.complex);
    boundary = std::move(refined);
    s *= 2;

    Glued g = glue(p, disk, boundary, s);
    if (g.ok) {
      Triangulation t;
      t.complex = std::move(g.complex);
      t.quotient = QuotientMap{std::move(disk), std::move(boundary), s, round, std::move(g.image)};
      return t;
    }
  }
  throw Error(ErrorCode::NonSimplicialAfterRetries, "quotient is not simplicial after " + std::to_string(kMaxRounds) + " subdivisions");
}

}  // namespace hatsplit
