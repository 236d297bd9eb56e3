#pragma once

// Two-dimensional simplicial complexes with canonical storage, masks for
// subcomplexes, and barycentric subdivision.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hatsplit {

using Vertex = int;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  static Edge make(Vertex u, Vertex v) noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  static Triangle make(Vertex u, Vertex v, Vertex w) noexcept;
  [[nodiscard]] std::array<Vertex, 3> vertices() const noexcept { return {a, b, c}; }
  // (a,b), (a,c), (b,c)
  [[nodiscard]] std::array<Edge, 3> edges() const noexcept { return {Edge{a, b}, Edge{a, c}, Edge{b, c}}; }
  [[nodiscard]] bool has_vertex(Vertex v) const noexcept { return v == a || v == b || v == c; }
  auto operator<=>(const Triangle&) const = default;
};

// Which edges carry the target graph J and which vertex is the wedge point.
struct Marks {
  std::vector<Edge> j_edges;
  std::optional<Vertex> wedge;

  [[nodiscard]] bool empty() const noexcept { return j_edges.empty() && !wedge; }
  bool operator==(const Marks&) const = default;
};

struct SimplexRef {
  int dim = 0;
  int index = 0;
  auto operator<=>(const SimplexRef&) const = default;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Downward closure of the given simplices over vertices 0..num_vertices-1.
  // Vertices not touched by any simplex stay as isolated vertices. Throws
  // InvalidComplex on degenerate or repeated triangles and on out-of-range
  // vertices. `labels` are external vertex names (identity when empty).
  static SimplicialComplex from_simplices(int num_vertices, std::vector<Triangle> triangles,
                                          std::vector<Edge> extra_edges = {}, Marks marks = {},
                                          std::vector<long long> labels = {});

  [[nodiscard]] int num_vertices() const noexcept { return num_vertices_; }
  [[nodiscard]] int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] int num_triangles() const noexcept { return static_cast<int>(triangles_.size()); }
  [[nodiscard]] int simplex_count() const noexcept { return num_vertices() + num_edges() + num_triangles(); }
  [[nodiscard]] int euler_characteristic() const noexcept { return num_vertices() - num_edges() + num_triangles(); }

  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
  [[nodiscard]] const Marks& marks() const noexcept { return marks_; }
  [[nodiscard]] const std::vector<long long>& labels() const noexcept { return labels_; }

  [[nodiscard]] std::optional<int> find_edge(Vertex u, Vertex v) const;
  [[nodiscard]] std::optional<int> find_triangle(const Triangle& t) const;

  // Edge indices of triangle t in the order of Triangle::edges().
  [[nodiscard]] const std::array<int, 3>& triangle_edges(int t) const { return triangle_edges_[static_cast<std::size_t>(t)]; }
  [[nodiscard]] const std::vector<int>& edge_cofaces(int e) const { return edge_cofaces_[static_cast<std::size_t>(e)]; }
  [[nodiscard]] const std::vector<int>& vertex_cofaces(Vertex v) const { return vertex_cofaces_[static_cast<std::size_t>(v)]; }

  // Indexed by edge; true for edges listed in marks().j_edges.
  [[nodiscard]] std::vector<char> marked_edge_mask() const;
  // Indexed by vertex; endpoints of marked edges plus the wedge.
  [[nodiscard]] std::vector<char> marked_vertex_mask() const;

  // Edges not contained in any triangle, and vertices not contained in any edge.
  [[nodiscard]] std::vector<int> leftover_edges() const;
  [[nodiscard]] std::vector<int> isolated_vertices() const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  Marks marks_;
  std::vector<long long> labels_;
  std::vector<std::array<int, 3>> triangle_edges_;
  std::vector<std::vector<int>> edge_cofaces_;
  std::vector<std::vector<int>> vertex_cofaces_;
};

// Membership flags for a subset of the simplices of a fixed complex.
struct Subcomplex {
  std::vector<char> vertices;
  std::vector<char> edges;
  std::vector<char> triangles;

  static Subcomplex none(const SimplicialComplex& c);
  static Subcomplex all(const SimplicialComplex& c);

  [[nodiscard]] bool contains(SimplexRef s) const;
  void set(SimplexRef s, bool value);
  [[nodiscard]] int num_vertices() const;
  [[nodiscard]] int num_edges() const;
  [[nodiscard]] int num_triangles() const;
  [[nodiscard]] int simplex_count() const { return num_vertices() + num_edges() + num_triangles(); }

  bool operator==(const Subcomplex&) const = default;
};

// Smallest subcomplex containing the listed simplices (indices into c).
Subcomplex closure(const SimplicialComplex& c, std::span<const int> triangles,
                   std::span<const int> edges = {}, std::span<const int> vertices = {});

bool is_downward_closed(const SimplicialComplex& c, const Subcomplex& s);
bool is_proper(const SimplicialComplex& c, const Subcomplex& s);
Subcomplex intersect(const Subcomplex& x, const Subcomplex& y);
Subcomplex unite(const Subcomplex& x, const Subcomplex& y);

// Maximal simplices of s (simplices of s with no coface in s), split by dimension.
struct Generators {
  std::vector<int> triangles;
  std::vector<int> edges;
  std::vector<int> vertices;
  bool operator==(const Generators&) const = default;
};
Generators generators(const SimplicialComplex& c, const Subcomplex& s);

// Copy of s as a standalone complex on compacted vertex ids. Labels are carried
// over, marks are restricted to s.
SimplicialComplex materialize(const SimplicialComplex& c, const Subcomplex& s);

// Closure of the named simplices as a standalone complex. Throws UnknownSimplex
// for out-of-range indices.
SimplicialComplex subcomplex(const SimplicialComplex& c, std::span<const int> triangles,
                             std::span<const int> extra_edges = {}, std::span<const int> extra_vertices = {});

struct Subdivision {
  SimplicialComplex complex;
  // For each vertex of the subdivision, the simplex of the original complex
  // whose barycenter it is.
  std::vector<SimplexRef> carrier;
  // Original vertex v keeps id v; edge e gets its midpoint here.
  std::vector<Vertex> edge_midpoint;
};

// Marked edges are split in two and stay marked; the wedge keeps its id.
Subdivision barycentric_subdivision(const SimplicialComplex& c);

}  // namespace hatsplit
