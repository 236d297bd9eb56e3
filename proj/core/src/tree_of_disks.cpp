#include <algorithm>
#include <numeric>

#include "hatsplit/errors.hpp"
#include "hatsplit/split_search.hpp"

namespace hatsplit {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

TreeOfDisks tree_of_disks(const SimplicialComplex& c, const Subcomplex& a) {
  if (c.marks().j_edges.empty()) throw Error(ErrorCode::MissingMarks, "complex carries no J marks");
  const int nv = c.num_vertices();
  const int ne = c.num_edges();
  const int nt = c.num_triangles();
  const auto marked_edge = c.marked_edge_mask();
  const auto marked_vertex = c.marked_vertex_mask();

  // One id space: vertices, then edges, then triangles.
  auto vid = [](Vertex v) { return v; };
  auto eid = [nv](int e) { return nv + e; };
  auto tid = [nv, ne](int t) { return nv + ne + t; };
  UnionFind j(nv + ne + nt);
  UnionFind f(nv + ne + nt);

  auto in_j_v = [&](Vertex v) { return a.vertices[static_cast<std::size_t>(v)] && marked_vertex[static_cast<std::size_t>(v)]; };
  auto in_j_e = [&](int e) { return a.edges[static_cast<std::size_t>(e)] && marked_edge[static_cast<std::size_t>(e)]; };
  auto in_f_v = [&](Vertex v) { return a.vertices[static_cast<std::size_t>(v)] && !marked_vertex[static_cast<std::size_t>(v)]; };
  auto in_f_e = [&](int e) { return a.edges[static_cast<std::size_t>(e)] && !marked_edge[static_cast<std::size_t>(e)]; };

  for (int e = 0; e < ne; ++e) {
    const Edge& ed = c.edges()[static_cast<std::size_t>(e)];
    if (in_j_e(e)) {
      j.unite(eid(e), vid(ed.a));
      j.unite(eid(e), vid(ed.b));
    }
    if (in_f_e(e)) {
      if (in_f_v(ed.a)) f.unite(eid(e), vid(ed.a));
      if (in_f_v(ed.b)) f.unite(eid(e), vid(ed.b));
    }
  }
  for (int t = 0; t < nt; ++t) {
    if (!a.triangles[static_cast<std::size_t>(t)]) continue;
    for (int e : c.triangle_edges(t)) {
      if (in_f_e(e)) f.unite(tid(t), eid(e));
    }
    for (Vertex v : c.triangles()[static_cast<std::size_t>(t)].vertices()) {
      if (in_f_v(v)) f.unite(tid(t), vid(v));
    }
  }

  // Number the components.
  std::vector<int> e_index(static_cast<std::size_t>(nv + ne + nt), -1);
  std::vector<int> f_index(static_cast<std::size_t>(nv + ne + nt), -1);
  TreeOfDisks out;
  auto name_j = [&](int id) {
    int& slot = e_index[static_cast<std::size_t>(j.find(id))];
    if (slot < 0) slot = out.j_components++;
  };
  auto name_f = [&](int id) {
    int& slot = f_index[static_cast<std::size_t>(f.find(id))];
    if (slot < 0) slot = out.disk_components++;
  };
  for (Vertex v = 0; v < nv; ++v) {
    if (in_j_v(v)) name_j(vid(v));
  }
  for (int e = 0; e < ne; ++e) {
    if (in_j_e(e)) name_j(eid(e));
  }
  std::vector<int> f_members;
  for (Vertex v = 0; v < nv; ++v) {
    if (in_f_v(v)) f_members.push_back(vid(v));
  }
  for (int e = 0; e < ne; ++e) {
    if (in_f_e(e)) f_members.push_back(eid(e));
  }
  for (int t = 0; t < nt; ++t) {
    if (a.triangles[static_cast<std::size_t>(t)]) f_members.push_back(tid(t));
  }
  for (int id : f_members) name_f(id);

  for (int i = 0; i < out.j_components; ++i) out.graph.add_vertex("E" + std::to_string(i));
  for (int i = 0; i < out.disk_components; ++i) out.graph.add_vertex("F" + std::to_string(i));

  // For each F, the marked faces of its simplices, split into components
  // within J; each such component lies in one E and contributes one edge.
  std::vector<std::vector<int>> marked_faces(static_cast<std::size_t>(out.disk_components));
  auto note_face = [&](int member, int face_id) {
    marked_faces[static_cast<std::size_t>(f_index[static_cast<std::size_t>(f.find(member))])].push_back(face_id);
  };
  for (int id : f_members) {
    if (id >= tid(0)) {
      const int t = id - tid(0);
      for (int e : c.triangle_edges(t)) {
        if (in_j_e(e)) note_face(id, eid(e));
      }
      for (Vertex v : c.triangles()[static_cast<std::size_t>(t)].vertices()) {
        if (in_j_v(v)) note_face(id, vid(v));
      }
    } else if (id >= eid(0)) {
      const Edge& ed = c.edges()[static_cast<std::size_t>(id - eid(0))];
      if (in_j_v(ed.a)) note_face(id, vid(ed.a));
      if (in_j_v(ed.b)) note_face(id, vid(ed.b));
    }
  }
  for (int fi = 0; fi < out.disk_components; ++fi) {
    auto& faces = marked_faces[static_cast<std::size_t>(fi)];
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // Components of this closed piece of J: edges join their endpoints.
    UnionFind local(nv + ne + nt);
    std::vector<char> present(static_cast<std::size_t>(nv + ne + nt), 0);
    for (int id : faces) present[static_cast<std::size_t>(id)] = 1;
    for (int id : faces) {
      if (id < eid(0)) continue;
      const Edge& ed = c.edges()[static_cast<std::size_t>(id - eid(0))];
      // The closure of an edge contains its endpoints.
      present[static_cast<std::size_t>(vid(ed.a))] = present[static_cast<std::size_t>(vid(ed.b))] = 1;
      local.unite(id, vid(ed.a));
      local.unite(id, vid(ed.b));
    }
    std::vector<int> roots;
    for (int id = 0; id < nv + ne; ++id) {
      if (!present[static_cast<std::size_t>(id)]) continue;
      const int r = local.find(id);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      out.graph.add_edge(e_index[static_cast<std::size_t>(j.find(id))], out.j_components + fi);
    }
  }

  int components = 0;
  component_ids(out.graph, &components);
  out.is_tree = out.graph.num_vertices() > 0 && components == 1 && out.graph.num_edges() == out.graph.num_vertices() - 1;
  return out;
}

}  // namespace hatsplit
