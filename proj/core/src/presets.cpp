#include "hatsplit/presets.hpp"

#include <algorithm>
#include <array>

#include "hatsplit/errors.hpp"

namespace hatsplit {
namespace {

SimplicialComplex disk() { return SimplicialComplex::from_simplices(3, {{0, 1, 2}}); }

// Saved dunce hat word aaA on J = v -> x -> y -> v. The 9-gon boundary reads
// v x y | v x y | v y x; five interior points fan over runs of it.
SimplicialComplex dunce_min() {
  enum : Vertex { v, x, y, i0, i1, i2, i3, i4 };
  std::vector<Triangle> t = {
      {i0, v, x},  {i0, x, y},                            // run b0 b1 b2
      {i1, y, v},  {i1, v, x},                            // run b2 b3 b4
      {i2, x, y},  {i2, y, v},                            // run b4 b5 b6
      {i3, v, y},  {i3, y, x},                            // run b6 b7 b8
      {i4, x, v},                                         // run b8 b0
      {i0, i1, y}, {i1, i2, x}, {i2, i3, v}, {i3, i4, x}, {i4, i0, v},
      {i0, i1, i2}, {i0, i2, i3}, {i0, i3, i4},
  };
  Marks marks{{Edge::make(v, x), Edge::make(x, y), Edge::make(y, v)}, Vertex{v}};
  return SimplicialComplex::from_simplices(8, std::move(t), {}, std::move(marks));
}

SimplicialComplex rp2_6() {
  const std::array<std::array<int, 3>, 10> t1 = {{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                                 {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}}};
  std::vector<Triangle> t;
  for (const auto& x : t1) t.push_back({x[0] - 1, x[1] - 1, x[2] - 1});
  return SimplicialComplex::from_simplices(6, std::move(t));
}

SimplicialComplex torus_7() {
  std::vector<Triangle> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_simplices(7, std::move(t));
}

// Octagon with boundary b0..b7 filled by three interior points: c1 fans over
// b4..b7, c2 over b7 b0 b1 b2, c3 over b2..b4, plus the gap triangles and the
// inner triangle.
std::vector<Triangle> seam_disk(const std::array<Vertex, 8>& b, Vertex c1, Vertex c2, Vertex c3) {
  return {
      {c1, b[4], b[5]}, {c1, b[5], b[6]}, {c1, b[6], b[7]},
      {c2, b[7], b[0]}, {c2, b[0], b[1]}, {c2, b[1], b[2]},
      {c3, b[2], b[3]}, {c3, b[3], b[4]},
      {c1, c2, b[7]},   {c2, c3, b[2]},   {c3, c1, b[4]},
      {c1, c2, c3},
  };
}

enum JesterVertex : Vertex { v0, v1, jm, jn, jl, c1, c2, c3, d1, d2, d3, jester_count };

// Word a A a b B b on J1 = v0 -> m -> v1 and J2 = v1 -> n -> v0. The arc
// L = v1 - l - v0 splits the disk into D1 (letters 1-3) and D2 (letters 4-6).
std::vector<Triangle> jester_d1() { return seam_disk({v0, jm, v1, jm, v0, jm, v1, jl}, c1, c2, c3); }
std::vector<Triangle> jester_d2() { return seam_disk({v1, jn, v0, jn, v1, jn, v0, jl}, d1, d2, d3); }

SimplicialComplex jester_seam() {
  auto t = jester_d1();
  auto t2 = jester_d2();
  t.insert(t.end(), t2.begin(), t2.end());
  Marks marks{{Edge::make(v0, jm), Edge::make(jm, v1), Edge::make(v1, jn), Edge::make(jn, v0)}, Vertex{v0}};
  return SimplicialComplex::from_simplices(jester_count, std::move(t), {}, std::move(marks));
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"disk", "dunce_min", "rp2_6", "torus_7", "jester_seam"};
  return names;
}

bool is_preset(std::string_view name) {
  const auto& names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SimplicialComplex preset(std::string_view name) {
  if (name == "disk") return disk();
  if (name == "dunce_min") return dunce_min();
  if (name == "rp2_6") return rp2_6();
  if (name == "torus_7") return torus_7();
  if (name == "jester_seam") return jester_seam();
  throw Error(ErrorCode::UnknownPreset, std::string(name));
}

std::vector<std::vector<int>> preset_regions(std::string_view name) {
  if (name != "jester_seam") {
    if (!is_preset(name)) throw Error(ErrorCode::UnknownPreset, std::string(name));
    return {};
  }
  const SimplicialComplex c = jester_seam();
  std::vector<std::vector<int>> regions;
  for (const auto& part : {jester_d1(), jester_d2()}) {
    std::vector<int> ids;
    for (const auto& t : part) ids.push_back(*c.find_triangle(t));
    std::sort(ids.begin(), ids.end());
    regions.push_back(std::move(ids));
  }
  return regions;
}

}  // namespace hatsplit
