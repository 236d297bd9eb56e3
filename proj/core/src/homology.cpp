#include "hatsplit/homology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "hatsplit/complex.hpp"

namespace hatsplit {

std::string HomologySummary::to_string() const {
  std::ostringstream out;
  out << "(" << betti0 << ", " << betti1 << ", " << betti2 << ", [";
  for (std::size_t i = 0; i < torsion1.size(); ++i) out << (i ? ", " : "") << torsion1[i];
  out << "])";
  return out.str();
}

namespace {

void swap_rows(IntegerMatrix& m, int r1, int r2) {
  if (r1 == r2) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void swap_cols(IntegerMatrix& m, int c1, int c2) {
  if (c1 == c2) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

}  // namespace

std::vector<Integer> smith_diagonal(IntegerMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<Integer> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    int pr = -1;
    int pc = -1;
    Integer best;
    for (int r = t; r < rows; ++r) {
      for (int c = t; c < cols; ++c) {
        const Integer& v = m.at(r, c);
        if (v == 0) continue;
        Integer a = abs(v);
        if (pr < 0 || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    for (;;) {
      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        if (m.at(r, t) == 0) continue;
        const Integer q = m.at(r, t) / m.at(t, t);
        for (int c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          swap_rows(m, r, t);
          clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (m.at(t, c) == 0) continue;
        const Integer q = m.at(t, c) / m.at(t, t);
        for (int r = t; r < rows; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          swap_cols(m, c, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce the divisibility chain: pull a non-multiple into row t.
      int bad_row = -1;
      for (int r = t + 1; r < rows && bad_row < 0; ++r) {
        for (int c = t + 1; c < cols; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int c = t; c < cols; ++c) m.at(t, c) += m.at(bad_row, c);
    }
    diag.push_back(abs(m.at(t, t)));
  }
  return diag;
}

IntegerMatrix SparseColumnMatrix::to_dense() const {
  IntegerMatrix d(rows, static_cast<int>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) d.at(r, static_cast<int>(c)) = v;
  }
  return d;
}

namespace {

using Column = std::vector<std::pair<int, long long>>;

struct Overflow {};

long long checked_axpy(long long x, long long f, long long y) {
  long long prod = 0;
  long long sum = 0;
  if (__builtin_mul_overflow(f, y, &prod) || __builtin_sub_overflow(x, prod, &sum)) throw Overflow{};
  return sum;
}

// target -= f * source, both sorted by row.
Column combine(const Column& target, long long f, const Column& source) {
  Column out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, checked_axpy(0, f, source[j].second));
      ++j;
    } else {
      const long long v = checked_axpy(target[i].second, f, source[j].second);
      if (v != 0) out.emplace_back(target[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Integer> sparse_then_dense(const SparseColumnMatrix& m) {
  std::vector<Column> cols = m.columns;
  for (auto& col : cols) {
    std::sort(col.begin(), col.end());
    std::erase_if(col, [](const auto& e) { return e.second == 0; });
  }
  std::vector<std::vector<int>> row_cols(static_cast<std::size_t>(m.rows));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [r, v] : cols[c]) row_cols[static_cast<std::size_t>(r)].push_back(static_cast<int>(c));
  }
  std::vector<char> row_alive(static_cast<std::size_t>(m.rows), 1);
  std::vector<char> col_alive(cols.size(), 1);
  int units = 0;

  auto entry = [&](int c, int r) -> long long {
    const auto& col = cols[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), std::make_pair(r, std::numeric_limits<long long>::min()));
    return (it != col.end() && it->first == r) ? it->second : 0;
  };

  for (;;) {
    // Unit pivot in the sparsest column, preferring the sparsest row.
    int pc = -1;
    int pr = -1;
    std::size_t best_col = 0;
    std::size_t best_row = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!col_alive[c] || cols[c].empty()) continue;
      if (pc >= 0 && cols[c].size() > best_col) continue;
      for (const auto& [r, v] : cols[c]) {
        if (v != 1 && v != -1) continue;
        const std::size_t rs = row_cols[static_cast<std::size_t>(r)].size();
        if (pc < 0 || cols[c].size() < best_col || rs < best_row) {
          pc = static_cast<int>(c);
          pr = r;
          best_col = cols[c].size();
          best_row = rs;
        }
      }
    }
    if (pc < 0) break;

    const long long pivot = entry(pc, pr);
    auto& touched = row_cols[static_cast<std::size_t>(pr)];
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    const Column pivot_col = cols[static_cast<std::size_t>(pc)];
    for (int j : std::vector<int>(touched)) {
      if (j == pc || !col_alive[static_cast<std::size_t>(j)]) continue;
      const long long a = entry(j, pr);
      if (a == 0) continue;
      auto& target = cols[static_cast<std::size_t>(j)];
      target = combine(target, a * pivot, pivot_col);  // pivot is +-1, so a/pivot == a*pivot
      for (const auto& [r, v] : pivot_col) row_cols[static_cast<std::size_t>(r)].push_back(j);
    }
    // Drop pivot row from every column and retire the pivot column.
    for (int j : touched) {
      auto& col = cols[static_cast<std::size_t>(j)];
      std::erase_if(col, [pr](const auto& e) { return e.first == pr; });
    }
    for (const auto& [r, v] : pivot_col) {
      auto& rc = row_cols[static_cast<std::size_t>(r)];
      std::erase(rc, pc);
    }
    touched.clear();
    row_alive[static_cast<std::size_t>(pr)] = 0;
    col_alive[static_cast<std::size_t>(pc)] = 0;
    cols[static_cast<std::size_t>(pc)].clear();
    ++units;
  }

  std::vector<int> live_rows;
  std::vector<int> row_pos(static_cast<std::size_t>(m.rows), -1);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!col_alive[c]) continue;
    for (const auto& [r, v] : cols[c]) {
      if (row_pos[static_cast<std::size_t>(r)] < 0) {
        row_pos[static_cast<std::size_t>(r)] = static_cast<int>(live_rows.size());
        live_rows.push_back(r);
      }
    }
  }
  std::vector<int> live_cols;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (col_alive[c] && !cols[c].empty()) live_cols.push_back(static_cast<int>(c));
  }
  std::vector<Integer> diag(static_cast<std::size_t>(units), Integer(1));
  if (!live_cols.empty()) {
    IntegerMatrix rest(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (std::size_t j = 0; j < live_cols.size(); ++j) {
      for (const auto& [r, v] : cols[static_cast<std::size_t>(live_cols[j])]) {
        rest.at(row_pos[static_cast<std::size_t>(r)], static_cast<int>(j)) = v;
      }
    }
    for (auto& d : smith_diagonal(std::move(rest))) diag.push_back(std::move(d));
  }
  return diag;
}

}  // namespace

std::vector<Integer> smith_diagonal(const SparseColumnMatrix& m) {
  try {
    return sparse_then_dense(m);
  } catch (const Overflow&) {
    return smith_diagonal(m.to_dense());
  }
}

SparseColumnMatrix boundary2(const SimplicialComplex& c) {
  SparseColumnMatrix m;
  m.rows = c.num_edges();
  m.columns.resize(static_cast<std::size_t>(c.num_triangles()));
  for (int t = 0; t < c.num_triangles(); ++t) {
    const auto& e = c.triangle_edges(t);  // (a,b), (a,c), (b,c)
    m.columns[static_cast<std::size_t>(t)] = {{e[0], 1}, {e[1], -1}, {e[2], 1}};
  }
  return m;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

HomologySummary homology(const SimplicialComplex& c, const Subcomplex& s) {
  std::vector<int> parent(static_cast<std::size_t>(c.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  int nv = 0;
  for (int v = 0; v < c.num_vertices(); ++v) nv += s.vertices[static_cast<std::size_t>(v)] ? 1 : 0;
  int components = nv;
  std::vector<int> edge_row(static_cast<std::size_t>(c.num_edges()), -1);
  int ne = 0;
  for (int e = 0; e < c.num_edges(); ++e) {
    if (!s.edges[static_cast<std::size_t>(e)]) continue;
    edge_row[static_cast<std::size_t>(e)] = ne++;
    const Edge& ed = c.edges()[static_cast<std::size_t>(e)];
    const int ra = find_root(parent, ed.a);
    const int rb = find_root(parent, ed.b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }

  SparseColumnMatrix d2;
  d2.rows = ne;
  for (int t = 0; t < c.num_triangles(); ++t) {
    if (!s.triangles[static_cast<std::size_t>(t)]) continue;
    const auto& e = c.triangle_edges(t);
    d2.columns.push_back({{edge_row[static_cast<std::size_t>(e[0])], 1},
                          {edge_row[static_cast<std::size_t>(e[1])], -1},
                          {edge_row[static_cast<std::size_t>(e[2])], 1}});
  }
  const int nt = static_cast<int>(d2.columns.size());

  HomologySummary h;
  const auto diag = smith_diagonal(d2);
  const int rank2 = static_cast<int>(diag.size());
  const int rank1 = nv - components;
  h.betti0 = components;
  h.betti1 = ne - rank1 - rank2;
  h.betti2 = nt - rank2;
  for (const auto& d : diag) {
    if (d > 1) h.torsion1.push_back(d);
  }
  return h;
}

HomologySummary homology(const SimplicialComplex& c) { return homology(c, Subcomplex::all(c)); }

}  // namespace hatsplit
