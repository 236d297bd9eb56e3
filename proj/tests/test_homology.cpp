#include <doctest.h>

#include <numeric>
#include <random>

#include "hatsplit/complex.hpp"
#include "hatsplit/homology.hpp"
#include "hatsplit/presets.hpp"

using namespace hatsplit;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

Integer det(std::vector<std::vector<Integer>> a) {
  // Laplace expansion along the first row; matrices here are at most 5x5.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(a[r][c]);
      }
      minor.push_back(row);
    }
    const Integer term = a[0][j] * det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors,
// s_k = d_k / d_{k-1}.
std::vector<Integer> determinantal_oracle(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    choose(m.rows(), k, 0, cur, rs);
    choose(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> sub(static_cast<std::size_t>(k), std::vector<Integer>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
        }
        Integer d = det(sub);
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

SparseColumnMatrix to_sparse(const IntegerMatrix& m) {
  SparseColumnMatrix s;
  s.rows = m.rows();
  s.columns.resize(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) {
      if (m.at(r, c) != 0) s.columns[static_cast<std::size_t>(c)].emplace_back(r, static_cast<long long>(m.at(r, c)));
    }
  }
  return s;
}

}  // namespace

TEST_CASE("smith_diagonal: hand examples") {
  CHECK(smith_diagonal(from_rows({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
  CHECK(smith_diagonal(from_rows({{0, 0}, {0, 0}})).empty());
  CHECK(smith_diagonal(from_rows({{3}})) == std::vector<Integer>{3});
  CHECK(smith_diagonal(from_rows({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
  CHECK(smith_diagonal(IntegerMatrix(0, 4)).empty());
}

TEST_CASE("smith_diagonal agrees with the determinantal-divisor oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 600; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    IntegerMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        // Mostly small entries with some zeros so ranks vary.
        const long long x = static_cast<long long>(rng() % 13) - 6;
        m.at(r, c) = (rng() % 3 == 0) ? 0 : x;
      }
    }
    const auto expected = determinantal_oracle(m);
    const auto dense = smith_diagonal(m);
    CHECK(dense == expected);
    CHECK(smith_diagonal(to_sparse(m)) == expected);
    for (std::size_t i = 1; i < dense.size(); ++i) CHECK(dense[i] % dense[i - 1] == 0);
  }
}

TEST_CASE("boundary2 orientation and d1 d2 = 0") {
  const auto disk = preset("disk");
  const auto b = boundary2(disk);
  REQUIRE(b.columns.size() == 1);
  // Edges sorted: (0,1), (0,2), (1,2); triangle maps to (1,2) - (0,2) + (0,1).
  CHECK(b.columns[0] == std::vector<std::pair<int, long long>>{{0, 1}, {1, -1}, {2, 1}});

  for (const auto& name : preset_names()) {
    const auto c = preset(name);
    const auto d2 = boundary2(c);
    for (const auto& col : d2.columns) {
      std::vector<long long> vsum(static_cast<std::size_t>(c.num_vertices()), 0);
      for (auto [e, coef] : col) {
        const auto& ed = c.edges()[static_cast<std::size_t>(e)];
        vsum[static_cast<std::size_t>(ed.b)] += coef;
        vsum[static_cast<std::size_t>(ed.a)] -= coef;
      }
      for (long long x : vsum) CHECK(x == 0);
    }
  }
}

TEST_CASE("homology: preset values") {
  using T = std::vector<Integer>;
  CHECK(homology(preset("disk")) == HomologySummary{1, 0, 0, T{}});
  CHECK(homology(preset("rp2_6")) == HomologySummary{1, 0, 0, T{2}});
  CHECK(homology(preset("torus_7")) == HomologySummary{1, 2, 1, T{}});
  CHECK(homology(preset("dunce_min")) == HomologySummary{1, 0, 0, T{}});
  CHECK(homology(preset("jester_seam")).h1_trivial());
  CHECK(homology(preset("torus_7")).to_string() == "(1, 2, 1, [])");
  CHECK(homology(preset("rp2_6")).to_string() == "(1, 0, 0, [2])");
}

TEST_CASE("homology: subcomplexes and Euler consistency") {
  const auto torus = preset("torus_7");
  // Remove one triangle: a punctured torus, H1 = Z^2, H2 = 0.
  Subcomplex s = Subcomplex::all(torus);
  s.set({2, 0}, false);
  const auto h = homology(torus, s);
  CHECK(h == HomologySummary{1, 2, 0, {}});
  CHECK(homology(materialize(torus, s)) == h);

  // Two vertices, no edges.
  const auto pts = SimplicialComplex::from_simplices(2, {});
  CHECK(homology(pts) == HomologySummary{2, 0, 0, {}});

  std::mt19937_64 rng(3);
  for (const auto& name : preset_names()) {
    const auto c = preset(name);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> tris;
      for (int t = 0; t < c.num_triangles(); ++t) {
        if (rng() % 2) tris.push_back(t);
      }
      const auto sub = closure(c, tris);
      const auto hs = homology(c, sub);
      CHECK(hs.betti0 - hs.betti1 + hs.betti2 == sub.num_vertices() - sub.num_edges() + sub.num_triangles());
    }
  }
}
