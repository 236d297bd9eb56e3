#pragma once

// Integer homology of 2-complexes through Smith normal form.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hatsplit {

using Integer = boost::multiprecision::cpp_int;

class SimplicialComplex;
struct Subcomplex;

struct HomologySummary {
  int betti0 = 0;
  int betti1 = 0;
  int betti2 = 0;
  // H1 torsion coefficients, all >= 2, each dividing the next.
  std::vector<Integer> torsion1;

  [[nodiscard]] bool h1_finite() const noexcept { return betti1 == 0; }
  [[nodiscard]] bool h1_trivial() const noexcept { return betti1 == 0 && torsion1.empty(); }
  [[nodiscard]] std::string to_string() const;

  bool operator==(const HomologySummary&) const = default;
};

// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  Integer& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  [[nodiscard]] const Integer& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

// Nonzero diagonal of the Smith normal form, positive, in divisibility order.
// Its length is the rank.
std::vector<Integer> smith_diagonal(IntegerMatrix m);

// Column-sparse matrix with small entries, the shape of a boundary operator.
struct SparseColumnMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, long long>>> columns;

  [[nodiscard]] IntegerMatrix to_dense() const;
};

// Same result as smith_diagonal(m.to_dense()), but eliminates unit pivots
// sparsely first and only hands the remainder to the dense routine.
std::vector<Integer> smith_diagonal(const SparseColumnMatrix& m);

// Boundary of triangles into edges. Triangle {a<b<c} maps to
// (b,c) - (a,c) + (a,b); edges are oriented from the smaller vertex.
SparseColumnMatrix boundary2(const SimplicialComplex& c);

HomologySummary homology(const SimplicialComplex& c);
HomologySummary homology(const SimplicialComplex& c, const Subcomplex& s);

}  // namespace hatsplit
