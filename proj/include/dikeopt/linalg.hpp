#pragma once

#include <optional>
#include <vector>

#include "dikeopt/rational.hpp"

namespace dikeopt {

// Dense matrix over exact rationals; just enough linear algebra for rank
// certificates and nullspace directions on tight-constraint systems.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct Elimination {
  RationalMatrix rref;         // reduced row-echelon form
  std::vector<int> pivotCols;  // one per pivot row, ascending
  int rank = 0;
};

// Exact Gauss-Jordan elimination (first-nonzero pivoting; pivoting for
// magnitude is pointless over exact rationals).
Elimination eliminate(RationalMatrix m);

// A nonzero vector v with Mv = 0 derived from the first free column of the
// RREF, or nullopt when rank == cols.
std::optional<std::vector<Rational>> nullspace_vector(const Elimination& elim);

}  // namespace dikeopt
