#include "dikeopt/linalg.hpp"

namespace dikeopt {

Elimination eliminate(RationalMatrix m) {
  Elimination out;
  const int rows = m.rows();
  const int cols = m.cols();
  int pivotRow = 0;
  for (int col = 0; col < cols && pivotRow < rows; ++col) {
    int found = -1;
    for (int r = pivotRow; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivotRow) {
      for (int c = col; c < cols; ++c) swap(m.at(found, c), m.at(pivotRow, c));
    }
    const Rational pivot = m.at(pivotRow, col);
    for (int c = col; c < cols; ++c) m.at(pivotRow, c) /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == pivotRow) continue;
      const Rational factor = m.at(r, col);
      if (factor == 0) continue;
      for (int c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(pivotRow, c);
    }
    out.pivotCols.push_back(col);
    ++pivotRow;
  }
  out.rank = pivotRow;
  out.rref = std::move(m);
  return out;
}

std::optional<std::vector<Rational>> nullspace_vector(const Elimination& elim) {
  const int cols = elim.rref.cols();
  if (elim.rank >= cols) return std::nullopt;

  // First non-pivot column; set it to 1 and read the pivot entries off the RREF.
  std::vector<bool> isPivot(static_cast<size_t>(cols), false);
  for (int c : elim.pivotCols) isPivot[static_cast<size_t>(c)] = true;
  int freeCol = -1;
  for (int c = 0; c < cols; ++c) {
    if (!isPivot[static_cast<size_t>(c)]) {
      freeCol = c;
      break;
    }
  }
  std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
  v[static_cast<size_t>(freeCol)] = 1;
  for (int r = 0; r < elim.rank; ++r) {
    const int pc = elim.pivotCols[static_cast<size_t>(r)];
    v[static_cast<size_t>(pc)] = -elim.rref.at(r, freeCol);
  }
  return v;
}

}  // namespace dikeopt
