#include "eisdenom/linalg.hpp"

#include <stdexcept>

namespace eisdenom {

LinearSolution solve_linear(const RMatrix& A, const RVector& b) {
  const size_t rows = A.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: size mismatch");
  const size_t cols = rows ? A[0].size() : 0;
  RMatrix M(rows, RVector(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    if (A[i].size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
    for (size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
    M[i][cols] = b[i];
  }
  std::vector<long> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    Rational inv = 1 / M[r][c];
    for (size_t j = c; j <= cols; ++j) M[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (size_t j = c; j <= cols; ++j)
        if (M[r][j] != 0) M[i][j] -= f * M[r][j];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  LinearSolution out;
  out.rank = static_cast<long>(r);
  out.consistent = true;
  for (size_t i = r; i < rows; ++i)
    if (M[i][cols] != 0) out.consistent = false;
  out.x.assign(cols, Rational(0));
  if (out.consistent)
    for (size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = M[i][cols];
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivot_col) is_pivot[c] = true;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < r; ++i) v[pivot_col[i]] = -M[i][f];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

long matrix_rank(const RMatrix& A) { return solve_linear(A, RVector(A.size())).rank; }

}  // namespace eisdenom
