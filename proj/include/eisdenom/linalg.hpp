#pragma once

#include <vector>

#include "eisdenom/rational.hpp"

namespace eisdenom {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

struct LinearSolution {
  bool consistent = false;
  long rank = 0;
  RVector x;                  // particular solution, free variables set to 0
  std::vector<RVector> kernel;  // basis of the null space of A
};

// Exact Gauss-Jordan elimination for A x = b over Q.
LinearSolution solve_linear(const RMatrix& A, const RVector& b);
long matrix_rank(const RMatrix& A);

}  // namespace eisdenom
