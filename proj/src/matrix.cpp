#include "subdiv/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace subdiv {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double DenseMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      worst = std::max(worst, std::fabs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return worst;
}

double DenseMatrix::max_abs() const {
  double worst = 0.0;
  for (double v : data_) worst = std::max(worst, std::fabs(v));
  return worst;
}

}  // namespace subdiv
