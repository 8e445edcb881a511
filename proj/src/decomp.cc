#include "lcpbound/decomp.h"

#include <algorithm>
#include <stdexcept>

#include "lcpbound/matcore.h"

namespace lcpbound {

BPlusDecomposition bplus_decompose(const Matrix& m) {
  const std::size_t n = m.size();
  BPlusDecomposition d{m, Matrix(n), Vector(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) r = std::max(r, m(i, j));
    }
    d.r_plus[i] = r;
    for (std::size_t j = 0; j < n; ++j) {
      d.b_plus(i, j) = m(i, j) - r;
      d.c(i, j) = r;
    }
  }

  if (is_b_matrix(m)) {
    bool positive_diagonal = true;
    for (std::size_t i = 0; i < n; ++i) {
      positive_diagonal = positive_diagonal && d.b_plus(i, i) > 0.0;
    }
    if (!positive_diagonal || !is_sdd(d.b_plus)) {
      throw std::logic_error(
          "B+ of a B-matrix must be SDD with positive diagonal");
    }
  }
  return d;
}

}  // namespace lcpbound
