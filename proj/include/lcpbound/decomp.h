#pragma once

#include "lcpbound/matrix.h"

namespace lcpbound {

/// M = B+ + C, where row i of C is the constant r_i+ = max{0, m_ij : j != i}.
struct BPlusDecomposition {
  Matrix b_plus;
  Matrix c;
  Vector r_plus;
};

/// Defined for every square matrix. When m is a B-matrix the resulting B+ is
/// verified to be SDD with positive diagonal (std::logic_error otherwise).
BPlusDecomposition bplus_decompose(const Matrix& m);

}  // namespace lcpbound
