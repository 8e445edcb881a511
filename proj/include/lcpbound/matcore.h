#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lcpbound/matrix.h"

namespace lcpbound {

/// LU factorization with partial pivoting, PA = LU.
///
/// A pivot whose magnitude does not exceed 1e-13 * ||A||_inf marks the
/// factorization singular; Solve() then throws SingularMatrix.
class LuDecomposition {
 public:
  explicit LuDecomposition(const Matrix& a);

  bool singular() const { return singular_; }

  /// Product of the pivots with the permutation sign; 0 when singular.
  double determinant() const;

  Vector Solve(std::span<const double> b) const;

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
  int perm_sign_ = 1;
  bool singular_ = false;
};

Vector lu_solve(const Matrix& a, std::span<const double> b);

/// A^{-1}, one column at a time. Throws SingularMatrix.
Matrix inverse(const Matrix& a);

struct ClassReport {
  bool is_z = false;
  bool is_sdd = false;
  bool is_m = false;
  // Only computed when n <= tol::kPMinorCap.
  std::optional<bool> is_p;
  bool is_b = false;
};

// Strict predicates; no tolerance is applied to the defining inequalities.
bool is_z_matrix(const Matrix& a);
bool is_sdd(const Matrix& a);
bool is_b_matrix(const Matrix& a);
/// Z-matrix whose inverse exists and is entrywise >= -1e-10.
bool is_nonsingular_m_matrix(const Matrix& a);
/// All 2^n - 1 principal minors positive. Throws DimensionCap above the cap.
bool is_p_matrix(const Matrix& a);

ClassReport classify(const Matrix& a);

}  // namespace lcpbound
