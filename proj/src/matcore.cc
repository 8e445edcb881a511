#include "lcpbound/matcore.h"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "lcpbound/constants.h"
#include "lcpbound/errors.h"

namespace lcpbound {

LuDecomposition::LuDecomposition(const Matrix& a)
    : lu_(a), perm_(a.size()) {
  const std::size_t n = a.size();
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  const double threshold = tol::kPivotRelative * inf_norm(a);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    double pivot_abs = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > pivot_abs) {
        pivot_abs = std::abs(lu_(i, k));
        pivot_row = i;
      }
    }
    // Written as !(>) so that an all-zero matrix (threshold 0) is singular.
    if (!(pivot_abs > threshold)) {
      singular_ = true;
      return;
    }
    if (pivot_row != k) {
      auto r1 = lu_.row(k);
      auto r2 = lu_.row(pivot_row);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
      std::swap(perm_[k], perm_[pivot_row]);
      perm_sign_ = -perm_sign_;
    }
    const double pivot = lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu_(i, k) / pivot;
      lu_(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

double LuDecomposition::determinant() const {
  if (singular_) return 0.0;
  double det = perm_sign_;
  for (std::size_t i = 0; i < lu_.size(); ++i) det *= lu_(i, i);
  return det;
}

Vector LuDecomposition::Solve(std::span<const double> b) const {
  const std::size_t n = lu_.size();
  if (b.size() != n) {
    throw DomainError("right-hand side length does not match matrix");
  }
  if (singular_) throw SingularMatrix("matrix is singular to working precision");

  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

Vector lu_solve(const Matrix& a, std::span<const double> b) {
  return LuDecomposition(a).Solve(b);
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.size();
  const LuDecomposition lu(a);
  if (lu.singular()) throw SingularMatrix("cannot invert a singular matrix");
  Matrix out(n);
  Vector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const Vector col = lu.Solve(e);
    e[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) out(i, j) = col[i];
  }
  return out;
}

bool is_z_matrix(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j && a(i, j) > 0.0) return false;
    }
  }
  return true;
}

bool is_sdd(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) off += std::abs(a(i, j));
    }
    if (!(std::abs(a(i, i)) > off)) return false;
  }
  return true;
}

bool is_b_matrix(const Matrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (double v : a.row(i)) row_sum += v;
    if (!(row_sum > 0.0)) return false;
    const double mean = row_sum / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && !(mean > a(i, j))) return false;
    }
  }
  return true;
}

bool is_nonsingular_m_matrix(const Matrix& a) {
  if (!is_z_matrix(a)) return false;
  const LuDecomposition lu(a);
  if (lu.singular()) return false;
  const Matrix inv = inverse(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (double v : inv.row(i)) {
      if (v < -tol::kInverseNonnegSlack) return false;
    }
  }
  return true;
}

bool is_p_matrix(const Matrix& a) {
  const std::size_t n = a.size();
  if (n > tol::kPMinorCap) {
    throw DimensionCap("principal-minor check limited to n <= " +
                       std::to_string(tol::kPMinorCap));
  }
  std::vector<std::size_t> idx;
  idx.reserve(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
    }
    if (!(LuDecomposition(a.Principal(idx)).determinant() > 0.0)) return false;
  }
  return true;
}

ClassReport classify(const Matrix& a) {
  ClassReport r;
  r.is_z = is_z_matrix(a);
  r.is_sdd = is_sdd(a);
  r.is_m = is_nonsingular_m_matrix(a);
  r.is_b = is_b_matrix(a);
  if (a.size() <= tol::kPMinorCap) r.is_p = is_p_matrix(a);

  bool positive_diagonal = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    positive_diagonal = positive_diagonal && a(i, i) > 0.0;
  }
  if (r.is_sdd && r.is_z && positive_diagonal && !r.is_m) {
    throw std::logic_error("SDD Z-matrix with positive diagonal failed the M-check");
  }
  return r;
}

}  // namespace lcpbound
