#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcpbound/matrix.h"

namespace lcpbound {

/// LCP(M, q): find x >= 0 with w = Mx + q >= 0 and x^T w = 0.
class LcpProblem {
 public:
  /// Throws DomainError on a dimension mismatch or non-finite q.
  LcpProblem(Matrix m, Vector q);

  const Matrix& m() const { return m_; }
  const Vector& q() const { return q_; }
  std::size_t size() const { return q_.size(); }

 private:
  Matrix m_;
  Vector q_;
};

struct LcpSolution {
  Vector x_star;
  Vector w_star;
  std::vector<std::size_t> active_set;  // i with x*_i > 0
  // Number of complementary bases that passed the feasibility test.
  std::size_t accepted_bases = 0;
};

/// Natural residual r(x) = min{x, Mx + q}, componentwise.
Vector residual(const LcpProblem& p, std::span<const double> x);

/// Enumerates all 2^n complementary bases in ascending bitmask order and
/// returns the first feasible one. Singular bases are skipped.
/// Throws DimensionCap for n > 20 and NoSolution if nothing is feasible.
LcpSolution solve_bruteforce(const LcpProblem& p);

struct ChenXiangReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Trials with ||r(x)||_inf < 1e-12; still checked, excluded from worst_ratio.
  std::size_t near_zero_residual = 0;
  double worst_ratio = 0.0;  // max ||x - x*||_inf / ||r(x)||_inf
  std::uint64_t seed = 0;
  LcpSolution solution;
};

/// Samples x uniformly from [0, 2(1 + ||x*||_inf)]^n and checks
/// ||x - x*||_inf <= bound * ||r(x)||_inf + 1e-9 at each point.
ChenXiangReport verify_chen_xiang(const LcpProblem& p, double bound,
                                  std::size_t trials, std::uint64_t seed);

}  // namespace lcpbound
