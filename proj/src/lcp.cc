#include "lcpbound/lcp.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "lcpbound/constants.h"
#include "lcpbound/errors.h"
#include "lcpbound/matcore.h"

namespace lcpbound {

LcpProblem::LcpProblem(Matrix m, Vector q) : m_(std::move(m)), q_(std::move(q)) {
  if (q_.size() != m_.size()) {
    throw DomainError("q has length " + std::to_string(q_.size()) +
                      ", matrix has dimension " + std::to_string(m_.size()));
  }
  for (double v : q_) {
    if (!std::isfinite(v)) throw DomainError("non-finite entry in q");
  }
}

Vector residual(const LcpProblem& p, std::span<const double> x) {
  Vector w = p.m() * x;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::min(x[i], w[i] + p.q()[i]);
  }
  return w;
}

LcpSolution solve_bruteforce(const LcpProblem& p) {
  const std::size_t n = p.size();
  if (n > tol::kLcpDimensionCap) {
    throw DimensionCap("brute-force LCP limited to n <= " +
                       std::to_string(tol::kLcpDimensionCap));
  }
  const double feas = tol::kLcpFeasibility * (1.0 + inf_norm(p.q()));

  std::optional<LcpSolution> first;
  std::size_t accepted = 0;
  std::vector<std::size_t> basis;
  Vector rhs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    basis.clear();
    rhs.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        basis.push_back(i);
        rhs.push_back(-p.q()[i]);
      }
    }

    Vector x(n, 0.0);
    if (!basis.empty()) {
      const LuDecomposition lu(p.m().Principal(basis));
      if (lu.singular()) continue;
      const Vector xb = lu.Solve(rhs);
      for (std::size_t a = 0; a < basis.size(); ++a) x[basis[a]] = xb[a];
    }
    Vector w = p.m() * x;
    for (std::size_t i = 0; i < n; ++i) w[i] += p.q()[i];

    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const bool in_basis = mask & (std::uint64_t{1} << i);
      ok = in_basis ? x[i] >= -feas : w[i] >= -feas;
    }
    if (!ok) continue;

    ++accepted;
    if (!first) {
      LcpSolution s;
      s.x_star = std::move(x);
      s.w_star = std::move(w);
      for (std::size_t i = 0; i < n; ++i) {
        if (s.x_star[i] > 0.0) s.active_set.push_back(i);
      }
      first = std::move(s);
    }
  }

  if (!first) throw NoSolution("no complementary basis is feasible");
  first->accepted_bases = accepted;
  return *std::move(first);
}

ChenXiangReport verify_chen_xiang(const LcpProblem& p, double bound,
                                  std::size_t trials, std::uint64_t seed) {
  if (!(bound >= 0.0)) throw DomainError("bound must be nonnegative");

  ChenXiangReport report;
  report.trials = trials;
  report.seed = seed;
  report.solution = solve_bruteforce(p);
  const Vector& x_star = report.solution.x_star;
  const std::size_t n = p.size();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(
      0.0, 2.0 * (1.0 + inf_norm(x_star)));
  Vector x(n);
  Vector diff(n);
  for (std::size_t t = 0; t < trials; ++t) {
    for (double& v : x) v = coord(rng);
    for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - x_star[i];
    const double err = inf_norm(diff);
    const double res = inf_norm(residual(p, x));

    if (err <= bound * res + tol::kErrorBoundSlack) {
      ++report.passed;
    } else {
      ++report.failed;
    }
    if (res < tol::kResidualFloor) {
      ++report.near_zero_residual;
    } else {
      report.worst_ratio = std::max(report.worst_ratio, err / res);
    }
  }
  return report;
}

}  // namespace lcpbound
