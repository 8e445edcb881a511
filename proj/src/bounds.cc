#include "lcpbound/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lcpbound/errors.h"
#include "lcpbound/matcore.h"

namespace lcpbound {
namespace {

// sum_{j > i} |a_ij|
double TailSum(const Matrix& a, std::size_t i) {
  double s = 0.0;
  for (std::size_t j = i + 1; j < a.size(); ++j) s += std::abs(a(i, j));
  return s;
}

// l_k(A) = max_{k <= i < n} (1/|a_ii|) sum_{k <= j < n, j != i} |a_ij|
Vector TrailingDominance(const Matrix& a) {
  const std::size_t n = a.size();
  Vector l(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double best = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k; j < n; ++j) {
        if (j != i) s += std::abs(a(i, j));
      }
      best = std::max(best, s / std::abs(a(i, i)));
    }
    l[k] = best;
  }
  return l;
}

BPlusDecomposition RequireB(const Matrix& m, const char* bound) {
  if (!is_b_matrix(m)) {
    throw NotBMatrix(std::string(bound) + " requires a B-matrix");
  }
  return bplus_decompose(m);
}

}  // namespace

BetaProfile beta_profile(const BPlusDecomposition& d) {
  const Matrix& b = d.b_plus;
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(b(i, i) > 0.0)) {
      throw NotApplicable("B+ diagonal entry " + std::to_string(i) +
                          " is not positive");
    }
  }

  BetaProfile p;
  p.beta_i.resize(n);
  p.beta_tilde.resize(n);
  p.beta_bar.resize(n);
  p.l = TrailingDominance(b);
  p.beta = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += std::abs(b(i, j));
    }
    const double tail = TailSum(b, i);
    p.beta_i[i] = b(i, i) - off;
    p.beta = std::min(p.beta, p.beta_i[i]);
    p.beta_tilde[i] = b(i, i) - tail;
    p.beta_bar[i] = b(i, i) - tail * p.l[i];
  }
  return p;
}

double bound_gp(const Matrix& m) {
  const BetaProfile p = beta_profile(RequireB(m, "bound_gp"));
  return static_cast<double>(m.size() - 1) / std::min(p.beta, 1.0);
}

double bound_li2016(const Matrix& m) {
  const BPlusDecomposition d = RequireB(m, "bound_li2016");
  const BetaProfile p = beta_profile(d);
  const double scale = static_cast<double>(m.size() - 1);
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    sum += scale / std::min(p.beta_bar[i], 1.0) * prod;
    prod *= 1.0 + TailSum(d.b_plus, i) / p.beta_bar[i];
  }
  return sum;
}

double bound_wcdd(const Matrix& m) {
  const BPlusDecomposition d = RequireB(m, "bound_wcdd");
  const BetaProfile p = beta_profile(d);
  const double scale = static_cast<double>(m.size() - 1);
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    sum += scale / std::min(p.beta_tilde[i], 1.0) * prod;
    prod *= d.b_plus(i, i) / p.beta_tilde[i];
  }
  return sum;
}

double bound_new(const Matrix& m) {
  const BPlusDecomposition d = RequireB(m, "bound_new");
  const BetaProfile p = beta_profile(d);
  const double scale = static_cast<double>(m.size() - 1);
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    sum += scale / std::min(p.beta_bar[i], 1.0) * prod;
    prod *= d.b_plus(i, i) / p.beta_bar[i];
  }
  return sum;
}

BoundReport compute_bounds(const Matrix& m) {
  BoundReport r;
  r.n = m.size();
  r.gp = bound_gp(m);
  r.li2016 = bound_li2016(m);
  r.wcdd = bound_wcdd(m);
  r.new_bound = bound_new(m);
  r.profile = beta_profile(bplus_decompose(m));
  return r;
}

double wang_inverse_bound(const Matrix& a) {
  const std::size_t n = a.size();
  if (!is_z_matrix(a) || !is_sdd(a)) {
    throw NotSddM("wang_inverse_bound requires an SDD Z-matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a(i, i) > 0.0)) {
      throw NotSddM("wang_inverse_bound requires a positive diagonal");
    }
  }

  const Vector l = TrailingDominance(a);
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = TailSum(a, i) / std::abs(a(i, i));
    const double gap = 1.0 - u * l[i];
    if (!(gap > 0.0)) {
      throw Degenerate("1 - u_i l_i <= 0 at row " + std::to_string(i));
    }
    sum += 1.0 / (a(i, i) * gap) * prod;
    prod *= 1.0 / gap;
  }
  return sum;
}

std::pair<bool, bool> lemma_scalar_checks(double gamma, double eta, double x) {
  if (!(gamma > 0.0) || !(eta >= 0.0) || !(x >= 0.0 && x <= 1.0) ||
      !std::isfinite(gamma) || !std::isfinite(eta)) {
    throw DomainError("lemma_scalar_checks needs gamma > 0, eta >= 0, x in [0,1]");
  }
  const double denom = 1.0 - x + gamma * x;
  const bool first = 1.0 / denom <= 1.0 / std::min(gamma, 1.0);
  const bool second = eta * x / denom <= eta / gamma;
  return {first, second};
}

Matrix example1_matrix(int k) {
  if (k < 1) throw DomainError("example1_matrix requires k >= 1");
  const double kk = k;
  return Matrix{{1.5, 0.5, 0.4, 0.5},
                {-0.1, 1.7, 0.7, 0.6},
                {0.8, -0.1 * kk / (kk + 1.0), 1.8, 0.7},
                {0.0, 0.7, 0.8, 1.8}};
}

Example1ClosedForms example1_closed_forms(int k) {
  if (k < 1) throw DomainError("example1_closed_forms requires k >= 1");
  const double kk = k;
  const double a = 90.0 * kk + 91.0;
  const double denom = 0.99 * a * a;
  Example1ClosedForms out;
  out.gp = 30.0 * (kk + 1.0);
  out.li2016_paper = (2.97 * a * (190.0 * kk + 192.0) +
                      6.24 * (100.0 * kk + 101.0) * (100.0 * kk + 101.0)) /
                     denom;
  out.new_paper = (2.97 * a * (190.0 * kk + 191.0) +
                   5.97 * (100.0 * kk + 100.0) * (100.0 * kk + 100.0)) /
                  denom;
  return out;
}

}  // namespace lcpbound
