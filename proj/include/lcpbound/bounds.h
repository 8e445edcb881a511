#pragma once

#include <cstddef>
#include <utility>

#include "lcpbound/decomp.h"
#include "lcpbound/matrix.h"

namespace lcpbound {

/// Diagonal-dominance margins of B+ that parameterize every bound.
struct BetaProfile {
  Vector beta_i;      // b_ii - sum_{j != i} |b_ij|
  double beta = 0.0;  // min_i beta_i
  Vector beta_tilde;  // b_ii - sum_{j > i} |b_ij|
  Vector l;           // l_k = max_{i >= k} (1/|b_ii|) sum_{j >= k, j != i} |b_ij|
  Vector beta_bar;    // b_ii - sum_{j > i} |b_ij| * l_i
};

/// Throws NotApplicable if any diagonal entry of b_plus is <= 0.
BetaProfile beta_profile(const BPlusDecomposition& d);

// Upper bounds on max_{d in [0,1]^n} ||(I - D + DM)^{-1}||_inf for a
// B-matrix m. Each throws NotBMatrix when m is not a B-matrix. For n == 1
// all of them evaluate to 0 through the (n - 1) factor.

/// (n - 1) / min{beta, 1}.
double bound_gp(const Matrix& m);
/// sum_i (n-1)/min{bbar_i,1} * prod_{j<i} (1 + sum_{k>j}|b_jk| / bbar_j).
double bound_li2016(const Matrix& m);
/// sum_i (n-1)/min{btilde_i,1} * prod_{j<i} b_jj / btilde_j.
double bound_wcdd(const Matrix& m);
/// sum_i (n-1)/min{bbar_i,1} * prod_{j<i} b_jj / bbar_j. The sharpest of the
/// four: bound_new <= bound_li2016 <= bound_wcdd.
double bound_new(const Matrix& m);

struct BoundReport {
  std::size_t n = 0;
  double gp = 0.0;
  double li2016 = 0.0;
  double wcdd = 0.0;
  double new_bound = 0.0;
  BetaProfile profile;
};

/// All four bounds at once. Throws NotBMatrix.
BoundReport compute_bounds(const Matrix& m);

/// Upper bound on ||A^{-1}||_inf for an SDD Z-matrix with positive diagonal:
///
///   sum_i 1/(a_ii (1 - u_i l_i)) * prod_{j<i} 1/(1 - u_j l_j)
///
/// with u_i = sum_{j>i}|a_ij| / |a_ii| and l_k as in BetaProfile.
/// Throws NotSddM on a precondition failure and Degenerate if some
/// 1 - u_i l_i <= 0.
double wang_inverse_bound(const Matrix& a);

/// Evaluates the two scalar inequalities
///   1/(1 - x + g x) <= 1/min{g, 1}   and   e x/(1 - x + g x) <= e/g
/// for g > 0, e >= 0, x in [0, 1]. Throws DomainError outside that domain.
std::pair<bool, bool> lemma_scalar_checks(double gamma, double eta, double x);

/// The 4x4 family M_k whose (3,2) entry is -0.1 k/(k+1). Requires k >= 1.
Matrix example1_matrix(int k);

struct Example1ClosedForms {
  double gp = 0.0;
  double li2016_paper = 0.0;
  double new_paper = 0.0;
};

/// Rational expressions printed for the M_k family, evaluated as written.
/// These differ from bound_li2016 / bound_new evaluated on M_k; both are
/// reported side by side by the reproduce command. Requires k >= 1.
Example1ClosedForms example1_closed_forms(int k);

}  // namespace lcpbound
