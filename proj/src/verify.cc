#include "lcpbound/verify.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

#include "lcpbound/constants.h"
#include "lcpbound/errors.h"
#include "lcpbound/matcore.h"

namespace lcpbound {
namespace {

// Evaluates one sample and folds it into the running estimate.
void Consider(const Matrix& m, Vector d, SampleKind kind, MaxEstimate& est,
              bool& have_best) {
  ++est.samples_evaluated;
  double value = 0.0;
  try {
    value = norm_at(m, d);
  } catch (const SingularMatrix&) {
    ++est.singular_encounters;
    return;
  }
  if (!have_best || value > est.best.norm_value) {
    est.best = DSample{std::move(d), value, kind};
    have_best = true;
  }
}

}  // namespace

const char* to_string(SampleKind kind) {
  switch (kind) {
    case SampleKind::kVertex:
      return "vertex";
    case SampleKind::kGrid:
      return "grid";
    case SampleKind::kRandom:
      return "random";
  }
  return "unknown";
}

double norm_at(const Matrix& m, std::span<const double> d) {
  const std::size_t n = m.size();
  if (d.size() != n) throw DomainError("d has the wrong length");
  for (double v : d) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("d must lie in [0,1]^n");
  }
  Matrix md(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) md(i, j) = d[i] * m(i, j);
    md(i, i) += 1.0 - d[i];
  }
  return inf_norm(inverse(md));
}

MaxEstimate estimate_max(const Matrix& m, std::size_t random_samples,
                         std::uint64_t seed) {
  const std::size_t n = m.size();
  MaxEstimate est;
  est.seed = seed;
  bool have_best = false;

  if (n <= tol::kVertexSweepCap) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Vector d(n);
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = (mask >> i) & 1U ? 1.0 : 0.0;
      }
      Consider(m, std::move(d), SampleKind::kVertex, est, have_best);
    }
  }

  Consider(m, Vector(n, 0.5), SampleKind::kGrid, est, have_best);
  for (std::size_t i = 0; i < n; ++i) {
    for (double edge : {0.0, 1.0}) {
      Vector d(n, 0.5);
      d[i] = edge;
      Consider(m, std::move(d), SampleKind::kGrid, est, have_best);
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t s = 0; s < random_samples; ++s) {
    Vector d(n);
    for (double& v : d) v = unit(rng);
    Consider(m, std::move(d), SampleKind::kRandom, est, have_best);
  }
  return est;
}

Matrix gen_b_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  std::uniform_real_distribution<double> margin(0.1, 1.0);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    double max_off = 0.0;
    double off_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      m(i, j) = off(rng);
      max_off = std::max(max_off, m(i, j));
      off_sum += m(i, j);
    }
    m(i, i) = static_cast<double>(n) * max_off - off_sum + margin(rng);
  }
  return m;
}

Matrix gen_sdd_m_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> off(-1.0, 0.0);
  std::uniform_real_distribution<double> margin(0.1, 1.0);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    double off_abs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      a(i, j) = off(rng);
      off_abs -= a(i, j);
    }
    a(i, i) = off_abs + margin(rng);
  }
  return a;
}

}  // namespace lcpbound
