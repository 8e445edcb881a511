#pragma once

#include <cstddef>
#include <cstdint>

#include "lcpbound/matrix.h"

namespace lcpbound {

enum class SampleKind { kVertex, kGrid, kRandom };

const char* to_string(SampleKind kind);

struct DSample {
  Vector d;
  double norm_value = 0.0;
  SampleKind kind = SampleKind::kVertex;
};

struct MaxEstimate {
  DSample best;
  std::size_t samples_evaluated = 0;
  std::size_t singular_encounters = 0;
  std::uint64_t seed = 0;
};

/// ||(I - D + DM)^{-1}||_inf for D = diag(d), d in [0,1]^n.
/// Throws DomainError for d outside the box, SingularMatrix if I - D + DM is
/// singular.
double norm_at(const Matrix& m, std::span<const double> d);

/// Lower bound on max_{d in [0,1]^n} ||(I - D + DM)^{-1}||_inf.
///
/// Evaluation order: every box vertex (ascending bitmask, only when
/// n <= 12), then the centre d = 1/2 followed by, for each axis i, the two
/// points with d_i in {0, 1} and every other coordinate 1/2, then
/// `random_samples` uniform draws from a generator seeded with `seed`.
/// Singular points are counted and skipped. Ties keep the earliest sample.
MaxEstimate estimate_max(const Matrix& m, std::size_t random_samples,
                         std::uint64_t seed);

/// Random B-matrix: off-diagonals uniform in [-1, 1], diagonal chosen so
/// that the row sum is n * max{0, max_{j!=i} m_ij} + delta_i with delta_i
/// uniform in [0.1, 1]. Deterministic in (n, seed).
Matrix gen_b_matrix(std::size_t n, std::uint64_t seed);

/// Random SDD Z-matrix with positive diagonal: off-diagonals uniform in
/// [-1, 0], a_ii = sum_{j!=i} |a_ij| + delta_i with delta_i in [0.1, 1].
Matrix gen_sdd_m_matrix(std::size_t n, std::uint64_t seed);

}  // namespace lcpbound
