#include "lcpbound/matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lcpbound/errors.h"

namespace lcpbound {
namespace {

void RequireSameSize(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) {
    throw DomainError("matrix dimensions differ: " + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {
  if (n == 0) throw DomainError("matrix dimension must be positive");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : Matrix(FromRows(std::vector<Vector>(rows.begin(), rows.end()))) {}

Matrix Matrix::FromRows(const std::vector<Vector>& rows) {
  Matrix out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw DomainError("row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!std::isfinite(rows[i][j])) {
        throw DomainError("non-finite matrix entry");
      }
      out(i, j) = rows[i][j];
    }
  }
  return out;
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

Matrix Matrix::Principal(std::span<const std::size_t> indices) const {
  Matrix out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) {
      out(a, b) = (*this)(indices[a], indices[b]);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  RequireSameSize(a, b);
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  RequireSameSize(a, b);
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  RequireSameSize(a, b);
  const std::size_t n = a.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.size()) {
    throw DomainError("vector length does not match matrix dimension");
  }
  Vector out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

double inf_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    for (double v : a.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double inf_norm(std::span<const double> x) {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace lcpbound
