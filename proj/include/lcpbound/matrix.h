#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lcpbound {

using Vector = std::vector<double>;

/// Dense, square, row-major matrix of finite doubles.
class Matrix {
 public:
  /// n x n zero matrix. Throws DomainError for n == 0.
  explicit Matrix(std::size_t n);

  /// Throws DomainError for empty, ragged, non-square or non-finite input.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix FromRows(const std::vector<Vector>& rows);

  static Matrix Identity(std::size_t n);

  std::size_t size() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }

  /// Principal submatrix on the given (sorted, distinct) indices.
  Matrix Principal(std::span<const std::size_t> indices) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

/// max_i sum_j |a_ij|
double inf_norm(const Matrix& a);
/// max_i |x_i|; 0 for an empty span.
double inf_norm(std::span<const double> x);

}  // namespace lcpbound
