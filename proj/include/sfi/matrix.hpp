#pragma once

#include <cstddef>
#include <vector>

#include "sfi/rational.hpp"

namespace sfi {

// Dense row-major matrix over Q. Sizes stay desk-scale (a few thousand).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& s) const;

  Rational trace() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank by Gaussian elimination.
std::size_t rank(RationalMatrix m);

Rational determinant(RationalMatrix m);

// Solves a x = b for square invertible a; throws std::domain_error if singular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);

// Leading principal minors det(A[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& a);

struct PsdReport {
  bool symmetric = false;
  bool positive_semidefinite = false;
  bool positive_definite = false;
  std::size_t rank = 0;
  // Pivots of the symmetric-pivoted LDL^T factorization, in elimination order.
  std::vector<Rational> pivots;
};

// Exact PSD test: LDL^T with diagonal pivoting; a zero pivot with a nonzero
// remaining row certifies indefiniteness.
PsdReport analyze_psd(const RationalMatrix& a);

}  // namespace sfi
