#include "sfi/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sfi {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RationalMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  RationalMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    const Rational inv = m(r, c).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("solve: singular matrix");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      std::swap(b[pivot], b[c]);
    }
    const Rational inv = a(c, c).inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("minors of a non-square matrix");
  std::vector<Rational> minors;
  minors.reserve(a.rows());
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    RationalMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, j);
    minors.push_back(determinant(std::move(sub)));
  }
  return minors;
}

PsdReport analyze_psd(const RationalMatrix& a) {
  PsdReport report;
  report.symmetric = a.is_symmetric();
  if (!report.symmetric) return report;
  RationalMatrix m = a;
  const std::size_t n = m.rows();
  std::vector<bool> done(n, false);
  bool psd = true;
  for (std::size_t step = 0; step < n; ++step) {
    // Largest remaining diagonal entry.
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (best == n || m(i, i) > m(best, best)) best = i;
    }
    if (m(best, best).sign() < 0) {
      psd = false;
      break;
    }
    if (m(best, best).is_zero()) {
      // All remaining diagonals are zero: PSD iff the remaining block vanishes.
      for (std::size_t i = 0; i < n && psd; ++i)
        for (std::size_t j = 0; j < n && psd; ++j)
          if (!done[i] && !done[j] && !m(i, j).is_zero()) psd = false;
      break;
    }
    const Rational pivot = m(best, best);
    report.pivots.push_back(pivot);
    ++report.rank;
    done[best] = true;
    const Rational inv = pivot.inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, best).is_zero()) continue;
      const Rational f = m(i, best) * inv;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        m(i, j) -= f * m(best, j);
      }
    }
  }
  report.positive_semidefinite = psd;
  report.positive_definite = psd && report.rank == n;
  return report;
}

}  // namespace sfi
