#include "sfi/subgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sfi {

std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& values) {
  std::vector<mpz_class> base;
  for (const auto& v : values)
    if (v > 1) base.push_back(v);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
        if (g == 1) continue;
        const mpz_class a = base[i] / g;
        const mpz_class b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (const mpz_class& x : {g, a, b})
          if (x > 1) base.push_back(x);
        changed = true;
      }
    }
  }
  return base;
}

namespace {

std::vector<mpz_class> exponent_vector(const Rational& x, const std::vector<mpz_class>& base) {
  std::vector<mpz_class> out(base.size());
  mpz_class num = x.numerator();
  mpz_class den = x.denominator();
  for (std::size_t i = 0; i < base.size(); ++i) {
    while (num % base[i] == 0) {
      num /= base[i];
      ++out[i];
    }
    while (den % base[i] == 0) {
      den /= base[i];
      --out[i];
    }
  }
  if (num != 1 || den != 1) throw std::logic_error("value does not factor over the coprime base");
  return out;
}

std::vector<mpz_class> base_for(const std::vector<Rational>& values) {
  std::vector<mpz_class> ints;
  for (const auto& v : values) {
    ints.push_back(v.numerator());
    ints.push_back(v.denominator());
  }
  return coprime_base(ints);
}

IntegerRows lattice_of(const std::vector<Rational>& values, const std::vector<mpz_class>& base) {
  IntegerRows rows;
  for (const auto& v : values) rows.push_back(exponent_vector(v, base));
  return hermite_normal_form(std::move(rows));
}

}  // namespace

IntegerRows hermite_normal_form(IntegerRows rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    // Euclid on column c among rows pivot_row.. until one nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool others = false;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[pivot_row][j];
        if (rows[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    for (std::size_t i = 0; i < pivot_row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[pivot_row][j];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

PositiveRationalGroup::PositiveRationalGroup(std::vector<Rational> generators)
    : generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.sign() <= 0) throw std::invalid_argument("subgroup generators must be positive");
  const auto base = base_for(generators_);
  const IntegerRows hnf = lattice_of(generators_, base);
  rank_ = hnf.size();
  for (const auto& row : hnf) {
    mpq_class value(1);
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (row[i] == 0) continue;
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), base[i].get_mpz_t(), mpz_class(abs(row[i])).get_ui());
      if (row[i] > 0) {
        value *= power;
      } else {
        value /= power;
      }
    }
    basis_.emplace_back(value);
  }
  if (rank_ == 1) cyclic_ = basis_.front() < Rational(1) ? basis_.front() : basis_.front().inverse();
}

bool PositiveRationalGroup::contains(const Rational& x) const {
  if (x.sign() <= 0) return false;
  std::vector<Rational> extended = generators_;
  extended.push_back(x);
  const auto base = base_for(extended);
  return lattice_of(generators_, base) == lattice_of(extended, base);
}

bool PositiveRationalGroup::contains(const PositiveRationalGroup& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Rational& g) { return contains(g); });
}

}  // namespace sfi
