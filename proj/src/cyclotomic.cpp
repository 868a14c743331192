#include "sfi/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sfi {

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex cache_mutex;
std::map<int, std::vector<long>> polynomial_cache;
std::map<int, std::vector<std::vector<Rational>>> power_cache;

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quotient(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quotient[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return quotient;
}

const std::vector<long>& polynomial_locked(int m) {
  if (const auto it = polynomial_cache.find(m); it != polynomial_cache.end()) return it->second;
  std::vector<long> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_monic(poly, polynomial_locked(d));
  return polynomial_cache.emplace(m, std::move(poly)).first->second;
}

// Reduced coefficient vectors of zeta^e for e = 0..m-1.
const std::vector<std::vector<Rational>>& powers(int m) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (const auto it = power_cache.find(m); it != power_cache.end()) return it->second;
  const std::vector<long>& phi = polynomial_locked(m);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::vector<Rational>> table;
  std::vector<Rational> cur(deg, Rational(0));
  cur[0] = Rational(1);
  for (int e = 0; e < m; ++e) {
    table.push_back(cur);
    // Multiply by x, then replace x^deg using the monic relation.
    std::vector<Rational> next(deg, Rational(0));
    const Rational top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = Rational(0);
    if (!top.is_zero())
      for (std::size_t i = 0; i < deg; ++i) next[i] -= top * Rational(phi[i]);
    cur = std::move(next);
  }
  return power_cache.emplace(m, std::move(table)).first->second;
}

int mod(long a, int m) {
  const long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex);
  return polynomial_locked(m);
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& value) : Cyclotomic(order) { coeffs_[0] = value; }

Cyclotomic Cyclotomic::root_of_unity(int order, const Rational& angle) {
  const Rational scaled = angle * Rational(order);
  if (!scaled.is_integer())
    throw std::invalid_argument("angle " + angle.to_string() + " is not a multiple of 1/" + std::to_string(order));
  Cyclotomic out(order);
  out.coeffs_ = powers(order)[static_cast<std::size_t>(mod(scaled.numerator().get_si(), order))];
  return out;
}

Cyclotomic Cyclotomic::gaussian(int order, const Rational& re, const Rational& im) {
  if (order % 4 != 0) throw std::invalid_argument("gaussian: order must be divisible by 4");
  Cyclotomic out(order, re);
  out += Cyclotomic(order, im) * root_of_unity(order, Rational(1, 4));
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
  const auto& table = powers(order_);
  Cyclotomic out(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& img = table[static_cast<std::size_t>(mod(-static_cast<long>(i), order_))];
    for (std::size_t k = 0; k < img.size(); ++k)
      if (!img[k].is_zero()) out.coeffs_[k] += coeffs_[i] * img[k];
  }
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
    z += coeffs_[i].to_double() * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].to_string();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  return os.str();
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
  if (o.order_ != order_) throw std::invalid_argument("cyclotomic values of different orders");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_order(o);
  const auto& table = powers(order_);
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      const Rational c = coeffs_[i] * o.coeffs_[j];
      const auto& img = table[(i + j) % static_cast<std::size_t>(order_)];
      for (std::size_t k = 0; k < img.size(); ++k)
        if (!img[k].is_zero()) out[k] += c * img[k];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

std::vector<std::vector<Rational>> Cyclotomic::rotation_matrix(int order, int power) {
  const auto& table = powers(order);
  const std::size_t deg = table.front().size();
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg));
  for (std::size_t col = 0; col < deg; ++col) {
    const auto& img = table[static_cast<std::size_t>(mod(static_cast<long>(col) + power, order))];
    for (std::size_t row = 0; row < deg; ++row) m[row][col] = img[row];
  }
  return m;
}

}  // namespace sfi
