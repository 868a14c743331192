#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sfi/rational.hpp"

namespace sfi {

// Element of the cyclotomic field Q(zeta_m), zeta_m = exp(2 pi i / m), stored
// as coefficients of 1, zeta, ..., zeta^(phi(m)-1) reduced modulo the m-th
// cyclotomic polynomial. Elements of different orders do not mix.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order);
  Cyclotomic(int order, const Rational& value);

  // exp(2 pi i angle); the angle's denominator must divide the order.
  static Cyclotomic root_of_unity(int order, const Rational& angle);
  // a + b i; the order must be divisible by 4.
  static Cyclotomic gaussian(int order, const Rational& re, const Rational& im);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws std::logic_error unless is_rational().
  Rational rational_value() const;

  Cyclotomic conj() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  // Q-linear matrix (degree x degree) of multiplication by zeta^power.
  static std::vector<std::vector<Rational>> rotation_matrix(int order, int power);

 private:
  void check_order(const Cyclotomic& o) const;

  int order_;
  std::vector<Rational> coeffs_;
};

// Euler phi.
int euler_phi(int m);
// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int m);

}  // namespace sfi
