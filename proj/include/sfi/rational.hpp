#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sfi {

// Raised for malformed textual input (rationals, graph files, cocycle files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact rational number in canonical form (reduced, positive denominator).
//
// Serializes as "p/q", or "p" when the value is an integer. Parsing accepts
// exactly that grammar (optional leading '-') and canonicalizes.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  static Rational parse(std::string_view text);
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }
  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  Rational inverse() const;
  Rational pow(int exponent) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

// Loop parameter of the Temperley-Lieb-Jones category.
//
// Either built from the half-weight base r > 0 (q = r^2, delta = q + 1/q),
// or from delta alone for unit-weight graphs where q is not rational.
class BaseParam {
 public:
  enum class Regime { critical, generic };

  static BaseParam from_r(const Rational& r);
  static BaseParam from_delta(const Rational& delta);

  const std::optional<Rational>& r() const { return r_; }
  bool has_r() const { return r_.has_value(); }
  // q = r^2; throws std::logic_error when built from delta alone.
  Rational q() const;
  const Rational& delta() const { return delta_; }
  // critical exactly when delta == 2 (r = 1); generic when delta > 2.
  Regime regime() const;

  friend bool operator==(const BaseParam&, const BaseParam&) = default;

 private:
  std::optional<Rational> r_;
  Rational delta_;
};

// Quantum integer [n] = (q^n - q^-n)/(q - q^-1), with [n] = n at q = 1.
// Without r it uses the recursion [n+1] = delta [n] - [n-1].
Rational quantum_int(int n, const BaseParam& p);

// Chebyshev route for [n] driven by delta only.
Rational quantum_int_from_delta(int n, const Rational& delta);

Rational delta_power(int n, const BaseParam& p);

}  // namespace sfi
