#include "sfi/rational.hpp"

#include <cctype>

namespace sfi {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class v(n, d);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpq_class result(1);
  mpq_class base = value_;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return Rational(std::move(result));
}

BaseParam BaseParam::from_r(const Rational& r) {
  if (r.sign() <= 0) throw std::invalid_argument("half-weight base r must be positive");
  BaseParam p;
  p.r_ = r;
  const Rational q = r * r;
  p.delta_ = q + q.inverse();
  return p;
}

BaseParam BaseParam::from_delta(const Rational& delta) {
  if (delta.sign() <= 0) throw std::invalid_argument("loop parameter delta must be positive");
  BaseParam p;
  p.delta_ = delta;
  return p;
}

Rational BaseParam::q() const {
  if (!r_) throw std::logic_error("q is not rational for a delta-only parameter");
  return *r_ * *r_;
}

BaseParam::Regime BaseParam::regime() const {
  return delta_ == Rational(2) ? Regime::critical : Regime::generic;
}

Rational quantum_int_from_delta(int n, const Rational& delta) {
  if (n < 0) throw std::invalid_argument("quantum_int: n must be non-negative");
  Rational prev(0);
  Rational cur(1);
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Rational next = delta * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational quantum_int(int n, const BaseParam& p) {
  if (n < 0) throw std::invalid_argument("quantum_int: n must be non-negative");
  if (!p.has_r()) return quantum_int_from_delta(n, p.delta());
  const Rational q = p.q();
  if (q == Rational(1)) return Rational(n);
  return (q.pow(n) - q.pow(-n)) / (q - q.inverse());
}

Rational delta_power(int n, const BaseParam& p) {
  if (n < 0) throw std::invalid_argument("delta_power: n must be non-negative");
  return p.delta().pow(n);
}

}  // namespace sfi
