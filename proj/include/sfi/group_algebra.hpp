#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfi/cyclotomic.hpp"
#include "sfi/rational.hpp"

namespace sfi::group {

// Finite group given by its multiplication table over 0..order-1.
// The constructor checks closure, associativity, identity and inverses.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  static FiniteGroup cyclic(int n);
  // Direct product; element (a, b) has index a * |H| + b.
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int inverse(int g) const { return inverse_.at(static_cast<std::size_t>(g)); }
  int mul(int g, int h) const { return table_.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(h)); }
  const std::string& label(int g) const { return labels_.at(static_cast<std::size_t>(g)); }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool is_abelian() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

// Map mu: G x G -> U(1) with values exp(2 pi i angle), angles kept in [0, 1).
class Cocycle2 {
 public:
  Cocycle2(FiniteGroup group, std::vector<std::vector<Rational>> angles);

  static Cocycle2 trivial(FiniteGroup group);
  // mu((a,b),(c,d)) = (-1)^(bc) on Z/2 x Z/2.
  static Cocycle2 pauli();

  const FiniteGroup& group() const { return group_; }
  const Rational& angle(int g, int h) const { return angles_.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(h)); }
  // lcm of 4 and all angle denominators; every value lives in Q(zeta_m).
  int field_order() const { return field_order_; }

 private:
  FiniteGroup group_;
  std::vector<std::vector<Rational>> angles_;
  int field_order_ = 4;
};

// Angle reduced into [0, 1).
Rational reduce_angle(const Rational& a);

struct CocycleFailure {
  enum class Kind { normalization, identity };
  Kind kind;
  int g, h, k;  // k is -1 for normalization failures
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::vector<CocycleFailure> failures;
};

// Checks mu(e,g) = mu(g,e) = 1 and mu(g,h) mu(gh,k) = mu(h,k) mu(g,hk).
ValidationReport validate_cocycle(const Cocycle2& mu);

// Element sum_g c_g u_g with exact cyclotomic coefficients.
class TwistedElement {
 public:
  explicit TwistedElement(int field_order) : order_(field_order) {}

  int field_order() const { return order_; }
  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coefficient(int g) const;
  void add_term(int g, const Cyclotomic& c);
  bool is_zero() const { return terms_.empty(); }

  TwistedElement& operator+=(const TwistedElement& o);
  TwistedElement& operator-=(const TwistedElement& o);
  friend TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
  friend TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a -= b; }
  friend bool operator==(const TwistedElement&, const TwistedElement&) = default;

  std::string to_string() const;

 private:
  int order_;
  std::map<int, Cyclotomic> terms_;
};

struct MuJFailure {
  int g, h;
};

struct PositivityReport {
  bool diagonal = true;
  bool positive_definite = true;
  // G(g, g) for each g, as exact values.
  std::vector<Cyclotomic> diagonal_entries;
};

// Twisted group algebra C_mu[G] with u_g u_h = mu(g,h) u_{gh} and the star
// forced by positivity, (u_g)* = j(g) u_{g^-1} with j(g) = conj(mu(g^-1, g)).
class TwistedAlgebra {
 public:
  // Throws std::invalid_argument if mu fails validation.
  explicit TwistedAlgebra(Cocycle2 mu);

  const Cocycle2& cocycle() const { return mu_; }
  const FiniteGroup& group() const { return mu_.group(); }
  int field_order() const { return mu_.field_order(); }
  int dimension() const { return group().order(); }

  TwistedElement basis(int g) const;
  TwistedElement scalar(const Cyclotomic& c) const;
  Cyclotomic mu_value(int g, int h) const;
  TwistedElement multiply(const TwistedElement& x, const TwistedElement& y) const;

  // Angle of j(g) in [0, 1).
  Rational j_angle(int g) const { return j_angles_.at(static_cast<std::size_t>(g)); }
  Cyclotomic j(int g) const;
  TwistedElement star(const TwistedElement& x) const;
  // Coefficient of u_e.
  Cyclotomic tau(const TwistedElement& x) const;

  // Pairs (g, h) where j(gh) conj(mu(g,h)) != j(g) j(h) mu(h^-1, g^-1).
  std::vector<MuJFailure> mu_j_violations() const;

  // Gram G(g,h) = tau(u_h* u_g). With j_override the star uses those angles
  // in place of the forced ones.
  std::vector<std::vector<Cyclotomic>> gram_matrix(const std::optional<std::vector<Rational>>& j_override = {}) const;
  PositivityReport positivity_check(const std::optional<std::vector<Rational>>& j_override = {}) const;

  // Dimension of the center, from the rational nullspace of x -> [x, u_g].
  int center_dimension() const;
  // Simple block sizes. Known only for abelian groups, where all blocks
  // share one size d with d^2 = |G| / center_dimension.
  std::optional<std::vector<int>> block_dimensions() const;

 private:
  TwistedElement star_with(const TwistedElement& x, const std::vector<Rational>& j_angles) const;

  Cocycle2 mu_;
  std::vector<Rational> j_angles_;
  std::vector<std::vector<Cyclotomic>> mu_values_;
};

// Reads {"group": [[...]], "mu": [["k/m", ...], ...], "labels": [...]?}.
// Angles are rational strings; throws ParseError naming the field.
Cocycle2 read_cocycle(const std::string& path);
Cocycle2 parse_cocycle(const std::string& text);

}  // namespace sfi::group
