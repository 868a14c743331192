#pragma once

#include <map>
#include <vector>

#include "sfi/matrix.hpp"
#include "sfi/rational.hpp"
#include "sfi/temperley_lieb.hpp"

namespace sfi::gjs {

// Element of Gr(TLJ) = sum_n TLJ_n, with each n-box drawn as an n -> 0
// morphism (strings hanging downward). Odd degrees are always zero.
class GradedElement {
 public:
  GradedElement() = default;
  explicit GradedElement(const tl::TLMorphism& component);

  static GradedElement unit();

  const std::map<int, tl::TLMorphism>& components() const { return components_; }
  // Zero morphism n -> 0 if absent.
  tl::TLMorphism component(int n) const;
  bool is_zero() const { return components_.empty(); }

  void add(const tl::TLMorphism& component);

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const Rational& s);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const Rational& s, GradedElement a) { return a *= s; }
  friend bool operator==(const GradedElement&, const GradedElement&) = default;

 private:
  std::map<int, tl::TLMorphism> components_;
};

// The unique 2-box, a single arc.
GradedElement cup2();

// Left-right mirror of an n -> 0 pairing.
tl::PlanarPairing mirror(const tl::PlanarPairing& p);

// Graded algebra with the Bacher-Walker product at loop value delta.
class GradedAlgebra {
 public:
  explicit GradedAlgebra(Rational delta) : category_(std::move(delta)) {}

  const Rational& delta() const { return category_.delta(); }

  // sum over j of joining the innermost j right strands of x to the
  // innermost j left strands of y.
  GradedElement product(const GradedElement& x, const GradedElement& y) const;
  // Degree-0 coefficient.
  Rational trace(const GradedElement& x) const;
  // Degreewise mirror reflection.
  GradedElement star(const GradedElement& x) const;

  // Pairing basis of degrees 0, 2, ..., max_degree.
  std::vector<tl::PlanarPairing> basis(int max_degree) const;
  // <x, y> = trace(star(y) * x) on basis(max_degree); throws
  // std::invalid_argument when max_degree exceeds degree_cap.
  RationalMatrix gram_matrix(int max_degree, int degree_cap = 6) const;

 private:
  tl::Category category_;
};

}  // namespace sfi::gjs
