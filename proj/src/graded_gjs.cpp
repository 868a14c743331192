#include "sfi/graded_gjs.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfi::gjs {

using tl::BoundaryPos;
using tl::PlanarPairing;
using tl::TLMorphism;

GradedElement::GradedElement(const TLMorphism& component) { add(component); }

GradedElement GradedElement::unit() {
  return GradedElement(TLMorphism(PlanarPairing(0, 0, {})));
}

TLMorphism GradedElement::component(int n) const {
  const auto it = components_.find(n);
  return it == components_.end() ? TLMorphism(n, 0) : it->second;
}

void GradedElement::add(const TLMorphism& component) {
  if (component.dst_count() != 0) throw std::invalid_argument("graded element: components must be n -> 0");
  const int n = component.src_count();
  auto it = components_.find(n);
  if (it == components_.end()) {
    if (!component.is_zero()) components_.emplace(n, component);
    return;
  }
  it->second += component;
  if (it->second.is_zero()) components_.erase(it);
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  for (const auto& [n, c] : o.components_) add(c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  for (const auto& [n, c] : o.components_) add(Rational(-1) * c);
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    components_.clear();
    return *this;
  }
  for (auto& [n, c] : components_) c *= s;
  return *this;
}

GradedElement cup2() { return GradedElement(TLMorphism::cup()); }

PlanarPairing mirror(const PlanarPairing& p) {
  if (p.dst_count() != 0) throw std::invalid_argument("mirror: expected an n -> 0 pairing");
  const int n = p.src_count();
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs;
  for (const auto& [a, b] : p.pairs())
    arcs.push_back({BoundaryPos{false, n - 1 - a}, BoundaryPos{false, n - 1 - b}});
  return PlanarPairing::from_positions(n, 0, arcs);
}

namespace {

// 0 -> 2j with point t joined to point 2j-1-t.
TLMorphism nested_caps(int j) {
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs;
  for (int t = 0; t < j; ++t) arcs.push_back({{true, t}, {true, 2 * j - 1 - t}});
  return TLMorphism(PlanarPairing::from_positions(0, 2 * j, arcs));
}

}  // namespace

GradedElement GradedAlgebra::product(const GradedElement& x, const GradedElement& y) const {
  GradedElement out;
  for (const auto& [m, xm] : x.components()) {
    for (const auto& [n, yn] : y.components()) {
      const TLMorphism side_by_side = tensor(xm, yn);
      for (int j = 0; j <= std::min(m, n); ++j) {
        const TLMorphism join =
            tensor(tensor(TLMorphism::identity(m - j), nested_caps(j)), TLMorphism::identity(n - j));
        out.add(category_.compose(side_by_side, join));
      }
    }
  }
  return out;
}

Rational GradedAlgebra::trace(const GradedElement& x) const {
  const TLMorphism scalar = x.component(0);
  return scalar.is_zero() ? Rational(0) : scalar.terms().begin()->second;
}

GradedElement GradedAlgebra::star(const GradedElement& x) const {
  GradedElement out;
  for (const auto& [n, c] : x.components()) {
    TLMorphism mirrored(n, 0);
    for (const auto& [p, coeff] : c.terms()) mirrored.add_term(mirror(p), coeff);
    out.add(mirrored);
  }
  return out;
}

std::vector<PlanarPairing> GradedAlgebra::basis(int max_degree) const {
  std::vector<PlanarPairing> out;
  for (int n = 0; n <= max_degree; n += 2) {
    auto level = tl::enumerate_pairings(n, 0);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

RationalMatrix GradedAlgebra::gram_matrix(int max_degree, int degree_cap) const {
  if (max_degree < 0) throw std::invalid_argument("gram_matrix: negative degree");
  if (max_degree > degree_cap)
    throw std::invalid_argument("gram_matrix: degree " + std::to_string(max_degree) + " exceeds cap " +
                                std::to_string(degree_cap));
  const auto b = basis(max_degree);
  RationalMatrix g(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const GradedElement xi{TLMorphism(b[i])};
    for (std::size_t j = 0; j < b.size(); ++j) {
      const GradedElement yj{TLMorphism(b[j])};
      g(i, j) = trace(product(star(yj), xi));
    }
  }
  return g;
}

}  // namespace sfi::gjs
