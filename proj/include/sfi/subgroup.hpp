#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sfi/rational.hpp"

namespace sfi {

// Pairwise coprime integers > 1 such that every input (> 0) is a product
// of their powers. Obtained by gcd refinement, no factoring needed.
std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& values);

// Finitely generated subgroup of the positive rationals under multiplication.
//
// Generators are mapped to integer exponent vectors over a coprime base; the
// Hermite normal form of those vectors is the canonical lattice. A lattice of
// rank >= 2 has dense image in the positive reals.
class PositiveRationalGroup {
 public:
  PositiveRationalGroup() = default;
  // Throws std::invalid_argument for non-positive generators.
  explicit PositiveRationalGroup(std::vector<Rational> generators);

  const std::vector<Rational>& generators() const { return generators_; }
  std::size_t rank() const { return rank_; }
  bool is_trivial() const { return rank_ == 0; }
  // For rank 1, the generator lying in (0, 1).
  std::optional<Rational> cyclic_generator() const { return cyclic_; }
  // Reduced generating set read off the lattice basis.
  std::vector<Rational> basis() const { return basis_; }

  bool contains(const Rational& x) const;
  bool contains(const PositiveRationalGroup& other) const;
  friend bool operator==(const PositiveRationalGroup& a, const PositiveRationalGroup& b) {
    return a.contains(b) && b.contains(a);
  }

 private:
  std::vector<Rational> generators_;
  std::size_t rank_ = 0;
  std::optional<Rational> cyclic_;
  std::vector<Rational> basis_;
};

using IntegerRows = std::vector<std::vector<mpz_class>>;

// Row-style Hermite normal form; zero rows dropped, pivots positive,
// entries above pivots reduced into [0, pivot).
IntegerRows hermite_normal_form(IntegerRows rows);

}  // namespace sfi
