#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfi/loop_algebra.hpp"
#include "sfi/matrix.hpp"
#include "sfi/rational.hpp"
#include "sfi/subgroup.hpp"

namespace sfi {

// Inner products and the modular operator

// Closed form <x|y>_n = sum_l x_l y_l / W(l).
Rational right_inner_diagonal(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y);
// Nested cups applied to star(x) * y; the empty-loop coefficient.
Rational right_inner_structural(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y);
// Both routes; throws std::logic_error if they disagree.
Rational right_inner(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y);

// Closed form _n<x, y> = sum_l x_l y_l.
Rational left_inner_diagonal(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y);
// Nested cups applied to x * star(y).
Rational left_inner_structural(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y);
Rational left_inner(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y);

// Eigenvalues W(l) of the modular operator, in loop enumeration order.
std::vector<Rational> modular_diagonal(const LoopAlgebra& a, int n);
RationalMatrix modular_operator(const LoopAlgebra& a, int n);
// Delta recovered from the structural Gram matrices via
// left(x, y) = right(y, Delta x), without using loop weights.
RationalMatrix modular_operator_structural(const LoopAlgebra& a, int n);

struct TraceBounds {
  int n = 0;
  Rational trace;          // Tr Delta_n
  Rational inverse_trace;  // Tr Delta_n^{-1}
  Rational bound;          // delta^n
  bool pass = false;
};

TraceBounds trace_bounds(const LoopAlgebra& a, int n);

// Modular spectrum

struct SpectrumWitness {
  std::string label;
  Rational weight;
};

// Positive part of the modular spectrum as a subgroup of the positive reals.
struct SpectrumDescriptor {
  enum class Kind { trivial, cyclic, dense };
  Kind kind = Kind::trivial;
  // In (0, 1) when cyclic.
  std::optional<Rational> lambda;
  std::size_t rank = 0;
  std::vector<SpectrumWitness> witness;
  std::vector<std::string> warnings;
  PositiveRationalGroup group;

  std::string summary() const;
};

std::string to_string(SpectrumDescriptor::Kind kind);

SpectrumDescriptor describe_group(PositiveRationalGroup group, std::vector<SpectrumWitness> witness);

struct FundamentalCycle {
  // Representative edge of the non-tree involution pair.
  std::size_t edge = 0;
  Loop loop;
  Rational weight;
};

// Spanning tree of the basepoint's component (involution pairs as undirected
// edges) and the fundamental cycles of the non-tree pairs.
struct CycleBasis {
  std::vector<FundamentalCycle> cycles;
  // W of the tree path from the basepoint; only meaningful inside the component.
  std::vector<Rational> potential;
  std::vector<bool> in_component;
  // Per edge: index into cycles for non-tree pairs, or -1 for tree pairs.
  std::vector<int> cycle_of_edge;
  // Per edge: +1 if it is the cycle representative, -1 if it is its reverse.
  std::vector<int> orientation;
};

CycleBasis fundamental_cycle_basis(const LoopAlgebra& a);

// Net traversal count of each fundamental cycle along a loop.
std::vector<long> cycle_coordinates(const CycleBasis& basis, const Loop& loop);

// Generators are the fundamental-cycle weights of the basepoint component.
SpectrumDescriptor spectrum_exact(const LoopAlgebra& a);

// Subgroup generated by all loop weights up to max_len, collected by a
// per-vertex dynamic program over reachable path weights.
SpectrumDescriptor spectrum_bruteforce(const LoopAlgebra& a, int max_len);

struct FactorType {
  enum class Kind { II1, III_lambda, III1 };
  Kind kind = Kind::II1;
  std::optional<Rational> lambda;

  std::string to_string() const;
  friend bool operator==(const FactorType&, const FactorType&) = default;
};

FactorType classify_type(const SpectrumDescriptor& s);

bool is_tracial(const LoopAlgebra& a);

struct QuantumGroupSpectrum {
  SpectrumDescriptor spectrum;
  bool kac = false;
};

// Spectrum generated by the eigenvalues of F*F. Throws std::invalid_argument
// unless sum(eigs) == sum(1/eigs) and every eigenvalue is positive.
QuantumGroupSpectrum qg_spectrum(const std::vector<Rational>& eigenvalues);

}  // namespace sfi
