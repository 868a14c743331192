#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sfi/fair_graph.hpp"
#include "sfi/matrix.hpp"
#include "sfi/rational.hpp"
#include "sfi/temperley_lieb.hpp"

namespace sfi {

// Based loop: edge indices into FairGraph::edges(), starting and ending at
// the base vertex. The empty loop is allowed.
struct Loop {
  std::size_t base = 0;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

// Homogeneous rational combination of loops of one length at one base.
class LoopVector {
 public:
  LoopVector(std::size_t base, int degree) : base_(base), degree_(degree) {}
  static LoopVector basis(const Loop& loop, const Rational& c = Rational(1));

  std::size_t base() const { return base_; }
  int degree() const { return degree_; }
  const std::map<std::vector<std::size_t>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const std::vector<std::size_t>& edges) const;

  void add_term(const std::vector<std::size_t>& edges, const Rational& c);

  LoopVector& operator+=(const LoopVector& o);
  LoopVector& operator-=(const LoopVector& o);
  LoopVector& operator*=(const Rational& s);
  friend LoopVector operator+(LoopVector a, const LoopVector& b) { return a += b; }
  friend LoopVector operator-(LoopVector a, const LoopVector& b) { return a -= b; }
  friend LoopVector operator*(const Rational& s, LoopVector a) { return a *= s; }
  friend bool operator==(const LoopVector&, const LoopVector&) = default;

 private:
  void check_compatible(const LoopVector& o) const;

  std::size_t base_;
  int degree_;
  std::map<std::vector<std::size_t>, Rational> terms_;
};

// The connected algebra object A_v of a fair and balanced graph at a basepoint:
// degree-n space spanned by length-n loops at v, with the cup/cap action,
// concatenation product and weighted reversal as star.
class LoopAlgebra {
 public:
  LoopAlgebra(FairGraph graph, std::size_t basepoint);
  // Throws std::invalid_argument for an unknown basepoint id.
  static LoopAlgebra at(FairGraph graph, std::string_view basepoint);

  LoopAlgebra(LoopAlgebra&&) noexcept;
  LoopAlgebra& operator=(LoopAlgebra&&) noexcept;
  ~LoopAlgebra();

  const FairGraph& graph() const { return graph_; }
  std::size_t basepoint() const { return base_; }
  const Rational& delta() const { return graph_.delta(); }
  const tl::Category& category() const;

  // All loops of length n at the basepoint, lexicographic in edge id. Cached.
  const std::vector<Loop>& loops(int n) const;
  std::size_t loop_count(int n) const { return loops(n).size(); }
  // Position of a loop within loops(loop.length()).
  std::size_t index_of(const std::vector<std::size_t>& edges) const;

  bool is_loop(const Loop& loop) const;
  Rational loop_weight(const Loop& loop) const;
  Rational loop_half_weight(const Loop& loop) const;
  Loop reversed(const Loop& loop) const;
  std::string describe(const Loop& loop) const;

  // Deletes positions i, i+1 (1-based) when e_{i+1} is the reverse of e_i,
  // with factor w(e_i).
  LoopVector cup(int i, const LoopVector& x) const;
  // Inserts e, ebar after position i (0 <= i <= n) for each edge e leaving the
  // vertex reached at position i, with factor w(e).
  LoopVector cap(int i, const LoopVector& x) const;

  // Action of a Temperley-Lieb morphism n -> m through a cup/cap word.
  LoopVector tl_act(const tl::TLMorphism& f, const LoopVector& x) const;
  // Matrix of tl_act(f) in the loop bases (columns: degree src, rows: degree dst).
  RationalMatrix operator_matrix(const tl::TLMorphism& f) const;

  LoopVector multiply(const LoopVector& x, const LoopVector& y) const;
  LoopVector star(const LoopVector& x) const;

  // dim A(f^(k)) as the exact rank of the Jones-Wenzl action on degree k.
  std::size_t isotypic_dim(int k) const;

 private:
  struct Cache;
  LoopVector act_pairing(const tl::PlanarPairing& p, const LoopVector& x) const;
  void check_vector(const LoopVector& x) const;

  FairGraph graph_;
  std::size_t base_;
  std::vector<int> distance_to_base_;
  std::unique_ptr<Cache> cache_;
};

// TL branching multiplicity: mult(0,0) = 1, mult(n,k) = mult(n-1,k-1) + mult(n-1,k+1).
long branching_multiplicity(int n, int k);

}  // namespace sfi
