#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sfi/rational.hpp"

namespace sfi::tl {

// A boundary point of a rectangle diagram: bottom (source) or top (target),
// indexed left to right.
struct BoundaryPos {
  bool top = false;
  int index = 0;
  friend bool operator==(const BoundaryPos&, const BoundaryPos&) = default;
};

// Noncrossing perfect matching between src_count bottom points and
// dst_count top points.
//
// Points are numbered counterclockwise from the bottom-left corner: bottom
// points 0..src-1 left to right, then top points right to left. In that
// cyclic order noncrossing is the usual nesting condition.
class PlanarPairing {
 public:
  PlanarPairing() = default;
  // Validates evenness and planarity; throws std::invalid_argument.
  PlanarPairing(int src_count, int dst_count, std::vector<int> partner);
  static PlanarPairing from_positions(int src_count, int dst_count,
                                      const std::vector<std::pair<BoundaryPos, BoundaryPos>>& arcs);

  int src_count() const { return src_; }
  int dst_count() const { return dst_; }
  int size() const { return src_ + dst_; }

  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  int point_of(BoundaryPos pos) const { return pos.top ? src_ + dst_ - 1 - pos.index : pos.index; }
  BoundaryPos pos_of(int point) const {
    return point < src_ ? BoundaryPos{false, point} : BoundaryPos{true, src_ + dst_ - 1 - point};
  }
  BoundaryPos partner_of(BoundaryPos pos) const { return pos_of(partner(point_of(pos))); }

  // Canonical sorted pair list (each pair (a, b) with a < b).
  std::vector<std::pair<int, int>> pairs() const;
  int through_strands() const;
  // Nested-parenthesis rendering of the cyclic point sequence, e.g. "2->2 (())".
  std::string to_string() const;

  friend bool operator==(const PlanarPairing&, const PlanarPairing&) = default;
  friend auto operator<=>(const PlanarPairing& a, const PlanarPairing& b) {
    if (auto c = a.src_ <=> b.src_; c != 0) return c;
    if (auto c = a.dst_ <=> b.dst_; c != 0) return c;
    return a.partner_ <=> b.partner_;
  }

 private:
  struct Unchecked {};
  PlanarPairing(Unchecked, int src_count, int dst_count, std::vector<int> partner)
      : src_(src_count), dst_(dst_count), partner_(std::move(partner)) {}
  bool is_noncrossing() const;

  friend PlanarPairing compose_pairings(const PlanarPairing&, const PlanarPairing&, int&);
  friend PlanarPairing tensor_pairings(const PlanarPairing&, const PlanarPairing&);
  friend PlanarPairing star_pairing(const PlanarPairing&);
  friend std::vector<PlanarPairing> enumerate_pairings(int, int);

  int src_ = 0;
  int dst_ = 0;
  std::vector<int> partner_;
};

// Stacks f (m -> k) on top of g (n -> m); loops receives the number of
// closed components formed in the middle.
PlanarPairing compose_pairings(const PlanarPairing& f, const PlanarPairing& g, int& loops);
PlanarPairing tensor_pairings(const PlanarPairing& f, const PlanarPairing& g);
// Vertical reflection.
PlanarPairing star_pairing(const PlanarPairing& p);

// All noncrossing pairings src -> dst in a fixed deterministic order.
// Empty when src + dst is odd. The count is Catalan((src + dst) / 2).
std::vector<PlanarPairing> enumerate_pairings(int src_count, int dst_count);

// Rational linear combination of pairings sharing src/dst counts; zero
// coefficients are never stored.
class TLMorphism {
 public:
  TLMorphism(int src_count, int dst_count) : src_(src_count), dst_(dst_count) {}
  explicit TLMorphism(const PlanarPairing& p, const Rational& coefficient = Rational(1));

  static TLMorphism identity(int n);
  // The 2 -> 0 turn-back.
  static TLMorphism cup();
  // The 0 -> 2 turn-back.
  static TLMorphism cap();

  int src_count() const { return src_; }
  int dst_count() const { return dst_; }
  const std::map<PlanarPairing, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const PlanarPairing& p) const;

  void add_term(const PlanarPairing& p, const Rational& c);

  TLMorphism& operator+=(const TLMorphism& o);
  TLMorphism& operator-=(const TLMorphism& o);
  TLMorphism& operator*=(const Rational& s);
  friend TLMorphism operator+(TLMorphism a, const TLMorphism& b) { return a += b; }
  friend TLMorphism operator-(TLMorphism a, const TLMorphism& b) { return a -= b; }
  friend TLMorphism operator*(const Rational& s, TLMorphism a) { return a *= s; }
  friend bool operator==(const TLMorphism&, const TLMorphism&) = default;

  std::string to_string() const;

 private:
  int src_;
  int dst_;
  std::map<PlanarPairing, Rational> terms_;
};

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g);
TLMorphism star(const TLMorphism& f);

// e_i in End(n), 1 <= i <= n-1: turn-backs at positions i, i+1 top and bottom.
TLMorphism generator(int i, int n);
// n -> n-2 joining source positions i, i+1 (1-based).
TLMorphism cup_at(int i, int n);
// n -> n+2 inserting an arc after target position i (0 <= i <= n).
TLMorphism cap_at(int i, int n);

// Temperley-Lieb-Jones category at loop value delta. Owns the Jones-Wenzl
// cache, which is safe for concurrent use.
class Category {
 public:
  explicit Category(Rational delta) : delta_(std::move(delta)) {}
  Category(const Category& o) : delta_(o.delta_) {}
  Category& operator=(const Category&) = delete;

  const Rational& delta() const { return delta_; }

  // f after g; throws std::invalid_argument on arity mismatch.
  TLMorphism compose(const TLMorphism& f, const TLMorphism& g) const;
  // Right closure by direct loop count.
  Rational markov_trace(const TLMorphism& f) const;
  // Closures built from nested caps and cups around f (f on the left / right).
  Rational right_trace(const TLMorphism& f) const;
  Rational left_trace(const TLMorphism& f) const;

  Rational quantum_int(int n) const { return quantum_int_from_delta(n, delta_); }

  // Memoized Wenzl recursion; throws std::domain_error if a quantum integer vanishes.
  TLMorphism jones_wenzl(int n) const;

 private:
  Rational delta_;
  mutable std::mutex jw_mutex_;
  mutable std::vector<TLMorphism> jw_cache_;
};

}  // namespace sfi::tl
