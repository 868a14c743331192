#include "sfi/temperley_lieb.hpp"

#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sfi::tl {

PlanarPairing::PlanarPairing(int src_count, int dst_count, std::vector<int> partner)
    : src_(src_count), dst_(dst_count), partner_(std::move(partner)) {
  if (src_ < 0 || dst_ < 0) throw std::invalid_argument("pairing: negative point count");
  if ((src_ + dst_) % 2 != 0) throw std::invalid_argument("pairing: odd number of boundary points");
  if (static_cast<int>(partner_.size()) != src_ + dst_)
    throw std::invalid_argument("pairing: partner table has the wrong size");
  for (int p = 0; p < size(); ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= size() || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw std::invalid_argument("pairing: not a perfect matching");
  }
  if (!is_noncrossing()) throw std::invalid_argument("pairing: arcs cross");
}

PlanarPairing PlanarPairing::from_positions(
    int src_count, int dst_count, const std::vector<std::pair<BoundaryPos, BoundaryPos>>& arcs) {
  PlanarPairing shape(Unchecked{}, src_count, dst_count, {});
  std::vector<int> partner(static_cast<std::size_t>(src_count + dst_count), -1);
  for (const auto& [a, b] : arcs) {
    const int pa = shape.point_of(a);
    const int pb = shape.point_of(b);
    if (pa < 0 || pa >= shape.size() || pb < 0 || pb >= shape.size())
      throw std::invalid_argument("pairing: boundary position out of range");
    partner[static_cast<std::size_t>(pa)] = pb;
    partner[static_cast<std::size_t>(pb)] = pa;
  }
  return PlanarPairing(src_count, dst_count, std::move(partner));
}

bool PlanarPairing::is_noncrossing() const {
  std::vector<int> open;
  for (int p = 0; p < size(); ++p) {
    const int q = partner(p);
    if (q > p) {
      open.push_back(p);
    } else {
      if (open.empty() || open.back() != q) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

std::vector<std::pair<int, int>> PlanarPairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < size(); ++p)
    if (partner(p) > p) out.emplace_back(p, partner(p));
  return out;
}

int PlanarPairing::through_strands() const {
  int count = 0;
  for (int p = 0; p < src_; ++p)
    if (partner(p) >= src_) ++count;
  return count;
}

std::string PlanarPairing::to_string() const {
  std::string s = std::to_string(src_) + "->" + std::to_string(dst_) + " ";
  for (int p = 0; p < size(); ++p) {
    if (p == src_ && src_ != 0) s += '|';
    s += partner(p) > p ? '(' : ')';
  }
  return s;
}

PlanarPairing compose_pairings(const PlanarPairing& f, const PlanarPairing& g, int& loops) {
  if (f.src_count() != g.dst_count()) throw std::invalid_argument("compose: arity mismatch");
  const int n = g.src_count();
  const int m = g.dst_count();
  const int k = f.dst_count();
  PlanarPairing shape(PlanarPairing::Unchecked{}, n, k, {});
  std::vector<int> partner(static_cast<std::size_t>(n + k), -1);
  std::vector<bool> middle_seen(static_cast<std::size_t>(m), false);

  // Follows a strand that enters g at `pos`, bouncing through the middle row
  // until it exits at the bottom of g or the top of f.
  auto exit_from_g = [&](BoundaryPos pos) -> BoundaryPos {
    for (;;) {
      const BoundaryPos q = g.partner_of(pos);
      if (!q.top) return q;
      middle_seen[static_cast<std::size_t>(q.index)] = true;
      const BoundaryPos r = f.partner_of(BoundaryPos{false, q.index});
      if (r.top) return r;
      middle_seen[static_cast<std::size_t>(r.index)] = true;
      pos = BoundaryPos{true, r.index};
    }
  };
  auto exit_from_f = [&](BoundaryPos pos) -> BoundaryPos {
    const BoundaryPos r = f.partner_of(pos);
    if (r.top) return r;
    middle_seen[static_cast<std::size_t>(r.index)] = true;
    return exit_from_g(BoundaryPos{true, r.index});
  };
  auto link = [&](BoundaryPos a, BoundaryPos b) {
    const int pa = shape.point_of(a);
    const int pb = shape.point_of(b);
    partner[static_cast<std::size_t>(pa)] = pb;
    partner[static_cast<std::size_t>(pb)] = pa;
  };

  for (int i = 0; i < n; ++i) {
    const BoundaryPos start{false, i};
    if (partner[static_cast<std::size_t>(shape.point_of(start))] >= 0) continue;
    link(start, exit_from_g(start));
  }
  for (int l = 0; l < k; ++l) {
    const BoundaryPos start{true, l};
    if (partner[static_cast<std::size_t>(shape.point_of(start))] >= 0) continue;
    link(start, exit_from_f(start));
  }

  loops = 0;
  for (int j = 0; j < m; ++j) {
    if (middle_seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    int cur = j;
    do {
      middle_seen[static_cast<std::size_t>(cur)] = true;
      const BoundaryPos below = g.partner_of(BoundaryPos{true, cur});
      assert(below.top);
      middle_seen[static_cast<std::size_t>(below.index)] = true;
      const BoundaryPos above = f.partner_of(BoundaryPos{false, below.index});
      assert(!above.top);
      cur = above.index;
    } while (cur != j);
  }

  PlanarPairing out(PlanarPairing::Unchecked{}, n, k, std::move(partner));
  assert(out.is_noncrossing());
  return out;
}

PlanarPairing tensor_pairings(const PlanarPairing& f, const PlanarPairing& g) {
  const int n1 = f.src_count();
  const int m1 = f.dst_count();
  PlanarPairing shape(PlanarPairing::Unchecked{}, n1 + g.src_count(), m1 + g.dst_count(), {});
  std::vector<int> partner(static_cast<std::size_t>(shape.size()), -1);
  auto place = [&](const PlanarPairing& part, int bottom_offset, int top_offset) {
    for (int p = 0; p < part.size(); ++p) {
      const BoundaryPos a = part.pos_of(p);
      const BoundaryPos b = part.pos_of(part.partner(p));
      const BoundaryPos sa{a.top, a.index + (a.top ? top_offset : bottom_offset)};
      const BoundaryPos sb{b.top, b.index + (b.top ? top_offset : bottom_offset)};
      partner[static_cast<std::size_t>(shape.point_of(sa))] = shape.point_of(sb);
    }
  };
  place(f, 0, 0);
  place(g, n1, m1);
  return PlanarPairing(PlanarPairing::Unchecked{}, shape.src_count(), shape.dst_count(),
                       std::move(partner));
}

PlanarPairing star_pairing(const PlanarPairing& p) {
  PlanarPairing shape(PlanarPairing::Unchecked{}, p.dst_count(), p.src_count(), {});
  std::vector<int> partner(static_cast<std::size_t>(p.size()), -1);
  auto flip = [](BoundaryPos b) { return BoundaryPos{!b.top, b.index}; };
  for (int x = 0; x < p.size(); ++x) {
    const BoundaryPos a = flip(p.pos_of(x));
    const BoundaryPos b = flip(p.pos_of(p.partner(x)));
    partner[static_cast<std::size_t>(shape.point_of(a))] = shape.point_of(b);
  }
  return PlanarPairing(PlanarPairing::Unchecked{}, shape.src_count(), shape.dst_count(),
                       std::move(partner));
}

std::vector<PlanarPairing> enumerate_pairings(int src_count, int dst_count) {
  std::vector<PlanarPairing> out;
  const int total = src_count + dst_count;
  if (src_count < 0 || dst_count < 0 || total % 2 != 0) return out;
  std::vector<int> partner(static_cast<std::size_t>(total), -1);

  // Matches the first unmatched point, scanning partners left to right.
  std::function<void(int)> fill = [&](int from) {
    int p = from;
    while (p < total && partner[static_cast<std::size_t>(p)] >= 0) ++p;
    if (p == total) {
      out.push_back(PlanarPairing(PlanarPairing::Unchecked{}, src_count, dst_count, partner));
      return;
    }
    // Points strictly between p and its partner must pair among themselves,
    // so the partner sits an odd distance away within the current free run.
    for (int q = p + 1; q < total; q += 2) {
      if (partner[static_cast<std::size_t>(q)] >= 0) break;
      bool inner_free = true;
      for (int x = p + 1; x < q; ++x)
        if (partner[static_cast<std::size_t>(x)] >= 0) inner_free = false;
      if (!inner_free) break;
      partner[static_cast<std::size_t>(p)] = q;
      partner[static_cast<std::size_t>(q)] = p;
      fill(p + 1);
      partner[static_cast<std::size_t>(p)] = -1;
      partner[static_cast<std::size_t>(q)] = -1;
    }
  };
  fill(0);
  return out;
}

TLMorphism::TLMorphism(const PlanarPairing& p, const Rational& coefficient)
    : src_(p.src_count()), dst_(p.dst_count()) {
  add_term(p, coefficient);
}

TLMorphism TLMorphism::identity(int n) {
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({{false, i}, {true, i}});
  return TLMorphism(PlanarPairing::from_positions(n, n, arcs));
}

TLMorphism TLMorphism::cup() {
  return TLMorphism(PlanarPairing::from_positions(2, 0, {{{false, 0}, {false, 1}}}));
}

TLMorphism TLMorphism::cap() {
  return TLMorphism(PlanarPairing::from_positions(0, 2, {{{true, 0}, {true, 1}}}));
}

Rational TLMorphism::coefficient(const PlanarPairing& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TLMorphism::add_term(const PlanarPairing& p, const Rational& c) {
  if (p.src_count() != src_ || p.dst_count() != dst_)
    throw std::invalid_argument("TL morphism: term has the wrong boundary counts");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLMorphism& TLMorphism::operator+=(const TLMorphism& o) {
  if (o.src_ != src_ || o.dst_ != dst_) throw std::invalid_argument("TL sum: arity mismatch");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

TLMorphism& TLMorphism::operator-=(const TLMorphism& o) {
  if (o.src_ != src_ || o.dst_ != dst_) throw std::invalid_argument("TL difference: arity mismatch");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

TLMorphism& TLMorphism::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

std::string TLMorphism::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[" << p.to_string() << "]";
  }
  return os.str();
}

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
  TLMorphism out(f.src_count() + g.src_count(), f.dst_count() + g.dst_count());
  for (const auto& [pf, cf] : f.terms())
    for (const auto& [pg, cg] : g.terms()) out.add_term(tensor_pairings(pf, pg), cf * cg);
  return out;
}

TLMorphism star(const TLMorphism& f) {
  TLMorphism out(f.dst_count(), f.src_count());
  for (const auto& [p, c] : f.terms()) out.add_term(star_pairing(p), c);
  return out;
}

TLMorphism generator(int i, int n) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs;
  for (int k = 0; k < n; ++k)
    if (k != i - 1 && k != i) arcs.push_back({{false, k}, {true, k}});
  arcs.push_back({{false, i - 1}, {false, i}});
  arcs.push_back({{true, i - 1}, {true, i}});
  return TLMorphism(PlanarPairing::from_positions(n, n, arcs));
}

TLMorphism cup_at(int i, int n) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("cup index out of range");
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs;
  arcs.push_back({{false, i - 1}, {false, i}});
  for (int k = 0, t = 0; k < n; ++k)
    if (k != i - 1 && k != i) arcs.push_back({{false, k}, {true, t++}});
  return TLMorphism(PlanarPairing::from_positions(n, n - 2, arcs));
}

TLMorphism cap_at(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("cap index out of range");
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs;
  arcs.push_back({{true, i}, {true, i + 1}});
  for (int k = 0; k < n; ++k) arcs.push_back({{false, k}, {true, k < i ? k : k + 2}});
  return TLMorphism(PlanarPairing::from_positions(n, n + 2, arcs));
}

TLMorphism Category::compose(const TLMorphism& f, const TLMorphism& g) const {
  if (f.src_count() != g.dst_count()) throw std::invalid_argument("compose: arity mismatch");
  TLMorphism out(g.src_count(), f.dst_count());
  for (const auto& [pf, cf] : f.terms()) {
    for (const auto& [pg, cg] : g.terms()) {
      int loops = 0;
      PlanarPairing p = compose_pairings(pf, pg, loops);
      out.add_term(p, cf * cg * delta_.pow(loops));
    }
  }
  return out;
}

Rational Category::markov_trace(const TLMorphism& f) const {
  if (f.src_count() != f.dst_count()) throw std::invalid_argument("trace of a non-square morphism");
  const int n = f.src_count();
  Rational total;
  for (const auto& [p, c] : f.terms()) {
    // Close bottom i to top i on the right and count cycles.
    std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
    int loops = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++loops;
      int cur = start;
      do {
        seen[static_cast<std::size_t>(cur)] = true;
        const int other = p.partner(cur);
        seen[static_cast<std::size_t>(other)] = true;
        const BoundaryPos pos = p.pos_of(other);
        cur = p.point_of(BoundaryPos{!pos.top, pos.index});
      } while (cur != start);
    }
    total += c * delta_.pow(loops);
  }
  return total;
}

namespace {

// 0 -> 2n, point i joined to point 2n-1-i.
TLMorphism nested_caps(int n) {
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({{true, i}, {true, 2 * n - 1 - i}});
  return TLMorphism(PlanarPairing::from_positions(0, 2 * n, arcs));
}

TLMorphism nested_cups(int n) { return star(nested_caps(n)); }

Rational scalar_of(const TLMorphism& f) {
  return f.is_zero() ? Rational(0) : f.terms().begin()->second;
}

}  // namespace

Rational Category::right_trace(const TLMorphism& f) const {
  if (f.src_count() != f.dst_count()) throw std::invalid_argument("trace of a non-square morphism");
  const int n = f.src_count();
  const TLMorphism middle = compose(tensor(f, TLMorphism::identity(n)), nested_caps(n));
  return scalar_of(compose(nested_cups(n), middle));
}

Rational Category::left_trace(const TLMorphism& f) const {
  if (f.src_count() != f.dst_count()) throw std::invalid_argument("trace of a non-square morphism");
  const int n = f.src_count();
  const TLMorphism middle = compose(tensor(TLMorphism::identity(n), f), nested_caps(n));
  return scalar_of(compose(nested_cups(n), middle));
}

TLMorphism Category::jones_wenzl(int n) const {
  if (n < 1) throw std::invalid_argument("jones_wenzl: n must be at least 1");
  std::lock_guard<std::mutex> lock(jw_mutex_);
  if (jw_cache_.empty()) jw_cache_.push_back(TLMorphism::identity(1));
  while (static_cast<int>(jw_cache_.size()) < n) {
    const int k = static_cast<int>(jw_cache_.size());  // cached f(k), building f(k+1)
    const Rational qk = quantum_int(k);
    const Rational qk1 = quantum_int(k + 1);
    if (qk1.is_zero()) throw std::domain_error("jones_wenzl: quantum integer vanishes");
    const TLMorphism lifted = tensor(jw_cache_.back(), TLMorphism::identity(1));
    const TLMorphism sandwich = compose(lifted, compose(generator(k, k + 1), lifted));
    jw_cache_.push_back(lifted - (qk / qk1) * sandwich);
  }
  return jw_cache_[static_cast<std::size_t>(n - 1)];
}

}  // namespace sfi::tl
