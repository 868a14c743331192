#include "sfi/loop_algebra.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace sfi {

LoopVector LoopVector::basis(const Loop& loop, const Rational& c) {
  LoopVector v(loop.base, static_cast<int>(loop.length()));
  v.add_term(loop.edges, c);
  return v;
}

Rational LoopVector::coefficient(const std::vector<std::size_t>& edges) const {
  const auto it = terms_.find(edges);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LoopVector::add_term(const std::vector<std::size_t>& edges, const Rational& c) {
  if (static_cast<int>(edges.size()) != degree_)
    throw std::invalid_argument("loop vector: term length differs from degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(edges, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LoopVector::check_compatible(const LoopVector& o) const {
  if (o.base_ != base_ || o.degree_ != degree_)
    throw std::invalid_argument("loop vectors differ in base or degree");
}

LoopVector& LoopVector::operator+=(const LoopVector& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LoopVector& LoopVector::operator-=(const LoopVector& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LoopVector& LoopVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

struct LoopAlgebra::Cache {
  explicit Cache(const Rational& delta) : category(delta) {}
  tl::Category category;
  std::mutex mutex;
  std::map<int, std::vector<Loop>> loops;
  std::map<int, std::map<std::vector<std::size_t>, std::size_t>> index;
};

LoopAlgebra::LoopAlgebra(FairGraph graph, std::size_t basepoint)
    : graph_(std::move(graph)), base_(basepoint), cache_(std::make_unique<Cache>(graph_.delta())) {
  if (base_ >= graph_.vertex_count()) throw std::invalid_argument("basepoint out of range");
  // Reverse BFS so enumeration can prune paths that cannot return in time.
  constexpr int unreachable = std::numeric_limits<int>::max();
  distance_to_base_.assign(graph_.vertex_count(), unreachable);
  std::vector<std::vector<std::size_t>> in_edges(graph_.vertex_count());
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) in_edges[graph_.dst(e)].push_back(e);
  std::deque<std::size_t> queue{base_};
  distance_to_base_[base_] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : in_edges[v]) {
      const std::size_t u = graph_.src(e);
      if (distance_to_base_[u] == unreachable) {
        distance_to_base_[u] = distance_to_base_[v] + 1;
        queue.push_back(u);
      }
    }
  }
}

LoopAlgebra LoopAlgebra::at(FairGraph graph, std::string_view basepoint) {
  const auto v = graph.find_vertex(basepoint);
  if (!v) throw std::invalid_argument("unknown basepoint '" + std::string(basepoint) + "'");
  return LoopAlgebra(std::move(graph), *v);
}

LoopAlgebra::LoopAlgebra(LoopAlgebra&&) noexcept = default;
LoopAlgebra& LoopAlgebra::operator=(LoopAlgebra&&) noexcept = default;
LoopAlgebra::~LoopAlgebra() = default;

const tl::Category& LoopAlgebra::category() const { return cache_->category; }

const std::vector<Loop>& LoopAlgebra::loops(int n) const {
  if (n < 0) throw std::invalid_argument("loop length must be non-negative");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (const auto it = cache_->loops.find(n); it != cache_->loops.end()) return it->second;

  std::vector<Loop> out;
  Loop current{base_, {}};
  auto extend = [&](auto&& self, std::size_t at, int remaining) -> void {
    if (remaining == 0) {
      if (at == base_) out.push_back(current);
      return;
    }
    for (std::size_t e : graph_.out_edges(at)) {
      const std::size_t next = graph_.dst(e);
      if (distance_to_base_[next] > remaining - 1) continue;
      current.edges.push_back(e);
      self(self, next, remaining - 1);
      current.edges.pop_back();
    }
  };
  extend(extend, base_, n);

  auto& index = cache_->index[n];
  for (std::size_t i = 0; i < out.size(); ++i) index.emplace(out[i].edges, i);
  return cache_->loops.emplace(n, std::move(out)).first->second;
}

std::size_t LoopAlgebra::index_of(const std::vector<std::size_t>& edges) const {
  const int n = static_cast<int>(edges.size());
  loops(n);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  const auto& index = cache_->index.at(n);
  const auto it = index.find(edges);
  if (it == index.end()) throw std::invalid_argument("not a loop at the basepoint");
  return it->second;
}

bool LoopAlgebra::is_loop(const Loop& loop) const {
  if (loop.base != base_) return false;
  std::size_t at = base_;
  for (std::size_t e : loop.edges) {
    if (e >= graph_.edge_count() || graph_.src(e) != at) return false;
    at = graph_.dst(e);
  }
  return at == base_;
}

Rational LoopAlgebra::loop_weight(const Loop& loop) const {
  Rational w(1);
  for (std::size_t e : loop.edges) w *= graph_.weight(e);
  return w;
}

Rational LoopAlgebra::loop_half_weight(const Loop& loop) const {
  Rational w(1);
  for (std::size_t e : loop.edges) w *= graph_.half_weight(e);
  return w;
}

Loop LoopAlgebra::reversed(const Loop& loop) const {
  Loop out{loop.base, {}};
  out.edges.reserve(loop.length());
  for (auto it = loop.edges.rbegin(); it != loop.edges.rend(); ++it) out.edges.push_back(graph_.reverse(*it));
  return out;
}

std::string LoopAlgebra::describe(const Loop& loop) const {
  std::string s = "[";
  for (std::size_t i = 0; i < loop.edges.size(); ++i) {
    if (i != 0) s += ",";
    s += graph_.edges()[loop.edges[i]].id;
  }
  return s + "]";
}

void LoopAlgebra::check_vector(const LoopVector& x) const {
  if (x.base() != base_) throw std::invalid_argument("loop vector based at a different vertex");
}

LoopVector LoopAlgebra::cup(int i, const LoopVector& x) const {
  check_vector(x);
  const int n = x.degree();
  if (i < 1 || i > n - 1) throw std::invalid_argument("cup index out of range");
  LoopVector out(base_, n - 2);
  const auto a = static_cast<std::size_t>(i - 1);
  for (const auto& [edges, c] : x.terms()) {
    if (edges[a + 1] != graph_.reverse(edges[a])) continue;
    std::vector<std::size_t> shorter;
    shorter.reserve(edges.size() - 2);
    shorter.insert(shorter.end(), edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(a));
    shorter.insert(shorter.end(), edges.begin() + static_cast<std::ptrdiff_t>(a + 2), edges.end());
    out.add_term(shorter, c * graph_.half_weight(edges[a]));
  }
  return out;
}

LoopVector LoopAlgebra::cap(int i, const LoopVector& x) const {
  check_vector(x);
  const int n = x.degree();
  if (i < 0 || i > n) throw std::invalid_argument("cap index out of range");
  LoopVector out(base_, n + 2);
  const auto at = static_cast<std::size_t>(i);
  for (const auto& [edges, c] : x.terms()) {
    const std::size_t vertex = at == 0 ? base_ : graph_.dst(edges[at - 1]);
    for (std::size_t e : graph_.out_edges(vertex)) {
      std::vector<std::size_t> longer;
      longer.reserve(edges.size() + 2);
      longer.insert(longer.end(), edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(at));
      longer.push_back(e);
      longer.push_back(graph_.reverse(e));
      longer.insert(longer.end(), edges.begin() + static_cast<std::ptrdiff_t>(at), edges.end());
      out.add_term(longer, c * graph_.half_weight(e));
    }
  }
  return out;
}

LoopVector LoopAlgebra::act_pairing(const tl::PlanarPairing& p, const LoopVector& x) const {
  using tl::BoundaryPos;
  LoopVector cur = x;

  // Source turn-backs: the innermost one always joins adjacent remaining points.
  std::vector<int> bottom(static_cast<std::size_t>(p.src_count()));
  for (int k = 0; k < p.src_count(); ++k) bottom[static_cast<std::size_t>(k)] = k;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t a = 0; a + 1 < bottom.size(); ++a) {
      if (p.partner_of(BoundaryPos{false, bottom[a]}) == BoundaryPos{false, bottom[a + 1]}) {
        cur = cup(static_cast<int>(a) + 1, cur);
        bottom.erase(bottom.begin() + static_cast<std::ptrdiff_t>(a),
                     bottom.begin() + static_cast<std::ptrdiff_t>(a + 2));
        found = true;
        break;
      }
    }
  }

  // Target turn-backs, peeled innermost first and then replayed in reverse.
  std::vector<int> top(static_cast<std::size_t>(p.dst_count()));
  for (int k = 0; k < p.dst_count(); ++k) top[static_cast<std::size_t>(k)] = k;
  std::vector<int> peeled;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t c = 0; c + 1 < top.size(); ++c) {
      if (p.partner_of(BoundaryPos{true, top[c]}) == BoundaryPos{true, top[c + 1]}) {
        peeled.push_back(static_cast<int>(c));
        top.erase(top.begin() + static_cast<std::ptrdiff_t>(c), top.begin() + static_cast<std::ptrdiff_t>(c + 2));
        found = true;
        break;
      }
    }
  }
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) cur = cap(*it, cur);
  return cur;
}

LoopVector LoopAlgebra::tl_act(const tl::TLMorphism& f, const LoopVector& x) const {
  check_vector(x);
  if (f.src_count() != x.degree()) throw std::invalid_argument("tl_act: degree mismatch");
  LoopVector out(base_, f.dst_count());
  for (const auto& [p, c] : f.terms()) {
    LoopVector image = act_pairing(p, x);
    image *= c;
    out += image;
  }
  return out;
}

RationalMatrix LoopAlgebra::operator_matrix(const tl::TLMorphism& f) const {
  const auto& cols = loops(f.src_count());
  const auto& rows = loops(f.dst_count());
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const LoopVector image = tl_act(f, LoopVector::basis(cols[j]));
    for (const auto& [edges, c] : image.terms()) m(index_of(edges), j) = c;
  }
  return m;
}

LoopVector LoopAlgebra::multiply(const LoopVector& x, const LoopVector& y) const {
  check_vector(x);
  check_vector(y);
  LoopVector out(base_, x.degree() + y.degree());
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      std::vector<std::size_t> joined = ex;
      joined.insert(joined.end(), ey.begin(), ey.end());
      out.add_term(joined, cx * cy);
    }
  }
  return out;
}

LoopVector LoopAlgebra::star(const LoopVector& x) const {
  check_vector(x);
  LoopVector out(base_, x.degree());
  for (const auto& [edges, c] : x.terms()) {
    const Loop bar = reversed(Loop{base_, edges});
    out.add_term(bar.edges, c * loop_half_weight(bar));
  }
  return out;
}

std::size_t LoopAlgebra::isotypic_dim(int k) const {
  if (k < 0) throw std::invalid_argument("isotypic_dim: k must be non-negative");
  if (k == 0) return loop_count(0);
  return rank(operator_matrix(category().jones_wenzl(k)));
}

long branching_multiplicity(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<long> row{1};
  for (int step = 1; step <= n; ++step) {
    std::vector<long> next(static_cast<std::size_t>(step + 1), 0);
    for (int j = 0; j <= step; ++j) {
      long v = 0;
      if (j - 1 >= 0 && j - 1 < static_cast<int>(row.size())) v += row[static_cast<std::size_t>(j - 1)];
      if (j + 1 < static_cast<int>(row.size())) v += row[static_cast<std::size_t>(j + 1)];
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace sfi
