#include "sfi/modular.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace sfi {

namespace {

void require_same_degree(const LoopVector& x, const LoopVector& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("inner product: degree mismatch");
}

Rational nested_cup_scalar(const LoopAlgebra& a, LoopVector z) {
  for (int k = z.degree() / 2; k >= 1; --k) z = a.cup(k, z);
  return z.coefficient({});
}

}  // namespace

Rational right_inner_diagonal(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y) {
  require_same_degree(x, y);
  Rational total;
  for (const auto& [edges, c] : x.terms()) {
    const Rational d = y.coefficient(edges);
    if (!d.is_zero()) total += c * d / a.loop_weight(Loop{a.basepoint(), edges});
  }
  return total;
}

Rational right_inner_structural(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y) {
  require_same_degree(x, y);
  return nested_cup_scalar(a, a.multiply(a.star(x), y));
}

Rational right_inner(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y) {
  Rational closed = right_inner_diagonal(a, x, y);
  if (closed != right_inner_structural(a, x, y))
    throw std::logic_error("right inner product: closed form and cup evaluation disagree");
  return closed;
}

Rational left_inner_diagonal(const LoopAlgebra& /*a*/, const LoopVector& x, const LoopVector& y) {
  require_same_degree(x, y);
  Rational total;
  for (const auto& [edges, c] : x.terms()) total += c * y.coefficient(edges);
  return total;
}

Rational left_inner_structural(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y) {
  require_same_degree(x, y);
  return nested_cup_scalar(a, a.multiply(x, a.star(y)));
}

Rational left_inner(const LoopAlgebra& a, const LoopVector& x, const LoopVector& y) {
  Rational closed = left_inner_diagonal(a, x, y);
  if (closed != left_inner_structural(a, x, y))
    throw std::logic_error("left inner product: closed form and cup evaluation disagree");
  return closed;
}

std::vector<Rational> modular_diagonal(const LoopAlgebra& a, int n) {
  std::vector<Rational> out;
  for (const Loop& l : a.loops(n)) out.push_back(a.loop_weight(l));
  return out;
}

RationalMatrix modular_operator(const LoopAlgebra& a, int n) {
  return RationalMatrix::diagonal(modular_diagonal(a, n));
}

RationalMatrix modular_operator_structural(const LoopAlgebra& a, int n) {
  const auto& basis = a.loops(n);
  const std::size_t dim = basis.size();
  RationalMatrix right(dim, dim);
  RationalMatrix left(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const LoopVector bi = LoopVector::basis(basis[i]);
    for (std::size_t j = 0; j < dim; ++j) {
      const LoopVector bj = LoopVector::basis(basis[j]);
      right(i, j) = right_inner_structural(a, bi, bj);
      left(i, j) = left_inner_structural(a, bi, bj);
    }
  }
  // left(p, q) = right(q, Delta p) = sum_c right(q, c) Delta(c, p), so
  // right * Delta = left^T; solve column by column.
  const RationalMatrix rhs = left.transpose();
  RationalMatrix delta(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Rational> b(dim);
    for (std::size_t i = 0; i < dim; ++i) b[i] = rhs(i, col);
    const auto x = solve(right, std::move(b));
    for (std::size_t i = 0; i < dim; ++i) delta(i, col) = x[i];
  }
  return delta;
}

TraceBounds trace_bounds(const LoopAlgebra& a, int n) {
  TraceBounds out;
  out.n = n;
  for (const Loop& l : a.loops(n)) {
    const Rational w = a.loop_weight(l);
    out.trace += w;
    out.inverse_trace += w.inverse();
  }
  out.bound = a.delta().pow(n);
  out.pass = out.trace <= out.bound && out.inverse_trace <= out.bound;
  return out;
}

std::string to_string(SpectrumDescriptor::Kind kind) {
  switch (kind) {
    case SpectrumDescriptor::Kind::trivial: return "trivial";
    case SpectrumDescriptor::Kind::cyclic: return "cyclic";
    case SpectrumDescriptor::Kind::dense: return "dense";
  }
  return "unknown";
}

std::string SpectrumDescriptor::summary() const {
  if (kind == Kind::cyclic) return "cyclic λ=" + lambda->to_string();
  return to_string(kind);
}

SpectrumDescriptor describe_group(PositiveRationalGroup group, std::vector<SpectrumWitness> witness) {
  SpectrumDescriptor s;
  s.rank = group.rank();
  if (s.rank == 0) {
    s.kind = SpectrumDescriptor::Kind::trivial;
  } else if (s.rank == 1) {
    s.kind = SpectrumDescriptor::Kind::cyclic;
    s.lambda = group.cyclic_generator();
  } else {
    s.kind = SpectrumDescriptor::Kind::dense;
  }
  s.witness = std::move(witness);
  s.group = std::move(group);
  return s;
}

CycleBasis fundamental_cycle_basis(const LoopAlgebra& a) {
  const FairGraph& g = a.graph();
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  CycleBasis out;
  out.potential.assign(nv, Rational(1));
  out.in_component.assign(nv, false);
  out.cycle_of_edge.assign(ne, -1);
  out.orientation.assign(ne, 0);
  std::vector<std::size_t> parent_edge(nv, none);
  std::vector<bool> tree_edge(ne, false);

  // Breadth-first over the undirected support; the involution makes every
  // edge traversable in both directions.
  std::deque<std::size_t> queue{a.basepoint()};
  out.in_component[a.basepoint()] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : g.out_edges(u)) {
      const std::size_t w = g.dst(e);
      if (out.in_component[w]) continue;
      out.in_component[w] = true;
      out.potential[w] = out.potential[u] * g.weight(e);
      parent_edge[w] = e;
      tree_edge[e] = true;
      tree_edge[g.reverse(e)] = true;
      queue.push_back(w);
    }
  }

  auto path_from_base = [&](std::size_t v) {
    std::vector<std::size_t> path;
    while (parent_edge[v] != none) {
      path.push_back(parent_edge[v]);
      v = g.src(parent_edge[v]);
    }
    return std::vector<std::size_t>(path.rbegin(), path.rend());
  };

  for (const auto& [e, ebar] : g.involution_pairs()) {
    if (!out.in_component[g.src(e)] || tree_edge[e]) continue;
    FundamentalCycle cycle;
    cycle.edge = e;
    cycle.loop.base = a.basepoint();
    cycle.loop.edges = path_from_base(g.src(e));
    cycle.loop.edges.push_back(e);
    const auto back = path_from_base(g.dst(e));
    for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.loop.edges.push_back(g.reverse(*it));
    cycle.weight = out.potential[g.src(e)] * g.weight(e) / out.potential[g.dst(e)];
    const int index = static_cast<int>(out.cycles.size());
    out.cycle_of_edge[e] = index;
    out.orientation[e] = 1;
    if (ebar != e) {
      out.cycle_of_edge[ebar] = index;
      out.orientation[ebar] = -1;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<long> cycle_coordinates(const CycleBasis& basis, const Loop& loop) {
  std::vector<long> coords(basis.cycles.size(), 0);
  for (std::size_t e : loop.edges) {
    const int c = basis.cycle_of_edge[e];
    if (c >= 0) coords[static_cast<std::size_t>(c)] += basis.orientation[e];
  }
  return coords;
}

SpectrumDescriptor spectrum_exact(const LoopAlgebra& a) {
  const CycleBasis basis = fundamental_cycle_basis(a);
  std::vector<Rational> generators;
  std::vector<SpectrumWitness> witness;
  for (const auto& cycle : basis.cycles) {
    if (a.loop_weight(cycle.loop) != cycle.weight)
      throw std::logic_error("fundamental cycle weight disagrees with its loop; graph not balanced?");
    generators.push_back(cycle.weight);
    witness.push_back({a.describe(cycle.loop), cycle.weight});
  }
  SpectrumDescriptor s = describe_group(PositiveRationalGroup(std::move(generators)), std::move(witness));
  std::size_t outside = 0;
  for (bool inside : basis.in_component)
    if (!inside) ++outside;
  if (outside != 0)
    s.warnings.push_back(std::to_string(outside) + " vertices outside the basepoint component were ignored");
  return s;
}

SpectrumDescriptor spectrum_bruteforce(const LoopAlgebra& a, int max_len) {
  if (max_len < 1) throw std::invalid_argument("spectrum_bruteforce: max_len must be at least 1");
  const FairGraph& g = a.graph();
  std::vector<std::set<Rational>> reach(g.vertex_count());
  reach[a.basepoint()].insert(Rational(1));
  std::set<Rational> loop_weights;
  std::vector<SpectrumWitness> witness;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::set<Rational>> next(g.vertex_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      for (const Rational& w : reach[u])
        for (std::size_t e : g.out_edges(u)) next[g.dst(e)].insert(w * g.weight(e));
    }
    reach = std::move(next);
    for (const Rational& w : reach[a.basepoint()]) {
      if (loop_weights.insert(w).second && w != Rational(1))
        witness.push_back({"length " + std::to_string(len), w});
    }
  }
  PositiveRationalGroup group(std::vector<Rational>(loop_weights.begin(), loop_weights.end()));
  // Keep the witness list short: only weights needed to reach the final rank.
  std::vector<SpectrumWitness> reduced;
  std::vector<Rational> kept;
  for (const auto& w : witness) {
    if (PositiveRationalGroup(kept).contains(w.weight)) continue;
    kept.push_back(w.weight);
    reduced.push_back(w);
    if (PositiveRationalGroup(kept) == group) break;
  }
  return describe_group(std::move(group), std::move(reduced));
}

std::string FactorType::to_string() const {
  switch (kind) {
    case Kind::II1: return "II_1";
    case Kind::III_lambda: return "III_{" + lambda->to_string() + "}";
    case Kind::III1: return "III_1";
  }
  return "unknown";
}

FactorType classify_type(const SpectrumDescriptor& s) {
  switch (s.kind) {
    case SpectrumDescriptor::Kind::trivial: return {FactorType::Kind::II1, std::nullopt};
    case SpectrumDescriptor::Kind::cyclic: return {FactorType::Kind::III_lambda, s.lambda};
    case SpectrumDescriptor::Kind::dense: return {FactorType::Kind::III1, std::nullopt};
  }
  throw std::logic_error("unknown spectrum kind");
}

bool is_tracial(const LoopAlgebra& a) {
  return spectrum_exact(a).kind == SpectrumDescriptor::Kind::trivial;
}

QuantumGroupSpectrum qg_spectrum(const std::vector<Rational>& eigenvalues) {
  if (eigenvalues.empty()) throw std::invalid_argument("no eigenvalues given");
  Rational sum;
  Rational inverse_sum;
  for (const auto& x : eigenvalues) {
    if (x.sign() <= 0) throw std::invalid_argument("eigenvalues of F*F must be positive");
    sum += x;
    inverse_sum += x.inverse();
  }
  if (sum != inverse_sum)
    throw std::invalid_argument("trace balance fails: Tr(F*F) = " + sum.to_string() +
                                " but Tr((F*F)^-1) = " + inverse_sum.to_string());
  std::vector<SpectrumWitness> witness;
  for (const auto& x : eigenvalues)
    if (x != Rational(1)) witness.push_back({"eigenvalue", x});
  QuantumGroupSpectrum out;
  out.spectrum = describe_group(PositiveRationalGroup(eigenvalues), std::move(witness));
  out.kac = out.spectrum.kind == SpectrumDescriptor::Kind::trivial;
  return out;
}

}  // namespace sfi
