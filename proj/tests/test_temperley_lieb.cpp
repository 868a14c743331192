#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "sfi/temperley_lieb.hpp"
#include "support.hpp"

using namespace sfi;
using namespace sfi::tl;

namespace {

// Stacks g (n -> m) under f (m -> k) as a graph of boundary points joined by
// arcs and glued along the middle row, then reads off paths and closed loops.
PlanarPairing oracle_compose(const PlanarPairing& f, const PlanarPairing& g, int& loops) {
  const int n = g.src_count(), m = g.dst_count(), k = f.dst_count();
  // Node ids: g bottom [0,n), middle [n, n+m) seen from g's top, f's bottom
  // [n+m, n+2m), f top [n+2m, n+2m+k).
  const int total = n + 2 * m + k;
  std::vector<std::vector<int>> adj(total);
  auto g_node = [&](BoundaryPos p) { return p.top ? n + p.index : p.index; };
  auto f_node = [&](BoundaryPos p) { return p.top ? n + 2 * m + p.index : n + m + p.index; };
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (const auto& [a, b] : g.pairs()) link(g_node(g.pos_of(a)), g_node(g.pos_of(b)));
  for (const auto& [a, b] : f.pairs()) link(f_node(f.pos_of(a)), f_node(f.pos_of(b)));
  for (int j = 0; j < m; ++j) link(n + j, n + m + j);

  auto outer = [&](int v) { return v < n || v >= n + 2 * m; };
  auto as_pos = [&](int v) { return v < n ? BoundaryPos{false, v} : BoundaryPos{true, v - n - 2 * m}; };
  std::vector<bool> seen(total, false);
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs;
  for (int v = 0; v < total; ++v) {
    if (!outer(v) || seen[v]) continue;
    int prev = -1, cur = v;
    seen[v] = true;
    for (;;) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      seen[cur] = true;
      if (outer(cur)) break;
    }
    arcs.push_back({as_pos(v), as_pos(cur)});
  }
  loops = 0;
  for (int v = 0; v < total; ++v) {
    if (seen[v]) continue;
    ++loops;
    std::vector<int> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return PlanarPairing::from_positions(n, k, arcs);
}

TLMorphism oracle_generator(int i, int n) {
  std::vector<std::pair<BoundaryPos, BoundaryPos>> arcs{{{false, i - 1}, {false, i}}, {{true, i - 1}, {true, i}}};
  for (int j = 0; j < n; ++j)
    if (j != i - 1 && j != i) arcs.push_back({{false, j}, {true, j}});
  return TLMorphism(PlanarPairing::from_positions(n, n, arcs));
}

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

const Rational d2 = Rational(17, 4);

}  // namespace

TEST_CASE("pairing validation") {
  CHECK_THROWS_AS(PlanarPairing(4, 0, {2, 3, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarPairing(3, 0, {1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarPairing(2, 0, {0, 1}), std::invalid_argument);
  CHECK_NOTHROW(PlanarPairing(4, 0, {3, 2, 1, 0}));
  CHECK_NOTHROW(PlanarPairing(4, 0, {1, 0, 3, 2}));
}

TEST_CASE("pairing counts are Catalan numbers") {
  for (int n = 0; n <= 12; ++n) {
    const auto ps = enumerate_pairings(n, 0);
    CHECK(static_cast<long>(ps.size()) == (n % 2 == 0 ? catalan(n / 2) : 0));
    CHECK(std::set<PlanarPairing>(ps.begin(), ps.end()).size() == ps.size());
  }
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      CHECK(static_cast<long>(enumerate_pairings(n, m).size()) == ((n + m) % 2 == 0 ? catalan((n + m) / 2) : 0));
}

TEST_CASE("composition examples") {
  const Category c(d2);
  CHECK(c.compose(TLMorphism::cup(), TLMorphism::identity(2)) == TLMorphism::cup());
  const TLMorphism loop = c.compose(TLMorphism::cup(), TLMorphism::cap());
  CHECK(loop == d2 * TLMorphism::identity(0));
  const TLMorphism e1 = generator(1, 2);
  CHECK(c.compose(e1, e1) == d2 * e1);
  CHECK_THROWS_AS(c.compose(TLMorphism::cup(), TLMorphism::identity(3)), std::invalid_argument);
}

TEST_CASE("composition agrees with the gluing oracle") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> size(0, 6);
  int checked = 0;
  while (checked < 300) {
    const int n = size(rng), m = size(rng), k = size(rng);
    if ((n + m) % 2 != 0 || (m + k) % 2 != 0) continue;
    const auto gs = enumerate_pairings(n, m);
    const auto fs = enumerate_pairings(m, k);
    const PlanarPairing& g = gs[std::uniform_int_distribution<std::size_t>(0, gs.size() - 1)(rng)];
    const PlanarPairing& f = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
    int loops = 0, oracle_loops = 0;
    const PlanarPairing got = compose_pairings(f, g, loops);
    const PlanarPairing want = oracle_compose(f, g, oracle_loops);
    CHECK(got == want);
    CHECK(loops == oracle_loops);
    ++checked;
  }
}

TEST_CASE("generators match their diagrams") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) CHECK(generator(i, n) == oracle_generator(i, n));
  CHECK(enumerate_pairings(2, 2).size() == 2);
  CHECK(generator(1, 2) != TLMorphism::identity(2));
  CHECK_THROWS(generator(0, 3));
  CHECK_THROWS(generator(3, 3));
}

TEST_CASE("tensor examples") {
  CHECK(tensor(TLMorphism::identity(1), TLMorphism::identity(1)) == TLMorphism::identity(2));
  const TLMorphism two_arcs = tensor(TLMorphism::cup(), TLMorphism::cup());
  REQUIRE(two_arcs.terms().size() == 1);
  CHECK(two_arcs.terms().begin()->first == PlanarPairing(4, 0, {1, 0, 3, 2}));
  CHECK(tensor(generator(1, 2), TLMorphism::identity(1)) == generator(1, 3));
  CHECK(tensor(TLMorphism::identity(1), generator(1, 2)) == generator(2, 3));
}

TEST_CASE("star examples and properties") {
  CHECK(star(TLMorphism::identity(3)) == TLMorphism::identity(3));
  CHECK(star(TLMorphism::cup()) == TLMorphism::cap());
  for (int i = 1; i < 4; ++i) CHECK(star(generator(i, 4)) == generator(i, 4));
  const Category c(d2);
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    const TLMorphism f = testing::random_morphism(rng, 3, 5);
    const TLMorphism g = testing::random_morphism(rng, 1, 3);
    CHECK(star(star(f)) == f);
    CHECK(star(c.compose(f, g)) == c.compose(star(g), star(f)));
  }
}

TEST_CASE("composition is associative and bilinear") {
  const Category c(Rational(82, 9));
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    const TLMorphism f = testing::random_morphism(rng, 2, 4);
    const TLMorphism g = testing::random_morphism(rng, 4, 2);
    const TLMorphism h = testing::random_morphism(rng, 4, 4);
    const TLMorphism h2 = testing::random_morphism(rng, 4, 4);
    CHECK(c.compose(f, c.compose(g, h)) == c.compose(c.compose(f, g), h));
    CHECK(c.compose(g, h + h2) == c.compose(g, h) + c.compose(g, h2));
  }
}

TEST_CASE("Temperley-Lieb relations up to 8 strands") {
  for (const Rational delta : {Rational(2), d2}) {
    const Category c(delta);
    for (int n = 2; n <= 8; ++n)
      for (int i = 1; i < n; ++i) {
        const TLMorphism ei = generator(i, n);
        CHECK(c.compose(ei, ei) == delta * ei);
        if (i + 1 < n) {
          const TLMorphism ej = generator(i + 1, n);
          CHECK(c.compose(ei, c.compose(ej, ei)) == ei);
          CHECK(c.compose(ej, c.compose(ei, ej)) == ej);
        }
        for (int j = i + 2; j < n; ++j) CHECK(c.compose(ei, generator(j, n)) == c.compose(generator(j, n), ei));
      }
  }
}

TEST_CASE("Markov trace examples") {
  const Category c(d2);
  for (int n = 0; n <= 5; ++n) CHECK(c.markov_trace(TLMorphism::identity(n)) == d2.pow(n));
  CHECK(c.markov_trace(generator(1, 2)) == d2);
  CHECK_THROWS_AS(c.markov_trace(TLMorphism::cup()), std::invalid_argument);
}

TEST_CASE("left and right closures agree") {
  const Category c(d2);
  std::mt19937_64 rng(34);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 20; ++t) {
      const TLMorphism f = testing::random_morphism(rng, n, n, 4);
      const Rational tr = c.markov_trace(f);
      CHECK(c.left_trace(f) == tr);
      CHECK(c.right_trace(f) == tr);
    }
}

TEST_CASE("Jones-Wenzl projectors") {
  const BaseParam p = BaseParam::from_r(2);
  const Category c(p.delta());
  CHECK(c.jones_wenzl(1) == TLMorphism::identity(1));
  CHECK(c.jones_wenzl(2) == TLMorphism::identity(2) - Rational(4, 17) * generator(1, 2));
  CHECK(c.markov_trace(c.jones_wenzl(2)) == Rational(273, 16));
  CHECK(c.markov_trace(c.jones_wenzl(3)) == Rational(4369, 64));
  for (int n = 1; n <= 6; ++n) {
    const TLMorphism f = c.jones_wenzl(n);
    CHECK(c.compose(f, f) == f);
    CHECK(star(f) == f);
    CHECK(c.markov_trace(f) == quantum_int(n + 1, p));
    for (int i = 1; i < n; ++i) {
      CHECK(c.compose(generator(i, n), f).is_zero());
      CHECK(c.compose(f, generator(i, n)).is_zero());
    }
  }
}

TEST_CASE("Jones-Wenzl at the critical value") {
  const Category c(Rational(2));
  for (int n = 1; n <= 5; ++n) CHECK(c.markov_trace(c.jones_wenzl(n)) == Rational(n + 1));
}
