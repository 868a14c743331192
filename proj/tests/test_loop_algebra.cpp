#include <doctest.h>

#include <random>

#include "sfi/loop_algebra.hpp"
#include "support.hpp"

using namespace sfi;
using tl::TLMorphism;

namespace {

const BaseParam r2 = BaseParam::from_r(2);

LoopAlgebra bouquet_r2() { return LoopAlgebra(bouquet(1, r2), 0); }
LoopAlgebra cycle3_r2() { return LoopAlgebra(cycle_family(3, r2), 0); }

LoopVector vec(const LoopAlgebra& a, std::initializer_list<const char*> ids, const Rational& c = Rational(1)) {
  Loop l{a.basepoint(), {}};
  for (const char* id : ids) l.edges.push_back(*a.graph().find_edge(id));
  return LoopVector::basis(l, c);
}

LoopVector random_vector(const LoopAlgebra& a, int n, std::mt19937_64& rng) {
  LoopVector x(a.basepoint(), n);
  const auto& ls = a.loops(n);
  if (ls.empty()) return x;
  std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
  for (int t = 0; t < 3; ++t) x += LoopVector::basis(ls[pick(rng)], testing::random_rational(rng));
  return x;
}

// All edge words of length n, kept when they form a based loop.
std::size_t brute_force_loop_count(const FairGraph& g, std::size_t base, int n) {
  std::size_t count = 0;
  std::vector<std::size_t> word(static_cast<std::size_t>(n), 0);
  const std::size_t m = g.edge_count();
  for (;;) {
    std::size_t at = base;
    bool ok = true;
    for (std::size_t e : word) {
      if (g.src(e) != at) {
        ok = false;
        break;
      }
      at = g.dst(e);
    }
    if (ok && at == base) ++count;
    std::size_t i = 0;
    while (i < word.size() && ++word[i] == m) word[i++] = 0;
    if (i == word.size()) break;
  }
  return count;
}

RationalMatrix cup_matrix(const LoopAlgebra& a, int i, int n) { return a.operator_matrix(tl::cup_at(i, n)); }
RationalMatrix cap_matrix(const LoopAlgebra& a, int i, int n) { return a.operator_matrix(tl::cap_at(i, n)); }

}  // namespace

TEST_CASE("loop enumeration") {
  const LoopAlgebra b = bouquet_r2();
  REQUIRE(b.loops(0).size() == 1);
  CHECK(b.loops(0)[0].edges.empty());
  CHECK(b.loop_count(3) == 8);
  const LoopAlgebra c = cycle3_r2();
  CHECK(c.loop_count(2) == 2);
  const std::vector<std::size_t> cycle_counts{1, 0, 2, 2, 6, 10};
  for (int n = 0; n <= 5; ++n) {
    CHECK(c.loop_count(n) == cycle_counts[n]);
    CHECK(b.loop_count(n) == (std::size_t{1} << n));
  }
  for (const char* name : {"cycle2_r2.json", "cycle4_r2.json", "bouquet2_delta4.json", "k4_graph.json",
                           "star16_graph.json", "theta3_graph.json", "dense_two_loops.json"}) {
    const FairGraph g = testing::load_graph(name);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const LoopAlgebra a(g, v);
      for (int n = 0; n <= 4; ++n) {
        CHECK(a.loop_count(n) == brute_force_loop_count(g, v, n));
        for (const Loop& l : a.loops(n)) CHECK(a.is_loop(l));
        for (std::size_t i = 0; i + 1 < a.loops(n).size(); ++i) CHECK(a.loops(n)[i] < a.loops(n)[i + 1]);
      }
    }
  }
  CHECK_THROWS_AS(LoopAlgebra::at(cycle_family(3, r2), "nowhere"), std::invalid_argument);
}

TEST_CASE("loop weights") {
  const LoopAlgebra b = bouquet_r2();
  CHECK(b.loop_weight(b.loops(0)[0]) == Rational(1));
  const Loop eebar{0, {*b.graph().find_edge("e0"), *b.graph().find_edge("e0bar")}};
  CHECK(b.loop_weight(eebar) == Rational(1));
  const LoopAlgebra c = cycle3_r2();
  const Loop circuit{0, {*c.graph().find_edge("f0"), *c.graph().find_edge("f1"), *c.graph().find_edge("f2")}};
  CHECK(c.is_loop(circuit));
  CHECK(c.loop_weight(circuit) == Rational(1, 64));
  CHECK(c.loop_half_weight(circuit) == Rational(1, 8));
  for (int n = 0; n <= 5; ++n)
    for (const Loop& l : c.loops(n)) CHECK(c.loop_half_weight(l) * c.loop_half_weight(l) == c.loop_weight(l));
}

TEST_CASE("cup and cap formulas") {
  const LoopAlgebra b = bouquet_r2();
  const LoopVector empty = LoopVector::basis(b.loops(0)[0]);
  CHECK(b.cup(1, vec(b, {"e0", "e0bar"})) == Rational(2) * empty);
  CHECK(b.cup(1, vec(b, {"e0", "e0"})).is_zero());
  CHECK(b.cup(1, vec(b, {"e0bar", "e0"})) == Rational(1, 2) * empty);
  CHECK(b.cap(0, empty) == vec(b, {"e0", "e0bar"}, Rational(2)) + vec(b, {"e0bar", "e0"}, Rational(1, 2)));
  CHECK(b.cup(1, b.cap(0, empty)) == Rational(17, 4) * empty);
  CHECK(b.cap(1, vec(b, {"e0"})) ==
        vec(b, {"e0", "e0", "e0bar"}, Rational(2)) + vec(b, {"e0", "e0bar", "e0"}, Rational(1, 2)));
  CHECK_THROWS(b.cup(0, vec(b, {"e0", "e0bar"})));
  CHECK_THROWS(b.cup(2, vec(b, {"e0", "e0bar"})));
  CHECK_THROWS(b.cap(2, vec(b, {"e0"})));
}

TEST_CASE("cup and cap obey the Temperley-Lieb module relations") {
  for (const LoopAlgebra* a : {new LoopAlgebra(bouquet_r2()), new LoopAlgebra(cycle3_r2())}) {
    const Rational delta = a->delta();
    for (int n = 0; n <= 3; ++n) {
      const RationalMatrix id = RationalMatrix::identity(a->loop_count(n));
      for (int i = 0; i <= n; ++i) {
        const RationalMatrix cap = cap_matrix(*a, i, n);
        CHECK(cup_matrix(*a, i + 1, n + 2) * cap == id.scaled(delta));
        if (i >= 1) CHECK(cup_matrix(*a, i, n + 2) * cap == id);
        if (i + 2 <= n + 1) CHECK(cup_matrix(*a, i + 2, n + 2) * cap == id);
        if (i == 0) CHECK_THROWS(cup_matrix(*a, i, n + 2) * cap);
      }
      for (int i = 0; i <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
          // cup j of the original degree-n word moved past cap i.
          if (j + 1 <= i)
            CHECK(cup_matrix(*a, j, n + 2) * cap_matrix(*a, i, n) == cap_matrix(*a, i - 2, n - 2) * cup_matrix(*a, j, n));
          if (j >= i + 1)
            CHECK(cup_matrix(*a, j + 2, n + 2) * cap_matrix(*a, i, n) == cap_matrix(*a, i, n - 2) * cup_matrix(*a, j, n));
        }
    }
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i < n; ++i) {
        const RationalMatrix ei = a->operator_matrix(tl::generator(i, n));
        CHECK(ei * ei == ei.scaled(delta));
        if (i + 1 < n) {
          const RationalMatrix ej = a->operator_matrix(tl::generator(i + 1, n));
          CHECK(ei * ej * ei == ei);
          CHECK(ej * ei * ej == ej);
        }
        for (int j = i + 2; j < n; ++j) {
          const RationalMatrix ej = a->operator_matrix(tl::generator(j, n));
          CHECK(ei * ej == ej * ei);
        }
      }
    delete a;
  }
}

TEST_CASE("tl_act matches the direct cup and cap maps") {
  const LoopAlgebra c = cycle3_r2();
  std::mt19937_64 rng(41);
  for (int n = 0; n <= 4; ++n)
    for (int t = 0; t < 5; ++t) {
      const LoopVector x = random_vector(c, n, rng);
      for (int i = 0; i <= n; ++i) CHECK(c.tl_act(tl::cap_at(i, n), x) == c.cap(i, x));
      for (int i = 1; i < n; ++i) CHECK(c.tl_act(tl::cup_at(i, n), x) == c.cup(i, x));
      CHECK(c.tl_act(TLMorphism::identity(n), x) == x);
    }
}

TEST_CASE("tl_act examples") {
  const LoopAlgebra b = bouquet_r2();
  const RationalMatrix e1 = b.operator_matrix(tl::generator(1, 2));
  CHECK(e1.rows() == 4);
  CHECK(e1.trace() == Rational(17, 4));
  CHECK(e1 == cap_matrix(b, 0, 0) * cup_matrix(b, 1, 2));
  const RationalMatrix jw2 = b.operator_matrix(b.category().jones_wenzl(2));
  CHECK((cup_matrix(b, 1, 2) * jw2).is_zero());
  CHECK_THROWS(b.tl_act(TLMorphism::identity(2), vec(b, {"e0"})));
}

TEST_CASE("tl_act is functorial on random composable pairs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> deg(0, 4);
  for (const LoopAlgebra* a : {new LoopAlgebra(bouquet_r2()), new LoopAlgebra(cycle3_r2())}) {
    int done = 0;
    while (done < 40) {
      const int n = deg(rng), m = deg(rng), k = deg(rng);
      if ((n + m) % 2 != 0 || (m + k) % 2 != 0) continue;
      const TLMorphism g = testing::random_morphism(rng, n, m);
      const TLMorphism f = testing::random_morphism(rng, m, k);
      CHECK(a->operator_matrix(a->category().compose(f, g)) == a->operator_matrix(f) * a->operator_matrix(g));
      ++done;
    }
    delete a;
  }
}

TEST_CASE("multiplication and star") {
  const LoopAlgebra b = bouquet_r2();
  const LoopVector empty = LoopVector::basis(b.loops(0)[0]);
  CHECK(b.multiply(vec(b, {"e0"}), vec(b, {"e0bar"})) == vec(b, {"e0", "e0bar"}));
  CHECK(b.star(empty) == empty);
  CHECK(b.star(vec(b, {"e0"})) == vec(b, {"e0bar"}, Rational(1, 2)));
  CHECK(b.star(b.star(vec(b, {"e0", "e0bar"}))) == vec(b, {"e0", "e0bar"}));

  const LoopAlgebra c = cycle3_r2();
  std::mt19937_64 rng(43);
  for (const LoopAlgebra* a : {&b, &c})
    for (int t = 0; t < 30; ++t) {
      const LoopVector x = random_vector(*a, t % 4, rng);
      const LoopVector y = random_vector(*a, (t + 1) % 3, rng);
      const LoopVector y2 = random_vector(*a, (t + 1) % 3, rng);
      const LoopVector z = random_vector(*a, 2, rng);
      const LoopVector unit = LoopVector::basis(a->loops(0)[0]);
      CHECK(a->multiply(unit, x) == x);
      CHECK(a->multiply(x, unit) == x);
      CHECK(a->multiply(x, y + y2) == a->multiply(x, y) + a->multiply(x, y2));
      CHECK(a->multiply(a->multiply(x, y), z) == a->multiply(x, a->multiply(y, z)));
      CHECK(a->star(a->star(x)) == x);
      CHECK(a->star(a->multiply(x, y)) == a->multiply(a->star(y), a->star(x)));
    }
}

TEST_CASE("branching multiplicities") {
  CHECK(branching_multiplicity(0, 0) == 1);
  CHECK(branching_multiplicity(1, 1) == 1);
  CHECK(branching_multiplicity(4, 0) == 2);
  CHECK(branching_multiplicity(4, 2) == 3);
  CHECK(branching_multiplicity(4, 4) == 1);
  CHECK(branching_multiplicity(5, 1) == 5);
  CHECK(branching_multiplicity(3, 0) == 0);
  CHECK(branching_multiplicity(2, -1) == 0);
}

TEST_CASE("isotypic dimensions") {
  const LoopAlgebra b = bouquet_r2();
  const LoopAlgebra c = cycle3_r2();
  CHECK(b.isotypic_dim(0) == 1);
  CHECK(c.isotypic_dim(0) == 1);
  CHECK(b.isotypic_dim(1) == 2);
  // The triangle has no loops of length one, so the JW(1) = id action is on a zero space.
  CHECK(c.isotypic_dim(1) == 0);
  for (int k = 0; k <= 5; ++k) CHECK(b.isotypic_dim(k) == static_cast<std::size_t>(k + 1));
}

TEST_CASE("isotypic dimensions agree with loop counts peeled by the branching rule") {
  for (const char* name : {"bouquet1_r2.json", "cycle3_r2.json", "cycle2_r2.json", "cycle4_r2.json", "cycle3_r1.json",
                           "bouquet2_delta4.json", "dense_two_loops.json", "k4_graph.json", "theta3_graph.json"}) {
    const LoopAlgebra a(testing::load_graph(name), 0);
    std::vector<long> peeled;
    for (int n = 0; n <= 5; ++n) {
      long rest = static_cast<long>(a.loop_count(n));
      for (int k = 0; k < n; ++k) rest -= branching_multiplicity(n, k) * peeled[k];
      peeled.push_back(rest);
      CHECK(static_cast<long>(a.isotypic_dim(n)) == rest);
      if (n <= 4) {
        const Rational qk = quantum_int(n + 1, a.graph().param());
        CHECK(Rational(rest) <= qk * qk);
      }
      CHECK(Rational(static_cast<long>(a.loop_count(n))) <= a.delta().pow(2 * n));
    }
  }
}
