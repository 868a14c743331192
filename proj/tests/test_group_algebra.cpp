#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "sfi/fair_graph.hpp"
#include "sfi/group_algebra.hpp"
#include "support.hpp"

using namespace sfi;
using namespace sfi::group;
using testing::R;

namespace {

using cplx = std::complex<double>;

cplx phase(const Rational& angle) { return std::polar(1.0, 2.0 * M_PI * angle.to_double()); }

// Cocycle identity checked numerically over every triple.
bool numeric_cocycle_ok(const Cocycle2& mu) {
  const FiniteGroup& g = mu.group();
  const int n = g.order(), e = g.identity();
  for (int a = 0; a < n; ++a)
    if (std::abs(phase(mu.angle(e, a)) - 1.0) > 1e-9 || std::abs(phase(mu.angle(a, e)) - 1.0) > 1e-9) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const cplx lhs = phase(mu.angle(a, b)) * phase(mu.angle(g.mul(a, b), c));
        const cplx rhs = phase(mu.angle(b, c)) * phase(mu.angle(a, g.mul(b, c)));
        if (std::abs(lhs - rhs) > 1e-9) return false;
      }
  return true;
}

Cyclotomic random_gaussian(std::mt19937_64& rng, int order) {
  return Cyclotomic::gaussian(order, testing::random_rational(rng), testing::random_rational(rng));
}

TwistedElement random_element(const TwistedAlgebra& a, std::mt19937_64& rng) {
  TwistedElement x(a.field_order());
  std::uniform_int_distribution<int> pick(0, a.dimension() - 1);
  for (int t = 0; t < 3; ++t) x.add_term(pick(rng), random_gaussian(rng, a.field_order()));
  return x;
}

Cocycle2 z3z3() {
  const FiniteGroup g = FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
  std::vector<std::vector<Rational>> angles(9, std::vector<Rational>(9));
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) angles[a][b] = Rational((a % 3) * (b / 3), 3);
  return Cocycle2(g, angles);
}

std::vector<std::complex<double>> numeric(const TwistedElement& x, int n) {
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (const auto& [g, c] : x.terms()) out[static_cast<std::size_t>(g)] = c.to_complex();
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials and euler phi") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<long>{1, 0, 0, 0, 1});
  for (int m = 1; m <= 40; ++m) {
    int phi = 0;
    for (int k = 1; k <= m; ++k) phi += std::gcd(k, m) == 1;
    CHECK(euler_phi(m) == phi);
    CHECK(static_cast<int>(cyclotomic_polynomial(m).size()) == phi + 1);
  }
}

TEST_CASE("cyclotomic arithmetic") {
  for (int m : {4, 6, 12, 36}) {
    const Cyclotomic zeta = Cyclotomic::root_of_unity(m, Rational(1, m));
    Cyclotomic p(m, Rational(1));
    for (int k = 0; k < m; ++k) {
      const cplx want = std::polar(1.0, 2.0 * M_PI * k / m);
      CHECK(std::abs(p.to_complex() - want) < 1e-9);
      CHECK(p == Cyclotomic::root_of_unity(m, Rational(k, m)));
      p *= zeta;
    }
    CHECK(p == Cyclotomic(m, Rational(1)));
    CHECK(zeta * zeta.conj() == Cyclotomic(m, Rational(1)));
  }
  const Cyclotomic i = Cyclotomic::gaussian(4, Rational(0), Rational(1));
  CHECK(i == Cyclotomic::root_of_unity(4, R("1/4")));
  CHECK(i * i == Cyclotomic(4, Rational(-1)));
  CHECK((i * i).is_rational());
  CHECK_FALSE(i.is_rational());
  CHECK_THROWS(i.rational_value());
  CHECK_THROWS(Cyclotomic::root_of_unity(4, R("1/3")));
  CHECK_THROWS(Cyclotomic(4, Rational(1)) + Cyclotomic(6, Rational(1)));
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const Cyclotomic a = random_gaussian(rng, 12), b = random_gaussian(rng, 12);
    const Cyclotomic w = Cyclotomic::root_of_unity(12, Rational(t % 12, 12));
    const cplx na = a.to_complex(), nb = b.to_complex(), nw = w.to_complex();
    CHECK(std::abs((a * b * w).to_complex() - na * nb * nw) < 1e-6);
    CHECK(std::abs((a - b * w).to_complex() - (na - nb * nw)) < 1e-6);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).is_rational());
  }
}

TEST_CASE("finite groups") {
  const FiniteGroup k = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(k.order() == 4);
  CHECK(k.is_abelian());
  CHECK(k.label(3) == "(1,1)");
  for (int g = 0; g < 4; ++g) CHECK(k.mul(g, k.inverse(g)) == k.identity());
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 2, 0}}), std::invalid_argument);
  // S3 as a permutation table: not abelian.
  const std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  CHECK_FALSE(FiniteGroup(table).is_abelian());
}

TEST_CASE("pauli cocycle") {
  const Cocycle2 mu = Cocycle2::pauli();
  CHECK(validate_cocycle(mu).valid);
  CHECK(numeric_cocycle_ok(mu));
  const TwistedAlgebra a(mu);
  CHECK(a.field_order() == 4);
  const TwistedElement x = a.basis(1), z = a.basis(2);
  const TwistedElement xz = a.multiply(x, z), zx = a.multiply(z, x);
  CHECK(xz != zx);
  CHECK(xz.coefficient(3) == Cyclotomic(4, Rational(-1)));
  CHECK(zx.coefficient(3) == Cyclotomic(4, Rational(1)));
  CHECK(a.j_angle(0) == Rational(0));
  CHECK(a.j_angle(1) == Rational(0));
  CHECK(a.j_angle(2) == Rational(0));
  CHECK(a.j_angle(3) == R("1/2"));
  CHECK(a.j(3) == Cyclotomic(4, Rational(-1)));
  CHECK(a.mu_j_violations().empty());
  const PositivityReport p = a.positivity_check();
  CHECK(p.diagonal);
  CHECK(p.positive_definite);
  for (const Cyclotomic& c : p.diagonal_entries) CHECK(c == Cyclotomic(4, Rational(1)));
  CHECK(a.center_dimension() == 1);
  CHECK(a.block_dimensions() == std::vector<int>{2});
}

TEST_CASE("flipping the forced sign of j breaks positivity") {
  const TwistedAlgebra a(Cocycle2::pauli());
  std::vector<Rational> flipped{Rational(0), Rational(0), Rational(0), Rational(0)};
  const PositivityReport p = a.positivity_check(flipped);
  CHECK_FALSE(p.positive_definite);
  CHECK(p.diagonal_entries[3] == Cyclotomic(4, Rational(-1)));
  CHECK_THROWS_AS(a.positivity_check(std::vector<Rational>{Rational(0)}), std::invalid_argument);
}

TEST_CASE("trivial cocycles give commutative algebras") {
  const FiniteGroup klein = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const TwistedAlgebra k(Cocycle2::trivial(klein));
  CHECK(k.center_dimension() == 4);
  CHECK(k.block_dimensions() == std::vector<int>{1, 1, 1, 1});
  for (int g = 0; g < 4; ++g) CHECK(k.j_angle(g) == Rational(0));
  const TwistedAlgebra z2(Cocycle2::trivial(FiniteGroup::cyclic(2)));
  CHECK(z2.center_dimension() == 2);
  CHECK(TwistedAlgebra(Cocycle2::trivial(FiniteGroup::cyclic(5))).center_dimension() == 5);
}

TEST_CASE("heisenberg cocycle on Z3 x Z3") {
  const Cocycle2 mu = z3z3();
  CHECK(validate_cocycle(mu).valid);
  const TwistedAlgebra a(mu);
  CHECK(a.field_order() == 12);
  CHECK(a.center_dimension() == 1);
  CHECK(a.block_dimensions() == std::vector<int>{3});
  CHECK(a.mu_j_violations().empty());
  CHECK(a.positivity_check().positive_definite);
}

TEST_CASE("center dimension of a non-abelian group algebra") {
  const std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  const TwistedAlgebra s3(Cocycle2::trivial(FiniteGroup(table)));
  // Three conjugacy classes.
  CHECK(s3.center_dimension() == 3);
  CHECK_FALSE(s3.block_dimensions().has_value());
}

TEST_CASE("validation agrees with the numeric cocycle identity on mutated tables") {
  std::mt19937_64 rng(72);
  const Cocycle2 seeds[] = {Cocycle2::pauli(), z3z3(),
                            Cocycle2::trivial(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)))};
  int valid_seen = 0, invalid_seen = 0;
  for (const Cocycle2& seed : seeds) {
    const int n = seed.group().order();
    std::uniform_int_distribution<int> pick(0, n - 1), num(0, 11);
    for (int t = 0; t < 40; ++t) {
      std::vector<std::vector<Rational>> angles(n, std::vector<Rational>(n));
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) angles[g][h] = seed.angle(g, h);
      // Coboundary shifts keep validity; single-entry shifts usually break it.
      if (t % 2 == 0) {
        std::vector<Rational> f(n);
        for (int g = 0; g < n; ++g) f[g] = g == seed.group().identity() ? Rational(0) : Rational(num(rng), 12);
        for (int g = 0; g < n; ++g)
          for (int h = 0; h < n; ++h) angles[g][h] += f[g] + f[h] - f[seed.group().mul(g, h)];
      } else {
        angles[pick(rng)][pick(rng)] += Rational(num(rng), 12);
      }
      const Cocycle2 mu(seed.group(), angles);
      const bool valid = validate_cocycle(mu).valid;
      CHECK(valid == numeric_cocycle_ok(mu));
      if (valid) {
        ++valid_seen;
        CHECK_NOTHROW(TwistedAlgebra{mu});
      } else {
        ++invalid_seen;
        CHECK_THROWS_AS(TwistedAlgebra{mu}, std::invalid_argument);
      }
    }
  }
  CHECK(valid_seen > 0);
  CHECK(invalid_seen > 0);
}

TEST_CASE("twisted algebra products match a numeric model") {
  std::mt19937_64 rng(73);
  for (const Cocycle2& mu : {Cocycle2::pauli(), z3z3()}) {
    const TwistedAlgebra a(mu);
    const FiniteGroup& g = a.group();
    const int n = g.order();
    for (int t = 0; t < 20; ++t) {
      const TwistedElement x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
      const auto nx = numeric(x, n), ny = numeric(y, n);
      std::vector<cplx> want(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) want[g.mul(p, q)] += nx[p] * ny[q] * phase(mu.angle(p, q));
      const auto got = numeric(a.multiply(x, y), n);
      for (int p = 0; p < n; ++p) CHECK(std::abs(got[p] - want[p]) < 1e-6);
      CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
      CHECK(a.star(a.star(x)) == x);
      CHECK(a.star(a.multiply(x, y)) == a.multiply(a.star(y), a.star(x)));
    }
  }
}

TEST_CASE("trace of x* x is positive") {
  std::mt19937_64 rng(74);
  const FiniteGroup klein = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  for (const Cocycle2& mu : {Cocycle2::pauli(), z3z3(), Cocycle2::trivial(klein)}) {
    const TwistedAlgebra a(mu);
    for (int t = 0; t < 30; ++t) {
      const TwistedElement x = random_element(a, rng);
      const Cyclotomic v = a.tau(a.multiply(a.star(x), x));
      REQUIRE(v.is_rational());
      if (x.is_zero()) CHECK(v.rational_value() == Rational(0));
      else CHECK(v.rational_value() > Rational(0));
    }
  }
}

TEST_CASE("block dimensions account for the whole algebra") {
  const FiniteGroup klein = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  for (const Cocycle2& mu : {Cocycle2::pauli(), z3z3(), Cocycle2::trivial(klein),
                             Cocycle2::trivial(FiniteGroup::cyclic(6))}) {
    const TwistedAlgebra a(mu);
    const auto blocks = a.block_dimensions();
    REQUIRE(blocks.has_value());
    int total = 0;
    for (int d : *blocks) total += d * d;
    CHECK(total == a.dimension());
    CHECK(static_cast<int>(blocks->size()) == a.center_dimension());
  }
}

TEST_CASE("cocycle files") {
  const Cocycle2 p = read_cocycle(testing::data_path("pauli_cocycle.json"));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) CHECK(p.angle(g, h) == Cocycle2::pauli().angle(g, h));
  CHECK(TwistedAlgebra(read_cocycle(testing::data_path("z3z3_cocycle.json"))).center_dimension() == 1);
  CHECK(TwistedAlgebra(read_cocycle(testing::data_path("klein_trivial_cocycle.json"))).center_dimension() == 4);
  CHECK(TwistedAlgebra(read_cocycle(testing::data_path("z2_trivial_cocycle.json"))).center_dimension() == 2);

  const ValidationReport bad = validate_cocycle(read_cocycle(testing::data_path("bad_normalization_cocycle.json")));
  CHECK_FALSE(bad.valid);
  REQUIRE_FALSE(bad.failures.empty());
  CHECK(bad.failures.front().kind == CocycleFailure::Kind::normalization);

  auto message = [](const std::string& text) {
    try {
      parse_cocycle(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"group": [[0]]})").find("mu") != std::string::npos);
  CHECK(message(R"({"mu": [["0"]]})").find("group") != std::string::npos);
  CHECK(message(R"({"group": [[0]], "mu": [[0]]})").find("mu[0][0]") != std::string::npos);
  CHECK(message(R"({"group": [[0, 1], [1, 1]], "mu": [["0","0"],["0","0"]]})").find("group") != std::string::npos);
  CHECK(message(R"({"group": [[0]], "mu": [["0"]], "labels": [1]})").find("labels") != std::string::npos);
  CHECK(message("{").find("invalid JSON") != std::string::npos);
  CHECK(message(R"({"group": [[0]], "mu": [["3/2"]]})") == "no error");
  CHECK(parse_cocycle(R"({"group": [[0]], "mu": [["3/2"]]})").angle(0, 0) == R("1/2"));
}
