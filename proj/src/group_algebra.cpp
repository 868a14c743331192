#include "sfi/group_algebra.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sfi/matrix.hpp"

namespace sfi::group {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("group: empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group: entry " + std::to_string(v) + " out of range");
  }
  if (labels_.empty())
    for (int g = 0; g < n; ++g) labels_.push_back(std::to_string(g));
  if (static_cast<int>(labels_.size()) != n) throw std::invalid_argument("group: wrong number of labels");

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("group: no identity element");

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (mul(mul(g, h), k) != mul(g, mul(h, k)))
          throw std::invalid_argument("group: not associative at (" + labels_[g] + ", " + labels_[h] + ", " +
                                      labels_[k] + ")");

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (mul(g, h) == identity_ && mul(h, g) == identity_) inverse_[g] = h;
    if (inverse_[g] < 0) throw std::invalid_argument("group: " + labels_[g] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order();
  const int n = g.order() * m;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    labels.push_back("(" + g.label(x / m) + "," + h.label(x % m) + ")");
    for (int y = 0; y < n; ++y) t[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order(); ++g)
    for (int h = 0; h < g; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

Rational reduce_angle(const Rational& a) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
  return a - Rational(mpq_class(fl));
}

Cocycle2::Cocycle2(FiniteGroup group, std::vector<std::vector<Rational>> angles)
    : group_(std::move(group)), angles_(std::move(angles)) {
  const auto n = static_cast<std::size_t>(group_.order());
  if (angles_.size() != n) throw std::invalid_argument("cocycle: mu table has wrong size");
  long order = 4;
  for (auto& row : angles_) {
    if (row.size() != n) throw std::invalid_argument("cocycle: mu table is not square");
    for (auto& a : row) {
      a = reduce_angle(a);
      if (!a.denominator().fits_slong_p() || a.denominator() > 100000)
        throw std::invalid_argument("cocycle: angle denominator too large");
      order = std::lcm(order, a.denominator().get_si());
    }
  }
  if (order > 100000) throw std::invalid_argument("cocycle: field order too large");
  field_order_ = static_cast<int>(order);
}

Cocycle2 Cocycle2::trivial(FiniteGroup group) {
  const auto n = static_cast<std::size_t>(group.order());
  return Cocycle2(std::move(group), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
}

Cocycle2 Cocycle2::pauli() {
  FiniteGroup k = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) a[g][h] = Rational((g % 2) * (h / 2), 2);
  return Cocycle2(std::move(k), std::move(a));
}

ValidationReport validate_cocycle(const Cocycle2& mu) {
  ValidationReport report;
  const FiniteGroup& G = mu.group();
  const int n = G.order();
  const int e = G.identity();
  for (int g = 0; g < n; ++g) {
    if (!mu.angle(e, g).is_zero())
      report.failures.push_back({CocycleFailure::Kind::normalization, e, g, -1,
                                 "mu(e," + G.label(g) + ") = exp(2 pi i " + mu.angle(e, g).to_string() + ")"});
    if (g != e && !mu.angle(g, e).is_zero())
      report.failures.push_back({CocycleFailure::Kind::normalization, g, e, -1,
                                 "mu(" + G.label(g) + ",e) = exp(2 pi i " + mu.angle(g, e).to_string() + ")"});
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        const Rational defect =
            mu.angle(g, h) + mu.angle(G.mul(g, h), k) - mu.angle(h, k) - mu.angle(g, G.mul(h, k));
        if (!defect.is_integer())
          report.failures.push_back({CocycleFailure::Kind::identity, g, h, k,
                                     "cocycle identity fails at (" + G.label(g) + ", " + G.label(h) + ", " +
                                         G.label(k) + "), angle defect " + reduce_angle(defect).to_string()});
      }
  report.valid = report.failures.empty();
  return report;
}

Cyclotomic TwistedElement::coefficient(int g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? Cyclotomic(order_) : it->second;
}

void TwistedElement::add_term(int g, const Cyclotomic& c) {
  if (c.order() != order_) throw std::invalid_argument("twisted element: coefficient of wrong field order");
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

TwistedElement& TwistedElement::operator-=(const TwistedElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

std::string TwistedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")u" << g;
  }
  return os.str();
}

TwistedAlgebra::TwistedAlgebra(Cocycle2 mu) : mu_(std::move(mu)) {
  const ValidationReport report = validate_cocycle(mu_);
  if (!report.valid) throw std::invalid_argument("twisted algebra: " + report.failures.front().message);
  const int n = group().order();
  const int m = field_order();
  mu_values_.assign(n, std::vector<Cyclotomic>(n, Cyclotomic(m)));
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) mu_values_[g][h] = Cyclotomic::root_of_unity(m, mu_.angle(g, h));
    j_angles_.push_back(reduce_angle(-mu_.angle(group().inverse(g), g)));
  }
}

TwistedElement TwistedAlgebra::basis(int g) const {
  TwistedElement x(field_order());
  x.add_term(g, Cyclotomic(field_order(), Rational(1)));
  return x;
}

TwistedElement TwistedAlgebra::scalar(const Cyclotomic& c) const {
  TwistedElement x(field_order());
  x.add_term(group().identity(), c);
  return x;
}

Cyclotomic TwistedAlgebra::mu_value(int g, int h) const { return mu_values_.at(g).at(h); }

TwistedElement TwistedAlgebra::multiply(const TwistedElement& x, const TwistedElement& y) const {
  TwistedElement out(field_order());
  for (const auto& [g, a] : x.terms())
    for (const auto& [h, b] : y.terms()) out.add_term(group().mul(g, h), a * b * mu_values_[g][h]);
  return out;
}

Cyclotomic TwistedAlgebra::j(int g) const { return Cyclotomic::root_of_unity(field_order(), j_angle(g)); }

TwistedElement TwistedAlgebra::star_with(const TwistedElement& x, const std::vector<Rational>& j_angles) const {
  TwistedElement out(field_order());
  for (const auto& [g, c] : x.terms())
    out.add_term(group().inverse(g), c.conj() * Cyclotomic::root_of_unity(field_order(), j_angles.at(g)));
  return out;
}

TwistedElement TwistedAlgebra::star(const TwistedElement& x) const { return star_with(x, j_angles_); }

Cyclotomic TwistedAlgebra::tau(const TwistedElement& x) const { return x.coefficient(group().identity()); }

std::vector<MuJFailure> TwistedAlgebra::mu_j_violations() const {
  std::vector<MuJFailure> out;
  const FiniteGroup& G = group();
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      const Rational lhs = j_angle(G.mul(g, h)) - mu_.angle(g, h);
      const Rational rhs = j_angle(g) + j_angle(h) + mu_.angle(G.inverse(h), G.inverse(g));
      if (!(lhs - rhs).is_integer()) out.push_back({g, h});
    }
  return out;
}

std::vector<std::vector<Cyclotomic>> TwistedAlgebra::gram_matrix(
    const std::optional<std::vector<Rational>>& j_override) const {
  const std::vector<Rational>& js = j_override ? *j_override : j_angles_;
  if (js.size() != static_cast<std::size_t>(dimension()))
    throw std::invalid_argument("gram_matrix: j override has wrong size");
  const int n = dimension();
  std::vector<std::vector<Cyclotomic>> gram(n, std::vector<Cyclotomic>(n, Cyclotomic(field_order())));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) gram[g][h] = tau(multiply(star_with(basis(h), js), basis(g)));
  return gram;
}

PositivityReport TwistedAlgebra::positivity_check(const std::optional<std::vector<Rational>>& j_override) const {
  const auto gram = gram_matrix(j_override);
  PositivityReport report;
  const auto n = gram.size();
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (g != h && !gram[g][h].is_zero()) report.diagonal = false;
    report.diagonal_entries.push_back(gram[g][g]);
    const Cyclotomic& d = gram[g][g];
    if (!d.is_rational() || d.rational_value().sign() <= 0) report.positive_definite = false;
  }
  // Off-diagonal Gram entries never occur for a twisted group algebra; if they
  // do, the input was not of that form and positivity is not certified.
  if (!report.diagonal) report.positive_definite = false;
  return report;
}

int TwistedAlgebra::center_dimension() const {
  const FiniteGroup& G = group();
  const int n = G.order();
  const int m = field_order();
  const auto deg = static_cast<std::size_t>(euler_phi(m));
  const auto un = static_cast<std::size_t>(n);
  // Unknown x = sum c_g u_g with c_g in Q(zeta_m) ~ Q^deg. Row block (h, k)
  // holds the u_k coefficient of x u_h - u_h x.
  RationalMatrix a(un * un * deg, un * deg);
  auto accumulate = [&](int h, int k, int g, int power, int sign) {
    const auto rot = Cyclotomic::rotation_matrix(m, power);
    for (std::size_t r = 0; r < deg; ++r)
      for (std::size_t c = 0; c < deg; ++c) {
        if (rot[r][c].is_zero()) continue;
        a((static_cast<std::size_t>(h) * un + static_cast<std::size_t>(k)) * deg + r,
          static_cast<std::size_t>(g) * deg + c) += Rational(sign) * rot[r][c];
      }
  };
  auto power_of = [&](const Rational& angle) {
    return static_cast<int>((angle * Rational(m)).numerator().get_si());
  };
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      accumulate(h, G.mul(g, h), g, power_of(mu_.angle(g, h)), 1);
      accumulate(h, G.mul(h, g), g, power_of(mu_.angle(h, g)), -1);
    }
  const std::size_t nullity = un * deg - rank(a);
  return static_cast<int>(nullity / deg);
}

std::optional<std::vector<int>> TwistedAlgebra::block_dimensions() const {
  if (!group().is_abelian()) return std::nullopt;
  const int z = center_dimension();
  const int n = dimension();
  if (n % z != 0) return std::nullopt;
  int d = 1;
  while (d * d < n / z) ++d;
  if (d * d != n / z) return std::nullopt;
  return std::vector<int>(static_cast<std::size_t>(z), d);
}

namespace {

using nlohmann::json;

Rational parse_angle(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": angle must be a rational string such as \"1/2\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

Cocycle2 parse_cocycle(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("cocycle file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("cocycle file: top level must be an object");
  if (!doc.contains("group") || !doc["group"].is_array()) throw ParseError("group: missing multiplication table");
  if (!doc.contains("mu") || !doc["mu"].is_array()) throw ParseError("mu: missing angle table");

  std::vector<std::vector<int>> table;
  for (std::size_t i = 0; i < doc["group"].size(); ++i) {
    const json& row = doc["group"][i];
    if (!row.is_array()) throw ParseError("group[" + std::to_string(i) + "]: expected an array");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer()) throw ParseError("group[" + std::to_string(i) + "]: entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("labels: expected an array of strings");
    for (const json& v : doc["labels"]) {
      if (!v.is_string()) throw ParseError("labels: expected an array of strings");
      labels.push_back(v.get<std::string>());
    }
  }
  std::vector<std::vector<Rational>> angles;
  for (std::size_t i = 0; i < doc["mu"].size(); ++i) {
    const json& row = doc["mu"][i];
    if (!row.is_array()) throw ParseError("mu[" + std::to_string(i) + "]: expected an array");
    std::vector<Rational> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      r.push_back(parse_angle(row[j], "mu[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    angles.push_back(std::move(r));
  }
  try {
    return Cocycle2(FiniteGroup(std::move(table), std::move(labels)), std::move(angles));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Cocycle2 read_cocycle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cocycle(buf.str());
}

}  // namespace sfi::group
