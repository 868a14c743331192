#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "sfi/fair_graph.hpp"
#include "sfi/rational.hpp"
#include "sfi/temperley_lieb.hpp"

namespace sfi::testing {

inline std::string data_path(const std::string& name) { return std::string(SFI_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline FairGraph load_graph(const std::string& name) { return read_graph(slurp(data_path(name))); }

inline Rational R(const char* s) { return Rational::parse(s); }

// Small rational in [-4, 4] with denominator at most 4, zero excluded when asked.
inline Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-16, 16);
  std::uniform_int_distribution<long> den(1, 4);
  for (;;) {
    Rational r(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

// Random combination of up to `terms` pairings n -> m.
inline tl::TLMorphism random_morphism(std::mt19937_64& rng, int n, int m, int terms = 3) {
  const auto basis = tl::enumerate_pairings(n, m);
  tl::TLMorphism f(n, m);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < terms; ++t) f.add_term(basis[pick(rng)], random_rational(rng, true));
  return f;
}

}  // namespace sfi::testing
