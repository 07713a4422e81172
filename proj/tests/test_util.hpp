#pragma once

#include <random>
#include <vector>

#include "symk/parser.hpp"
#include "symk/rational_function.hpp"

namespace symk::testutil {

/// Deterministic RNG for property tests; seed overridable via SYMK_TEST_SEED.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  std::uint64_t seed = 0x5eed0000u;
  if (const char* env = std::getenv("SYMK_TEST_SEED")) seed = std::strtoull(env, nullptr, 10);
  return std::mt19937_64(seed ^ salt);
}

inline Coeff random_coeff(std::mt19937_64& rng, const Field& f, int bound = 6) {
  if (f.kind() == Field::Kind::rationals) {
    std::uniform_int_distribution<long long> num(-bound, bound);
    std::uniform_int_distribution<long long> den(1, bound);
    return Coeff::rational(Rational(num(rng), den(rng)));
  }
  std::uniform_int_distribution<long long> pick(0, f.order() - 1);
  long long idx = pick(rng);
  return all_elements(f)[(std::size_t)idx];
}

inline Polynomial random_poly(std::mt19937_64& rng, const Field& f, const std::vector<VarId>& vars,
                              int max_terms = 4, std::uint32_t max_deg = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> pickvar(0, vars.empty() ? 0 : vars.size() - 1);
  Polynomial p(f);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    if (!vars.empty()) {
      int factors = (int)(deg(rng));
      for (int j = 0; j < factors; ++j) m = m * Monomial::var(vars[pickvar(rng)]);
    }
    p.add_term(m, random_coeff(rng, f));
  }
  return p;
}

inline Polynomial random_nonzero_poly(std::mt19937_64& rng, const Field& f,
                                      const std::vector<VarId>& vars, int max_terms = 4,
                                      std::uint32_t max_deg = 3) {
  for (int tries = 0; tries < 100; ++tries) {
    Polynomial p = random_poly(rng, f, vars, max_terms, max_deg);
    if (!p.is_zero()) return p;
  }
  return Polynomial::one(f);
}

inline RationalFunction random_rf(std::mt19937_64& rng, const Field& f, const std::vector<VarId>& vars,
                                  int max_terms = 3, std::uint32_t max_deg = 2) {
  return RationalFunction::make(random_poly(rng, f, vars, max_terms, max_deg),
                                random_nonzero_poly(rng, f, vars, max_terms, max_deg));
}

}  // namespace symk::testutil
