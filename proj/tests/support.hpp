#pragma once

// Hand-rolled random generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "qaut/ncalg.hpp"

namespace qaut::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Small Gaussian rationals, zero included on purpose.
  GaussQ scalar() {
    return GaussQ(mpq_class(uniform(-4, 4), uniform(1, 3)), mpq_class(uniform(-2, 2), uniform(1, 2)));
  }

  GaussQ nonzero_scalar() {
    GaussQ s = scalar();
    while (s.is_zero()) s = scalar();
    return s;
  }

  Gen pick(const std::vector<Gen>& letters) {
    return letters[static_cast<std::size_t>(uniform(0, static_cast<int>(letters.size()) - 1))];
  }

  Word word(const std::vector<Gen>& letters, int max_len) {
    Word::Storage w;
    const int len = uniform(0, max_len);
    for (int i = 0; i < len; ++i) w.push_back(pick(letters));
    return Word(std::move(w));
  }

  NCPoly poly(const std::vector<Gen>& letters, int max_terms, int max_len) {
    std::vector<Term> terms;
    const int count = uniform(0, max_terms);
    for (int i = 0; i < count; ++i) terms.push_back({word(letters, max_len), scalar()});
    return NCPoly::from_terms(std::move(terms));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Generators together with their stars.
inline std::vector<Gen> with_stars(const std::vector<Gen>& gens) {
  std::vector<Gen> out = gens;
  for (Gen g : gens) out.push_back(g.star());
  return out;
}

inline std::vector<Gen> magic_letters(int n) {
  std::vector<Gen> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(Gen::x(i, j));
  return out;
}

}  // namespace qaut::testing
