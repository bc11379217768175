#pragma once

#include <random>
#include <string>

#include "hindex/germ_file.hpp"

namespace testing_support {

inline hindex::Polynomial P(const std::string& text, const hindex::RingPtr& ring) {
  return hindex::parse_polynomial(text, ring);
}

inline hindex::GermFile corpus(const std::string& name) {
  return hindex::load_germ(std::string(HINDEX_CORPUS_DIR) + "/" + name + ".germ");
}

inline hindex::OneForm form(const hindex::RingPtr& ring, std::initializer_list<const char*> coeffs) {
  hindex::OneForm w;
  for (const char* c : coeffs) w.coefficients.push_back(P(c, ring));
  return w;
}

// Random polynomial with small integer coefficients and degree <= max_degree.
inline hindex::Polynomial random_polynomial(const hindex::RingPtr& ring, std::mt19937_64& rng, int terms,
                                            int max_degree, int min_degree = 0) {
  hindex::Polynomial p(ring);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int k = 0; k < terms; ++k) {
    hindex::Monomial m(ring->size());
    int budget = std::uniform_int_distribution<int>(min_degree, max_degree)(rng);
    for (int step = 0; step < budget; ++step) {
      std::size_t j = std::uniform_int_distribution<std::size_t>(0, ring->size() - 1)(rng);
      m.set(j, m[j] + 1);
    }
    p.add_term(m, hindex::Rational(coef(rng)));
  }
  return p;
}

}  // namespace testing_support
