#pragma once

#include <cstdint>
#include <vector>

#include "hindex/polynomial.hpp"
#include "hindex/stdbasis.hpp"

// Brute-force references that share no elimination code with the library.
namespace oracle {

// dim Q[x] / (gens + m^D) by dense Gaussian elimination over Q on the
// monomials of degree < D. Equals the local colength once m^D lies in the
// ideal, e.g. for D at least the colength.
std::size_t truncated_colength(const std::vector<hindex::Polynomial>& gens, int D);

// dim_d of R^rank / <relations> for d = 0..max_degree, R graded by weights and
// e_c of degree gen_degrees[c]; relations must be homogeneous. Linear algebra
// modulo the prime 2^31 - 1, one degree at a time.
std::vector<std::int64_t> graded_dimensions(std::size_t rank, const std::vector<int>& gen_degrees,
                                            const std::vector<hindex::FreeElement>& relations,
                                            const std::vector<int>& weights, int max_degree);

// All monomials in n variables with weighted degree d (weights positive).
std::vector<hindex::Monomial> monomials_of_degree(std::size_t n, const std::vector<int>& weights, int d);

}  // namespace oracle
