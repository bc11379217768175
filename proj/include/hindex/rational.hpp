#pragma once

#include <gmpxx.h>

#include <string>

namespace hindex {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every mutation goes through its operators.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hindex
