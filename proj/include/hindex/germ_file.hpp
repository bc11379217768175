#pragma once

#include <optional>
#include <string>

#include "hindex/curves.hpp"
#include "hindex/differentials.hpp"

namespace hindex {

// Parsed germ document:
//
//   [meta]    name = ..., icis = true|false, reduced = true|false, dim = n
//   [ring]    vars = x, y, ...      weights = w1, w2, ...   (optional)
//   [ideal]   one generator per line
//   [form]    N comma separated coefficients (may span lines)
//   [param]   one branch per line: N comma separated polynomials in t
//
// Expressions use rational literals, + - * / ^ and parentheses; '#' starts a
// comment. Without `dim` the germ is taken to have dimension N - #equations.
struct GermFile {
  std::string name;
  VarietyGerm germ;
  std::optional<OneForm> form;
  std::optional<CurveParametrization> param;
};

// Parses a polynomial over `ring`; line and column offsets locate errors in
// the enclosing document.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, std::size_t line = 1,
                            std::size_t column = 1);

// Throws ParseError (syntax, undeclared variables) or PreconditionError
// (declared weights violated, parametrization not on the germ).
GermFile parse_germ(const std::string& text);
GermFile load_germ(const std::string& path);

std::string format_germ(const GermFile& g);

bool operator==(const GermFile& a, const GermFile& b);

}  // namespace hindex
