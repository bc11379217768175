#include "hindex/order.hpp"

#include <sstream>

#include "hindex/errors.hpp"

namespace hindex {

namespace {

std::vector<int> parse_weights(const std::string& list) {
  std::vector<int> w;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      w.push_back(v);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad weight '" + item + "' in order specification");
    }
  }
  return w;
}

void check_weights(const std::vector<int>& w) {
  if (w.empty()) throw PreconditionError("weighted order needs a weight vector");
  for (int x : w)
    if (x <= 0) throw PreconditionError("order weights must be positive");
}

}  // namespace

MonomialOrder MonomialOrder::weighted(std::vector<int> w) {
  check_weights(w);
  return MonomialOrder(Kind::WeightedDegRevLex, std::move(w));
}

MonomialOrder MonomialOrder::weighted_local(std::vector<int> w) {
  check_weights(w);
  return MonomialOrder(Kind::NegWeightedDegRevLex, std::move(w));
}

MonomialOrder MonomialOrder::parse(const std::string& spec) {
  if (spec == "degrevlex") return degrevlex();
  if (spec == "lex") return lex();
  if (spec == "local") return local();
  if (spec.rfind("wdegrevlex:", 0) == 0) return weighted(parse_weights(spec.substr(11)));
  if (spec.rfind("wlocal:", 0) == 0) return weighted_local(parse_weights(spec.substr(7)));
  throw PreconditionError("unknown order '" + spec + "'");
}

int MonomialOrder::revlex_tiebreak(const Monomial& a, const Monomial& b) {
  // Among equal degrees the monomial with the smaller exponent in the last
  // differing variable is larger.
  for (std::size_t j = a.size(); j-- > 0;) {
    if (a[j] != b[j]) return a[j] < b[j] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  Monomial::check_same_length(a, b);
  if (!weights_.empty() && weights_.size() != a.size()) {
    throw ContextMismatch("order weight vector does not match the number of variables");
  }
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != b[j]) return a[j] > b[j] ? 1 : -1;
      return 0;
    case Kind::DegRevLex:
    case Kind::WeightedDegRevLex: {
      int da = degree(a), db = degree(b);
      if (da != db) return da > db ? 1 : -1;
      return revlex_tiebreak(a, b);
    }
    case Kind::NegDegRevLex:
    case Kind::NegWeightedDegRevLex: {
      int da = degree(a), db = degree(b);
      if (da != db) return da < db ? 1 : -1;
      return revlex_tiebreak(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  auto join = [this] {
    std::string s;
    for (std::size_t j = 0; j < weights_.size(); ++j) s += (j ? "," : "") + std::to_string(weights_[j]);
    return s;
  };
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::NegDegRevLex: return "local";
    case Kind::WeightedDegRevLex: return "wdegrevlex:" + join();
    case Kind::NegWeightedDegRevLex: return "wlocal:" + join();
  }
  return "?";
}

}  // namespace hindex
