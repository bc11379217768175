#include "hindex/germ_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hindex {

namespace {

// Recursive-descent parser for polynomial expressions.
class ExprParser {
 public:
  ExprParser(const std::string& text, const RingPtr& ring, std::size_t line, std::size_t column)
      : s_(text), ring_(ring), line_(line), col0_(column) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc *= Rational(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      if (digits.empty()) fail("exponent must be a nonnegative integer literal");
      if (digits.size() > 4) {
        pos_ = at;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      return Polynomial(ring_, Rational(Integer(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      auto j = ring_->index_of(name);
      if (!j) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *j);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

struct Line {
  std::string text;
  std::size_t number;
  std::size_t column;  // column of text[0] in the source line
};

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

// Splits on commas; each piece keeps its column.
std::vector<Line> split_commas(const Line& l) {
  std::vector<Line> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= l.text.size(); ++k) {
    if (k == l.text.size() || l.text[k] == ',') {
      std::size_t lead = 0;
      std::string piece = trim(l.text.substr(start, k - start), &lead);
      if (piece.empty()) throw ParseError("empty list entry", l.number, l.column + start);
      out.push_back({piece, l.number, l.column + start + lead});
      start = k + 1;
    }
  }
  return out;
}

bool parse_bool(const Line& l, const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ParseError("expected true or false, got '" + v + "'", l.number, l.column);
}

std::vector<int> parse_ints(const Line& l, const std::string& list) {
  std::vector<int> out;
  for (const auto& piece : split_commas({list, l.number, l.column})) {
    try {
      std::size_t used = 0;
      int v = std::stoi(piece.text, &used);
      if (used != piece.text.size()) throw std::invalid_argument(piece.text);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("expected an integer, got '" + piece.text + "'", piece.number, piece.column);
    }
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, std::size_t line, std::size_t column) {
  return ExprParser(text, ring, line, column).parse();
}

GermFile parse_germ(const std::string& text) {
  std::map<std::string, std::vector<Line>> sections;
  std::vector<std::string> order;
  std::string current;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t lead = 0;
    std::string t = trim(raw, &lead);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("unterminated section header", number, lead + 1);
      current = trim(t.substr(1, t.size() - 2));
      static const std::vector<std::string> known{"meta", "ring", "ideal", "form", "param"};
      if (std::find(known.begin(), known.end(), current) == known.end()) {
        throw ParseError("unknown section '" + current + "'", number, lead + 1);
      }
      if (sections.count(current)) throw ParseError("duplicate section '" + current + "'", number, lead + 1);
      sections[current];
      order.push_back(current);
      continue;
    }
    if (current.empty()) throw ParseError("content before the first section header", number, lead + 1);
    sections[current].push_back({t, number, lead + 1});
  }

  auto key_values = [&](const std::string& sec) {
    std::map<std::string, Line> kv;
    for (const auto& l : sections[sec]) {
      auto eq = l.text.find('=');
      if (eq == std::string::npos) throw ParseError("expected key = value", l.number, l.column);
      std::string key = trim(l.text.substr(0, eq));
      std::size_t lead = 0;
      std::string value = trim(l.text.substr(eq + 1), &lead);
      kv[key] = {value, l.number, l.column + eq + 1 + lead};
    }
    return kv;
  };

  if (!sections.count("ring")) throw ParseError("missing [ring] section", number, 1);
  auto ring_kv = key_values("ring");
  if (!ring_kv.count("vars")) throw ParseError("[ring] needs vars = ...", number, 1);
  std::vector<std::string> names;
  for (const auto& piece : split_commas(ring_kv["vars"])) {
    for (char c : piece.text)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw ParseError("bad variable name '" + piece.text + "'", piece.number, piece.column);
      }
    if (std::isdigit(static_cast<unsigned char>(piece.text.front()))) {
      throw ParseError("bad variable name '" + piece.text + "'", piece.number, piece.column);
    }
    if (std::find(names.begin(), names.end(), piece.text) != names.end()) {
      throw ParseError("variable '" + piece.text + "' declared twice", piece.number, piece.column);
    }
    names.push_back(piece.text);
  }
  for (const auto& [key, l] : ring_kv)
    if (key != "vars" && key != "weights") throw ParseError("unknown key '" + key + "' in [ring]", l.number, l.column);

  GermFile g;
  g.germ.ring = make_ring(names);
  const RingPtr& ring = g.germ.ring;
  const std::size_t n = ring->size();
  if (ring_kv.count("weights")) {
    auto w = parse_ints(ring_kv["weights"], ring_kv["weights"].text);
    if (w.size() != n) throw ParseError("one weight per variable is required", ring_kv["weights"].number, 1);
    g.germ.weights = std::move(w);
  }

  for (const auto& l : sections["ideal"]) {
    Polynomial f = parse_polynomial(l.text, ring, l.number, l.column);
    if (!f.is_zero()) g.germ.equations.push_back(std::move(f));
  }

  std::optional<int> dim;
  for (const auto& [key, l] : key_values("meta")) {
    if (key == "name") {
      g.name = l.text;
    } else if (key == "icis") {
      g.germ.icis = parse_bool(l, l.text);
    } else if (key == "reduced") {
      g.germ.reduced = parse_bool(l, l.text);
    } else if (key == "dim") {
      auto v = parse_ints(l, l.text);
      if (v.size() != 1) throw ParseError("dim takes one integer", l.number, l.column);
      dim = v.front();
    } else {
      throw ParseError("unknown key '" + key + "' in [meta]", l.number, l.column);
    }
  }
  g.germ.dimension = dim ? *dim : static_cast<int>(n) - static_cast<int>(g.germ.equations.size());

  if (sections.count("form")) {
    OneForm w;
    for (const auto& l : sections["form"])
      for (const auto& piece : split_commas(l))
        w.coefficients.push_back(parse_polynomial(piece.text, ring, piece.number, piece.column));
    if (w.coefficients.size() != n) {
      const auto& l = sections["form"].empty() ? Line{"", number, 1} : sections["form"].front();
      throw ParseError("form needs " + std::to_string(n) + " coefficients, got " +
                           std::to_string(w.coefficients.size()),
                       l.number, l.column);
    }
    g.form = std::move(w);
  }

  if (sections.count("param")) {
    const RingPtr tring = make_ring({"t"});
    CurveParametrization param;
    for (const auto& l : sections["param"]) {
      Branch br;
      for (const auto& piece : split_commas(l)) {
        Polynomial p = parse_polynomial(piece.text, tring, piece.number, piece.column);
        std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
        for (const auto& [m, coef] : p.terms()) c[static_cast<std::size_t>(m[0])] = coef;
        br.coords.emplace_back(std::move(c));
      }
      if (br.coords.size() != n) {
        throw ParseError("branch needs " + std::to_string(n) + " coordinates", l.number, l.column);
      }
      param.branches.push_back(std::move(br));
    }
    g.param = std::move(param);
  }

  g.germ.validate();
  if (g.param) check_parametrization(g.germ, *g.param);
  return g;
}

GermFile load_germ(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_germ(ss.str());
}

std::string format_germ(const GermFile& g) {
  std::ostringstream out;
  out << "[meta]\n";
  if (!g.name.empty()) out << "name = " << g.name << "\n";
  out << "icis = " << (g.germ.icis ? "true" : "false") << "\n";
  out << "reduced = " << (g.germ.reduced ? "true" : "false") << "\n";
  out << "dim = " << g.germ.dimension << "\n\n[ring]\nvars = ";
  const auto& names = g.germ.ring->names();
  for (std::size_t j = 0; j < names.size(); ++j) out << (j ? ", " : "") << names[j];
  out << "\n";
  if (g.germ.weights) {
    out << "weights = ";
    for (std::size_t j = 0; j < g.germ.weights->size(); ++j) out << (j ? ", " : "") << (*g.germ.weights)[j];
    out << "\n";
  }
  out << "\n[ideal]\n";
  for (const auto& f : g.germ.equations) out << f.to_string() << "\n";
  if (g.form) {
    out << "\n[form]\n";
    for (std::size_t j = 0; j < g.form->size(); ++j) out << (j ? ", " : "") << g.form->coefficients[j].to_string();
    out << "\n";
  }
  if (g.param) {
    out << "\n[param]\n";
    for (const auto& br : g.param->branches) {
      for (std::size_t j = 0; j < br.coords.size(); ++j) out << (j ? ", " : "") << br.coords[j].to_string("t");
      out << "\n";
    }
  }
  return out.str();
}

bool operator==(const GermFile& a, const GermFile& b) {
  auto same_form = [](const std::optional<OneForm>& x, const std::optional<OneForm>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || x->coefficients == y->coefficients;
  };
  auto same_param = [](const std::optional<CurveParametrization>& x, const std::optional<CurveParametrization>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    if (x->size() != y->size()) return false;
    for (std::size_t b = 0; b < x->size(); ++b)
      if (x->branches[b].coords != y->branches[b].coords) return false;
    return true;
  };
  return a.name == b.name && *a.germ.ring == *b.germ.ring && a.germ.equations == b.germ.equations &&
         a.germ.dimension == b.germ.dimension && a.germ.icis == b.germ.icis && a.germ.reduced == b.germ.reduced &&
         a.germ.weights == b.germ.weights && same_form(a.form, b.form) && same_param(a.param, b.param);
}

}  // namespace hindex
