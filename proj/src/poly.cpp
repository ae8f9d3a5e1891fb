#include "jdt/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "jdt/errors.hpp"

namespace jdt {

bool SparsePoly::GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly::SparsePoly(unsigned arity) : arity_(arity) {
  if (arity == 0 || arity > 16) throw Error("polynomial arity out of range");
}

SparsePoly SparsePoly::constant(unsigned arity, const Rational& c) {
  SparsePoly p(arity);
  if (c != 0) p.terms_.emplace(Exponents(p.nvars(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(unsigned arity, unsigned code) {
  SparsePoly p(arity);
  if (code >= p.nvars()) throw Error("variable code out of range");
  Exponents e(p.nvars(), 0);
  e[code] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

SparsePoly SparsePoly::monomial(unsigned arity, Exponents exps, const Rational& c) {
  SparsePoly p(arity);
  if (exps.size() != p.nvars()) throw Error("exponent vector has wrong length");
  for (int e : exps)
    if (e < 0) throw Error("negative exponent");
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

void SparsePoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars()) throw Error("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePoly::coefficient_of(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {
void require_same_arity(const SparsePoly& a, const SparsePoly& b) {
  if (a.arity() != b.arity()) throw Error("polynomial arity mismatch");
}
}  // namespace

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  require_same_arity(*this, o);
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  require_same_arity(*this, o);
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  require_same_arity(*this, o);
  SparsePoly r(arity_);
  Exponents sum(nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly r(arity_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly r = constant(arity_, Rational(1));
  SparsePoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return arity_ == o.arity_ && terms_ == o.terms_;
}

SparsePoly SparsePoly::derivative(unsigned code) const {
  if (code >= nvars()) throw Error("variable code out of range");
  SparsePoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[code] == 0) continue;
    Exponents d = e;
    --d[code];
    r.terms_.emplace(std::move(d), c * e[code]);
  }
  return r;
}

SparsePoly SparsePoly::substituted(const std::map<unsigned, SparsePoly>& images) const {
  for (const auto& [code, img] : images) {
    if (code >= nvars()) throw Error("variable code out of range");
    require_same_arity(*this, img);
  }
  SparsePoly result(arity_);
  std::map<unsigned, std::vector<SparsePoly>> powers;  // cached images^k
  for (const auto& [e, c] : terms_) {
    SparsePoly prod = constant(arity_, c);
    for (unsigned code = 0; code < nvars(); ++code) {
      int k = e[code];
      if (k == 0) continue;
      auto it = images.find(code);
      if (it == images.end())
        throw Error("no substitution image for variable " +
                    variable_name(code, arity_, RenderStyle::Raw));
      auto& pw = powers[code];
      if (pw.empty()) pw.push_back(constant(arity_, Rational(1)));
      while (pw.size() <= static_cast<size_t>(k)) pw.push_back(pw.back() * it->second);
      prod = prod * pw[static_cast<size_t>(k)];
    }
    result = result + prod;
  }
  return result;
}

SparsePoly SparsePoly::homogeneous_part(int d) const {
  SparsePoly r(arity_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
  return r;
}

int SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), 0);
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Exponents& lo = terms_.begin()->first;
  const Exponents& hi = terms_.rbegin()->first;
  return std::accumulate(lo.begin(), lo.end(), 0) == std::accumulate(hi.begin(), hi.end(), 0);
}

SparsePoly SparsePoly::lifted(unsigned new_arity) const {
  if (new_arity < arity_) throw Error("cannot lift to a smaller arity");
  if (new_arity == arity_) return *this;
  const unsigned shift = new_arity - arity_;
  SparsePoly r(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponents ne(r.nvars(), 0);
    for (unsigned code = 0; code < nvars(); ++code) ne[code << shift] = e[code];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars()) throw Error("evaluation point has wrong length");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (unsigned code = 0; code < nvars(); ++code)
      for (int k = 0; k < e[code]; ++k) t *= point[code];
    total += t;
  }
  return total;
}

Rational SparsePoly::sum_of_coefficients() const {
  Rational total(0);
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

bool SparsePoly::integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

// --- rendering ---------------------------------------------------------------

std::string variable_name(unsigned code, unsigned arity, RenderStyle style) {
  if (code >= (1u << arity)) throw Error("variable code out of range");
  if (style == RenderStyle::UV) {
    if (arity != 1) throw Error("u,v naming applies to two variables only");
    return code == 0 ? "u" : "v";
  }
  if (style == RenderStyle::Auto) {
    if (arity == 1) return code == 0 ? "x" : "y";
    if (arity == 2) {
      static const char* names[4] = {"x", "w", "y", "z"};
      return names[code];
    }
  }
  std::string bits;
  for (unsigned j = 0; j < arity; ++j) bits.push_back(((code >> (arity - 1 - j)) & 1) ? '1' : '0');
  return "x_{" + bits + "}";
}

namespace {

std::vector<unsigned> display_order(unsigned arity, RenderStyle style) {
  if (style == RenderStyle::Auto && arity == 2) return {1, 3, 0, 2};  // w, z, x, y
  std::vector<unsigned> order(1u << arity);
  std::iota(order.begin(), order.end(), 0u);
  return order;
}

// Variable part of a monomial in display order; empty for the constant term.
std::string monomial_body(const SparsePoly::Exponents& exps, unsigned arity, RenderStyle style,
                          const std::vector<unsigned>& order) {
  std::string out;
  for (unsigned code : order) {
    int e = exps[code];
    if (e == 0) continue;
    out += variable_name(code, arity, style);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Joins (negative?, body) pieces with '+'/'-' and no leading '+'.
std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      out += pieces[i].first ? "-" : "";
    else
      out += pieces[i].first ? "-" : "+";
    out += pieces[i].second;
  }
  return out;
}

std::pair<bool, std::string> term_piece(const Rational& c, const std::string& body) {
  bool neg = c < 0;
  Rational mag = neg ? Rational(-c) : c;
  std::string text;
  if (body.empty())
    text = rational_str(mag);
  else if (mag == 1)
    text = body;
  else
    text = rational_str(mag) + body;
  return {neg, text};
}

}  // namespace

std::string SparsePoly::str(RenderStyle style) const {
  std::vector<unsigned> order = display_order(arity_, style);
  std::vector<std::pair<bool, std::string>> pieces;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    pieces.push_back(term_piece(it->second, monomial_body(it->first, arity_, style, order)));
  return join_signed(pieces);
}

std::string SparsePoly::str_grouped(RenderStyle style) const {
  if (arity_ < 2 || is_zero()) return str(style);
  const unsigned top = 1u << (arity_ - 1);
  std::vector<unsigned> key_codes;
  for (unsigned code = 1; code < nvars(); ++code)
    if (code != top) key_codes.push_back(code);
  std::vector<unsigned> order = display_order(arity_, style);
  std::vector<unsigned> key_order, xy_order;
  for (unsigned code : order)
    (code == 0 || code == top ? xy_order : key_order).push_back(code);

  // group key -> x/y-part terms, both in deterministic order
  struct XYLess {
    bool operator()(const std::array<int, 2>& a, const std::array<int, 2>& b) const {
      int da = a[0] + a[1], db = b[0] + b[1];
      if (da != db) return da < db;
      return a < b;
    }
  };
  std::map<std::vector<int>, std::map<std::array<int, 2>, Rational, XYLess>, std::greater<>>
      groups;
  for (const auto& [e, c] : terms_) {
    std::vector<int> key;
    key.reserve(key_codes.size());
    for (unsigned code : key_codes) key.push_back(e[code]);
    groups[key][{e[0], e[top]}] = c;
  }

  auto xy_body = [&](const std::array<int, 2>& e) {
    std::string out;
    for (unsigned code : xy_order) {
      int k = code == 0 ? e[0] : e[1];
      if (k == 0) continue;
      out += variable_name(code, arity_, style);
      if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
  };

  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [key, sub] : groups) {
    Exponents full(nvars(), 0);
    for (size_t i = 0; i < key_codes.size(); ++i) full[key_codes[i]] = key[i];
    std::string prefix = monomial_body(full, arity_, style, key_order);
    if (sub.size() == 1) {
      const auto& [e, c] = *sub.begin();
      pieces.push_back(term_piece(c, prefix + xy_body(e)));
    } else if (prefix.empty()) {
      // pure x/y part: flatten into top-level terms
      for (auto it = sub.rbegin(); it != sub.rend(); ++it)
        pieces.push_back(term_piece(it->second, xy_body(it->first)));
    } else {
      std::vector<std::pair<bool, std::string>> inner;
      for (auto it = sub.rbegin(); it != sub.rend(); ++it)
        inner.push_back(term_piece(it->second, xy_body(it->first)));
      pieces.emplace_back(false, prefix + "(" + join_signed(inner) + ")");
    }
  }
  return join_signed(pieces);
}

// --- parsing -----------------------------------------------------------------

namespace {

struct Parser {
  std::string_view s;
  size_t i = 0;
  unsigned arity;
  RenderStyle style;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  long long parse_uint() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected number");
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++i;
    }
    return v;
  }

  int parse_exponent() {
    if (consume('{')) {
      long long v = parse_uint();
      expect('}');
      return static_cast<int>(v);
    }
    return static_cast<int>(parse_uint());
  }

  Rational parse_number() {
    long long num = parse_uint();
    if (i < s.size() && s[i] == '/') {
      ++i;
      long long den = parse_uint();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  // Returns the variable code, or -1 without consuming anything.
  int try_variable() {
    skip_ws();
    if (i >= s.size()) return -1;
    char c = s[i];
    if (c == 'x' && i + 1 < s.size() && s[i + 1] == '_') {
      size_t save = i;
      i += 2;
      bool brace = i < s.size() && s[i] == '{';
      if (brace) ++i;
      unsigned code = 0, nbits = 0;
      while (i < s.size() && (s[i] == '0' || s[i] == '1')) {
        code = code * 2 + (s[i] - '0');
        ++nbits;
        ++i;
      }
      if (nbits != arity || (brace && (i >= s.size() || s[i] != '}'))) {
        i = save;
        fail("bad x_{bits} variable (expected " + std::to_string(arity) + " bits)");
      }
      if (brace) ++i;
      return static_cast<int>(code);
    }
    int code = -1;
    if (style == RenderStyle::UV && arity == 1) {
      if (c == 'u') code = 0;
      if (c == 'v') code = 1;
    } else if (style == RenderStyle::Auto && arity == 1) {
      if (c == 'x') code = 0;
      if (c == 'y') code = 1;
    } else if (style == RenderStyle::Auto && arity == 2) {
      if (c == 'x') code = 0;
      if (c == 'w') code = 1;
      if (c == 'y') code = 2;
      if (c == 'z') code = 3;
    }
    if (code >= 0) ++i;
    return code;
  }

  SparsePoly parse_factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return SparsePoly::constant(arity, parse_number());
    if (c == '(') {
      ++i;
      SparsePoly e = parse_expr();
      expect(')');
      if (consume('^')) return e.pow(static_cast<unsigned>(parse_exponent()));
      return e;
    }
    int code = try_variable();
    if (code < 0) fail("expected a coefficient, variable, or '('");
    SparsePoly v = SparsePoly::variable(arity, static_cast<unsigned>(code));
    if (consume('^')) return v.pow(static_cast<unsigned>(parse_exponent()));
    return v;
  }

  bool at_factor_start() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    size_t save = i;
    int code = try_variable();
    i = save;
    return code >= 0;
  }

  SparsePoly parse_term() {
    SparsePoly p = parse_factor();
    while (true) {
      if (consume('*')) {
        p = p * parse_factor();
      } else if (at_factor_start()) {
        p = p * parse_factor();
      } else {
        break;
      }
    }
    return p;
  }

  SparsePoly parse_expr() {
    bool neg = consume('-');
    if (!neg) consume('+');
    SparsePoly p = parse_term();
    if (neg) p = -p;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i;
        p = p + parse_term();
      } else if (c == '-') {
        ++i;
        p = p - parse_term();
      } else {
        break;
      }
    }
    return p;
  }
};

}  // namespace

SparsePoly SparsePoly::parse(std::string_view text, unsigned arity, RenderStyle style) {
  Parser parser{text, 0, arity, style};
  SparsePoly p = parser.parse_expr();
  parser.skip_ws();
  if (parser.i != text.size()) parser.fail("unexpected trailing input");
  return p;
}

}  // namespace jdt
