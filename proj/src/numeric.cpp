#include "jdt/numeric.hpp"

#include "jdt/errors.hpp"

namespace jdt {

Int to_int(const Rational& r) {
  if (!is_integer(r)) throw IntegralityError("expected an integer, got " + rational_str(r));
  return numerator_of(r);
}

std::string rational_str(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational");
  bool neg = false;
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  auto read_digits = [&](Int& out) {
    if (i >= s.size() || s[i] < '0' || s[i] > '9')
      throw ParseError("bad rational: " + std::string(s));
    out = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      out = out * 10 + (s[i] - '0');
      ++i;
    }
  };
  Int num, den = 1;
  read_digits(num);
  if (i < s.size() && s[i] == '/') {
    ++i;
    read_digits(den);
    if (den == 0) throw ParseError("zero denominator: " + std::string(s));
  }
  if (i != s.size()) throw ParseError("bad rational: " + std::string(s));
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

unsigned gcd_u(unsigned a, unsigned b) {
  while (b != 0) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned lcm_u(unsigned a, unsigned b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u(a, b) * b;
}

}  // namespace jdt
