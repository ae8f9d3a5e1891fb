#ifndef JDT_NUMERIC_HPP
#define JDT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace jdt {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

// Exact conversion; throws IntegralityError if r has a nontrivial denominator.
Int to_int(const Rational& r);

// "a" when integral, "a/b" otherwise.
std::string rational_str(const Rational& r);

// Accepts "a" or "a/b" with optional leading sign.  Throws ParseError.
Rational parse_rational(std::string_view s);

// Exact binomial coefficient; zero when k > n.
Int binomial(unsigned n, unsigned k);

// Greatest common divisor / least common multiple for machine integers.
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

}  // namespace jdt

#endif
