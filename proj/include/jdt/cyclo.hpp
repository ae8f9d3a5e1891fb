#ifndef JDT_CYCLO_HPP
#define JDT_CYCLO_HPP

#include <string>
#include <vector>

#include "jdt/numeric.hpp"

namespace jdt {

// Elements of cyclotomic fields Q(zeta_N), stored as rational coordinate
// vectors of length phi(N) in the power basis 1, zeta, ..., zeta^(phi(N)-1),
// reduced modulo the N-th cyclotomic polynomial.  Mixed-conductor arithmetic
// lifts both operands to the lcm conductor first (zeta_M = zeta_N^(N/M) when
// M | N), so values with different conductors compose freely.
//
// Equality is exact equality of field elements, independent of the conductor
// either side happens to be stored at.
class Cyclo {
 public:
  Cyclo();  // zero at conductor 1

  static Cyclo rational(const Rational& r, unsigned conductor = 1);
  static Cyclo zero(unsigned conductor = 1) { return rational(Rational(0), conductor); }
  static Cyclo one(unsigned conductor = 1) { return rational(Rational(1), conductor); }

  // zeta_n^k (k may be negative or >= n; reduced mod n).
  static Cyclo root_of_unity(unsigned n, long long k);

  // 1/sqrt(3) = (zeta_12 + zeta_12^-1)/3, an exact element of Q(zeta_12).
  static Cyclo sqrt3_inverse();

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Rewrites the element at conductor n; requires conductor() | n.
  Cyclo lifted(unsigned n) const;

  bool is_zero() const;
  bool is_rational() const;       // lies in Q
  Rational rational_part() const; // throws IntegralityError-free Error if not rational

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const;  // debugging aid, e.g. "2/3*z^1 - 1/3*z^3"

 private:
  Cyclo(unsigned conductor, std::vector<Rational> coeffs);

  unsigned conductor_;
  std::vector<Rational> coeffs_;  // length euler_phi(conductor_)
};

unsigned euler_phi(unsigned n);

// Monic integer coefficients of the n-th cyclotomic polynomial, low to high
// (length phi(n) + 1).  Computed exactly and memoized.
const std::vector<Int>& cyclotomic_polynomial(unsigned n);

}  // namespace jdt

#endif
