#include "jdt/cyclo.hpp"

#include <map>
#include <sstream>

#include "jdt/errors.hpp"

namespace jdt {

unsigned euler_phi(unsigned n) {
  if (n == 0) throw Error("euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Quotient of monic integer polynomials (remainder is known to vanish).
std::vector<Int> exact_divide(std::vector<Int> num, const std::vector<Int>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error("cyclotomic division underflow");
  std::vector<Int> quot(num.size() - dd, Int(0));
  for (size_t i = num.size(); i-- > dd;) {
    Int c = num[i];  // den is monic
    if (c == 0) continue;
    quot[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw Error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0) throw Error("cyclotomic_polynomial(0)");

  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<Int> poly(n + 1, Int(0));
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = exact_divide(std::move(poly), cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

namespace {

// Reduces an arbitrary-length coefficient vector modulo Phi_n and trims it to
// length phi(n).
std::vector<Rational> reduce_mod_phi(std::vector<Rational> v, unsigned n) {
  const std::vector<Int>& phi = cyclotomic_polynomial(n);
  const size_t deg = phi.size() - 1;
  if (v.size() > deg) {
    for (size_t i = v.size(); i-- > deg;) {
      Rational c = v[i];
      if (c == 0) continue;
      v[i] = 0;
      for (size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * Rational(phi[j]);
    }
  }
  v.resize(deg);
  return v;
}

}  // namespace

Cyclo::Cyclo() : conductor_(1), coeffs_(1, Rational(0)) {}

Cyclo::Cyclo(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclo Cyclo::rational(const Rational& r, unsigned conductor) {
  if (conductor == 0) throw Error("conductor must be positive");
  std::vector<Rational> c(euler_phi(conductor), Rational(0));
  c[0] = r;
  return Cyclo(conductor, std::move(c));
}

Cyclo Cyclo::root_of_unity(unsigned n, long long k) {
  if (n == 0) throw Error("conductor must be positive");
  long long kk = k % static_cast<long long>(n);
  if (kk < 0) kk += n;
  std::vector<Rational> raw(static_cast<size_t>(kk) + 1, Rational(0));
  raw[static_cast<size_t>(kk)] = 1;
  return Cyclo(n, reduce_mod_phi(std::move(raw), n));
}

Cyclo Cyclo::sqrt3_inverse() {
  Cyclo z = root_of_unity(12, 1);
  Cyclo zi = root_of_unity(12, 11);
  Cyclo sum = z + zi;  // sqrt(3)
  std::vector<Rational> c = sum.coeffs_;
  for (Rational& x : c) x /= 3;
  return Cyclo(12, std::move(c));
}

Cyclo Cyclo::lifted(unsigned n) const {
  if (n == conductor_) return *this;
  if (n == 0 || n % conductor_ != 0)
    throw Error("cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(n));
  const unsigned step = n / conductor_;  // zeta_m^i = zeta_n^(i*step)
  std::vector<Rational> raw(static_cast<size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] += coeffs_[i];
  return Cyclo(n, reduce_mod_phi(std::move(raw), n));
}

bool Cyclo::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclo::rational_part() const {
  if (!is_rational()) throw Error("value is not rational: " + str());
  return coeffs_[0];
}

Cyclo Cyclo::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (Rational& x : c) x = -x;
  return Cyclo(conductor_, std::move(c));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  unsigned n = lcm_u(a.conductor_, b.conductor_);
  Cyclo x = a.lifted(n), y = b.lifted(n);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  unsigned n = lcm_u(a.conductor_, b.conductor_);
  Cyclo x = a.lifted(n), y = b.lifted(n);
  std::vector<Rational> raw(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      raw[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return Cyclo(n, reduce_mod_phi(std::move(raw), n));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  unsigned n = lcm_u(a.conductor_, b.conductor_);
  return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    if (i == 0) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace jdt
