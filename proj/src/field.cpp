#include "jdt/field.hpp"

#include <algorithm>
#include <sstream>

#include "jdt/errors.hpp"

namespace jdt {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned inv_mod_p(unsigned a, unsigned p) {
  // p is prime and small; Fermat.
  unsigned r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Dense univariate polynomials over F_p, coefficients low to high.
using PolyP = std::vector<unsigned>;

PolyP trim(PolyP a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PolyP poly_mod(PolyP a, const PolyP& f, unsigned p) {
  // f monic of degree >= 1
  const size_t df = f.size() - 1;
  while (a.size() > df) {
    unsigned c = a.back();
    size_t shift = a.size() - 1 - df;
    if (c != 0)
      for (size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + c * (p - f[j] % p)) % p;
    a.pop_back();
  }
  return a;
}

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, const PolyP& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return trim(poly_mod(std::move(out), f, p));
}

PolyP poly_pow_mod(PolyP base, unsigned e, const PolyP& f, unsigned p) {
  PolyP r = {1};
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PolyP poly_gcd(PolyP a, PolyP b, unsigned p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    // normalize b monic, then a mod b
    unsigned lc_inv = inv_mod_p(b.back(), p);
    for (unsigned& c : b) c = c * lc_inv % p;
    a = trim(poly_mod(std::move(a), b, p));
    std::swap(a, b);
  }
  return a;
}

bool irreducible_mod_p(const PolyP& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 1) return true;
  // Rabin: x^(p^deg) == x mod f, and gcd(x^(p^(deg/d)) - x, f) == 1 for each
  // prime d | deg.
  PolyP x = {0, 1};
  std::vector<PolyP> frob(deg + 1);  // frob[j] = x^(p^j) mod f
  frob[0] = x;
  for (unsigned j = 1; j <= deg; ++j) frob[j] = poly_pow_mod(frob[j - 1], p, f, p);
  if (trim(frob[deg]) != trim(x)) return false;
  for (unsigned d : prime_divisors(deg)) {
    PolyP diff = frob[deg / d];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (poly_gcd(diff, f, p).size() != 1) return false;
  }
  return true;
}

unsigned smallest_primitive_root(unsigned p) {
  if (p == 2) return 1;
  std::vector<unsigned> divs = prime_divisors(p - 1);
  for (unsigned g = 2; g < p; ++g) {
    bool ok = true;
    for (unsigned r : divs) {
      unsigned e = (p - 1) / r, acc = 1, b = g;
      while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("no primitive root found (p not prime?)");
}

std::vector<unsigned> default_modulus(unsigned p, unsigned f) {
  if (f == 1) {
    // x - g with g the smallest primitive root mod p, so the named root is a
    // multiplicative generator even in the prime case.
    unsigned g = smallest_primitive_root(p);
    return {(p - g % p) % p, 1};
  }
  if (p == 2 && f == 2) return {1, 1, 1};        // x^2 + x + 1
  if (p == 2 && f == 3) return {1, 1, 0, 1};     // x^3 + x + 1
  if (p == 3 && f == 2) return {2, 2, 1};        // x^2 + 2x + 2
  // Fall back to the lexicographically smallest primitive irreducible monic
  // polynomial of degree f.
  unsigned q = 1;
  for (unsigned i = 0; i < f; ++i) q *= p;
  std::vector<unsigned> c(f + 1, 0);
  c[f] = 1;
  auto advance = [&]() {
    for (unsigned i = 0; i < f; ++i) {
      if (++c[i] < p) return true;
      c[i] = 0;
    }
    return false;
  };
  do {
    if (c[0] == 0) continue;  // constant term 0 means root 0
    if (!irreducible_mod_p(c, p)) continue;
    // primitivity of the root: order of x mod c equals q - 1
    bool prim = true;
    for (unsigned r : prime_divisors(q - 1)) {
      PolyP t = poly_pow_mod({0, 1}, (q - 1) / r, c, p);
      if (t == PolyP{1}) {
        prim = false;
        break;
      }
    }
    if (prim) return c;
  } while (advance());
  throw Error("no default modulus found");
}

}  // namespace

FieldSpecPtr FieldSpec::make(unsigned p, unsigned f, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
  if (f == 0) throw Error("field degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > 256) throw Error("field size p^f exceeds the supported bound 256");
  }

  if (modulus.empty()) modulus = default_modulus(p, f);
  if (modulus.size() != f + 1) throw Error("modulus must list f+1 coefficients");
  for (unsigned c : modulus)
    if (c >= p) throw Error("modulus coefficients must lie in 0..p-1");
  if (modulus.back() != 1) throw Error("modulus must be monic");
  if (f >= 2 && !irreducible_mod_p(modulus, p))
    throw Error("modulus is reducible over F_" + std::to_string(p));

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->f_ = f;
  spec->q_ = static_cast<unsigned>(q);
  spec->modulus_ = modulus;

  const unsigned Q = spec->q_;
  // coefficient unpacking for every index
  std::vector<std::vector<unsigned>> co(Q);
  for (unsigned i = 0; i < Q; ++i) {
    std::vector<unsigned> v(f);
    unsigned t = i;
    for (unsigned j = 0; j < f; ++j) {
      v[j] = t % p;
      t /= p;
    }
    co[i] = std::move(v);
  }
  auto pack = [&](const PolyP& v) {
    unsigned idx = 0, mult = 1;
    for (unsigned j = 0; j < f; ++j) {
      idx += (j < v.size() ? v[j] : 0) * mult;
      mult *= p;
    }
    return idx;
  };

  spec->add_.assign(static_cast<size_t>(Q) * Q, 0);
  spec->mul_.assign(static_cast<size_t>(Q) * Q, 0);
  spec->neg_.assign(Q, 0);
  for (unsigned a = 0; a < Q; ++a) {
    for (unsigned b = 0; b < Q; ++b) {
      PolyP s(f);
      for (unsigned j = 0; j < f; ++j) s[j] = (co[a][j] + co[b][j]) % p;
      spec->add_[static_cast<size_t>(a) * Q + b] = pack(s);
      spec->mul_[static_cast<size_t>(a) * Q + b] =
          pack(poly_mul_mod(trim(co[a]), trim(co[b]), modulus, p));
    }
    PolyP n(f);
    for (unsigned j = 0; j < f; ++j) n[j] = (p - co[a][j]) % p;
    spec->neg_[a] = pack(n);
  }

  spec->inv_.assign(Q, 0);
  for (unsigned a = 1; a < Q; ++a) {
    for (unsigned b = 1; b < Q; ++b) {
      if (spec->mul_[static_cast<size_t>(a) * Q + b] == 1) {
        spec->inv_[a] = b;
        break;
      }
    }
    if (spec->inv_[a] == 0) throw Error("modulus is not irreducible: zero divisor found");
  }

  if (spec->has_conjugation()) {
    // x -> x^(p^(f/2)), computed by iterating the Frobenius map.
    spec->conj_.assign(Q, 0);
    for (unsigned a = 0; a < Q; ++a) {
      unsigned t = a;
      for (unsigned step = 0; step < f / 2; ++step) {
        unsigned acc = 1, b = t, e = p;
        while (e) {
          if (e & 1) acc = spec->mul_[static_cast<size_t>(acc) * Q + b];
          b = spec->mul_[static_cast<size_t>(b) * Q + b];
          e >>= 1;
        }
        t = acc;
      }
      spec->conj_[a] = t;
    }
  }

  // primitivity of the named root
  unsigned lambda = (f == 1) ? (p - modulus[0]) % p : p;
  bool prim = lambda != 0;
  if (prim) {
    for (unsigned r : prime_divisors(Q - 1)) {
      unsigned e = (Q - 1) / r, acc = 1, b = lambda;
      while (e) {
        if (e & 1) acc = spec->mul_[static_cast<size_t>(acc) * Q + b];
        b = spec->mul_[static_cast<size_t>(b) * Q + b];
        e >>= 1;
      }
      if (acc == 1) {
        prim = false;
        break;
      }
    }
  }
  spec->primitive_ = prim;
  return spec;
}

FieldSpecPtr FieldSpec::parse(std::string_view text) {
  // "q=<p>" | "q=<p>^<f>" with optional ";modulus=c0,c1,...,cf"
  auto fail = [&]() -> void { throw ParseError("bad field spec: " + std::string(text)); };
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == ';') {
        parts.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
  }
  if (parts.empty() || parts[0].rfind("q=", 0) != 0) fail();
  std::string qs = parts[0].substr(2);
  unsigned p = 0, f = 1;
  try {
    size_t caret = qs.find('^');
    if (caret == std::string::npos) {
      p = static_cast<unsigned>(std::stoul(qs));
    } else {
      p = static_cast<unsigned>(std::stoul(qs.substr(0, caret)));
      f = static_cast<unsigned>(std::stoul(qs.substr(caret + 1)));
    }
  } catch (const std::exception&) {
    fail();
  }
  std::vector<unsigned> modulus;
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    if (parts[i].rfind("modulus=", 0) != 0) fail();
    std::string list = parts[i].substr(8);
    std::string tok;
    std::istringstream in(list);
    while (std::getline(in, tok, ',')) {
      try {
        modulus.push_back(static_cast<unsigned>(std::stoul(tok)));
      } catch (const std::exception&) {
        fail();
      }
    }
  }
  try {
    return make(p, f, std::move(modulus));
  } catch (const Error& e) {
    throw ParseError(std::string("bad field spec: ") + e.what());
  }
}

std::string FieldSpec::str() const {
  std::ostringstream os;
  os << "q=" << p_;
  if (f_ > 1) os << "^" << f_;
  os << ";modulus=";
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) os << ",";
    os << modulus_[i];
  }
  return os.str();
}

unsigned FieldSpec::inv(unsigned a) const {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(q_));
  return inv_[a];
}

unsigned FieldSpec::conj(unsigned a) const {
  if (!has_conjugation())
    throw Error("conjugation needs even extension degree, field is " + str());
  return conj_[a];
}

FieldElement FieldSpec::zero() const { return FieldElement(this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(this, 1); }

FieldElement FieldSpec::generator() const {
  unsigned lambda = (f_ == 1) ? (p_ - modulus_[0]) % p_ : p_;
  return FieldElement(this, lambda);
}

FieldElement FieldSpec::from_index(unsigned idx) const {
  if (idx >= q_) throw Error("element index out of range");
  return FieldElement(this, idx);
}

FieldElement FieldSpec::element(const std::vector<unsigned>& coeffs) const {
  if (coeffs.size() != f_) throw Error("element needs f coordinates");
  unsigned idx = 0, mult = 1;
  for (unsigned j = 0; j < f_; ++j) {
    if (coeffs[j] >= p_) throw Error("element coordinate out of range");
    idx += coeffs[j] * mult;
    mult *= p_;
  }
  return FieldElement(this, idx);
}

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (unsigned i = 0; i < q_; ++i) out.emplace_back(this, i);
  return out;
}

std::vector<unsigned> FieldSpec::coeffs_of(unsigned idx) const {
  std::vector<unsigned> v(f_);
  for (unsigned j = 0; j < f_; ++j) {
    v[j] = idx % p_;
    idx /= p_;
  }
  return v;
}

std::string FieldSpec::symbol(unsigned idx) const {
  if (f_ == 1) return std::to_string(idx);
  std::vector<unsigned> v = coeffs_of(idx);
  std::string s;
  for (unsigned j = 0; j < f_; ++j) {
    if (j) s.push_back('.');
    s += std::to_string(v[j]);
  }
  return s;
}

unsigned FieldSpec::parse_symbol(std::string_view token) const {
  if (token.empty()) throw ParseError("empty field symbol");
  std::vector<unsigned> parts;
  size_t start = 0;
  while (true) {
    size_t dot = token.find('.', start);
    std::string_view piece =
        dot == std::string_view::npos ? token.substr(start) : token.substr(start, dot - start);
    if (piece.empty()) throw ParseError("bad field symbol: " + std::string(token));
    unsigned v = 0;
    for (char ch : piece) {
      if (ch < '0' || ch > '9') throw ParseError("bad field symbol: " + std::string(token));
      v = v * 10 + static_cast<unsigned>(ch - '0');
    }
    parts.push_back(v);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (parts.size() == 1) {
    // bare integer: a scalar, valid in any field
    if (parts[0] >= p_)
      throw ParseError("symbol " + std::string(token) + " out of range for " + str());
    return parts[0];
  }
  if (parts.size() != f_)
    throw ParseError("symbol " + std::string(token) + " has wrong arity for " + str());
  unsigned idx = 0, mult = 1;
  for (unsigned j = 0; j < f_; ++j) {
    if (parts[j] >= p_)
      throw ParseError("symbol " + std::string(token) + " out of range for " + str());
    idx += parts[j] * mult;
    mult *= p_;
  }
  return idx;
}

bool FieldSpec::compatible(const FieldSpec& other) const {
  return this == &other || (p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_);
}

// --- FieldElement ----------------------------------------------------------

const FieldSpec& FieldElement::spec() const {
  if (!spec_) throw Error("uninitialized field element");
  return *spec_;
}

unsigned FieldElement::coeff(unsigned i) const {
  if (i >= spec().f()) throw Error("coordinate index out of range");
  unsigned t = idx_;
  for (unsigned j = 0; j < i; ++j) t /= spec_->p();
  return t % spec_->p();
}

namespace {
const FieldSpec& common_spec(const FieldElement& a, const FieldElement& b) {
  if (!a.spec().compatible(b.spec())) throw FieldMismatch("elements from different fields");
  return a.spec();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FieldSpec& s = common_spec(*this, o);
  return FieldElement(&s, s.add(idx_, o.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const FieldSpec& s = common_spec(*this, o);
  return FieldElement(&s, s.sub(idx_, o.idx_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldSpec& s = common_spec(*this, o);
  return FieldElement(&s, s.mul(idx_, o.idx_));
}

FieldElement FieldElement::operator-() const { return FieldElement(spec_, spec().neg(idx_)); }

FieldElement FieldElement::inverse() const { return FieldElement(spec_, spec().inv(idx_)); }

FieldElement FieldElement::conjugate() const { return FieldElement(spec_, spec().conj(idx_)); }

bool FieldElement::operator==(const FieldElement& o) const {
  if (spec_ == nullptr || o.spec_ == nullptr) return spec_ == o.spec_ && idx_ == o.idx_;
  common_spec(*this, o);
  return idx_ == o.idx_;
}

Cyclo char_chi(const FieldElement& b, const FieldElement& a, unsigned conductor) {
  const FieldSpec& s = common_spec(b, a);
  const unsigned p = s.p();
  if (conductor == 0) conductor = p;
  if (conductor % p != 0)
    throw Error("character conductor must be divisible by the field characteristic");
  unsigned dot = 0;
  std::vector<unsigned> av = a.coeffs(), bv = b.coeffs();
  for (unsigned j = 0; j < s.f(); ++j) dot = (dot + av[j] * bv[j]) % p;
  return Cyclo::root_of_unity(conductor, static_cast<long long>(dot) * (conductor / p));
}

FieldElement inner_product(std::span<const FieldElement> u, std::span<const FieldElement> v,
                           IpMode mode) {
  if (u.size() != v.size()) throw Error("inner product needs equal lengths");
  if (u.empty()) throw Error("inner product of empty vectors");
  const FieldSpec& s = common_spec(u[0], v[0]);
  if (mode == IpMode::Hermitian && !s.has_conjugation())
    throw Error("hermitian inner product needs even extension degree, field is " + s.str());
  FieldElement acc = s.zero();
  for (size_t i = 0; i < u.size(); ++i) {
    FieldElement rhs = mode == IpMode::Hermitian ? v[i].conjugate() : v[i];
    acc = acc + u[i] * rhs;
  }
  return acc;
}

}  // namespace jdt
