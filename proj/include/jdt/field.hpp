#ifndef JDT_FIELD_HPP
#define JDT_FIELD_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jdt/cyclo.hpp"
#include "jdt/numeric.hpp"

namespace jdt {

class FieldSpec;
class FieldElement;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

enum class IpMode { Euclidean, Hermitian };

// A concrete finite field F_q, q = p^f, presented as F_p[L]/(F(L)) with a
// monic irreducible modulus F of degree f.  Elements are coordinate vectors
// (a_0, ..., a_{f-1}) over the basis 1, L, ..., L^{f-1}, packed into the
// index a_0 + a_1 p + ... + a_{f-1} p^{f-1}.  All arithmetic is table-driven,
// which bounds the supported size at q <= 256 (plenty for this library's
// enumeration budgets).
//
// Construct through make()/parse(); instances are immutable and shared.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  // modulus: coefficients c_0..c_f, low to high, monic, irreducible over F_p.
  // An empty modulus selects the library default for (p, f).
  static FieldSpecPtr make(unsigned p, unsigned f = 1, std::vector<unsigned> modulus = {});

  // Accepts "q=<p>" / "q=<p>^<f>" with optional ";modulus=c0,c1,...,cf".
  static FieldSpecPtr parse(std::string_view text);

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  // True when the modulus root L generates the multiplicative group.  The
  // library defaults are always primitive; a caller-supplied modulus may be
  // irreducible without being primitive and is still accepted.
  bool primitive_modulus() const { return primitive_; }

  // Conjugation x -> x^(p^(f/2)) exists exactly when f is even.
  bool has_conjugation() const { return f_ % 2 == 0; }

  std::string str() const;  // "q=3" or "q=2^2;modulus=1,1,1"

  // --- index-level arithmetic -------------------------------------------
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
  unsigned inv(unsigned a) const;   // throws on a == 0
  unsigned conj(unsigned a) const;  // throws unless has_conjugation()

  // --- elements -----------------------------------------------------------
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // the modulus root L (= the scalar it names when f == 1)
  FieldElement from_index(unsigned idx) const;
  FieldElement element(const std::vector<unsigned>& coeffs) const;
  std::vector<FieldElement> elements() const;  // all q, in index order

  std::vector<unsigned> coeffs_of(unsigned idx) const;
  std::string symbol(unsigned idx) const;               // "2" or "a0.a1" form
  unsigned parse_symbol(std::string_view token) const;  // inverse of symbol();
                                                        // also accepts a bare
                                                        // integer < p for
                                                        // extension fields

  // Same mathematical presentation: equal p, f and modulus.
  bool compatible(const FieldSpec& other) const;

 private:
  FieldSpec() = default;

  unsigned p_ = 0, f_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  bool primitive_ = false;
  std::vector<unsigned> add_, mul_, neg_, inv_, conj_;
};

// Value type for field elements: a spec pointer plus packed index.  The spec
// is borrowed — whoever hands out elements (FieldSpec, LinearCode, ...) keeps
// the FieldSpecPtr alive.
class FieldElement {
 public:
  FieldElement() : spec_(nullptr), idx_(0) {}
  FieldElement(const FieldSpec* spec, unsigned idx) : spec_(spec), idx_(idx) {}

  bool valid() const { return spec_ != nullptr; }
  const FieldSpec& spec() const;
  unsigned index() const { return idx_; }
  std::vector<unsigned> coeffs() const { return spec().coeffs_of(idx_); }
  unsigned coeff(unsigned i) const;

  bool is_zero() const { return idx_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement conjugate() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str() const { return spec().symbol(idx_); }

 private:
  const FieldSpec* spec_;
  unsigned idx_;
};

// Additive character chi_b(a) = zeta_p ^ (sum_i a_i b_i), evaluated in
// Q(zeta_conductor); conductor defaults to p and must be divisible by p.
Cyclo char_chi(const FieldElement& b, const FieldElement& a, unsigned conductor = 0);

// Euclidean: sum u_i v_i.  Hermitian: sum u_i conj(v_i), f even required.
FieldElement inner_product(std::span<const FieldElement> u, std::span<const FieldElement> v,
                           IpMode mode);

}  // namespace jdt

#endif
