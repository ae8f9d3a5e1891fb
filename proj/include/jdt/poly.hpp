#ifndef JDT_POLY_HPP
#define JDT_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jdt/numeric.hpp"

namespace jdt {

// Sparse multivariate polynomials with exact rational coefficients over a
// family of 2^arity variables indexed by bitstrings of length `arity`.
//
// A variable is identified by its bitstring packed into an unsigned `code`
// with the FIRST bit as the most significant one: for arity m the bitstring
// (b_1, ..., b_m) has code b_1*2^(m-1) + ... + b_m.  This gives the variable
// families used throughout the library concrete codes:
//
//   arity 1:  x = x_{0} -> 0,   y = x_{1} -> 1
//   arity 2:  x = x_{00} -> 0,  w = x_{01} -> 1,  y = x_{10} -> 2,
//             z = x_{11} -> 3
//
// Terms are kept in a map under the graded lexicographic order (total degree
// first, then lexicographic comparison of the exponent vector), so iteration
// order — and therefore every rendered string — is canonical.

enum class RenderStyle {
  Auto,  // letters x,y (arity 1) or x,w,y,z (arity 2); x_{bits} for arity >= 3
  Raw,   // always x_{bits}
  UV,    // u,v; arity 1 only (series in two formal variables)
};

class SparsePoly {
 public:
  using Exponents = std::vector<int>;  // length 2^arity, indexed by variable code

  struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit SparsePoly(unsigned arity);

  static SparsePoly zero(unsigned arity) { return SparsePoly(arity); }
  static SparsePoly constant(unsigned arity, const Rational& c);
  static SparsePoly variable(unsigned arity, unsigned code);
  static SparsePoly monomial(unsigned arity, Exponents exps, const Rational& c);

  unsigned arity() const { return arity_; }
  unsigned nvars() const { return 1u << arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Adds c * X^exps, dropping the term if the coefficient cancels to zero.
  void add_term(const Exponents& exps, const Rational& c);

  Rational coefficient_of(const Exponents& exps) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly scaled(const Rational& c) const;
  SparsePoly pow(unsigned e) const;

  bool operator==(const SparsePoly& o) const;
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  // Formal partial derivative with respect to the variable `code`.
  SparsePoly derivative(unsigned code) const;

  // Simultaneous substitution variable -> polynomial (all images must share
  // this polynomial's arity).  Every variable that actually appears must be
  // mapped; anything else throws.
  SparsePoly substituted(const std::map<unsigned, SparsePoly>& images) const;

  // Total-degree-d part; the zero polynomial when nothing has degree d.
  SparsePoly homogeneous_part(int d) const;
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  // Re-embeds into a larger variable family: bitstrings gain trailing zero
  // bits, i.e. code -> code << (new_arity - arity).
  SparsePoly lifted(unsigned new_arity) const;

  Rational evaluate(const std::vector<Rational>& point) const;  // point[code]
  Rational sum_of_coefficients() const;  // = evaluate at all-ones
  bool integer_coefficients() const;

  // Canonical flat rendering, terms in descending graded-lex order, e.g.
  // "x^4+8x^3y+24x^2y^2+32xy^3+16y^4".
  std::string str(RenderStyle style = RenderStyle::Auto) const;

  // Rendering grouped by the exponents of the non-x/y variables (arity >= 2),
  // e.g. "w(x^11+132x^5y^6+110x^2y^9)+z(132x^6y^5+330x^3y^8+24y^11)".
  // Groups are ordered by descending lex on their key; a single-term group is
  // inlined ("6zxy^2"); the pure-x/y group comes last, unparenthesized.
  std::string str_grouped(RenderStyle style = RenderStyle::Auto) const;

  // Parses what str()/str_grouped() emit, plus ordinary freehand input:
  // sums, implicit products, parenthesized factors, ^ powers with optional
  // braces, rational coefficients "a/b".  Letter names follow `style` and
  // x_{bits} is always accepted.
  static SparsePoly parse(std::string_view text, unsigned arity,
                          RenderStyle style = RenderStyle::Auto);

 private:
  unsigned arity_;
  TermMap terms_;
};

// The display name of a variable under a given style (see RenderStyle).
std::string variable_name(unsigned code, unsigned arity, RenderStyle style);

}  // namespace jdt

#endif
