#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jdt/cyclo.hpp"
#include "jdt/poly.hpp"

namespace jdt {

// 2x2 matrices with cyclotomic entries, row-major [[a, b], [c, d]].
struct Matrix2 {
  Cyclo a, b, c, d;

  static Matrix2 identity();

  Matrix2 operator*(const Matrix2& o) const;
  bool operator==(const Matrix2& o) const;
  bool operator!=(const Matrix2& o) const { return !(*this == o); }

  Cyclo trace() const { return a + d; }
  Cyclo det() const { return a * d - b * c; }
};

// Full multiplicative closure of the generators (breadth-first products with
// exact dedup).  Throws when the closure exceeds `bound` elements or a
// generator is singular.
std::vector<Matrix2> group_closure(const std::vector<Matrix2>& generators, size_t bound = 10000);

// Built-in generator lists: "g3", "g4", "identity".
std::vector<Matrix2> named_group_generators(const std::string& name);
std::vector<std::string> named_group_list();

// Triangular table of the series coefficients c_ij of u^i v^j, i+j <= D.
// Coefficients are dimensions, hence nonnegative integers.
class MolienTable {
 public:
  explicit MolienTable(unsigned max_degree);

  unsigned max_degree() const { return max_degree_; }
  const Int& coeff(unsigned i, unsigned j) const;  // requires i + j <= max_degree
  Int& coeff_mut(unsigned i, unsigned j);

  // sum over i+j = d of c_ij u^i v^j, as an arity-1 polynomial (render it
  // with RenderStyle::UV for the u/v letters)
  SparsePoly homogeneous_part(unsigned d) const;

  std::string csv() const;  // "i,j,coefficient" lines, header included

 private:
  unsigned max_degree_;
  std::vector<Int> cells_;  // row i holds columns j = 0..max_degree-i
};

// Averages 1/(det(1-ug) det(1-vg)) over the group, expanding each factor by
// the trace/determinant recurrence a_m = tau*a_{m-1} - delta*a_{m-2}.  All
// arithmetic is exact; a non-integral averaged coefficient throws.
MolienTable molien_bivariate(const std::vector<Matrix2>& group, unsigned max_degree = 40);

// Multiplies the truncated series by d_u(u) d_v(v) (integer coefficients,
// ascending) and reports whether every product coefficient that the
// denominator shape says must vanish actually does: positions with
// i > deg d_u - 2 or j > deg d_v - 2, within the table's degree range.
bool verify_denominator(const MolienTable& table, const std::vector<Int>& d_u,
                        const std::vector<Int>& d_v);

}  // namespace jdt
