#ifndef JDT_JACOBI_HPP
#define JDT_JACOBI_HPP

#include <optional>
#include <vector>

#include "jdt/code.hpp"
#include "jdt/poly.hpp"

namespace jdt {

// A list of reference vectors w_1, ..., w_l over the code's field, each of
// length n.  With l references, enumerator polynomials live in the 2^(l+1)
// variables x_a indexed by bitstrings a = (a_1, ..., a_{l+1}): a_1 is the
// zero/nonzero indicator of the codeword coordinate and a_{1+j} that of
// reference j.  Variable codes follow the poly module's packing, so
//   x = x_{00...} -> 0,   y -> 1 << l,
//   w_j -> 1 << (l - j),  z_j -> (1 << l) | (1 << (l - j)).
using ReferenceSet = std::vector<std::vector<FieldElement>>;

// The 0/1 vector supported on the given 1-based coordinates.
std::vector<FieldElement> indicator_vector(const FieldSpecPtr& field, unsigned n,
                                           const std::vector<unsigned>& support);

// Sum over codewords of x^(n-wt) y^wt; arity 1.
SparsePoly weight_enumerator(const LinearCode& c, uint64_t budget = default_budget());

// Joint enumerator over l reference vectors; arity l+1.  Each term's
// exponent of x_a counts the coordinates whose zero/nonzero pattern is a.
SparsePoly jacobi_multi(const LinearCode& c, const ReferenceSet& refs,
                        uint64_t budget = default_budget());

// Single reference given as a subset T of [n] (1-based); arity 2 with the
// letters w, z counting inside T and x, y outside.
SparsePoly jacobi_set(const LinearCode& c, const std::vector<unsigned>& T,
                      uint64_t budget = default_budget());

// Transform carrying the enumerator of C to the enumerator of its dual:
// substitutes, for every bitstring tail r,
//   x_{(0,r)} -> x_{(0,r)} + (q-1) x_{(1,r)},   x_{(1,r)} -> x_{(0,r)} - x_{(1,r)}
// and divides by csize = |C|.  (The per-character sums collapse to these two
// integer cases because the enumerator only sees zero/nonzero patterns.)
SparsePoly macwilliams_transform(const SparsePoly& j, unsigned q, const Int& csize);

// Polarization operator A_j = w_j d/dx + z_j d/dy (j >= 1).  The input is
// lifted to arity >= j+1 first if necessary.
SparsePoly polarize(const SparsePoly& p, unsigned j);

// (1 / (n(n-1)...(n-t+1))) * A_l^{t_l} ... A_1^{t_1} W  with t = sum t_j.
// Requires W homogeneous of degree n and t < n; the result must come out
// with integer coefficients, otherwise IntegralityError is thrown (the
// typical cause: the code behind W is not generalized t-homogeneous).
SparsePoly jacobi_via_polarization(const SparsePoly& w, const std::vector<unsigned>& t_vec,
                                   unsigned n);

// Merges reference j back into the codeword indicator (drops its bit), the
// inverse direction of adding a reference; with one reference this recovers
// the weight enumerator.
SparsePoly collapse_reference(const SparsePoly& p, unsigned j);

struct InvarianceWitness {
  std::vector<std::vector<unsigned>> supports_a, supports_b;  // per-reference, 1-based
  SparsePoly value_a, value_b;
};

struct InvarianceResult {
  bool invariant = false;
  SparsePoly value{1};  // the common polynomial (or the first one, on failure)
  std::optional<InvarianceWitness> witness;
};

// Computes jacobi_multi for every choice of reference supports: reference j
// ranges over the weight-t_j indicator vectors supported inside part j of X
// (1-based coordinates, pairwise disjoint).  Nonzero values beyond the
// support never matter — the enumerator sees references only through their
// zero/nonzero pattern — so supports enumerate the whole orbit.  Reports
// whether all results agree, with a differing pair as witness otherwise.
InvarianceResult invariance_check(const LinearCode& c,
                                  const std::vector<std::vector<unsigned>>& parts,
                                  const std::vector<unsigned>& t_vec,
                                  uint64_t budget = default_budget());

}  // namespace jdt

#endif
