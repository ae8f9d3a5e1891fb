#include "jdt/jacobi.hpp"

#include <algorithm>

#include "jdt/errors.hpp"

namespace jdt {

std::vector<FieldElement> indicator_vector(const FieldSpecPtr& field, unsigned n,
                                           const std::vector<unsigned>& support) {
  std::vector<FieldElement> v(n, field->zero());
  for (unsigned i : support) {
    if (i < 1 || i > n) throw Error("support coordinate out of range");
    v[i - 1] = field->one();
  }
  return v;
}

SparsePoly jacobi_multi(const LinearCode& c, const ReferenceSet& refs, uint64_t budget) {
  const unsigned n = c.n();
  const unsigned ell = static_cast<unsigned>(refs.size());
  const unsigned arity = ell + 1;
  if (arity > 16) throw Error("too many reference vectors");

  // Per-coordinate bit pattern contributed by the references.
  std::vector<unsigned> ref_bits(n, 0);
  for (unsigned j = 0; j < ell; ++j) {
    if (refs[j].size() != n) throw Error("reference vector length differs from n");
    for (unsigned i = 0; i < n; ++i) {
      if (!refs[j][i].spec().compatible(*c.field()))
        throw FieldMismatch("reference vector over a different field");
      if (!refs[j][i].is_zero()) ref_bits[i] |= 1u << (arity - 2 - j);
    }
  }
  const unsigned top = 1u << (arity - 1);

  std::map<SparsePoly::Exponents, long long, SparsePoly::GradedLexLess> counts;
  SparsePoly::Exponents exps(1u << arity);
  c.for_each_codeword(
      [&](const std::vector<unsigned>& word) {
        std::fill(exps.begin(), exps.end(), 0);
        for (unsigned i = 0; i < n; ++i)
          ++exps[(word[i] != 0 ? top : 0u) | ref_bits[i]];
        ++counts[exps];
      },
      budget);

  SparsePoly out(arity);
  for (const auto& [e, k] : counts) out.add_term(e, Rational(k));
  return out;
}

SparsePoly weight_enumerator(const LinearCode& c, uint64_t budget) {
  return jacobi_multi(c, {}, budget);
}

SparsePoly jacobi_set(const LinearCode& c, const std::vector<unsigned>& T, uint64_t budget) {
  return jacobi_multi(c, {indicator_vector(c.field(), c.n(), T)}, budget);
}

SparsePoly macwilliams_transform(const SparsePoly& j, unsigned q, const Int& csize) {
  if (q < 2) throw Error("transform needs a field size q >= 2");
  if (csize <= 0) throw Error("transform needs a positive code size");
  const unsigned top = 1u << (j.arity() - 1);
  std::map<unsigned, SparsePoly> images;
  for (unsigned code = 0; code < j.nvars(); ++code) {
    if (code & top) continue;
    SparsePoly lo = SparsePoly::variable(j.arity(), code);
    SparsePoly hi = SparsePoly::variable(j.arity(), code | top);
    images.emplace(code, lo + hi.scaled(Rational(q - 1)));
    images.emplace(code | top, lo - hi);
  }
  return j.substituted(images).scaled(Rational(Int(1), csize));
}

SparsePoly polarize(const SparsePoly& p, unsigned j) {
  if (j < 1) throw Error("reference index must be >= 1");
  const unsigned arity = std::max(p.arity(), j + 1);
  SparsePoly lifted = p.lifted(arity);
  const unsigned top = 1u << (arity - 1);
  const unsigned wj = 1u << (arity - 1 - j);
  SparsePoly w = SparsePoly::variable(arity, wj);
  SparsePoly z = SparsePoly::variable(arity, top | wj);
  return w * lifted.derivative(0) + z * lifted.derivative(top);
}

SparsePoly jacobi_via_polarization(const SparsePoly& w, const std::vector<unsigned>& t_vec,
                                   unsigned n) {
  if (!w.is_homogeneous() || w.total_degree() != static_cast<int>(n))
    throw Error("polarization input must be homogeneous of degree n");
  unsigned t = 0;
  for (unsigned tj : t_vec) t += tj;
  if (t >= n) throw Error("polarization needs t = sum(t_vec) < n");

  const unsigned ell = static_cast<unsigned>(t_vec.size());
  SparsePoly p = w.lifted(std::max(w.arity(), ell + 1));
  for (unsigned j = 1; j <= ell; ++j)
    for (unsigned rep = 0; rep < t_vec[j - 1]; ++rep) p = polarize(p, j);

  Int falling = 1;
  for (unsigned i = 0; i < t; ++i) falling *= (n - i);
  p = p.scaled(Rational(Int(1), falling));
  if (!p.integer_coefficients())
    throw IntegralityError("polarization result has non-integer coefficients");
  return p;
}

SparsePoly collapse_reference(const SparsePoly& p, unsigned j) {
  if (p.arity() < 2) throw Error("nothing to collapse in a two-variable polynomial");
  if (j < 1 || j + 1 > p.arity()) throw Error("reference index out of range");
  const unsigned arity = p.arity();
  const unsigned bit = 1u << (arity - 1 - j);
  SparsePoly out(arity - 1);
  // dropping bit j+1 of each bitstring: exponents of merged variables add up
  auto drop = [&](unsigned code) {
    unsigned high = code >> (arity - j);          // bits above the dropped one
    unsigned low = code & (bit - 1);              // bits below
    return (high << (arity - 1 - j)) | low;
  };
  for (const auto& [e, c] : p.terms()) {
    SparsePoly::Exponents ne(out.nvars(), 0);
    for (unsigned code = 0; code < p.nvars(); ++code) ne[drop(code)] += e[code];
    out.add_term(ne, c);
  }
  return out;
}

namespace {

// All k-subsets of {1, ..., pool.size()} mapped through pool, in
// lexicographic order.
std::vector<std::vector<unsigned>> combinations(const std::vector<unsigned>& pool, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k > pool.size()) return out;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<unsigned> pick(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    out.push_back(std::move(pick));
    // next combination
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[static_cast<unsigned>(i)] == pool.size() - k + static_cast<unsigned>(i))
      --i;
    if (i < 0) break;
    ++idx[static_cast<unsigned>(i)];
    for (unsigned t = static_cast<unsigned>(i) + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

}  // namespace

InvarianceResult invariance_check(const LinearCode& c,
                                  const std::vector<std::vector<unsigned>>& parts,
                                  const std::vector<unsigned>& t_vec, uint64_t budget) {
  const unsigned n = c.n();
  if (parts.size() != t_vec.size()) throw Error("one weight per part required");
  std::vector<bool> seen(n + 1, false);
  for (const auto& part : parts) {
    for (unsigned i : part) {
      if (i < 1 || i > n) throw Error("part coordinate out of range");
      if (seen[i]) throw Error("parts must be pairwise disjoint");
      seen[i] = true;
    }
  }
  Int total_choices = 1;
  for (size_t j = 0; j < parts.size(); ++j) {
    if (t_vec[j] > parts[j].size())
      throw Error("infeasible weight: t_" + std::to_string(j + 1) + " exceeds part size");
    total_choices *= binomial(static_cast<unsigned>(parts[j].size()), t_vec[j]);
  }
  if (total_choices * c.size() > budget)
    throw BudgetExceeded("invariance check needs " + (total_choices * c.size()).str() +
                         " codeword visits, budget is " + std::to_string(budget));

  // Per-part support choices; references are indicator vectors of supports
  // (values are invisible to the enumerator).
  std::vector<std::vector<std::vector<unsigned>>> choices;
  for (size_t j = 0; j < parts.size(); ++j) choices.push_back(combinations(parts[j], t_vec[j]));

  std::vector<size_t> pick(parts.size(), 0);
  InvarianceResult result;
  std::vector<std::vector<unsigned>> first_supports;
  bool first = true;
  while (true) {
    std::vector<std::vector<unsigned>> supports;
    ReferenceSet refs;
    for (size_t j = 0; j < parts.size(); ++j) {
      supports.push_back(choices[j][pick[j]]);
      refs.push_back(indicator_vector(c.field(), n, supports.back()));
    }
    SparsePoly value = jacobi_multi(c, refs, budget);
    if (first) {
      result.value = value;
      result.invariant = true;
      first_supports = supports;
      first = false;
    } else if (value != result.value) {
      result.invariant = false;
      result.witness = InvarianceWitness{first_supports, supports, result.value, value};
      return result;
    }
    // advance the mixed-radix selector
    size_t j = parts.size();
    while (j > 0 && ++pick[j - 1] == choices[j - 1].size()) pick[--j] = 0;
    if (j == 0) break;
  }
  return result;
}

}  // namespace jdt
