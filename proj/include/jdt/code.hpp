#ifndef JDT_CODE_HPP
#define JDT_CODE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jdt/field.hpp"
#include "jdt/numeric.hpp"

namespace jdt {

// Enumeration ceiling: number of codewords a single exhaustive walk may
// visit.  Defaults to 2^24 and can be overridden with the JDT_BUDGET
// environment variable (a positive decimal integer).
uint64_t default_budget();

// Self-dual code families over small fields: I/II binary, III ternary with
// all weights divisible by 3, IV quaternary Hermitian with even weights.
enum class CodeType { None, I, II, III, IV };
std::string code_type_name(CodeType t);

// A linear [n, k] code over F_q, held in reduced row echelon form.  The RREF
// is the canonical representative: two codes compare equal iff they have the
// same field presentation, length, and RREF, i.e. iff they are the same set
// of codewords.
class LinearCode {
 public:
  LinearCode(FieldSpecPtr field, unsigned n, const std::vector<std::vector<FieldElement>>& rows,
             IpMode mode = IpMode::Euclidean);

  const FieldSpecPtr& field() const { return field_; }
  unsigned n() const { return n_; }
  unsigned dimension() const { return static_cast<unsigned>(rows_.size()); }
  IpMode ip_mode() const { return mode_; }
  Int size() const;  // q^k

  std::vector<std::vector<FieldElement>> generators() const;  // RREF rows
  const std::vector<std::vector<unsigned>>& generator_rows() const { return rows_; }

  // Dual under the code's own inner product (Euclidean, or Hermitian with
  // conjugated coefficients).
  LinearCode dual() const;
  bool is_self_dual() const;
  CodeType type(uint64_t budget = default_budget()) const;

  // Deletes coordinate i (1-based) from every generator.
  LinearCode punctured(unsigned i) const;

  // Visits all q^k codewords as index vectors, message-lexicographic order.
  // Throws BudgetExceeded if q^k > budget before visiting anything.
  void for_each_codeword(const std::function<void(const std::vector<unsigned>&)>& fn,
                         uint64_t budget = default_budget()) const;

  bool operator==(const LinearCode& o) const;
  bool operator!=(const LinearCode& o) const { return !(*this == o); }

  std::string to_file_string() const;

 private:
  FieldSpecPtr field_;
  unsigned n_;
  IpMode mode_;
  std::vector<std::vector<unsigned>> rows_;  // RREF, element indices
};

LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

// Built-in examples: "tetracode", "golay12", "i2", plus m-fold repetitions
// spelled "<name>^<m>" (e.g. "i2^3" = i2 + i2 + i2 as a direct sum).
LinearCode catalog_code(std::string_view name);
std::vector<std::pair<std::string, std::string>> catalog_entries();

// Text format: a header "q=<p>[^<f>] n=<n> ip=<euclidean|hermitian>"
// (optionally "modulus=c0,...,cf"), then one generator row per line with
// whitespace-separated symbols — integers 0..p-1, or a0.a1...  tuples over
// extension fields.  '#' starts a comment; blank lines are skipped.
LinearCode load_code(std::istream& in);
LinearCode load_code_file(const std::string& path);

}  // namespace jdt

#endif
