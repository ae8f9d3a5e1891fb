#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jdt/code.hpp"

namespace jdt {

// Block families live on point sets of at most 64 points so that blocks fit
// in single-word bitmasks.

enum class BlockMode { Multiset, SupportSet };

struct BlockFamily {
  unsigned v = 0;  // points are 1..v; bit i-1 of a mask is point i
  unsigned k = 0;  // every block has exactly k points
  BlockMode mode = BlockMode::SupportSet;
  std::vector<uint64_t> blocks;  // sorted ascending; duplicates only in multiset mode
};

// Supports of all weight-k codewords of C.  Multiset mode keeps one block per
// codeword; support-set mode deduplicates equal supports.
BlockFamily blocks_from_code(const LinearCode& c, unsigned k,
                             BlockMode mode = BlockMode::SupportSet,
                             uint64_t budget = default_budget());

struct DesignSpectrum {
  unsigned t = 0;
  uint64_t block_count = 0;
  std::map<uint64_t, uint64_t> histogram;  // lambda -> number of t-subsets

  // groups in the canonical reporting order (descending lambda)
  std::vector<std::pair<uint64_t, uint64_t>> groups() const;
  bool constant() const { return histogram.size() == 1; }
};

// For every t-subset of [v], how many blocks contain it.
DesignSpectrum t_spectrum(const BlockFamily& b, unsigned t);

struct DesignReport {
  unsigned v = 0, k = 0, t = 0;
  uint64_t block_count = 0;
  DesignSpectrum spectrum;
  bool is_t_design = false;   // single group
  std::string parameters;     // e.g. "2-(8,3,(2^{12},0^{16}))" or "5-(12,6,1)"
  std::string statement;      // e.g. "D_2(8,3,2) ≤ 8 ≤ C_0(8,3,2)"
  std::string text() const;   // multi-line plain record
};

DesignReport design_report(const BlockFamily& b, unsigned t);

// Generalized designs: the point set is partitioned into parts X_1..X_l and
// blocks are tuples of per-part supports.  Every choice of a t_i-subset of
// X_i for each i must lie (componentwise) in the same number of blocks.

struct GeneralizedWitness {
  std::vector<std::vector<unsigned>> tuple_a, tuple_b;  // per part, 1-based
  uint64_t count_a = 0, count_b = 0;
};

struct GeneralizedDesignResult {
  std::optional<uint64_t> lambda;  // set when the count is constant
  std::optional<GeneralizedWitness> witness;
  uint64_t block_count = 0;
};

// Counts codewords (multiset semantics) whose weight profile across the
// parts is exactly k_vec and whose per-part supports contain the chosen
// t_i-subsets.  parts must be pairwise disjoint and cover 1..n.
GeneralizedDesignResult generalized_design_check(
    const LinearCode& c, const std::vector<std::vector<unsigned>>& parts,
    const std::vector<unsigned>& k_vec, const std::vector<unsigned>& t_vec,
    uint64_t budget = default_budget());

struct HomogeneityResult {
  bool homogeneous = false;
  // set on failure: the weight profile and split of t that broke constancy
  std::vector<unsigned> failing_k, failing_t;
};

// Whether the codewords of every occurring weight profile form generalized
// t-designs, over every split of t across the parts.
HomogeneityResult is_generalized_t_homogeneous(
    const LinearCode& c, const std::vector<std::vector<unsigned>>& parts,
    unsigned t, uint64_t budget = default_budget());

}  // namespace jdt
