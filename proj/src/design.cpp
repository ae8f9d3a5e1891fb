#include "jdt/design.hpp"

#include <algorithm>
#include <thread>

#include "jdt/errors.hpp"

namespace jdt {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(msg);
}

uint64_t support_mask(const std::vector<unsigned>& word) {
  uint64_t m = 0;
  for (size_t i = 0; i < word.size(); ++i)
    if (word[i] != 0) m |= uint64_t(1) << i;
  return m;
}

// lexicographically next t-subset of {0..v-1}; false once exhausted
bool next_combination(std::vector<unsigned>& idx, unsigned v) {
  unsigned t = static_cast<unsigned>(idx.size());
  for (unsigned i = t; i-- > 0;) {
    if (idx[i] < v - (t - i)) {
      ++idx[i];
      for (unsigned j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// rank-th t-subset of {0..v-1} in lexicographic order
std::vector<unsigned> unrank_combination(unsigned v, unsigned t, Int rank) {
  std::vector<unsigned> idx(t);
  unsigned c = 0;
  for (unsigned i = 0; i < t; ++i) {
    while (true) {
      Int below = binomial(v - 1 - c, t - 1 - i);
      if (rank < below) break;
      rank -= below;
      ++c;
    }
    idx[i] = c++;
  }
  return idx;
}

uint64_t mask_of(const std::vector<unsigned>& idx) {
  uint64_t m = 0;
  for (unsigned i : idx) m |= uint64_t(1) << i;
  return m;
}

std::vector<std::vector<unsigned>> combinations(const std::vector<unsigned>& pool, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k > pool.size()) return out;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<unsigned> pick(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    out.push_back(std::move(pick));
    if (!next_combination(idx, static_cast<unsigned>(pool.size()))) break;
  }
  return out;
}

void validate_partition(const LinearCode& c, const std::vector<std::vector<unsigned>>& parts) {
  require(!parts.empty(), "at least one part required");
  require(c.n() <= 64, "point sets are limited to 64 coordinates");
  std::vector<bool> seen(c.n() + 1, false);
  size_t covered = 0;
  for (const auto& part : parts) {
    require(!part.empty(), "empty part");
    for (unsigned x : part) {
      require(x >= 1 && x <= c.n(), "part coordinate out of range");
      require(!seen[x], "parts must be pairwise disjoint");
      seen[x] = true;
      ++covered;
    }
  }
  require(covered == c.n(), "parts must cover every coordinate");
}

struct ConstancyOutcome {
  std::optional<uint64_t> lambda;
  std::optional<GeneralizedWitness> witness;
};

// Does every componentwise choice of t_i-subsets hit the same number of
// blocks?  Blocks are global support masks; parts are disjoint, so the
// per-part containments collapse into one mask test.
ConstancyOutcome constant_containment(const std::vector<uint64_t>& blocks,
                                      const std::vector<std::vector<unsigned>>& parts,
                                      const std::vector<unsigned>& t_vec, uint64_t budget) {
  size_t ell = parts.size();
  std::vector<std::vector<std::vector<unsigned>>> choices;
  Int total = 1;
  for (size_t j = 0; j < ell; ++j) {
    choices.push_back(combinations(parts[j], t_vec[j]));
    total *= Int(choices.back().size());
  }
  if (total * Int(blocks.size()) > Int(budget))
    throw BudgetExceeded("design check needs " +
                         (total * Int(blocks.size())).str() + " membership tests");

  auto tuple_of = [&](const std::vector<size_t>& pick) {
    std::vector<std::vector<unsigned>> tuple(ell);
    for (size_t j = 0; j < ell; ++j) tuple[j] = choices[j][pick[j]];
    return tuple;
  };

  std::vector<size_t> pick(ell, 0);
  ConstancyOutcome out;
  std::vector<size_t> first_pick = pick;
  bool have_first = false;
  uint64_t first_count = 0;
  while (true) {
    uint64_t mask = 0;
    for (size_t j = 0; j < ell; ++j)
      for (unsigned x : choices[j][pick[j]]) mask |= uint64_t(1) << (x - 1);
    uint64_t count = 0;
    for (uint64_t b : blocks)
      if ((b & mask) == mask) ++count;
    if (!have_first) {
      have_first = true;
      first_count = count;
      first_pick = pick;
    } else if (count != first_count) {
      GeneralizedWitness w;
      w.tuple_a = tuple_of(first_pick);
      w.tuple_b = tuple_of(pick);
      w.count_a = first_count;
      w.count_b = count;
      out.witness = std::move(w);
      return out;
    }
    size_t j = ell;
    while (j > 0 && ++pick[j - 1] == choices[j - 1].size()) pick[--j] = 0;
    if (j == 0) break;
  }
  out.lambda = first_count;
  return out;
}

}  // namespace

BlockFamily blocks_from_code(const LinearCode& c, unsigned k, BlockMode mode, uint64_t budget) {
  require(c.n() <= 64, "point sets are limited to 64 coordinates");
  require(k >= 1 && k <= c.n(), "block size out of range");
  BlockFamily fam;
  fam.v = c.n();
  fam.k = k;
  fam.mode = mode;
  c.for_each_codeword(
      [&](const std::vector<unsigned>& word) {
        uint64_t m = support_mask(word);
        if (static_cast<unsigned>(__builtin_popcountll(m)) == k) fam.blocks.push_back(m);
      },
      budget);
  std::sort(fam.blocks.begin(), fam.blocks.end());
  if (mode == BlockMode::SupportSet)
    fam.blocks.erase(std::unique(fam.blocks.begin(), fam.blocks.end()), fam.blocks.end());
  return fam;
}

std::vector<std::pair<uint64_t, uint64_t>> DesignSpectrum::groups() const {
  return {histogram.rbegin(), histogram.rend()};
}

DesignSpectrum t_spectrum(const BlockFamily& b, unsigned t) {
  require(b.v >= 1 && b.v <= 64, "point sets are limited to 64 coordinates");
  require(t <= b.k, "strength exceeds the block size");
  DesignSpectrum spec;
  spec.t = t;
  spec.block_count = b.blocks.size();

  Int total = binomial(b.v, t);
  if (total > Int(100000000))
    throw Error("too many subsets to tabulate: C(" + std::to_string(b.v) + "," +
                std::to_string(t) + ") = " + total.str());
  uint64_t subsets = total.convert_to<uint64_t>();

  auto scan = [&](Int first, uint64_t n_subsets, std::map<uint64_t, uint64_t>& hist) {
    std::vector<unsigned> idx = unrank_combination(b.v, t, first);
    for (uint64_t s = 0; s < n_subsets; ++s) {
      uint64_t mask = mask_of(idx);
      uint64_t count = 0;
      for (uint64_t blk : b.blocks)
        if ((blk & mask) == mask) ++count;
      ++hist[count];
      if (!next_combination(idx, b.v)) break;
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (subsets >= 4096 && hw >= 2 && !b.blocks.empty()) {
    unsigned workers = std::min<unsigned>(hw, 8);
    std::vector<std::map<uint64_t, uint64_t>> local(workers);
    std::vector<std::thread> pool;
    uint64_t chunk = (subsets + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      uint64_t lo = w * chunk;
      if (lo >= subsets) break;
      uint64_t n_sub = std::min<uint64_t>(chunk, subsets - lo);
      pool.emplace_back([&, lo, n_sub, w] { scan(Int(lo), n_sub, local[w]); });
    }
    for (auto& th : pool) th.join();
    for (const auto& hist : local)
      for (auto [lambda, count] : hist) spec.histogram[lambda] += count;
  } else {
    scan(Int(0), subsets, spec.histogram);
  }
  return spec;
}

DesignReport design_report(const BlockFamily& b, unsigned t) {
  require(!b.blocks.empty(), "empty block family");
  DesignReport rep;
  rep.v = b.v;
  rep.k = b.k;
  rep.t = t;
  rep.spectrum = t_spectrum(b, t);
  rep.block_count = rep.spectrum.block_count;
  rep.is_t_design = rep.spectrum.constant();

  std::string params = std::to_string(t) + "-(" + std::to_string(b.v) + "," +
                       std::to_string(b.k) + ",";
  if (rep.is_t_design) {
    params += std::to_string(rep.spectrum.histogram.begin()->first);
  } else {
    params += "(";
    bool first = true;
    for (auto [lambda, count] : rep.spectrum.groups()) {
      if (!first) params += ",";
      first = false;
      params += std::to_string(lambda) + "^{" + std::to_string(count) + "}";
    }
    params += ")";
  }
  params += ")";
  rep.parameters = params;

  uint64_t lam_max = rep.spectrum.histogram.rbegin()->first;
  uint64_t lam_min = rep.spectrum.histogram.begin()->first;
  rep.statement = "D_" + std::to_string(lam_max) + "(" + std::to_string(b.v) + "," +
                  std::to_string(b.k) + "," + std::to_string(t) + ") ≤ " +
                  std::to_string(rep.block_count) + " ≤ C_" + std::to_string(lam_min) +
                  "(" + std::to_string(b.v) + "," + std::to_string(b.k) + "," +
                  std::to_string(t) + ")";
  return rep;
}

std::string DesignReport::text() const {
  std::string out = parameters + " ; " + statement + "\n";
  out += "blocks: " + std::to_string(block_count) + "\n";
  if (is_t_design)
    out += "t-design (lambda = " + std::to_string(spectrum.histogram.begin()->first) + ")\n";
  return out;
}

GeneralizedDesignResult generalized_design_check(const LinearCode& c,
                                                 const std::vector<std::vector<unsigned>>& parts,
                                                 const std::vector<unsigned>& k_vec,
                                                 const std::vector<unsigned>& t_vec,
                                                 uint64_t budget) {
  validate_partition(c, parts);
  require(k_vec.size() == parts.size() && t_vec.size() == parts.size(),
          "one block size and one strength per part");
  for (size_t j = 0; j < parts.size(); ++j) {
    require(k_vec[j] <= parts[j].size(), "block size exceeds part size");
    require(t_vec[j] <= k_vec[j], "strength exceeds block size");
  }

  std::vector<uint64_t> part_masks(parts.size(), 0);
  for (size_t j = 0; j < parts.size(); ++j)
    for (unsigned x : parts[j]) part_masks[j] |= uint64_t(1) << (x - 1);

  std::vector<uint64_t> blocks;
  c.for_each_codeword(
      [&](const std::vector<unsigned>& word) {
        uint64_t m = support_mask(word);
        for (size_t j = 0; j < parts.size(); ++j)
          if (static_cast<unsigned>(__builtin_popcountll(m & part_masks[j])) != k_vec[j]) return;
        blocks.push_back(m);
      },
      budget);

  GeneralizedDesignResult result;
  result.block_count = blocks.size();
  ConstancyOutcome out = constant_containment(blocks, parts, t_vec, budget);
  result.lambda = out.lambda;
  result.witness = std::move(out.witness);
  return result;
}

HomogeneityResult is_generalized_t_homogeneous(const LinearCode& c,
                                               const std::vector<std::vector<unsigned>>& parts,
                                               unsigned t, uint64_t budget) {
  validate_partition(c, parts);

  std::vector<uint64_t> part_masks(parts.size(), 0);
  for (size_t j = 0; j < parts.size(); ++j)
    for (unsigned x : parts[j]) part_masks[j] |= uint64_t(1) << (x - 1);

  // bucket supports by weight profile across the parts
  std::map<std::vector<unsigned>, std::vector<uint64_t>> buckets;
  c.for_each_codeword(
      [&](const std::vector<unsigned>& word) {
        uint64_t m = support_mask(word);
        if (m == 0) return;
        std::vector<unsigned> profile(parts.size());
        for (size_t j = 0; j < parts.size(); ++j)
          profile[j] = static_cast<unsigned>(__builtin_popcountll(m & part_masks[j]));
        buckets[profile].push_back(m);
      },
      budget);

  // every admissible split of t across the parts, in lexicographic order
  auto splits_of = [&](const std::vector<unsigned>& profile) {
    std::vector<std::vector<unsigned>> splits;
    std::vector<unsigned> cur(parts.size(), 0);
    auto rec = [&](auto&& self, size_t j, unsigned left) -> void {
      if (j + 1 == parts.size()) {
        if (left <= profile[j]) {
          cur[j] = left;
          splits.push_back(cur);
        }
        return;
      }
      for (unsigned tj = 0; tj <= std::min<unsigned>(left, profile[j]); ++tj) {
        cur[j] = tj;
        self(self, j + 1, left - tj);
      }
    };
    rec(rec, 0, t);
    return splits;
  };

  HomogeneityResult res;
  for (const auto& [profile, blocks] : buckets) {
    for (const auto& split : splits_of(profile)) {
      ConstancyOutcome out = constant_containment(blocks, parts, split, budget);
      if (!out.lambda) {
        res.homogeneous = false;
        res.failing_k = profile;
        res.failing_t = split;
        return res;
      }
    }
  }
  res.homogeneous = true;
  return res;
}

}  // namespace jdt
