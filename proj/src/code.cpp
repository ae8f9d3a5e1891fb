#include "jdt/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "jdt/errors.hpp"

namespace jdt {

uint64_t default_budget() {
  if (const char* env = std::getenv("JDT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw Error("JDT_BUDGET must be a positive integer");
  }
  return uint64_t(1) << 24;
}

std::string code_type_name(CodeType t) {
  switch (t) {
    case CodeType::I: return "I";
    case CodeType::II: return "II";
    case CodeType::III: return "III";
    case CodeType::IV: return "IV";
    case CodeType::None: return "none";
  }
  return "none";
}

namespace {

// In-place reduced row echelon form over the given field; returns the pivot
// columns.  Zero rows are removed.
std::vector<unsigned> rref(std::vector<std::vector<unsigned>>& rows, unsigned n,
                           const FieldSpec& F) {
  std::vector<unsigned> pivots;
  size_t r = 0;
  for (unsigned col = 0; col < n && r < rows.size(); ++col) {
    size_t sel = rows.size();
    for (size_t i = r; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    unsigned inv = F.inv(rows[r][col]);
    for (unsigned j = 0; j < n; ++j) rows[r][j] = F.mul(rows[r][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      unsigned factor = rows[i][col];
      for (unsigned j = 0; j < n; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(factor, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const std::vector<unsigned>& row) {
                              return std::all_of(row.begin(), row.end(),
                                                 [](unsigned v) { return v == 0; });
                            }),
             rows.end());
  return pivots;
}

}  // namespace

LinearCode::LinearCode(FieldSpecPtr field, unsigned n,
                       const std::vector<std::vector<FieldElement>>& rows, IpMode mode)
    : field_(std::move(field)), n_(n), mode_(mode) {
  if (!field_) throw Error("code needs a field");
  if (n_ == 0) throw Error("code length must be positive");
  if (mode_ == IpMode::Hermitian && !field_->has_conjugation())
    throw Error("hermitian inner product needs even extension degree, field is " + field_->str());
  rows_.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error("generator row length differs from n");
    std::vector<unsigned> r(n_);
    for (unsigned j = 0; j < n_; ++j) {
      if (!row[j].spec().compatible(*field_))
        throw FieldMismatch("generator entry from a different field");
      r[j] = row[j].index();
    }
    rows_.push_back(std::move(r));
  }
  rref(rows_, n_, *field_);
}

Int LinearCode::size() const {
  Int s = 1;
  for (unsigned i = 0; i < dimension(); ++i) s *= field_->q();
  return s;
}

std::vector<std::vector<FieldElement>> LinearCode::generators() const {
  std::vector<std::vector<FieldElement>> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<FieldElement> r;
    r.reserve(n_);
    for (unsigned v : row) r.push_back(field_->from_index(v));
    out.push_back(std::move(r));
  }
  return out;
}

LinearCode LinearCode::dual() const {
  const FieldSpec& F = *field_;
  // Hermitian dual: x is orthogonal to all rows g under sum g_i conj(x_i)
  // iff x lies in the (Euclidean) null space of the conjugated generators.
  std::vector<std::vector<unsigned>> m = rows_;
  if (mode_ == IpMode::Hermitian)
    for (auto& row : m)
      for (unsigned& v : row) v = F.conj(v);
  std::vector<unsigned> pivots = rref(m, n_, F);

  std::vector<bool> is_pivot(n_, false);
  for (unsigned c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (unsigned j = 0; j < n_; ++j) {
    if (is_pivot[j]) continue;
    std::vector<FieldElement> v(n_, F.zero());
    v[j] = F.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -F.from_index(m[r][j]);
    basis.push_back(std::move(v));
  }
  return LinearCode(field_, n_, basis, mode_);
}

bool LinearCode::is_self_dual() const { return dual() == *this; }

CodeType LinearCode::type(uint64_t budget) const {
  if (!is_self_dual()) return CodeType::None;
  const unsigned q = field_->q();
  bool all_mod4 = true, all_mod3 = true, all_even = true;
  for_each_codeword(
      [&](const std::vector<unsigned>& word) {
        unsigned w = 0;
        for (unsigned v : word) w += (v != 0);
        all_mod4 &= (w % 4 == 0);
        all_mod3 &= (w % 3 == 0);
        all_even &= (w % 2 == 0);
      },
      budget);
  if (q == 2) return (n_ % 8 == 0 && all_mod4) ? CodeType::II : CodeType::I;
  if (q == 3 && field_->f() == 1) return (n_ % 4 == 0 && all_mod3) ? CodeType::III : CodeType::None;
  if (q == 4 && mode_ == IpMode::Hermitian) return all_even ? CodeType::IV : CodeType::None;
  return CodeType::None;
}

LinearCode LinearCode::punctured(unsigned i) const {
  if (i < 1 || i > n_) throw Error("puncture coordinate out of range");
  if (n_ < 2) throw Error("cannot puncture a length-1 code");
  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<FieldElement> r;
    r.reserve(n_ - 1);
    for (unsigned j = 0; j < n_; ++j)
      if (j != i - 1) r.push_back(field_->from_index(row[j]));
    rows.push_back(std::move(r));
  }
  return LinearCode(field_, n_ - 1, rows, mode_);
}

void LinearCode::for_each_codeword(const std::function<void(const std::vector<unsigned>&)>& fn,
                                   uint64_t budget) const {
  const unsigned k = dimension();
  const unsigned q = field_->q();
  if (size() > budget)
    throw BudgetExceeded("enumeration needs " + size().str() + " codewords, budget is " +
                         std::to_string(budget));
  if (k == 0) {
    fn(std::vector<unsigned>(n_, 0));
    return;
  }

  // scaled[r][s] = s * row_r, so partial sums can be updated incrementally
  // as the message odometer turns.
  std::vector<std::vector<std::vector<unsigned>>> scaled(k);
  for (unsigned r = 0; r < k; ++r) {
    scaled[r].assign(q, std::vector<unsigned>(n_));
    for (unsigned s = 0; s < q; ++s)
      for (unsigned j = 0; j < n_; ++j) scaled[r][s][j] = field_->mul(s, rows_[r][j]);
  }

  std::vector<unsigned> digits(k, 0);
  // partial[r] = sum of scaled[t][digits[t]] for t < r
  std::vector<std::vector<unsigned>> partial(k + 1, std::vector<unsigned>(n_, 0));
  auto recompute_from = [&](unsigned r) {
    for (unsigned t = r; t < k; ++t)
      for (unsigned j = 0; j < n_; ++j)
        partial[t + 1][j] = field_->add(partial[t][j], scaled[t][digits[t]][j]);
  };
  recompute_from(0);

  while (true) {
    fn(partial[k]);
    unsigned r = k;
    while (r > 0 && digits[r - 1] == q - 1) {
      digits[r - 1] = 0;
      --r;
    }
    if (r == 0) break;
    ++digits[r - 1];
    recompute_from(r - 1);
  }
}

bool LinearCode::operator==(const LinearCode& o) const {
  return n_ == o.n_ && field_->compatible(*o.field_) && rows_ == o.rows_;
}

std::string LinearCode::to_file_string() const {
  std::ostringstream os;
  os << "q=" << field_->p();
  if (field_->f() > 1) os << "^" << field_->f();
  // mention the modulus only when it is not the library default
  auto def = FieldSpec::make(field_->p(), field_->f());
  if (def->modulus() != field_->modulus()) {
    os << " modulus=";
    for (size_t i = 0; i < field_->modulus().size(); ++i) {
      if (i) os << ",";
      os << field_->modulus()[i];
    }
  }
  os << " n=" << n_ << " ip=" << (mode_ == IpMode::Euclidean ? "euclidean" : "hermitian") << "\n";
  for (const auto& row : rows_) {
    for (unsigned j = 0; j < n_; ++j) {
      if (j) os << " ";
      os << field_->symbol(row[j]);
    }
    os << "\n";
  }
  return os.str();
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  if (!a.field()->compatible(*b.field())) throw FieldMismatch("direct sum over different fields");
  if (a.ip_mode() != b.ip_mode()) throw Error("direct sum with mixed inner products");
  const FieldSpec& F = *a.field();
  const unsigned n = a.n() + b.n();
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& row : a.generator_rows()) {
    std::vector<FieldElement> r(n, F.zero());
    for (unsigned j = 0; j < a.n(); ++j) r[j] = F.from_index(row[j]);
    rows.push_back(std::move(r));
  }
  for (const auto& row : b.generator_rows()) {
    std::vector<FieldElement> r(n, F.zero());
    for (unsigned j = 0; j < b.n(); ++j) r[a.n() + j] = F.from_index(row[j]);
    rows.push_back(std::move(r));
  }
  return LinearCode(a.field(), n, rows, a.ip_mode());
}

namespace {

LinearCode make_tetracode() {
  auto F = FieldSpec::make(3);
  auto e = [&](unsigned i) { return F->from_index(i); };
  std::vector<std::vector<FieldElement>> rows{{e(1), e(0), e(1), e(1)}, {e(0), e(1), e(1), e(2)}};
  return LinearCode(F, 4, rows, IpMode::Euclidean);
}

LinearCode make_golay12() {
  auto F = FieldSpec::make(3);
  auto e = [&](unsigned i) { return F->from_index(i); };
  // [I | B] with B built on the circulant pattern over five symbols
  const unsigned B[6][6] = {{0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
                            {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0}};
  std::vector<std::vector<FieldElement>> rows;
  for (unsigned r = 0; r < 6; ++r) {
    std::vector<FieldElement> row(12, F->zero());
    row[r] = F->one();
    for (unsigned j = 0; j < 6; ++j) row[6 + j] = e(B[r][j]);
    rows.push_back(std::move(row));
  }
  return LinearCode(F, 12, rows, IpMode::Euclidean);
}

LinearCode make_i2() {
  auto F = FieldSpec::make(2, 2);
  std::vector<std::vector<FieldElement>> rows{{F->one(), F->one()}};
  return LinearCode(F, 2, rows, IpMode::Hermitian);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> catalog_entries() {
  return {
      {"tetracode", "[4,2] self-dual ternary code, type III"},
      {"golay12", "[12,6] extended ternary Golay code, type III"},
      {"i2", "[2,1] hermitian self-dual quaternary code {00, 11, ww, w^2w^2}, type IV"},
      {"<name>^<m>", "m-fold direct sum of a catalog code, e.g. tetracode^2 or i2^3"},
  };
}

LinearCode catalog_code(std::string_view name) {
  std::string base(name);
  unsigned copies = 1;
  if (size_t caret = base.find('^'); caret != std::string::npos) {
    std::string count = base.substr(caret + 1);
    base = base.substr(0, caret);
    try {
      size_t used = 0;
      unsigned long v = std::stoul(count, &used);
      if (used != count.size() || v < 1 || v > 64) throw std::invalid_argument("range");
      copies = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw Error("bad repetition count in catalog name '" + std::string(name) + "'");
    }
  }
  LinearCode c = [&]() {
    if (base == "tetracode") return make_tetracode();
    if (base == "golay12") return make_golay12();
    if (base == "i2") return make_i2();
    throw Error("unknown catalog code '" + base + "' (available: tetracode, golay12, i2)");
  }();
  LinearCode out = c;
  for (unsigned i = 1; i < copies; ++i) out = direct_sum(out, c);
  return out;
}

LinearCode load_code(std::istream& in) {
  std::string line;
  unsigned lineno = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      bool blank = std::all_of(line.begin(), line.end(),
                               [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      if (blank) continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_content_line(header)) throw ParseError("empty code file");

  std::string qpart, modpart;
  unsigned n = 0;
  IpMode mode = IpMode::Euclidean;
  bool saw_q = false, saw_n = false, saw_ip = false;
  std::istringstream hs(header);
  std::string tok;
  while (hs >> tok) {
    if (tok.rfind("q=", 0) == 0) {
      qpart = tok.substr(2);
      saw_q = true;
    } else if (tok.rfind("modulus=", 0) == 0) {
      modpart = ";" + tok;
    } else if (tok.rfind("n=", 0) == 0) {
      try {
        n = static_cast<unsigned>(std::stoul(tok.substr(2)));
      } catch (const std::exception&) {
        throw ParseError("bad n in header (line " + std::to_string(lineno) + ")");
      }
      saw_n = true;
    } else if (tok.rfind("ip=", 0) == 0) {
      std::string v = tok.substr(3);
      if (v == "euclidean")
        mode = IpMode::Euclidean;
      else if (v == "hermitian")
        mode = IpMode::Hermitian;
      else
        throw ParseError("bad ip in header (line " + std::to_string(lineno) + ")");
      saw_ip = true;
    } else {
      throw ParseError("unknown header token '" + tok + "' (line " + std::to_string(lineno) + ")");
    }
  }
  if (!saw_q || !saw_n || !saw_ip)
    throw ParseError("header must declare q=, n= and ip= (line " + std::to_string(lineno) + ")");

  FieldSpecPtr F = FieldSpec::parse("q=" + qpart + modpart);

  std::vector<std::vector<FieldElement>> rows;
  std::string row_line;
  while (next_content_line(row_line)) {
    std::istringstream rs(row_line);
    std::vector<FieldElement> row;
    while (rs >> tok) {
      try {
        row.push_back(F->from_index(F->parse_symbol(tok)));
      } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
      }
    }
    if (row.size() != n)
      throw ParseError("row has " + std::to_string(row.size()) + " symbols, expected " +
                       std::to_string(n) + " (line " + std::to_string(lineno) + ")");
    rows.push_back(std::move(row));
  }
  // No rows after the header is legitimate: it is the k=0 zero code.
  try {
    return LinearCode(F, n, rows, mode);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

LinearCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open code file: " + path);
  return load_code(in);
}

}  // namespace jdt
