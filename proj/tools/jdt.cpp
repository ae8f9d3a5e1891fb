// jdt — command-line front end for the enumerator/design/Molien library.
//
// Subcommands: we, jacobi, mw, polarize, design, molien, catalog, verify.
// Every subcommand takes --format text|json and (where it enumerates
// codewords) --budget.  Output is deterministic: identical invocations
// produce byte-identical stdout, which is what the `verify` golden suite
// checks.
//
// Exit codes: 0 success, 1 verification or computation failure,
// 2 usage / parse errors.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jdt/code.hpp"
#include "jdt/cyclo.hpp"
#include "jdt/design.hpp"
#include "jdt/errors.hpp"
#include "jdt/field.hpp"
#include "jdt/jacobi.hpp"
#include "jdt/molien.hpp"
#include "jdt/numeric.hpp"
#include "jdt/poly.hpp"

using json = nlohmann::ordered_json;

namespace {

// A failure that is the caller's fault (bad name, bad combination of
// options, malformed value) and should exit 2 like a CLI11 parse error.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// small parsing helpers

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

unsigned parse_unsigned(const std::string& tok, const std::string& what) {
  try {
    size_t pos = 0;
    unsigned long v = std::stoul(tok, &pos);
    if (pos != tok.size() || v > 0xffffffffUL) throw std::invalid_argument(tok);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageFailure("bad " + what + " '" + tok + "' (expected a nonnegative integer)");
  }
}

std::vector<unsigned> parse_unsigned_list(const std::string& s, const std::string& what) {
  std::vector<unsigned> out;
  for (const std::string& tok : split(s, ','))
    out.push_back(parse_unsigned(tok, what));
  return out;
}

// "1,2,3/4,5,6" -> {{1,2,3},{4,5,6}}
std::vector<std::vector<unsigned>> parse_partition(const std::string& s) {
  std::vector<std::vector<unsigned>> parts;
  for (const std::string& p : split(s, '/'))
    parts.push_back(parse_unsigned_list(p, "partition coordinate"));
  return parts;
}

// Reference vector over the code's field: symbols separated by commas or
// spaces, in the generator-file symbol syntax ("2", "1.0", ...).
std::vector<jdt::FieldElement> parse_reference(const jdt::LinearCode& c, const std::string& s) {
  std::string spaced = s;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<jdt::FieldElement> vec;
  std::string tok;
  while (in >> tok) {
    try {
      vec.push_back(c.field()->from_index(c.field()->parse_symbol(tok)));
    } catch (const jdt::Error& e) {
      throw UsageFailure("bad reference symbol '" + tok + "': " + e.what());
    }
  }
  if (vec.size() != c.n())
    throw UsageFailure("reference vector has " + std::to_string(vec.size()) +
                       " symbols, the code has length " + std::to_string(c.n()));
  return vec;
}

std::vector<jdt::Int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<jdt::Int> out;
  for (const std::string& tok : split(s, ',')) {
    try {
      out.push_back(jdt::Int(tok));
    } catch (const std::exception&) {
      throw UsageFailure("bad " + what + " '" + tok + "' (expected an integer)");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// code sources and rendering

jdt::LinearCode load_source(const std::string& catalog, const std::string& file) {
  if (catalog.empty() == file.empty())
    throw UsageFailure("pass exactly one of --catalog <name> or --code <file>");
  try {
    if (!catalog.empty()) return jdt::catalog_code(catalog);
    return jdt::load_code_file(file);
  } catch (const jdt::Error& e) {
    throw UsageFailure(e.what());
  }
}

// Flat rendering for series in x,y; grouped x/w/y/z rendering otherwise.
std::string render(const jdt::SparsePoly& p) {
  return p.arity() >= 2 ? p.str_grouped() : p.str();
}

json terms_json(const jdt::SparsePoly& p, jdt::RenderStyle style) {
  json names = json::array();
  for (unsigned code = 0; code < p.nvars(); ++code)
    names.push_back(jdt::variable_name(code, p.arity(), style));
  json terms = json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    json t;
    t["exponents"] = exps;
    t["coefficient"] = jdt::rational_str(coeff);
    terms.push_back(t);
  }
  return json{{"variables", names}, {"terms", terms}};
}

json poly_json(const jdt::SparsePoly& p, jdt::RenderStyle style = jdt::RenderStyle::Auto) {
  json j = terms_json(p, style);
  j["rendered"] = style == jdt::RenderStyle::UV ? p.str(style) : render(p);
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// shared option bundle

struct CommonOpts {
  std::string format = "text";
  uint64_t budget = jdt::default_budget();
  bool is_json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--budget", o.budget, "codeword enumeration ceiling");
}

struct SourceOpts {
  std::string catalog, file;
};

void add_source(CLI::App* cmd, SourceOpts& o) {
  cmd->add_option("--catalog", o.catalog, "built-in code name (see `jdt catalog`)");
  cmd->add_option("--code", o.file, "generator matrix file")->type_name("FILE");
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------
// we

int cmd_we(const SourceOpts& src, const CommonOpts& common, std::ostream& out) {
  jdt::LinearCode c = load_source(src.catalog, src.file);
  jdt::SparsePoly w = jdt::weight_enumerator(c, common.budget);
  if (common.is_json()) {
    json j{{"command", "we"},
           {"q", c.field()->q()},
           {"n", c.n()},
           {"dimension", c.dimension()},
           {"codewords", c.size().str()}};
    j.update(poly_json(w));
    emit(out, j);
  } else {
    out << render(w) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// jacobi

struct JacobiOpts {
  SourceOpts src;
  std::string T, t;
  std::vector<std::string> refs;
  bool via_polarization = false;
};

// Indicator references on consecutive coordinate blocks of sizes t_1..t_l.
jdt::ReferenceSet consecutive_indicators(const jdt::LinearCode& c,
                                         const std::vector<unsigned>& t_vec) {
  unsigned start = 1;
  jdt::ReferenceSet refs;
  for (unsigned tj : t_vec) {
    if (start + tj - 1 > c.n() && tj > 0)
      throw UsageFailure("--t entries sum past the code length");
    std::vector<unsigned> support(tj);
    for (unsigned i = 0; i < tj; ++i) support[i] = start + i;
    refs.push_back(jdt::indicator_vector(c.field(), c.n(), support));
    start += tj;
  }
  return refs;
}

int cmd_jacobi(const JacobiOpts& o, const CommonOpts& common, std::ostream& out) {
  jdt::LinearCode c = load_source(o.src.catalog, o.src.file);
  int given = (!o.T.empty()) + (!o.refs.empty()) + (!o.t.empty());
  if (given != 1) throw UsageFailure("pass exactly one of --T, --ref (repeatable), or --t");

  // The enumeration side: J for the requested references.
  jdt::SparsePoly direct{1};
  std::vector<unsigned> t_vec;
  if (!o.T.empty()) {
    std::vector<unsigned> T = parse_unsigned_list(o.T, "coordinate");
    direct = jdt::jacobi_set(c, T, common.budget);
    t_vec = {static_cast<unsigned>(T.size())};
  } else if (!o.refs.empty()) {
    jdt::ReferenceSet refs;
    for (const std::string& r : o.refs) {
      std::vector<jdt::FieldElement> vec = parse_reference(c, r);
      unsigned wt = 0;
      for (const auto& e : vec) wt += !e.is_zero();
      t_vec.push_back(wt);
      refs.push_back(std::move(vec));
    }
    direct = jdt::jacobi_multi(c, refs, common.budget);
  } else {
    t_vec = parse_unsigned_list(o.t, "--t entry");
    direct = jdt::jacobi_multi(c, consecutive_indicators(c, t_vec), common.budget);
  }

  std::optional<bool> match;
  jdt::SparsePoly shown = direct;
  if (o.via_polarization) {
    jdt::SparsePoly w = jdt::weight_enumerator(c, common.budget);
    shown = jdt::jacobi_via_polarization(w, t_vec, c.n());
    match = (shown == direct);
  }

  if (common.is_json()) {
    json j{{"command", "jacobi"}};
    j.update(poly_json(shown));
    if (match) j["match"] = *match;
    emit(out, j);
  } else {
    out << render(shown) << "\n";
    if (match) out << (*match ? "MATCH" : "MISMATCH") << "\n";
  }
  return (match && !*match) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// mw

struct MwOpts {
  SourceOpts src;
  std::string T, poly, csize = "1";
  std::vector<std::string> refs;
  unsigned ell = 0, q = 0;
};

int cmd_mw(const MwOpts& o, const CommonOpts& common, std::ostream& out) {
  jdt::SparsePoly base{1};
  unsigned q = 0;
  jdt::Int csize;
  std::optional<bool> consistent;

  if (!o.poly.empty()) {
    if ((!o.src.catalog.empty()) || (!o.src.file.empty()))
      throw UsageFailure("--poly cannot be combined with --catalog/--code");
    if (o.q == 0) throw UsageFailure("--poly needs --q (the field size)");
    try {
      base = jdt::SparsePoly::parse(o.poly, o.ell + 1);
      csize = jdt::Int(o.csize);
    } catch (const jdt::ParseError& e) {
      throw UsageFailure(e.what());
    } catch (const std::exception&) {
      throw UsageFailure("bad --csize '" + o.csize + "'");
    }
    q = o.q;
  } else {
    jdt::LinearCode c = load_source(o.src.catalog, o.src.file);
    if (!o.T.empty() && !o.refs.empty())
      throw UsageFailure("pass at most one of --T and --ref");
    if (!o.T.empty()) {
      base = jdt::jacobi_set(c, parse_unsigned_list(o.T, "coordinate"), common.budget);
    } else if (!o.refs.empty()) {
      jdt::ReferenceSet refs;
      for (const std::string& r : o.refs) refs.push_back(parse_reference(c, r));
      base = jdt::jacobi_multi(c, refs, common.budget);
    } else {
      base = jdt::weight_enumerator(c, common.budget);
    }
    q = c.field()->q();
    csize = c.size();
    if (c.is_self_dual()) consistent = true;  // verdict filled in below
  }

  jdt::SparsePoly transformed = jdt::macwilliams_transform(base, q, csize);
  if (consistent) consistent = (transformed == base);

  if (common.is_json()) {
    json j{{"command", "mw"}, {"q", q}, {"csize", csize.str()}};
    j.update(poly_json(transformed));
    if (consistent) j["self_dual_consistent"] = *consistent;
    emit(out, j);
  } else {
    out << render(transformed) << "\n";
    if (consistent) out << (*consistent ? "SELF-DUAL-CONSISTENT" : "SELF-DUAL-MISMATCH") << "\n";
  }
  return (consistent && !*consistent) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// polarize

struct PolarizeOpts {
  std::string poly;
  unsigned arity = 1, j = 1, times = 1;
};

int cmd_polarize(const PolarizeOpts& o, const CommonOpts& common, std::ostream& out) {
  if (o.j == 0) throw UsageFailure("--j is 1-based");
  jdt::SparsePoly p{1};
  try {
    p = jdt::SparsePoly::parse(o.poly, o.arity);
  } catch (const jdt::ParseError& e) {
    throw UsageFailure(e.what());
  }
  for (unsigned i = 0; i < o.times; ++i) p = jdt::polarize(p, o.j);
  if (common.is_json()) {
    json j{{"command", "polarize"}};
    j.update(poly_json(p));
    emit(out, j);
  } else {
    out << render(p) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// design

struct DesignOpts {
  SourceOpts src;
  std::string k, t, partition;
  std::string mode = "support-set";
};

std::string tuple_str(const std::vector<std::vector<unsigned>>& tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += " | ";
    for (size_t j = 0; j < tuple[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(tuple[i][j]);
    }
  }
  return s + ")";
}

int cmd_design(const DesignOpts& o, const CommonOpts& common, std::ostream& out) {
  jdt::LinearCode c = load_source(o.src.catalog, o.src.file);
  if (o.k.empty() || o.t.empty()) throw UsageFailure("design needs --k and --t");

  if (!o.partition.empty()) {
    std::vector<std::vector<unsigned>> parts = parse_partition(o.partition);
    std::vector<unsigned> k_vec = parse_unsigned_list(o.k, "--k entry");
    std::vector<unsigned> t_vec = parse_unsigned_list(o.t, "--t entry");
    if (k_vec.size() != parts.size() || t_vec.size() != parts.size())
      throw UsageFailure("--k and --t need one entry per partition part (" +
                         std::to_string(parts.size()) + " parts)");
    jdt::GeneralizedDesignResult r =
        jdt::generalized_design_check(c, parts, k_vec, t_vec, common.budget);
    if (common.is_json()) {
      json j{{"command", "design"}, {"blocks", r.block_count}};
      j["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
      if (r.witness) {
        j["witness"] = json{{"tuple_a", r.witness->tuple_a},
                            {"count_a", r.witness->count_a},
                            {"tuple_b", r.witness->tuple_b},
                            {"count_b", r.witness->count_b}};
      }
      emit(out, j);
    } else {
      out << "blocks: " << r.block_count << "\n";
      if (r.lambda) {
        out << "lambda = " << *r.lambda << "\n";
      } else {
        out << "not constant: " << tuple_str(r.witness->tuple_a) << " -> " << r.witness->count_a
            << ", " << tuple_str(r.witness->tuple_b) << " -> " << r.witness->count_b << "\n";
      }
    }
    return 0;
  }

  unsigned k = parse_unsigned(o.k, "--k");
  unsigned t = parse_unsigned(o.t, "--t");
  jdt::BlockMode mode =
      o.mode == "multiset" ? jdt::BlockMode::Multiset : jdt::BlockMode::SupportSet;
  jdt::BlockFamily fam = jdt::blocks_from_code(c, k, mode, common.budget);

  if (fam.blocks.empty()) {
    if (common.is_json()) {
      emit(out, json{{"command", "design"},
                     {"v", fam.v},
                     {"k", k},
                     {"t", t},
                     {"spectrum", json::array()},
                     {"blocks", 0},
                     {"design", false},
                     {"statement", "no blocks"}});
    } else {
      out << "no blocks: the code has no weight-" << k << " codewords\n";
    }
    return 0;
  }

  jdt::DesignReport rep = jdt::design_report(fam, t);
  if (common.is_json()) {
    json spectrum = json::array();
    for (auto [lambda, count] : rep.spectrum.groups())
      spectrum.push_back(json{{"lambda", lambda}, {"count", count}});
    emit(out, json{{"command", "design"},
                   {"v", rep.v},
                   {"k", rep.k},
                   {"t", rep.t},
                   {"spectrum", spectrum},
                   {"blocks", rep.block_count},
                   {"design", rep.is_t_design},
                   {"parameters", rep.parameters},
                   {"statement", rep.statement}});
  } else {
    out << rep.text();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// molien

struct MolienOpts {
  std::string group;
  unsigned max_degree = 20;
  int part = -1;
  bool csv = false;
  std::string denom_u, denom_v;
};

jdt::Rational rational_of_json(const json& v) {
  if (v.is_number_integer()) return jdt::Rational(v.get<long long>());
  if (v.is_string()) return jdt::parse_rational(v.get<std::string>());
  throw jdt::ParseError("matrix entries are integers, \"a/b\" strings, or coefficient arrays");
}

// A matrix entry: a rational, or an array of rationals c_i giving
// sum c_i zeta_N^i at the file's conductor N.
jdt::Cyclo cyclo_of_json(const json& v, unsigned conductor) {
  if (v.is_array()) {
    jdt::Cyclo acc = jdt::Cyclo::zero(conductor);
    for (size_t i = 0; i < v.size(); ++i)
      acc += jdt::Cyclo::rational(rational_of_json(v[i])) *
             jdt::Cyclo::root_of_unity(conductor, static_cast<long long>(i));
    return acc;
  }
  return jdt::Cyclo::rational(rational_of_json(v), conductor);
}

// {"conductor": N, "generators": [[[a, b], [c, d]], ...]}
std::vector<jdt::Matrix2> load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageFailure("cannot open group file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageFailure(path + ": " + e.what());
  }
  unsigned conductor = doc.value("conductor", 1u);
  if (conductor == 0 || !doc.contains("generators") || !doc["generators"].is_array() ||
      doc["generators"].empty())
    throw UsageFailure(path + ": need a positive conductor and a nonempty generators array");
  std::vector<jdt::Matrix2> gens;
  try {
    for (const json& g : doc["generators"]) {
      if (!g.is_array() || g.size() != 2 || !g[0].is_array() || g[0].size() != 2       ||
          !g[1].is_array() || g[1].size() != 2)
        throw jdt::ParseError("each generator is a 2x2 nested array");
      gens.push_back(jdt::Matrix2{cyclo_of_json(g[0][0], conductor),
                                  cyclo_of_json(g[0][1], conductor),
                                  cyclo_of_json(g[1][0], conductor),
                                  cyclo_of_json(g[1][1], conductor)});
    }
  } catch (const jdt::ParseError& e) {
    throw UsageFailure(path + ": " + e.what());
  }
  return gens;
}

int cmd_molien(const MolienOpts& o, const CommonOpts& common, std::ostream& out) {
  std::vector<std::string> names = jdt::named_group_list();
  std::vector<jdt::Matrix2> gens;
  if (std::find(names.begin(), names.end(), o.group) != names.end())
    gens = jdt::named_group_generators(o.group);
  else if (std::filesystem::exists(o.group))
    gens = load_group_file(o.group);
  else
    throw UsageFailure("unknown group '" + o.group + "' (named groups: g3, g4, identity; or a JSON file)");

  if (o.part >= 0 && static_cast<unsigned>(o.part) > o.max_degree)
    throw UsageFailure("--part exceeds --max-degree");

  std::vector<jdt::Matrix2> group = jdt::group_closure(gens);
  jdt::MolienTable table = jdt::molien_bivariate(group, o.max_degree);

  std::optional<bool> denom_ok;
  if (!o.denom_u.empty() || !o.denom_v.empty()) {
    std::vector<jdt::Int> du = parse_int_list(!o.denom_u.empty() ? o.denom_u : o.denom_v,
                                              "denominator coefficient");
    std::vector<jdt::Int> dv = parse_int_list(!o.denom_v.empty() ? o.denom_v : o.denom_u,
                                              "denominator coefficient");
    denom_ok = jdt::verify_denominator(table, du, dv);
  }

  if (common.is_json()) {
    json j{{"command", "molien"}, {"group", o.group}, {"order", group.size()},
           {"max_degree", o.max_degree}};
    if (o.part >= 0) {
      j["part"] = o.part;
      j.update(poly_json(table.homogeneous_part(static_cast<unsigned>(o.part)),
                         jdt::RenderStyle::UV));
    } else if (o.csv) {
      json cells = json::array();
      for (unsigned i = 0; i <= o.max_degree; ++i)
        for (unsigned j2 = 0; i + j2 <= o.max_degree; ++j2)
          cells.push_back(json{{"i", i}, {"j", j2}, {"coefficient", table.coeff(i, j2).str()}});
      j["coefficients"] = cells;
    } else {
      json parts = json::array();
      for (unsigned d = 0; d <= o.max_degree; ++d)
        parts.push_back(table.homogeneous_part(d).str(jdt::RenderStyle::UV));
      j["parts"] = parts;
    }
    if (denom_ok) j["denominator_ok"] = *denom_ok;
    emit(out, j);
  } else {
    if (o.part >= 0) {
      out << table.homogeneous_part(static_cast<unsigned>(o.part)).str(jdt::RenderStyle::UV)
          << "\n";
    } else if (o.csv) {
      out << table.csv();
    } else {
      out << "order: " << group.size() << "\n";
      for (unsigned d = 0; d <= o.max_degree; ++d)
        out << "f[" << d << "] = " << table.homogeneous_part(d).str(jdt::RenderStyle::UV) << "\n";
    }
    if (denom_ok) out << "denominator: " << (*denom_ok ? "OK" : "FAIL") << "\n";
  }
  return (denom_ok && !*denom_ok) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog(const CommonOpts& common, std::ostream& out) {
  auto entries = jdt::catalog_entries();
  if (common.is_json()) {
    json list = json::array();
    for (const auto& [name, desc] : entries)
      list.push_back(json{{"name", name}, {"description", desc}});
    emit(out, json{{"command", "catalog"}, {"entries", list}});
  } else {
    size_t width = 0;
    for (const auto& [name, desc] : entries) width = std::max(width, name.size());
    for (const auto& [name, desc] : entries)
      out << name << std::string(width - name.size() + 2, ' ') << desc << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify — replay golden files ("$ jdt <args>" first line, expected stdout
// after) and compare byte for byte.

struct VerifyOpts {
  std::string suite, dir = "golden";
  bool update = false;
};

// Splits a golden command line like a POSIX shell: whitespace separates,
// single or double quotes group.
std::vector<std::string> shell_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool have = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote)
        quote = 0;
      else
        cur.push_back(ch);
    } else if (ch == '\'' || ch == '"') {
      quote = ch;
      have = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (have || !cur.empty()) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur.push_back(ch);
    }
  }
  if (quote) throw UsageFailure("unbalanced quote in golden command: " + line);
  if (have || !cur.empty()) out.push_back(cur);
  return out;
}

int cmd_verify(const VerifyOpts& o, const CommonOpts& common, std::ostream& out) {
  if (o.suite != "golden")
    throw UsageFailure("unknown suite '" + o.suite + "' (available: golden)");
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(o.dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  if (ec) throw UsageFailure("cannot read golden directory: " + o.dir);
  if (files.empty()) throw UsageFailure("no golden files (*.txt) in " + o.dir);
  std::sort(files.begin(), files.end());

  unsigned passed = 0, updated = 0;
  json results = json::array();
  std::ostringstream fail_detail;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    std::stringstream rest;
    rest << in.rdbuf();
    std::string expected = rest.str();
    if (first.rfind("$ jdt ", 0) != 0)
      throw UsageFailure(path.string() + ": first line must start with \"$ jdt \"");
    std::vector<std::string> args = shell_split(first.substr(6));

    std::ostringstream actual;
    std::ostringstream errs;
    int rc = run_cli(args, actual, errs);
    bool ok = (rc == 0) && (actual.str() == expected);

    if (o.update) {
      std::ofstream rewrite(path, std::ios::trunc);
      rewrite << first << "\n" << actual.str();
      ++updated;
      continue;
    }

    results.push_back(json{{"file", path.filename().string()}, {"pass", ok}});
    if (ok) {
      ++passed;
      if (!common.is_json()) out << "[PASS] " << path.filename().string() << "\n";
    } else if (!common.is_json()) {
      out << "[FAIL] " << path.filename().string() << "\n";
      fail_detail << path.filename().string() << ": jdt " << first.substr(6) << "\n";
      if (rc != 0) fail_detail << "  exit code " << rc << ": " << errs.str();
      fail_detail << "  --- expected ---\n" << expected << "  --- actual ---\n" << actual.str();
    }
  }

  if (o.update) {
    if (common.is_json())
      emit(out, json{{"command", "verify"}, {"updated", updated}});
    else
      out << "updated " << updated << " golden files\n";
    return 0;
  }

  if (common.is_json()) {
    emit(out, json{{"command", "verify"},
                   {"results", results},
                   {"passed", passed},
                   {"total", files.size()}});
  } else {
    out << fail_detail.str();
    out << "passed " << passed << "/" << files.size() << "\n";
  }
  return passed == files.size() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// driver

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact enumerator, design and Molien computations for linear codes"};
  app.name("jdt");
  app.require_subcommand(1);

  CommonOpts common;

  SourceOpts we_src;
  CLI::App* we = app.add_subcommand("we", "weight enumerator of a code");
  add_source(we, we_src);
  add_common(we, common);

  JacobiOpts jac;
  CLI::App* jacobi = app.add_subcommand("jacobi", "Jacobi polynomial for reference vectors");
  add_source(jacobi, jac.src);
  jacobi->add_option("--T", jac.T, "reference support, 1-based coordinates \"1,2,3\"");
  jacobi->add_option("--ref", jac.refs, "reference vector (repeat for several)");
  jacobi->add_option("--t", jac.t,
                     "reference weights \"t1,t2,...\"; references become consecutive"
                     " coordinate blocks");
  jacobi->add_flag("--via-polarization", jac.via_polarization,
                   "compute through iterated polarization of the weight enumerator and"
                   " report MATCH/MISMATCH against direct enumeration");
  add_common(jacobi, common);

  MwOpts mw;
  CLI::App* mwc = app.add_subcommand("mw", "transform an enumerator to the dual code's");
  add_source(mwc, mw.src);
  mwc->add_option("--T", mw.T, "reference support for the code's Jacobi polynomial");
  mwc->add_option("--ref", mw.refs, "reference vector (repeat for several)");
  mwc->add_option("--poly", mw.poly, "transform this polynomial instead of a code's");
  mwc->add_option("--ell", mw.ell, "reference count of --poly (arity = ell+1)")
      ->capture_default_str();
  mwc->add_option("--q", mw.q, "field size for --poly");
  mwc->add_option("--csize", mw.csize, "code size |C| for --poly")->capture_default_str();
  add_common(mwc, common);

  PolarizeOpts pol;
  CLI::App* polarize = app.add_subcommand("polarize", "apply a polarization operator");
  polarize->add_option("--poly", pol.poly, "input polynomial")->required();
  polarize->add_option("--arity", pol.arity, "variable-family arity of the input")
      ->capture_default_str();
  polarize->add_option("--j", pol.j, "reference index of the operator")->capture_default_str();
  polarize->add_option("--times", pol.times, "how often to apply it")->capture_default_str();
  add_common(polarize, common);

  DesignOpts des;
  CLI::App* design = app.add_subcommand("design", "block designs from fixed-weight supports");
  add_source(design, des.src);
  design->add_option("--k", des.k, "block weight (comma list with --partition)");
  design->add_option("--t", des.t, "subset size (comma list with --partition)");
  design->add_option("--mode", des.mode, "block collection mode")
      ->check(CLI::IsMember({"multiset", "support-set"}))
      ->capture_default_str();
  design->add_option("--partition", des.partition,
                     "split check: parts \"1,2,3/4,5,6\" with per-part --k and --t");
  add_common(design, common);

  MolienOpts mol;
  CLI::App* molien = app.add_subcommand("molien", "bivariate Molien series of a matrix group");
  molien->add_option("--group", mol.group, "g3, g4, identity, or a JSON group file")->required();
  molien->add_option("--max-degree", mol.max_degree, "series truncation degree")
      ->capture_default_str();
  molien->add_option("--part", mol.part, "print only the degree-d homogeneous part");
  molien->add_flag("--csv", mol.csv, "print the coefficient table as CSV");
  molien->add_option("--denominator-u", mol.denom_u,
                     "u-side denominator coefficients \"c0,c1,...\" to verify");
  molien->add_option("--denominator-v", mol.denom_v,
                     "v-side denominator coefficients (defaults to the u side)");
  add_common(molien, common);

  CLI::App* catalog = app.add_subcommand("catalog", "list built-in codes");
  add_common(catalog, common);

  VerifyOpts ver;
  CLI::App* verify = app.add_subcommand("verify", "replay golden files and compare output");
  verify->add_option("--suite", ver.suite, "test suite name")->required();
  verify->add_option("--golden-dir", ver.dir, "directory of golden files")
      ->capture_default_str();
  verify->add_flag("--update-golden", ver.update, "rewrite golden files with current output");
  add_common(verify, common);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (we->parsed()) return cmd_we(we_src, common, out);
    if (jacobi->parsed()) return cmd_jacobi(jac, common, out);
    if (mwc->parsed()) return cmd_mw(mw, common, out);
    if (polarize->parsed()) return cmd_polarize(pol, common, out);
    if (design->parsed()) return cmd_design(des, common, out);
    if (molien->parsed()) return cmd_molien(mol, common, out);
    if (catalog->parsed()) return cmd_catalog(common, out);
    if (verify->parsed()) return cmd_verify(ver, common, out);
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const jdt::BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const jdt::IntegralityError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const jdt::FieldMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const jdt::Error& e) {
    // The library throws ParseError and plain Error for malformed or
    // inconsistent requests; only the derived types above mean a computation
    // started and could not finish.
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // no subcommand (require_subcommand already errors, defensive)
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(std::move(args), std::cout, std::cerr);
}
