#include "jdt/code.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "jdt/errors.hpp"

using namespace jdt;

namespace {

std::map<unsigned, long long> weight_histogram(const LinearCode& c) {
  std::map<unsigned, long long> h;
  c.for_each_codeword([&](const std::vector<unsigned>& w) {
    unsigned wt = 0;
    for (unsigned v : w) wt += (v != 0);
    ++h[wt];
  });
  return h;
}

// Orthogonality of every dual generator against every code generator, checked
// with the inner product directly rather than through the RREF machinery.
void check_duality(const LinearCode& c) {
  LinearCode d = c.dual();
  CHECK(d.dimension() == c.n() - c.dimension());
  auto cg = c.generators();
  auto dg = d.generators();
  for (const auto& u : cg)
    for (const auto& v : dg) CHECK(inner_product(u, v, c.ip_mode()).is_zero());
  CHECK(d.dual() == c);
}

}  // namespace

TEST_CASE("tetracode basics") {
  LinearCode c = catalog_code("tetracode");
  CHECK(c.n() == 4);
  CHECK(c.dimension() == 2);
  CHECK(c.size() == 9);
  CHECK(c.is_self_dual());
  CHECK(c.type() == CodeType::III);
  auto h = weight_histogram(c);
  CHECK(h == std::map<unsigned, long long>{{0, 1}, {3, 8}});
  check_duality(c);
}

TEST_CASE("ternary Golay code") {
  LinearCode c = catalog_code("golay12");
  CHECK(c.n() == 12);
  CHECK(c.dimension() == 6);
  CHECK(c.is_self_dual());
  CHECK(c.type() == CodeType::III);
  auto h = weight_histogram(c);
  CHECK(h == std::map<unsigned, long long>{{0, 1}, {6, 264}, {9, 440}, {12, 24}});
}

TEST_CASE("quaternary hermitian code i2") {
  LinearCode c = catalog_code("i2");
  CHECK(c.n() == 2);
  CHECK(c.dimension() == 1);
  CHECK(c.ip_mode() == IpMode::Hermitian);
  CHECK(c.is_self_dual());
  CHECK(c.type() == CodeType::IV);
  std::set<std::vector<unsigned>> words;
  c.for_each_codeword([&](const std::vector<unsigned>& w) { words.insert(w); });
  // {00, 11, LL, L^2 L^2} where L generates F_4
  std::set<std::vector<unsigned>> expect{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(words == expect);
  check_duality(c);
}

TEST_CASE("catalog handles direct-sum powers") {
  LinearCode t2 = catalog_code("tetracode^2");
  CHECK(t2.n() == 8);
  CHECK(t2.dimension() == 4);
  CHECK(t2 == direct_sum(catalog_code("tetracode"), catalog_code("tetracode")));
  CHECK(catalog_code("i2^3").n() == 6);
  CHECK_THROWS_AS(catalog_code("nope"), Error);
  CHECK_THROWS_AS(catalog_code("tetracode^0"), Error);
  CHECK_THROWS_AS(catalog_code("tetracode^x"), Error);
  CHECK(catalog_entries().size() >= 3);
}

TEST_CASE("rref gives one canonical representative per code") {
  auto F = FieldSpec::make(3);
  auto e = [&](unsigned i) { return F->from_index(i); };
  // tetracode generators, permuted and rescaled
  std::vector<std::vector<FieldElement>> rows{{e(0), e(2), e(2), e(1)},   // 2 * row2
                                              {e(2), e(0), e(2), e(2)}};  // 2 * row1
  LinearCode c(F, 4, rows);
  CHECK(c == catalog_code("tetracode"));
  // adding a dependent row changes nothing
  std::vector<std::vector<FieldElement>> rows3 = rows;
  rows3.push_back({e(1), e(1), e(2), e(0)});  // row1 + row2
  CHECK(LinearCode(F, 4, rows3).dimension() == 2);
  CHECK(LinearCode(F, 4, rows3) == c);
}

TEST_CASE("dual of a non-self-dual code") {
  auto F = FieldSpec::make(3);
  auto e = [&](unsigned i) { return F->from_index(i); };
  LinearCode c(F, 5, {{e(1), e(0), e(2), e(1), e(0)}, {e(0), e(1), e(1), e(0), e(2)}});
  CHECK(!c.is_self_dual());
  CHECK(c.type() == CodeType::None);
  check_duality(c);

  auto F4 = FieldSpec::make(2, 2);
  LinearCode h(F4, 3, {{F4->one(), F4->generator(), F4->zero()}}, IpMode::Hermitian);
  check_duality(h);
}

TEST_CASE("enumeration is exhaustive, ordered, and budgeted") {
  LinearCode c = catalog_code("tetracode");
  std::vector<std::vector<unsigned>> first, second;
  c.for_each_codeword([&](const std::vector<unsigned>& w) { first.push_back(w); });
  c.for_each_codeword([&](const std::vector<unsigned>& w) { second.push_back(w); });
  CHECK(first.size() == 9);
  CHECK(first == second);  // deterministic order
  CHECK(first.front() == std::vector<unsigned>{0, 0, 0, 0});
  CHECK(std::set<std::vector<unsigned>>(first.begin(), first.end()).size() == 9);
  // every enumerated word is in the row space: re-reduce and compare
  for (const auto& w : first) {
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& g : c.generators()) rows.push_back(g);
    std::vector<FieldElement> we;
    for (unsigned v : w) we.push_back(c.field()->from_index(v));
    rows.push_back(we);
    CHECK(LinearCode(c.field(), c.n(), rows) == c);
  }

  CHECK_THROWS_AS(catalog_code("golay12").for_each_codeword([](const auto&) {}, 100),
                  BudgetExceeded);
}

TEST_CASE("dimension-zero code enumerates exactly the zero word") {
  auto F = FieldSpec::make(3);
  LinearCode c(F, 3, {{F->zero(), F->zero(), F->zero()}});
  CHECK(c.dimension() == 0);
  CHECK(c.size() == 1);
  int count = 0;
  c.for_each_codeword([&](const std::vector<unsigned>& w) {
    ++count;
    CHECK(w == std::vector<unsigned>{0, 0, 0});
  });
  CHECK(count == 1);
}

TEST_CASE("puncturing") {
  LinearCode c = catalog_code("tetracode");
  LinearCode p = c.punctured(1);
  CHECK(p.n() == 3);
  CHECK(p.dimension() == 2);
  // every punctured codeword lies in the punctured code
  std::set<std::vector<unsigned>> got;
  c.for_each_codeword([&](const std::vector<unsigned>& w) {
    got.insert(std::vector<unsigned>(w.begin() + 1, w.end()));
  });
  std::set<std::vector<unsigned>> expect;
  p.for_each_codeword([&](const std::vector<unsigned>& w) { expect.insert(w); });
  CHECK(got == expect);
  CHECK_THROWS_AS(c.punctured(0), Error);
  CHECK_THROWS_AS(c.punctured(5), Error);
}

TEST_CASE("code file round trip") {
  for (const char* name : {"tetracode", "golay12", "i2", "i2^2"}) {
    LinearCode c = catalog_code(name);
    std::istringstream in(c.to_file_string());
    LinearCode back = load_code(in);
    CHECK(back == c);
    CHECK(back.ip_mode() == c.ip_mode());
  }
}

TEST_CASE("code file parsing accepts comments and rejects junk") {
  std::istringstream good("# tetracode\nq=3 n=4 ip=euclidean\n\n1 0 1 1  # row 1\n0 1 1 2\n");
  CHECK(load_code(good) == catalog_code("tetracode"));

  auto bad = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(load_code(in), ParseError);
  };
  bad("");                                    // empty
  // a header with no rows is the k=0 zero code, not an error
  std::istringstream zero("q=3 n=4 ip=euclidean\n");
  LinearCode z = load_code(zero);
  CHECK(z.dimension() == 0);
  CHECK(z.size() == 1);
  size_t words = 0;
  unsigned weight = 99;
  z.for_each_codeword([&](const std::vector<unsigned>& w) {
    ++words;
    weight = 0;
    for (unsigned s : w) weight += (s != 0);
  });
  CHECK(words == 1);
  CHECK(weight == 0);
  bad("q=3 n=4\n1 0 1 1\n");                  // missing ip
  bad("q=3 n=4 ip=sideways\n1 0 1 1\n");      // bad ip value
  bad("q=3 n=4 ip=euclidean\n1 0 1\n");       // short row
  bad("q=3 n=4 ip=euclidean\n1 0 1 3\n");     // symbol out of range
  bad("q=3 n=4 ip=hermitian\n1 0 1 1\n");     // hermitian needs even degree
  bad("q=6 n=4 ip=euclidean\n1 0 1 1\n");     // q not a prime power
  bad("q=3 n=4 ip=euclidean extra=1\n1 0 1 1\n");
  // extension field symbols must have the right arity
  bad("q=2^2 n=2 ip=hermitian\n1.0.0 1\n");
}

TEST_CASE("budget environment variable") {
  CHECK(default_budget() == (uint64_t(1) << 24));
  setenv("JDT_BUDGET", "100", 1);
  CHECK(default_budget() == 100);
  setenv("JDT_BUDGET", "junk", 1);
  CHECK_THROWS_AS(default_budget(), Error);
  unsetenv("JDT_BUDGET");
  CHECK(default_budget() == (uint64_t(1) << 24));
}
