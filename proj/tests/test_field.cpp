#include "jdt/field.hpp"

#include "doctest.h"
#include "jdt/errors.hpp"

using namespace jdt;

namespace {

// Exhaustive field-axiom check, independent of the table construction.
void check_axioms(const FieldSpecPtr& F) {
  auto els = F->elements();
  const unsigned q = F->q();
  REQUIRE(els.size() == q);
  for (unsigned a = 0; a < q; ++a) {
    CHECK((els[a] + F->zero()) == els[a]);
    CHECK((els[a] * F->one()) == els[a]);
    CHECK((els[a] + (-els[a])).is_zero());
    if (a != 0) CHECK((els[a] * els[a].inverse()) == F->one());
    for (unsigned b = 0; b < q; ++b) {
      CHECK((els[a] + els[b]) == (els[b] + els[a]));
      CHECK((els[a] * els[b]) == (els[b] * els[a]));
      for (unsigned c = 0; c < q; ++c) {
        CHECK((els[a] * (els[b] + els[c])) == (els[a] * els[b] + els[a] * els[c]));
      }
    }
  }
}

}  // namespace

TEST_CASE("prime field F_3") {
  auto F = FieldSpec::make(3);
  CHECK(F->q() == 3);
  CHECK(F->f() == 1);
  CHECK(!F->has_conjugation());
  CHECK(F->primitive_modulus());
  auto two = F->from_index(2);
  CHECK((two + two) == F->one());
  CHECK((two * two) == F->one());
  CHECK(two.inverse() == two);
  check_axioms(F);
}

TEST_CASE("F_4 with the default modulus x^2+x+1") {
  auto F = FieldSpec::make(2, 2);
  CHECK(F->q() == 4);
  CHECK(F->modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(F->primitive_modulus());
  auto L = F->generator();
  CHECK(L * L == L + F->one());  // L^2 = L + 1
  CHECK(L * L * L == F->one());  // multiplicative order 3
  // conjugation is the Frobenius x -> x^2
  CHECK(F->has_conjugation());
  for (auto a : F->elements()) {
    CHECK(a.conjugate() == a * a);
    CHECK(a.conjugate().conjugate() == a);
    for (auto b : F->elements()) {
      CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    }
  }
  check_axioms(F);
}

TEST_CASE("F_8 has no conjugation") {
  auto F = FieldSpec::make(2, 3);
  CHECK(F->modulus() == std::vector<unsigned>{1, 1, 0, 1});
  CHECK(!F->has_conjugation());
  CHECK_THROWS_AS(F->one().conjugate(), Error);
  check_axioms(F);
}

TEST_CASE("F_9 default modulus is primitive") {
  auto F = FieldSpec::make(3, 2);
  CHECK(F->modulus() == std::vector<unsigned>{2, 2, 1});
  CHECK(F->primitive_modulus());
  auto L = F->generator();
  // L^4 = 2 = -1, so L has multiplicative order 8
  auto L4 = L * L * L * L;
  CHECK(L4 == F->from_index(2));
  CHECK(L4 * L4 == F->one());
  check_axioms(F);
}

TEST_CASE("F_9 with the non-primitive modulus x^2+1") {
  auto F = FieldSpec::make(3, 2, {1, 0, 1});
  CHECK(!F->primitive_modulus());  // i has order 4, not 8
  auto i = F->generator();
  auto minus_one = F->from_index(2);
  CHECK(i * i == minus_one);
  // conjugation sends i to i^3 = -i
  CHECK(i.conjugate() == -i);
  check_axioms(F);
}

TEST_CASE("bad field parameters are rejected") {
  CHECK_THROWS_AS(FieldSpec::make(4), Error);             // not prime
  CHECK_THROWS_AS(FieldSpec::make(2, 0), Error);          // degree 0
  CHECK_THROWS_AS(FieldSpec::make(2, 9), Error);          // q > 256
  CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 0, 1}), Error);  // x^2+1 = (x+1)^2 over F_2
  CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 1, 1, 1}), Error);  // wrong length
  CHECK_THROWS_AS(FieldSpec::make(3, 2, {1, 3, 1}), Error);     // coefficient >= p
  CHECK_THROWS_AS(FieldSpec::make(3, 2, {1, 1, 2}), Error);     // not monic
}

TEST_CASE("field spec text form round-trips") {
  auto F = FieldSpec::parse("q=2^2");
  CHECK(F->str() == "q=2^2;modulus=1,1,1");
  auto G = FieldSpec::parse(F->str());
  CHECK(G->compatible(*F));
  auto P = FieldSpec::parse("q=5");
  CHECK(P->q() == 5);
  auto H = FieldSpec::parse("q=3^2;modulus=1,0,1");
  CHECK(!H->primitive_modulus());
  CHECK_THROWS_AS(FieldSpec::parse("q=6"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("3^2"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("q=2^2;modulus=1,0,1"), ParseError);  // reducible
  CHECK_THROWS_AS(FieldSpec::parse("q=2^2;junk=1"), ParseError);
}

TEST_CASE("element symbols") {
  auto F3 = FieldSpec::make(3);
  CHECK(F3->symbol(2) == "2");
  CHECK(F3->parse_symbol("2") == 2);
  CHECK_THROWS_AS(F3->parse_symbol("3"), ParseError);

  auto F9 = FieldSpec::make(3, 2);
  for (unsigned i = 0; i < 9; ++i) CHECK(F9->parse_symbol(F9->symbol(i)) == i);
  CHECK(F9->symbol(F9->generator().index()) == "0.1");
  CHECK(F9->parse_symbol("2") == 2);  // bare scalar shorthand
  CHECK_THROWS_AS(F9->parse_symbol("2.3"), ParseError);
  CHECK_THROWS_AS(F9->parse_symbol("1.0.0"), ParseError);
  CHECK_THROWS_AS(F9->parse_symbol("x"), ParseError);
}

TEST_CASE("additive characters are characters") {
  for (auto F : {FieldSpec::make(3), FieldSpec::make(2, 2), FieldSpec::make(3, 2)}) {
    auto els = F->elements();
    for (const auto& b : els) {
      // chi_b(a + c) = chi_b(a) chi_b(c)
      for (const auto& a : els)
        for (const auto& c : els)
          CHECK(char_chi(b, a + c) == char_chi(b, a) * char_chi(b, c));
      // orthogonality: sum_a chi_b(a) = q [b = 0]
      Cyclo sum;
      for (const auto& a : els) sum += char_chi(b, a);
      if (b.is_zero())
        CHECK(sum == Cyclo::rational(Rational(F->q())));
      else
        CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("characters at a larger conductor") {
  auto F = FieldSpec::make(3);
  auto one = F->one();
  CHECK(char_chi(one, one, 12) == Cyclo::root_of_unity(12, 4));  // zeta_3 in Q(zeta_12)
  CHECK(char_chi(one, one, 12) == char_chi(one, one, 3).lifted(12));
  CHECK_THROWS_AS(char_chi(one, one, 8), Error);  // 3 does not divide 8
}

TEST_CASE("inner products") {
  auto F3 = FieldSpec::make(3);
  auto e = [&](unsigned i) { return F3->from_index(i); };
  std::vector<FieldElement> u{e(1), e(2), e(0)};
  std::vector<FieldElement> v{e(2), e(2), e(1)};
  CHECK(inner_product(u, v, IpMode::Euclidean) == e(0));  // 2 + 4 = 6 = 0 mod 3
  CHECK_THROWS_AS(inner_product(u, v, IpMode::Hermitian), Error);  // odd degree

  auto F4 = FieldSpec::make(2, 2);
  std::vector<FieldElement> a{F4->one(), F4->one()};
  CHECK(inner_product(a, a, IpMode::Hermitian).is_zero());  // 1+1 = 0 in char 2
  auto L = F4->generator();
  std::vector<FieldElement> s{L}, t{L};
  // <L, L> hermitian = L * L^2 = L^3 = 1
  CHECK(inner_product(s, t, IpMode::Hermitian) == F4->one());

  std::vector<FieldElement> w{F3->one()};
  CHECK_THROWS_AS(inner_product(a, w, IpMode::Euclidean), Error);  // length/field clash
}

TEST_CASE("field mismatch is detected") {
  auto F3 = FieldSpec::make(3);
  auto F4 = FieldSpec::make(2, 2);
  CHECK_THROWS_AS(F3->one() + F4->one(), FieldMismatch);
  // same presentation built twice is compatible
  auto F3b = FieldSpec::make(3);
  CHECK((F3->one() + F3b->one()) == F3->from_index(2));
}
