#include "jdt/jacobi.hpp"

#include <random>

#include "doctest.h"
#include "jdt/errors.hpp"

using namespace jdt;

namespace {

SparsePoly P2(const char* s) { return SparsePoly::parse(s, 2); }

LinearCode random_code(const FieldSpecPtr& F, unsigned n, unsigned k, std::mt19937& rng,
                       IpMode mode = IpMode::Euclidean) {
  std::uniform_int_distribution<unsigned> d(0, F->q() - 1);
  std::vector<std::vector<FieldElement>> rows(k);
  for (auto& row : rows) {
    row.reserve(n);
    for (unsigned j = 0; j < n; ++j) row.push_back(F->from_index(d(rng)));
  }
  return LinearCode(F, n, rows, mode);
}

ReferenceSet random_refs(const FieldSpecPtr& F, unsigned n, unsigned ell, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> d(0, F->q() - 1);
  ReferenceSet refs(ell);
  for (auto& r : refs) {
    r.reserve(n);
    for (unsigned j = 0; j < n; ++j) r.push_back(F->from_index(d(rng)));
  }
  return refs;
}

}  // namespace

TEST_CASE("weight enumerators of the catalog codes") {
  CHECK(weight_enumerator(catalog_code("tetracode")) == SparsePoly::parse("x^4+8xy^3", 1));
  CHECK(weight_enumerator(catalog_code("golay12")) ==
        SparsePoly::parse("x^12+264x^6y^6+440x^3y^9+24y^12", 1));
  CHECK(weight_enumerator(catalog_code("i2")) == SparsePoly::parse("x^2+3y^2", 1));

  // dimension-zero code of length 5
  auto F = FieldSpec::make(3);
  LinearCode zero(F, 5, {std::vector<FieldElement>(5, F->zero())});
  CHECK(weight_enumerator(zero) == SparsePoly::parse("x^5", 1));
}

TEST_CASE("set-form Jacobi polynomials") {
  LinearCode tetra = catalog_code("tetracode");
  CHECK(jacobi_set(tetra, {1}) == P2("w(x^3+2y^3)+6zxy^2"));
  CHECK(jacobi_set(catalog_code("i2^2"), {1}) == P2("wx^3+3wxy^2+3zx^2y+9zy^3"));
  CHECK(jacobi_set(catalog_code("golay12"), {1}) ==
        P2("w(x^11+132x^5y^6+110x^2y^9)+z(132x^6y^5+330x^3y^8+24y^11)"));

  // empty T degenerates to the weight enumerator (in the larger family)
  CHECK(jacobi_set(tetra, {}) == weight_enumerator(tetra).lifted(2));

  CHECK_THROWS_AS(jacobi_set(tetra, {0}), Error);
  CHECK_THROWS_AS(jacobi_set(tetra, {5}), Error);
}

TEST_CASE("multi-reference form") {
  LinearCode tetra = catalog_code("tetracode");
  auto F = tetra.field();

  // l = 0 is the weight enumerator; l = 1 with an indicator matches the set form
  CHECK(jacobi_multi(tetra, {}) == weight_enumerator(tetra));
  CHECK(jacobi_multi(tetra, {indicator_vector(F, 4, {2})}) == jacobi_set(tetra, {2}));

  // reference values are invisible: only the support matters
  auto ref2 = indicator_vector(F, 4, {2});
  ref2[1] = F->from_index(2);
  CHECK(jacobi_multi(tetra, {ref2}) == jacobi_set(tetra, {2}));

  // degree and mass: homogeneous of degree n, coefficients sum to |C|
  for (const char* name : {"tetracode", "golay12", "i2", "i2^2"}) {
    LinearCode c = catalog_code(name);
    ReferenceSet refs{indicator_vector(c.field(), c.n(), {1}),
                      indicator_vector(c.field(), c.n(), {2, c.n()})};
    SparsePoly j = jacobi_multi(c, refs);
    CHECK(j.is_homogeneous());
    CHECK(j.total_degree() == static_cast<int>(c.n()));
    CHECK(j.sum_of_coefficients() == Rational(c.size()));
  }

  ReferenceSet bad{std::vector<FieldElement>(3, F->zero())};
  CHECK_THROWS_AS(jacobi_multi(tetra, bad), Error);
  auto F4 = FieldSpec::make(2, 2);
  ReferenceSet foreign{std::vector<FieldElement>(4, F4->zero())};
  CHECK_THROWS_AS(jacobi_multi(tetra, foreign), FieldMismatch);
}

TEST_CASE("collapsing references recovers smaller enumerators") {
  for (const char* name : {"tetracode", "golay12", "i2", "i2^2"}) {
    LinearCode c = catalog_code(name);
    auto F = c.field();
    SparsePoly j1 = jacobi_set(c, {1, 2});
    CHECK(collapse_reference(j1, 1) == weight_enumerator(c));

    ReferenceSet refs{indicator_vector(F, c.n(), {1}), indicator_vector(F, c.n(), {2})};
    SparsePoly j2 = jacobi_multi(c, refs);
    CHECK(collapse_reference(j2, 2) == jacobi_multi(c, {refs[0]}));
    CHECK(collapse_reference(j2, 1) == jacobi_multi(c, {refs[1]}));
  }
  CHECK_THROWS_AS(collapse_reference(SparsePoly::parse("x", 1), 1), Error);
}

TEST_CASE("transform maps enumerators to dual enumerators") {
  // self-dual examples transform to themselves
  LinearCode tetra = catalog_code("tetracode");
  SparsePoly j = jacobi_set(tetra, {1});
  CHECK(macwilliams_transform(j, 3, tetra.size()) == j);

  LinearCode i2 = catalog_code("i2");  // hermitian self-dual
  SparsePoly ji = jacobi_set(i2, {1});
  CHECK(macwilliams_transform(ji, 4, i2.size()) == ji);

  // the zero code's dual is the whole space
  SparsePoly xn = SparsePoly::parse("x^4", 1);
  CHECK(macwilliams_transform(xn, 3, Int(1)) == SparsePoly::parse("(x+2y)^4", 1));
  auto F = FieldSpec::make(3);
  std::vector<std::vector<FieldElement>> eye;
  for (unsigned i = 0; i < 4; ++i) {
    std::vector<FieldElement> row(4, F->zero());
    row[i] = F->one();
    eye.push_back(row);
  }
  CHECK(macwilliams_transform(xn, 3, Int(1)) == weight_enumerator(LinearCode(F, 4, eye)));
}

TEST_CASE("transform against brute-force duals on random codes") {
  std::mt19937 rng(20240817);
  for (auto F : {FieldSpec::make(2), FieldSpec::make(3), FieldSpec::make(2, 2)}) {
    for (int rep = 0; rep < 8; ++rep) {
      unsigned n = 3 + rng() % 6;  // 3..8
      unsigned k = 1 + rng() % n;
      IpMode mode =
          (F->has_conjugation() && rep % 2 == 0) ? IpMode::Hermitian : IpMode::Euclidean;
      LinearCode c = random_code(F, n, k, rng, mode);
      LinearCode d = c.dual();
      for (unsigned ell = 0; ell <= 2; ++ell) {
        ReferenceSet refs = random_refs(F, n, ell, rng);
        SparsePoly jc = jacobi_multi(c, refs);
        SparsePoly trans = macwilliams_transform(jc, F->q(), c.size());
        CHECK(trans == jacobi_multi(d, refs));
        // involution: transforming the transform returns the original
        CHECK(macwilliams_transform(trans, F->q(), d.size()) == jc);
      }
    }
  }
}

TEST_CASE("character sums collapse to the two-valued substitution") {
  // sum over b != 0 of chi(a*b) is q-1 at a = 0 and -1 otherwise; this is
  // what lets the transform use integer coefficients.
  for (auto F : {FieldSpec::make(2), FieldSpec::make(3), FieldSpec::make(2, 2),
                 FieldSpec::make(5)}) {
    auto psi = [&](const FieldElement& v) { return char_chi(F->one(), v); };
    for (const auto& a : F->elements()) {
      Cyclo sum;
      for (const auto& b : F->elements())
        if (!b.is_zero()) sum += psi(a * b);
      if (a.is_zero())
        CHECK(sum == Cyclo::rational(Rational(F->q() - 1)));
      else
        CHECK(sum == Cyclo::rational(Rational(-1)));
    }
  }
}

TEST_CASE("polarization operator") {
  SparsePoly xn = SparsePoly::parse("x^7", 1);
  CHECK(polarize(xn, 1) == P2("7wx^6"));

  LinearCode tetra = catalog_code("tetracode");
  SparsePoly w = weight_enumerator(tetra);
  CHECK(polarize(w, 1).scaled(Rational(1, 4)) == P2("w(x^3+2y^3)+6zxy^2"));
  CHECK(polarize(polarize(w, 1), 1).scaled(Rational(1, 12)) == P2("w^2x^2+4wzy^2+4z^2xy"));
  CHECK_THROWS_AS(polarize(w, 0), Error);
}

TEST_CASE("Jacobi polynomials via iterated polarization") {
  LinearCode tetra = catalog_code("tetracode");
  SparsePoly w = weight_enumerator(tetra);
  CHECK(jacobi_via_polarization(w, {1}, 4) == jacobi_set(tetra, {1}));
  CHECK(jacobi_via_polarization(w, {3}, 4) == P2("w^3x+6wz^2y+2z^3x"));

  LinearCode golay = catalog_code("golay12");
  SparsePoly wg = weight_enumerator(golay);
  // the Golay code is 5-homogeneous, so every support choice matches
  for (unsigned t = 1; t <= 5; ++t) {
    std::vector<unsigned> coords(t);
    for (unsigned i = 0; i < t; ++i) coords[i] = i + 1;
    CHECK(jacobi_via_polarization(wg, {t}, 12) == jacobi_set(golay, coords));
  }
  // split references: t_vec = (2,1) against direct enumeration, two ways
  SparsePoly split = jacobi_via_polarization(wg, {2, 1}, 12);
  auto F = golay.field();
  CHECK(split == jacobi_multi(golay, {indicator_vector(F, 12, {1, 2}),
                                      indicator_vector(F, 12, {3})}));
  CHECK(split == jacobi_multi(golay, {indicator_vector(F, 12, {4, 7}),
                                      indicator_vector(F, 12, {11})}));
  // and t_vec = (1,1) equals the two-reference standard-basis Jacobi
  CHECK(jacobi_via_polarization(wg, {1, 1}, 12) ==
        jacobi_multi(golay, {indicator_vector(F, 12, {1}), indicator_vector(F, 12, {2})}));

  CHECK_THROWS_AS(jacobi_via_polarization(w, {4}, 4), Error);  // t = n
  CHECK_THROWS_AS(jacobi_via_polarization(SparsePoly::parse("x^2+x", 1), {1}, 2), Error);

  // a lopsided code is not 1-homogeneous: division by n must fail integrality
  auto F3 = FieldSpec::make(3);
  LinearCode lopsided(F3, 4,
                      {{F3->one(), F3->zero(), F3->zero(), F3->zero()}});
  CHECK_THROWS_AS(jacobi_via_polarization(weight_enumerator(lopsided), {1}, 4),
                  IntegralityError);
}

TEST_CASE("invariance check") {
  LinearCode tetra = catalog_code("tetracode");
  auto r1 = invariance_check(tetra, {{1, 2, 3, 4}}, {1});
  CHECK(r1.invariant);
  CHECK(r1.value == jacobi_set(tetra, {1}));
  CHECK(!r1.witness.has_value());

  LinearCode golay = catalog_code("golay12");
  std::vector<unsigned> all12(12);
  for (unsigned i = 0; i < 12; ++i) all12[i] = i + 1;
  auto r4 = invariance_check(golay, {all12}, {4});
  CHECK(r4.invariant);
  CHECK(r4.value == jacobi_set(golay, {1, 2, 3, 4}));

  // a blatantly asymmetric code fails with a usable witness
  auto F = FieldSpec::make(3);
  LinearCode lop(F, 4, {{F->one(), F->zero(), F->zero(), F->zero()}});
  auto bad = invariance_check(lop, {{1, 2, 3, 4}}, {1});
  CHECK(!bad.invariant);
  REQUIRE(bad.witness.has_value());
  const auto& wit = *bad.witness;
  CHECK(wit.value_a != wit.value_b);
  CHECK(jacobi_multi(lop, {indicator_vector(F, 4, wit.supports_a[0])}) == wit.value_a);
  CHECK(jacobi_multi(lop, {indicator_vector(F, 4, wit.supports_b[0])}) == wit.value_b);

  // two-part split on the tetracode
  auto r2 = invariance_check(tetra, {{1, 2}, {3, 4}}, {1, 1});
  CHECK(r2.invariant);

  CHECK_THROWS_AS(invariance_check(tetra, {{1, 2}}, {3}), Error);       // infeasible
  CHECK_THROWS_AS(invariance_check(tetra, {{1, 2}, {2, 3}}, {1, 1}), Error);  // overlap
  CHECK_THROWS_AS(invariance_check(tetra, {{1, 2}}, {1, 1}), Error);    // size mismatch
  CHECK_THROWS_AS(invariance_check(golay, {all12}, {4}, 1000), BudgetExceeded);
}

TEST_CASE("1-homogeneous catalog codes satisfy the first polarization identity") {
  for (const char* name : {"tetracode", "golay12", "i2", "i2^2"}) {
    LinearCode c = catalog_code(name);
    std::vector<unsigned> all(c.n());
    for (unsigned i = 0; i < c.n(); ++i) all[i] = i + 1;
    REQUIRE(invariance_check(c, {all}, {1}).invariant);
    SparsePoly viaA = jacobi_via_polarization(weight_enumerator(c), {1}, c.n());
    for (unsigned j = 1; j <= c.n(); ++j) CHECK(jacobi_set(c, {j}) == viaA);
  }
}

TEST_CASE("budget propagates through enumerating operations") {
  LinearCode golay = catalog_code("golay12");
  CHECK_THROWS_AS(weight_enumerator(golay, 100), BudgetExceeded);
  CHECK_THROWS_AS(jacobi_set(golay, {1}, 100), BudgetExceeded);
}
