#include "jdt/cyclo.hpp"

#include "doctest.h"
#include "jdt/errors.hpp"

using namespace jdt;

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(36) == 12);
  // multiplicativity on coprime pairs
  CHECK(euler_phi(9) * euler_phi(4) == euler_phi(36));
}

TEST_CASE("cyclotomic polynomials: known small cases") {
  using V = std::vector<Int>;
  CHECK(cyclotomic_polynomial(1) == V{-1, 1});
  CHECK(cyclotomic_polynomial(2) == V{1, 1});
  CHECK(cyclotomic_polynomial(3) == V{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == V{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == V{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == V{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic polynomials multiply back to x^n - 1") {
  for (unsigned n : {6u, 8u, 12u, 15u}) {
    std::vector<Int> prod{1};
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const auto& phi = cyclotomic_polynomial(d);
      std::vector<Int> next(prod.size() + phi.size() - 1, Int(0));
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = std::move(next);
    }
    std::vector<Int> expect(n + 1, Int(0));
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("roots of unity satisfy the defining relations") {
  for (unsigned n : {2u, 3u, 4u, 5u, 12u}) {
    Cyclo z = Cyclo::root_of_unity(n, 1);
    Cyclo acc = Cyclo::one(n);
    Cyclo sum = Cyclo::zero(n);
    for (unsigned k = 0; k < n; ++k) {
      CHECK(acc == Cyclo::root_of_unity(n, k));
      sum += acc;
      acc *= z;
    }
    CHECK(acc == Cyclo::one(n));      // z^n = 1
    if (n > 1) CHECK(sum.is_zero());  // geometric sum vanishes
  }
}

TEST_CASE("negative and large exponents reduce") {
  CHECK(Cyclo::root_of_unity(12, -1) == Cyclo::root_of_unity(12, 11));
  CHECK(Cyclo::root_of_unity(12, 25) == Cyclo::root_of_unity(12, 1));
}

TEST_CASE("cross-conductor arithmetic lifts to the lcm") {
  // zeta_3 = zeta_6^2 = zeta_12^4
  CHECK(Cyclo::root_of_unity(3, 1) == Cyclo::root_of_unity(6, 2));
  CHECK(Cyclo::root_of_unity(3, 1) == Cyclo::root_of_unity(12, 4));
  // zeta_4 * zeta_3 = zeta_12^7
  Cyclo prod = Cyclo::root_of_unity(4, 1) * Cyclo::root_of_unity(3, 1);
  CHECK(prod == Cyclo::root_of_unity(12, 7));
  CHECK(prod.conductor() == 12);
  // zeta_2 is the rational -1
  Cyclo m1 = Cyclo::root_of_unity(2, 1);
  CHECK(m1.is_rational());
  CHECK(m1.rational_part() == -1);
}

TEST_CASE("lift preserves values") {
  Cyclo a = Cyclo::root_of_unity(3, 2) + Cyclo::rational(Rational(1, 2), 3);
  CHECK(a.lifted(12) == a);
  CHECK(a.lifted(12).conductor() == 12);
  CHECK_THROWS_AS(a.lifted(8), Error);  // 3 does not divide 8
}

TEST_CASE("sqrt3_inverse squares to 1/3") {
  Cyclo s = Cyclo::sqrt3_inverse();
  CHECK(s * s == Cyclo::rational(Rational(1, 3)));
  CHECK(!s.is_rational());
  // 3 * s is sqrt(3), whose square is 3
  Cyclo r3 = s * Cyclo::rational(Rational(3));
  CHECK(r3 * r3 == Cyclo::rational(Rational(3)));
}

TEST_CASE("field axioms spot checks in Q(zeta_12)") {
  Cyclo a = Cyclo::root_of_unity(12, 5) + Cyclo::rational(Rational(2, 3), 12);
  Cyclo b = Cyclo::root_of_unity(12, 7) - Cyclo::one(12);
  Cyclo c = Cyclo::root_of_unity(4, 1);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
  CHECK((a - a).is_zero());
  CHECK(a + (-a) == Cyclo::zero(12));
}
