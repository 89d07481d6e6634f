#include "doctest.h"
#include "oracles.hpp"
#include "tworep/exactnum.hpp"

using namespace tworep;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  // degree is phi(n), and every primitive root is a zero
  for (int n = 1; n <= 30; ++n) {
    const auto& p = cyclotomic_polynomial(n);
    CHECK(static_cast<int>(p.size()) - 1 == euler_phi(n));
    const double pi = std::acos(-1.0);
    for (int k = 1; k <= n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      oracle::cplx z = std::polar(1.0, 2 * pi * k / n), acc = 0, pw = 1;
      for (long c : p) {
        acc += double(c) * pw;
        pw *= z;
      }
      CHECK(std::abs(acc) < 1e-8);
    }
  }
}

TEST_CASE("roots of unity reduce exactly") {
  CHECK(CycloNumber::zeta(4, 2) == CycloNumber(-1));
  CHECK(CycloNumber::zeta(6, 3) == CycloNumber(-1));
  CHECK(CycloNumber::zeta(12, 12).is_one());
  CHECK(CycloNumber::zeta(3, 1) + CycloNumber::zeta(3, 2) == CycloNumber(-1));
  // zeta_12^3 = zeta_4
  CHECK(CycloNumber::zeta(12, 3) == CycloNumber::zeta(4, 1));
  CHECK(CycloNumber::zeta(8, 1) * CycloNumber::zeta(8, 1) == CycloNumber::zeta(4, 1));
}

TEST_CASE("field operations agree with complex evaluation") {
  std::mt19937_64 rng(11);
  const int orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
  auto random = [&](int n) {
    std::vector<mpq_class> c(euler_phi(n));
    for (auto& x : c) x = mpq_class(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    return CycloNumber::from_coeffs(n, c);
  };
  for (int it = 0; it < 300; ++it) {
    CycloNumber a = random(orders[rng() % 8]), b = random(orders[rng() % 8]);
    auto ea = oracle::eval(a), eb = oracle::eval(b);
    CHECK(oracle::close(oracle::eval(a + b), ea + eb));
    CHECK(oracle::close(oracle::eval(a - b), ea - eb));
    CHECK(oracle::close(oracle::eval(a * b), ea * eb));
    if (!b.is_zero()) {
      CHECK(oracle::close(oracle::eval(a / b), ea / eb, 1e-7));
      CHECK((a / b) * b == a);
    }
    CHECK(a * (b + a) == a * b + a * a);
  }
}

TEST_CASE("inverse of zero throws") { CHECK_THROWS_AS(CycloNumber(0).inverse(), DivisionByZero); }

TEST_CASE("embedding preserves value") {
  CycloNumber x = CycloNumber::zeta(3, 1) + CycloNumber(2);
  CHECK(x.embed(12) == x);
  CHECK(oracle::close(oracle::eval(x.embed(12)), oracle::eval(x)));
}

TEST_CASE("printing") {
  CHECK(CycloNumber(0).to_string() == "0");
  CHECK(CycloNumber(-3).to_string() == "-3");
  CHECK(CycloNumber::zeta(5, 1).to_string() == "z5");
}

TEST_CASE("RootOfUnity") {
  RootOfUnity a(4, 1), b(6, 1);
  CHECK(a * a == RootOfUnity(2, 1));
  CHECK((a * b).to_cyclo() == a.to_cyclo() * b.to_cyclo());
  CHECK(a.inverse() * a == RootOfUnity(1, 0));
  CHECK(a.pow(4) == RootOfUnity(1, 0));
}
