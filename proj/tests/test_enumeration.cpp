#include <doctest.h>

#include "kreweras/enumeration.hpp"
#include "kreweras/errors.hpp"
#include "kreweras/word.hpp"

using namespace kreweras;

TEST_CASE("closed-form counts") {
  long long k[] = {1, 2, 16, 192, 2816, 46592};
  for (int n = 0; n <= 5; ++n) CHECK(kreweras_count(n) == k[n]);
  long long kc[] = {0, 2, 4, 24, 208, 2176};
  long long wc[] = {0, 1, 2, 12, 104, 1088};
  for (int n = 1; n <= 5; ++n) {
    CHECK(connected_count(n) == kc[n]);
    CHECK(connected_web_count(n) == wc[n]);
  }
  CHECK_THROWS_AS((void)connected_count(0), domain_error);
  CHECK_THROWS_AS((void)connected_web_count(0), domain_error);
}

TEST_CASE("counts agree with exhaustive enumeration") {
  for (int n = 0; n <= 4; ++n) {
    long long count = 0;
    for_each_word(n, [&](const KrewerasWord&) { ++count; });
    CHECK(kreweras_count(n) == count);
  }
}

TEST_CASE("series composition identities") {
  SeriesIdentityReport rep = series_identity_check(10);
  CHECK(rep.k_identity_holds);
  long long w[] = {1, 1, 5, 42, 459, 5871};
  for (int n = 0; n <= 5; ++n) CHECK(rep.web_counts[n] == w[n]);

  SeriesIdentityReport tiny = series_identity_check(1);
  CHECK(tiny.k_identity_holds);
  REQUIRE(tiny.web_counts.size() == 2);
  CHECK(tiny.web_counts[0] == 1);
  CHECK(tiny.web_counts[1] == 1);
}

TEST_CASE("sieving polynomial") {
  IntPolynomial f1 = csp_polynomial(1);
  CHECK(f1.degree() == 3);
  CHECK(f1.coeff(0) == 1);
  CHECK(f1.coeff(1) == 0);
  CHECK(f1.coeff(2) == 0);
  CHECK(f1.coeff(3) == 1);

  CHECK(csp_polynomial(2).eval_at_one() == 16);
  for (int n = 1; n <= 6; ++n) CHECK_NOTHROW((void)csp_polynomial(n));
}

TEST_CASE("polynomial division reports failure") {
  IntPolynomial p(std::vector<BigInt>{1, 1});      // 1 + q
  IntPolynomial d(std::vector<BigInt>{1, 0, -1});  // 1 - q^2
  CHECK_THROWS_AS((void)p.divide_exact(d), not_polynomial_error);
  CHECK_THROWS_AS((void)d.divide_exact(IntPolynomial(std::vector<BigInt>{1, 1, 1})),
                  not_polynomial_error);
  CHECK(d.divide_exact(p).coeffs() == std::vector<BigInt>{1, -1});
}

TEST_CASE("cyclic sieving verification") {
  CspReport r1 = csp_check(1);
  CHECK(r1.pass);
  REQUIRE(r1.orbit_histogram.size() == 1);
  CHECK(r1.orbit_histogram.at(2) == 1);

  CspReport r2 = csp_check(2);
  CHECK(r2.pass);
  CspReport r3 = csp_check(3);
  CHECK(r3.pass);

  // no orbit size divides 3n, so pro^{3n} is fixed-point-free
  for (const auto& [size, cnt] : r3.orbit_histogram) CHECK(9 % size != 0);
}

TEST_CASE("evacuation fixed-point formula") {
  long long expected[] = {0, 2, 4, 16, 48, 224};
  for (int n = 1; n <= 3; ++n) {
    EvacFixedReport rep = evac_fixed_check(n);
    CHECK(rep.formula == expected[n]);
    CHECK(rep.pass);
    CHECK(rep.dual_evac_fixed == expected[n]);
    if (n % 2 == 1) CHECK(rep.evac_fixed == 0);
  }
  CHECK(evac_fixed_formula(4) == 48);
  CHECK(evac_fixed_formula(5) == 224);
}

TEST_CASE("order polynomial against the P-partition count") {
  CHECK(order_polynomial(1, 1) == 5);
  CHECK(ppartition_count(1, 1) == 5);
  for (int n = 1; n <= 3; ++n) CHECK(order_polynomial(n, 0) == 1);
  CHECK(order_polynomial(2, 3) == ppartition_count(2, 3));
  for (int m = 0; m <= 4; ++m) CHECK(order_polynomial(3, m) == ppartition_count(3, m));
}

TEST_CASE("the order polynomial leading coefficient counts the words") {
  for (int n = 1; n <= 3; ++n) {
    BigInt lead = 0;
    for (int k = 0; k <= 3 * n; ++k) {
      BigInt binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (3 * n - i) / (i + 1);
      BigInt term = binom * order_polynomial(n, k);
      lead += (3 * n - k) % 2 == 0 ? term : -term;
    }
    CHECK(lead == kreweras_count(n));
  }
}
