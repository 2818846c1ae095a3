#include "doctest.h"
#include "isogeny/families.hpp"

#include <numeric>

using namespace iso;

TEST_CASE("descriptor basics") {
  CHECK(get_family(7).degB == 6);
  const auto& f25 = get_family(25);
  REQUIRE(f25.cusps.size() == 1);
  CHECK(f25.cusps[0] == 1);
  CHECK_THROWS_AS(get_family(20), DomainError);
  CHECK_THROWS_AS(get_family(1), DomainError);
  CHECK_FALSE(get_family(11).genus_zero);
  CHECK(get_family(11).A.coeffs.empty());
  for (int m : genus_zero_levels()) {
    const auto& f = get_family(m);
    CHECK(f.genus_zero);
    CHECK(f.A.degree() == f.degA());
    CHECK(f.B.degree() == f.degB);
  }
}

TEST_CASE("eval_model") {
  CHECK(eval_model(7, 0, 1) == std::pair<Int, Int>(-15435, -907578));
  CHECK(eval_model(4, 0, 1) == std::pair<Int, Int>(9, 0));
  CHECK(eval_model(6, 1, 1).second == -64);
  CHECK(eval_model(6, 1, 1).first == 0);
}

TEST_CASE("common factors") {
  CHECK(eval_common_factors(7, 14, 5) == std::vector<Int>{441});
  CHECK(eval_common_factors(13, 10, 1) == std::vector<Int>{117, 104});
  CHECK(eval_common_factors(6, 1, 1).empty());
}

TEST_CASE("grooming") {
  CHECK(is_groomed(7, 14, 5));
  CHECK_FALSE(is_groomed(7, -7, 1));
  CHECK_FALSE(is_groomed(7, 2, 4));
  CHECK_FALSE(is_groomed(7, 1, 0));
  CHECK_FALSE(is_groomed(7, 3, -1));
  CHECK(is_groomed(4, 0, 1));
}

TEST_CASE("verify_family passes for every family") {
  for (int m : genus_zero_levels()) {
    auto rep = verify_family(m);
    INFO("m = " << m);
    for (const auto& c : rep.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.ok);
    }
  }
  CHECK(get_family(8).expected_resultant == ipow(2, 24) * ipow(3, 12));
  CHECK(get_family(7).expected_resultant == 0);
  auto [f, g] = reduced_pair(7);
  CHECK(resultant(f, g) == -ipow(2, 8) * ipow(3, 7) * ipow(7, 14));
}

TEST_CASE("homogeneity") {
  for (int m : genus_zero_levels()) {
    const auto& fam = get_family(m);
    for (int a = -6; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) {
        if (!is_groomed(m, a, b)) continue;
        auto [A, B] = eval_model(m, a, b);
        for (int u : {2, 3, 7, 20}) {
          auto [Au, Bu] = eval_model(m, Int(u) * a, Int(u) * b);
          CHECK(Au == A * ipow(u, fam.degA()));
          CHECK(Bu == B * ipow(u, fam.degB));
        }
      }
  }
}

TEST_CASE("cusps are singular and groomed pairs are not") {
  for (int m : genus_zero_levels()) {
    const auto& fam = get_family(m);
    for (const auto& c : fam.cusps) {
      auto [A, B] = eval_model(m, c.get_num(), c.get_den());
      CHECK(4 * A * A * A + 27 * B * B == 0);
    }
    auto [Ai, Bi] = eval_model(m, 1, 0);
    CHECK(4 * Ai * Ai * Ai + 27 * Bi * Bi == 0);
    for (int a = -25; a <= 25; ++a)
      for (int b = 1; b <= 25; ++b) {
        if (!is_groomed(m, a, b)) continue;
        auto [A, B] = eval_model(m, a, b);
        CHECK(4 * A * A * A + 27 * B * B != 0);
      }
  }
}

TEST_CASE("common factors divide the model") {
  for (int m : {5, 7, 10, 13, 25}) {
    for (int a = -50; a <= 50; ++a)
      for (int b = 1; b <= 50; ++b) {
        if (!is_groomed(m, a, b)) continue;
        auto [A, B] = eval_model(m, a, b);
        Int g;
        mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
        Int prod = 1;
        for (const auto& c : eval_common_factors(m, a, b)) prod *= c;
        CHECK(g % prod == 0);
      }
  }
}
