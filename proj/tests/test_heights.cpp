#include "doctest.h"
#include "isogeny/families.hpp"
#include "isogeny/heights.hpp"

#include <cmath>

using namespace iso;

TEST_CASE("naive height") {
  CHECK(naive_H(1, 0) == 4);
  CHECK(naive_H(324, 5832) == 918330048);
  CHECK(naive_H(4, 8) == 1728);
  CHECK_THROWS(naive_H(-3, 2));
}

TEST_CASE("defects") {
  CHECK(minimality_defect(324, 5832) == 3);
  CHECK(minimality_defect(4, 8) == 1);
  CHECK(minimality_defect(16, 64) == 2);
  CHECK(twist_defect_generic(324, 5832) == 18);
  CHECK(twist_defect_generic(9, 0) == 3);
  CHECK(twist_defect_generic(-15435, -907578) == 21);
  CHECK(twist_defect_supported(7, 0, 1) == 21);
  CHECK(twist_defect_supported(10, 3, 1) == 125);
  CHECK(twist_defect_supported(13, 10, 1) == 26364);
}

TEST_CASE("height profile") {
  CHECK(heights(-15435, -907578).twist_height == 259308);
  auto h = heights(324, 5832);
  CHECK(h.naive_height == 1728);
  CHECK(h.twist_height == 27);
  CHECK(h.discriminant == -16 * (4 * Int(324) * 324 * 324 + 27 * Int(5832) * 5832));
  CHECK(heights(1, 0).twist_height == 4);
}

TEST_CASE("j-invariant and canonical representative") {
  CHECK(j_invariant(0, 5) == 0);
  CHECK(j_invariant(7, 0) == 1728);
  CHECK(j_invariant(-35, 98) == -3375);
  CHECK(canonical_twist_rep(-15435, -907578) == std::pair<Int, Int>(-35, 98));
  CHECK(canonical_twist_rep(9, 0) == std::pair<Int, Int>(1, 0));
  CHECK(canonical_twist_rep(324, 5832) == std::pair<Int, Int>(1, 1));
  CHECK(canonical_twist_rep(-9, 0) == std::pair<Int, Int>(-1, 0));
}

TEST_CASE("supported defect agrees with the generic oracle") {
  for (int m : genus_zero_levels()) {
    int lim = get_family(m).degB >= 18 ? 20 : 50;
    for (int a = -lim; a <= lim; ++a)
      for (int b = 1; b <= lim; ++b) {
        if (!is_groomed(m, a, b)) continue;
        auto [A, B] = eval_model(m, a, b);
        INFO("m=" << m << " a=" << a << " b=" << b);
        REQUIRE(twist_defect_supported(m, a, b) == twist_defect_generic(A, B));
      }
  }
}

TEST_CASE("twist scaling and idempotence") {
  const std::vector<std::pair<int, int>> samples = {{1, 1}, {-35, 98}, {2, 3}, {-1, 5}, {1, 0}, {0, 1}};
  for (auto [A0, B0] : samples) {
    auto base = heights(A0, B0);
    for (int c = 1; c <= 10; ++c) {
      if (c == 4 || c == 8 || c == 9) continue;
      Int A = Int(c) * c * A0, B = Int(c) * c * c * B0;
      auto h = heights(A, B);
      CHECK(h.twist_height == base.twist_height);
      CHECK(h.naive_height == base.naive_height * ipow(c, 6));
      auto r = canonical_twist_rep(A, B);
      CHECK(canonical_twist_rep(r.first, r.second) == r);
      CHECK(twist_defect_generic(r.first, r.second) == 1);
      CHECK(j_invariant(A, B) == j_invariant(A0, B0));
    }
  }
}

TEST_CASE("minimality defect divides twist defect") {
  for (int m : {4, 7, 9, 10, 13}) {
    for (int a = -20; a <= 20; ++a)
      for (int b = 1; b <= 20; ++b) {
        if (!is_groomed(m, a, b)) continue;
        auto [A, B] = eval_model(m, a, b);
        auto h = heights(A, B);
        CHECK(h.twist_defect % h.min_defect == 0);
        CHECK(h.twist_height <= h.naive_height);
      }
  }
}

TEST_CASE("m = 7 size envelope and defect bound") {
  const long double k = std::pow(3.0L, 1.25L) * std::pow(7.0L, 4.5L) / std::pow(2.0L, 1.0L / 6);
  CHECK(std::fabs(static_cast<double>(k) - 22344.5227) < 1e-3);
  for (int a = -50; a <= 50; ++a)
    for (int b = 1; b <= 50; ++b) {
      if (!is_groomed(7, a, b)) continue;
      auto [A, B] = eval_model(7, a, b);
      Int C = eval_common_factors(7, a, b)[0];
      Int H = naive_H(A, B);
      Int C6 = ipow(C, 6);
      CHECK(108 * C6 <= H);
      CHECK(H <= 311406872 * C6);
      auto h = heights(A, B);
      CHECK(to_ld(h.twist_defect) <= k * std::pow(to_ld(h.twist_height), 1.0L / 12));
    }
}
