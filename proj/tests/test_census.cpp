#include "doctest.h"
#include "isogeny/census.hpp"
#include "isogeny/families.hpp"
#include "isogeny/heights.hpp"

#include <cmath>
#include <set>

using namespace iso;

namespace {

using Key = std::pair<long, long>;

// direct scan of |a| <= n, 1 <= b <= n
std::set<Key> brute_points(int m, const Int& X, long n) {
  std::set<Key> out;
  for (long b = 1; b <= n; ++b)
    for (long a = -n; a <= n; ++a) {
      if (!is_groomed(m, a, b)) continue;
      auto [A, B] = eval_model(m, a, b);
      if (heights(A, B).twist_height <= X) out.insert({a, b});
    }
  return out;
}

}  // namespace

TEST_CASE("equipped enumeration examples") {
  CHECK(enumerate_equipped(7, Int(1000000000)).size() == 17);
  auto p4 = enumerate_equipped(4, Int(100000));
  CHECK(p4.size() == 27);
  int mult = 0;
  for (const auto& p : p4) {
    mult += p.multiplicity;
    if (p.a == 0 && p.b == 1) CHECK(p.multiplicity == 2);
    else CHECK(p.multiplicity == 1);
  }
  CHECK(mult == 28);
  CHECK(enumerate_twist_classes(4, Int(100000)).size() == 14);
  CHECK(enumerate_equipped(8, Int(1000000000)).size() == 16);
  CHECK(enumerate_twist_classes(8, Int(1000000000)).size() == 8);
  CHECK(enumerate_equipped(7, Int(0)).empty());
}

TEST_CASE("twist class records") {
  auto r7 = enumerate_twist_classes(7, Int(1000000000));
  REQUIRE(r7.size() == 17);
  CHECK(r7[0].A_min == -3);
  CHECK(r7[0].B_min == 62);
  CHECK(r7[0].twist_height == 103788);
  for (size_t i = 1; i < r7.size(); ++i) CHECK(r7[i - 1].twist_height <= r7[i].twist_height);
  for (const auto& r : r7) {
    CHECK(heights(r.A_min, r.B_min).twist_height == r.twist_height);
    CHECK(twist_defect_generic(r.A_min, r.B_min) == 1);
    CHECK(r.B_min >= 0);
    for (const auto& p : r.points) CHECK(canonical_twist_rep(p.A_model, p.B_model) ==
                                         std::pair<Int, Int>(r.A_min, r.B_min));
  }
  auto r25 = enumerate_twist_classes(25, ipow(10, 27));
  REQUIRE(r25.size() == 21);
  CHECK(r25[0].A_min == -12);
  CHECK(r25[0].B_min == 38);
  CHECK(r25[0].twist_height == 38988);
  auto r14 = enumerate_twist_classes(14, Int(1000000000));
  REQUIRE(r14.size() == 2);
  CHECK(r14[0].A_min == -35);
  CHECK(r14[0].B_min == 98);
  CHECK(r14[0].twist_height == 259308);
  CHECK(r14[1].A_min == -595);
  CHECK(r14[1].B_min == 5586);
  CHECK(r14[1].twist_height == 842579500);
}

TEST_CASE("counts") {
  CHECK(count_twN(7, Int(1000000000), CountMode::admitting) == 17);
  CHECK(count_twN(16, ipow(10, 18), CountMode::admitting) == 9);
  CHECK(count_twN(11, ipow(10, 12), CountMode::admitting) == 3);
  CHECK(count_twN(4, Int(100000), CountMode::equipped) == 28);
  CHECK(count_twN(4, Int(100000), CountMode::admitting) == 14);
}

TEST_CASE("nonzero genus lists") {
  auto l19 = nonzero_genus_list(19);
  REQUIRE(l19.size() == 1);
  CHECK(l19[0].A_min == -152);
  CHECK(l19[0].B_min == 722);
  CHECK(l19[0].twist_height == 14074668);
  CHECK(l19[0].j_invariant == -884736);
  auto l163 = nonzero_genus_list(163);
  REQUIRE(l163.size() == 1);
  CHECK(l163[0].twist_height == Int("2631905352272628650988"));
  CHECK(nonzero_genus_list(15).size() == 4);
  for (const auto& c : nonzero_genus_curves()) {
    CHECK(heights(c.A, c.B).twist_height == c.twist_height);
    CHECK(j_invariant(c.A, c.B) == c.j);
  }
}

TEST_CASE("enumeration agrees with a direct scan") {
  for (int m : {6, 7, 9}) {
    Int X = m == 7 ? Int(1000000000) : Int(10000000);
    auto pts = enumerate_equipped(m, X);
    std::set<Key> got;
    for (const auto& p : pts) {
      REQUIRE(p.a.fits_slong_p());
      got.insert({p.a.get_si(), p.b.get_si()});
    }
    long n = 40;
    for (const auto& k : got) n = std::max(n, std::max(std::labs(k.first), k.second) + 10);
    INFO("m=" << m << " scan half-width " << n);
    CHECK(got == brute_points(m, X, n));
  }
}

TEST_CASE("thread count does not change the result") {
  EnumOptions one, three;
  three.threads = 3;
  auto a = enumerate_equipped(10, ipow(10, 12), one);
  auto b = enumerate_equipped(10, ipow(10, 12), three);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a == b[i].a);
    CHECK(a[i].b == b[i].b);
    CHECK(a[i].defect == b[i].defect);
  }
}

TEST_CASE("counts are monotone in X") {
  for (int m : {7, 10, 13, 14, 19}) {
    Int prev = 0;
    for (int k = 4; k <= 12; ++k) {
      Int c = count_twN(m, ipow(10, k), CountMode::admitting);
      CHECK(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("count_M against a direct scan") {
  CHECK(count_M(7, 108, 1) == 0);
  Int X = ipow(10, 14);
  for (Int e : {Int(1), Int(3), Int(7), Int(21)}) {
    long brute = 0;
    for (long b = 1; b <= 60; ++b)
      for (long a = -160; a <= 160; ++a) {
        if (!is_groomed(7, a, b)) continue;
        auto [A, B] = eval_model(7, a, b);
        if (naive_H(A, B) > X) continue;
        if (twist_defect_generic(A, B) % e == 0) ++brute;
      }
    INFO("e=" << e);
    CHECK(count_M(7, X, e) == brute);
  }
  CHECK(count_M(7, ipow(10, 12), 1) <= count_M(7, ipow(10, 13), 1));
}

TEST_CASE("sieve identity") {
  for (int m : {7, 10})
    for (int k : {4, 6}) {
      Int X = ipow(10, k);
      CHECK(sieve_count(m, X) == count_twN(m, X, CountMode::equipped));
    }
  CHECK(sieve_count(7, Int(1000000000)) == 17);
}

TEST_CASE("enumeration boxes") {
  Int X = ipow(10, 25);
  auto box = enumeration_box(18, X);
  long double s = std::pow(3888.0L, 1.0L / 6) * std::pow(10.0L, 25.0L / 36);
  CHECK(to_ld(box.a_hi) >= 0.8781L * s);
  CHECK(to_ld(-box.a_lo) >= 0.8781L * s);
  CHECK(to_ld(box.b_hi) >= 0.5532L * s);
  CHECK(to_ld(box.b_hi) <= 1.2L * 0.5532L * s);
  // every enumerated point lies inside its box
  for (int m : {7, 13}) {
    Int Y = m == 13 ? ipow(10, 16) : ipow(10, 12);
    auto bx = enumeration_box(m, Y);
    for (const auto& p : enumerate_equipped(m, Y)) {
      CHECK(p.a >= bx.a_lo);
      CHECK(p.a <= bx.a_hi);
      CHECK(p.b <= bx.b_hi);
    }
  }
  auto b7 = enumeration_box(7, Int(1000000000));
  CHECK(b7.a_hi > 0);
  CHECK(b7.b_hi > 0);
}
