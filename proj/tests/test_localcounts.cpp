#include "doctest.h"
#include "isogeny/families.hpp"
#include "isogeny/localcounts.hpp"

#include <cmath>
#include <numeric>

using namespace iso;

namespace {

const std::vector<unsigned long> kSmallPrimes = {2, 3, 5, 7, 11, 13};

long double phi_kappa(int m, unsigned long p, int a) {
  auto [kn, kd] = local_kappa(m);
  long double k = static_cast<long double>(kn) / kd;
  return std::pow(static_cast<long double>(p), k * a) * (1 - std::pow(static_cast<long double>(p), -k));
}

}  // namespace

TEST_CASE("tabulated local counts") {
  CHECK(local_count(7, 3) == 18);
  CHECK(local_count(7, 49) == 2402);
  CHECK(local_count(10, 25) == 126);
  CHECK(local_count_13(1, 2) == 2);
  CHECK(local_count_13(9, 1) == 27);
  CHECK(local_count_13(2, 2) == 0);
  CHECK(local_count(7, 27) == 0);
  CHECK(local_count(5, 2) == 0);
  CHECK(local_count_13(1, 8) == 0);
  CHECK(local_count(7, 1) == 1);
}

TEST_CASE("tree counts agree with a full residue scan") {
  for (int m : {4, 6, 7, 8, 9, 10, 12, 16, 18, 25, 5}) {
    int rho = local_rho(m);
    for (std::uint64_t e = 1; e <= 30; ++e) {
      if (std::pow(static_cast<double>(e), rho) > 3e5) break;
      INFO("m=" << m << " e=" << e);
      CHECK(local_count(m, e) == local_count_scan(m, e));
    }
  }
  for (std::uint64_t e1 = 1; e1 <= 6; ++e1)
    for (std::uint64_t e2 = 1; e2 <= 12; ++e2) {
      INFO("e1=" << e1 << " e2=" << e2);
      CHECK(local_count_13(e1, e2) == local_count_13_scan(e1, e2));
    }
}

TEST_CASE("multiplicativity") {
  for (int m : {7, 10, 9}) {
    for (int x = 1; x <= 50; ++x)
      for (int y = x + 1; y <= 50; ++y) {
        if (std::gcd(x, y) != 1 || x * y > 600) continue;
        CHECK(local_count(m, x * y) == local_count(m, x) * local_count(m, y));
      }
  }
}

TEST_CASE("prime formula and stability away from bad primes") {
  int seen = 0;
  for (unsigned long l : primes_up_to(200)) {
    if (l == 2 || l == 3 || l == 5 || l == 7) continue;
    if (seen++ == 20) break;
    CHECK(local_count(7, l) == 1 + kronecker(l, 3));
    CHECK(local_count(10, l) == 1 + kronecker(-1, l));
    if (seen <= 5) CHECK(local_count(7, Int(l) * l) == local_count(7, l));
  }
}

TEST_CASE("lifted counts") {
  CHECK(lifted_count(7, 3) == 18 * 18);         // phi(27) = 18
  CHECK(lifted_count(10, 5) == 20 * local_count(10, 5));
  CHECK(lifted_count_13(1, 2) == 2 * 2);
  CHECK(lifted_count_13(3, 1) == 18 * local_count_13(3, 1));
  auto t = local_count_table(7, {1, 3, 7, 21});
  CHECK(t.entries.at(21) == t.entries.at(3) * t.entries.at(7));
}

TEST_CASE("growth of cT_7 is bounded by 2^omega") {
  for (int e = 1; e <= 700; ++e) {
    Int c = local_count(7, e);
    CHECK(c <= Int(5558922) << factorize(e).omega());
  }
}

TEST_CASE("plateau values hold at and past the onset") {
  for (int m : {7, 10}) {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      auto pl = plateau(m, p);
      CHECK(pl.onset >= 1);
      int reach = pl.onset + 1;
      if (std::pow(static_cast<double>(p), 3.0 * reach) > 1e17) continue;
      CHECK(local_count_prime_power(m, p, pl.onset) == pl.value);
      CHECK(local_count_prime_power(m, p, reach) == pl.value);
    }
  }
  CHECK(plateau(7, 7).value == 1 + ipow(7, 7));
}

TEST_CASE("euler factors") {
  CHECK(euler_factor_exact(7, 3) == Rat(13, 6));
  CHECK(euler_factor_exact(7, 7) == Rat(63, 8));
  CHECK(euler_factor_exact(7, 2) == Rat(1));
  CHECK(std::fabs(static_cast<double>(euler_factor(10, 2)) - (2 + std::sqrt(2.0)) / 3) < 1e-12);
}

TEST_CASE("euler factor matches the direct series") {
  int checked = 0;
  for (int m : {4, 6, 7, 8, 9, 10, 12, 16, 18, 25}) {
    int rho = local_rho(m);
    auto [kn, kd] = local_kappa(m);
    for (unsigned long p : kSmallPrimes) {
      int A = 1;
      while (std::pow(static_cast<double>(p), 3.0 * (A + 1)) < 1e18) ++A;
      if (plateau(m, p).onset > A) continue;
      long double s = 0, last = 0;
      for (int a = 1; a <= A; ++a) {
        last = phi_kappa(m, p, a) * to_ld(local_count_prime_power(m, p, a)) /
               std::pow(static_cast<long double>(p), static_cast<long double>(rho * a));
        s += last;
      }
      // past the plateau the terms are geometric with this ratio
      long double r = std::pow(static_cast<long double>(p), static_cast<long double>(kn) / kd - rho);
      long double tail = last * r / (1 - r) / (1 + 1.0L / p);
      long double direct = 1 + s / (1 + 1.0L / p);
      INFO("m=" << m << " p=" << p << " A=" << A);
      CHECK(std::fabs(static_cast<double>(direct + tail - euler_factor(m, p))) < 1e-12);
      ++checked;
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("Q constants") {
  auto q4 = q_constant(4, 1000);
  REQUIRE(q4.exact);
  CHECK(*q4.exact == 6);
  CHECK(*q_constant(6, 1000).exact == 3);
  CHECK(*q_constant(8, 1000).exact == 2);
  CHECK(*q_constant(9, 1000).exact == 2);
  auto q12 = q_constant(12, 1000);
  CHECK(std::fabs(static_cast<double>(q12.lower) - (1 + std::sqrt(3.0))) < 1e-12);
  CHECK(q12.lower == q12.upper);
  auto q16 = q_constant(16, 1000);
  CHECK(std::fabs(static_cast<double>(q16.lower) - 4.0 / 3) < 1e-12);
  auto q7 = q_constant(7, 1000000);
  CHECK(q7.lower <= 17.4604052311L);
  CHECK(17.4604052311L <= q7.upper);
  CHECK(std::fabs(static_cast<double>(q7.estimate) - 17.4604052311) < 1e-6);
  CHECK_THROWS(q_constant(5, 1000));
  CHECK_THROWS(q_constant(13, 1000));
}
