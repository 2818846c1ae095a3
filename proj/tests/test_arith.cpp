#include "doctest.h"
#include "isogeny/arith.hpp"

#include <cmath>

using namespace iso;

namespace {

bool squarefree_brute(long n) {
  for (long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("factorize small values") {
  auto f = factorize(26364);
  REQUIRE(f.complete());
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<Int, int>(2, 2));
  CHECK(f.factors[1] == std::pair<Int, int>(3, 1));
  CHECK(f.factors[2] == std::pair<Int, int>(13, 3));
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(-12).product() == 12);
}

TEST_CASE("factorize reconstructs its input") {
  for (long n = 1; n <= 3000; ++n) {
    auto f = factorize(n);
    CHECK(f.product() == n);
    for (size_t i = 1; i < f.factors.size(); ++i) CHECK(f.factors[i - 1].first < f.factors[i].first);
  }
  Int big = Int(1000003) * 1000033 * 1000037;
  CHECK(factorize_complete(big).product() == big);
}

TEST_CASE("valuation and moebius") {
  CHECK(valuation(Int(26364), 13ul) == 3);
  CHECK(valuation(Int(26364), Int(2)) == 2);
  CHECK(valuation(Int(7), 2ul) == 0);
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  // sum over divisors of n of mu(d) vanishes for n > 1
  for (long n = 2; n <= 300; ++n) {
    int s = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s += moebius(d);
    CHECK(s == 0);
  }
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(3, 7) == -1);
  CHECK(kronecker(-1, 5) == 1);
  CHECK(kronecker(-1, 7) == -1);
  CHECK(kronecker(7, 3) == 1);
  CHECK(kronecker(6, 3) == 0);
}

TEST_CASE("kfree_split") {
  auto [e, n0] = kfree_split(Int(2) * 2 * 2 * 3 * 3 * 5, 2);
  CHECK(e == 6);
  CHECK(n0 == 10);
  auto [e3, r3] = kfree_split(Int(432), 3);  // 2^4 3^3
  CHECK(e3 == 6);
  CHECK(r3 == 2);
  CHECK_THROWS(kfree_split(Int(0), 2));
}

TEST_CASE("squarefree_count") {
  CHECK(squarefree_count(10) == 7);
  CHECK(squarefree_count(100) == 61);
  CHECK(squarefree_count(0) == 0);
  long brute = 0;
  for (long n = 1; n <= 5000; ++n) {
    brute += squarefree_brute(n);
    if (n % 97 == 0 || n == 5000) CHECK(squarefree_count(n) == brute);
  }
  long double r = to_ld(squarefree_count(Int(100000000))) / 1e8L;
  CHECK(std::fabs(static_cast<double>(r) - 6 / (M_PI * M_PI)) < 1e-4);
}

TEST_CASE("integer roots and powers") {
  CHECK(iroot(Int(63), 6) == 1);
  CHECK(iroot(Int(64), 6) == 2);
  CHECK(iroot(ipow(10, 24), 6) == 10000);
  CHECK(iroot(ipow(10, 24) - 1, 6) == 9999);
  CHECK(parse_int("-123456789012345678901") == Int("-123456789012345678901"));
}
