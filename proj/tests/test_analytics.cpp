#include "doctest.h"
#include "isogeny/analytics.hpp"
#include "isogeny/census.hpp"
#include "isogeny/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

using namespace iso;

namespace {

long double simpson(const std::function<long double(long double)>& f, long double a, long double b,
                    int n = 64) {
  long double h = (b - a) / n, s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

}  // namespace

TEST_CASE("zeta constants") {
  auto z = zeta_constants();
  CHECK(std::fabs(static_cast<double>(1 / z.zeta2) - 0.607927101854) < 1e-11);
  CHECK(std::fabs(static_cast<double>(z.gamma) - 0.5772156649) < 1e-10);
  CHECK(std::fabs(static_cast<double>(z.zeta2_prime) + 0.9375482543) < 1e-10);
}

TEST_CASE("rational counts for nonzero genus") {
  CHECK(count_rational(19, Int(14074667)) == 0);
  CHECK(count_rational(19, Int(14074668)) == 2);
  CHECK(count_rational(19, Int(14074668), TwistConvention::table) == 1);
  for (const Int& X : {ipow(10, 12), ipow(10, 20)})
    CHECK(count_rational(19, X) == 2 * squarefree_count(iroot(X / 14074668, 6)));
}

TEST_CASE("rational counts for m = 7 match a double loop") {
  Int X = ipow(10, 12);
  Int brute = 0;
  for (Int c = 1; ipow(c, 6) <= X; ++c) {
    if (moebius(c) == 0) continue;
    brute += 2 * count_twN(7, X / ipow(c, 6), CountMode::admitting);
  }
  CHECK(count_rational(7, X) == brute);
  CHECK(count_rational(7, Int(1000000)) == 12);
}

TEST_CASE("partial L sums") {
  CHECK(std::fabs(static_cast<double>(partial_L_twist(14, Int(1000000000))) - 0.157763) < 1e-5);
  long double s = 0;
  for (const auto& r : enumerate_twist_classes(7, Int(1000000000)))
    s += std::pow(to_ld(r.twist_height), -1.0L / 6);
  CHECK(std::fabs(static_cast<double>(partial_L_twist(7, Int(1000000000)) - s)) < 1e-15);
}

TEST_CASE("nonzero genus constants") {
  CHECK(std::fabs(static_cast<double>(rational_constant_exact(14)) - 0.09590984282353528) < 1e-9);
  for (int m : nonzero_genus_levels()) {
    long double t = rational_constant_exact(m, TwistConvention::table);
    long double f = rational_constant_exact(m, TwistConvention::factor2);
    CHECK(std::fabs(static_cast<double>(f - 2 * t)) < 1e-15);
  }
}

TEST_CASE("Monte Carlo area") {
  auto a = monte_carlo_area(7, 2'000'000, 1);
  auto b = monte_carlo_area(7, 2'000'000, 2);
  long double sig = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
  CHECK(std::fabs(static_cast<double>(a.estimate - b.estimate)) < 6 * sig);
  CHECK(std::fabs(static_cast<double>(a.estimate - region_area(7))) < 6 * a.std_error);
  auto c = monte_carlo_area(7, 8'000'000, 1);
  long double ratio = a.std_error / c.std_error;
  CHECK(std::fabs(static_cast<double>(ratio) - 2.0) < 0.1);
  auto t1 = monte_carlo_area(10, 3'000'000, 5, 1);
  auto t3 = monte_carlo_area(10, 3'000'000, 5, 3);
  CHECK(t1.accepted == t3.accepted);
}

TEST_CASE("twist constants") {
  auto c7 = twist_constant(7);
  CHECK(std::fabs(static_cast<double>(c7.value) - 0.45822276) < 1e-5);
  CHECK(std::fabs(static_cast<double>(c_rational(7).value) - 0.09285526) < 1e-5);
  CHECK(std::fabs(static_cast<double>(twist_constant(10).value) - 1.0682) < 1e-3);
  auto e4 = twist_constant(4, CountMode::equipped), a4 = twist_constant(4, CountMode::admitting);
  CHECK(std::fabs(static_cast<double>(e4.value - 2 * a4.value)) < 1e-12);
  CHECK_THROWS(twist_constant(5));
  CHECK_THROWS(twist_constant(13));
}

TEST_CASE("ell0") {
  long double ctw = 0.45822276L;
  auto z = zeta_constants();
  CHECK(std::fabs(static_cast<double>(ell0_with_constant(7, 1, ctw, CountMode::admitting) -
                                      ctw * z.gamma)) < 1e-15);

  // (1/6) int (N(u) - ctw floor(u^(1/6))) u^(-7/6) du = int (N(v^6) - ctw floor(v)) v^(-2) dv
  Int T = 1000000000;
  auto recs = enumerate_twist_classes(7, T);
  std::vector<long double> cuts = {1};
  long double V = std::pow(to_ld(T), 1.0L / 6);
  for (int k = 2; k < V; ++k) cuts.push_back(k);
  for (const auto& r : recs) cuts.push_back(std::pow(to_ld(r.twist_height), 1.0L / 6));
  cuts.push_back(V);
  std::sort(cuts.begin(), cuts.end());
  long double integral = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    long double lo = cuts[i], hi = cuts[i + 1];
    if (hi <= lo) continue;
    long double mid = (lo + hi) / 2;
    long double n = 0;
    for (const auto& r : recs) n += std::pow(to_ld(r.twist_height), 1.0L / 6) <= mid;
    long double level = n - ctw * std::floor(mid);
    integral += simpson([&](long double v) { return level / (v * v); }, lo, hi);
  }
  long double want = ctw * z.gamma + integral;
  CHECK(std::fabs(static_cast<double>(ell0_with_constant(7, T, ctw, CountMode::admitting) - want)) <
        1e-7);
}
