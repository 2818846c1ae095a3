#pragma once

#include <cstdint>
#include <string>

#include "isogeny/arith.hpp"
#include "isogeny/census.hpp"
#include "isogeny/localcounts.hpp"

namespace iso {

struct ZetaConstants {
  long double zeta2;
  long double zeta2_prime;
  long double gamma;
};
ZetaConstants zeta_constants();

// table: sum over twists with one sign; factor2: both signs of c
enum class TwistConvention { table, factor2 };
const char* to_string(TwistConvention c);

// 2 sum_{c squarefree} twN_eq(m, X / c^6) under factor2, half of it under table
Int count_rational(int m, const Int& X, TwistConvention conv = TwistConvention::factor2,
                   const EnumOptions& opt = {});

// sum of twist_height^(-1/6) over admitting classes up to X
long double partial_L_twist(int m, const Int& X, const EnumOptions& opt = {});

// (k / zeta(2)) sum twist_height^(-1/6), k = 1 (table) or 2 (factor2)
long double rational_constant_exact(int m, TwistConvention conv = TwistConvention::table);

struct McRectangle {
  long double a_lo, a_hi, b_hi;
  std::string source;
  long double area() const { return (a_hi - a_lo) * b_hi; }
};
McRectangle mc_rectangle(int m);

struct AreaEstimate {
  long double estimate = 0;
  long double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  std::uint64_t seed = 0;
  std::uint64_t shard_size = 0;
  McRectangle rect;
};

inline constexpr std::uint64_t kMcShardSize = 1u << 20;

// rejection sampling of {H(A_m(a,b), B_m(a,b)) <= 1, b >= 0}
AreaEstimate monte_carlo_area(int m, std::uint64_t samples, std::uint64_t seed, int threads = 1);

// same area by polar quadrature: int_0^pi H(cos, sin)^(-1/degB) / 2
long double region_area(int m);

struct Estimate {
  long double value = 0;
  long double error = 0;
};

// Q_m R_m / zeta(2), halved in admitting mode when 4 | m
Estimate twist_constant(int m, CountMode mode = CountMode::equipped,
                        std::uint64_t prime_bound = 1'000'000);
// ctw / (3 zeta(2))
Estimate c_rational(int m, CountMode mode = CountMode::equipped,
                    std::uint64_t prime_bound = 1'000'000);

// ctw gamma + (1/6) int_1^T (twN(u) - ctw floor(u^(1/6))) u^(-7/6) du
long double ell0_estimate(int m, const Int& truncation_X, CountMode mode = CountMode::admitting,
                          const EnumOptions& opt = {});
// same with a supplied constant, so tests can feed their own ctw
long double ell0_with_constant(int m, const Int& truncation_X, long double ctw, CountMode mode,
                               const EnumOptions& opt = {});

struct ConstantsReport {
  int m = 0;
  bool genus_zero = true;
  std::optional<QBracket> q;
  std::string q_note;
  long double R_quadrature = 0;
  std::optional<AreaEstimate> R_mc;
  std::optional<Estimate> ctw_equipped, ctw_admitting;
  std::optional<Estimate> c_equipped, c_admitting;
  std::optional<long double> ell0;
  Int ell0_truncation = 0;
  // nonzero genus
  std::optional<long double> c_table, c_factor2;
  std::string convention = "count_rational=factor2, rational_constant_exact=table";
};

struct ConstantsOptions {
  std::uint64_t euler_bound = 1'000'000;
  std::uint64_t mc_samples = 0;  // 0 skips Monte Carlo
  std::uint64_t seed = 1;
  Int ell0_truncation = 0;      // 0 skips ell0
  int threads = 1;
};

ConstantsReport constants_report(int m, const ConstantsOptions& opt);

}  // namespace iso
