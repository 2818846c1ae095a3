#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "isogeny/arith.hpp"

namespace iso {

inline constexpr std::uint64_t kLocalModulusCap = 1'000'000'000;

// exponent rho of the residue ring t mod e^rho
int local_rho(int m);
// kappa = 6 / degB as a fraction (num, den)
std::pair<int, int> local_kappa(int m);

// cT_m(e): t mod e^rho with e^2 | f_m(t), e^3 | g_m(t)
Int local_count(int m, const Int& e);
// tcT_m(e) = phi(e^rho) cT_m(e)
Int lifted_count(int m, const Int& e);
// cT_13(e1, e2) with the two-channel side conditions
Int local_count_13(const Int& e1, const Int& e2);
Int lifted_count_13(const Int& e1, const Int& e2);

// literal scan of the whole residue ring; slow, used as an oracle
Int local_count_scan(int m, std::uint64_t e);
Int local_count_13_scan(std::uint64_t e1, std::uint64_t e2);

// cT at a single prime power without the modulus cap
Int local_count_prime_power(int m, unsigned long p, int a);
Int local_count_13_prime_power(unsigned long p, int a, int channel);  // channel 1: (p^a,1), 2: (1,p^a)

struct LocalCountTable {
  int m;
  std::map<Int, Int> entries;          // e -> cT
  std::map<Int, Int> lifted_entries;   // e -> tcT
};

LocalCountTable local_count_table(int m, const std::vector<Int>& es);

// plateau: cT_m(p^a) = value for every a >= onset
struct Plateau {
  int onset;
  Int value;
};
Plateau plateau(int m, unsigned long p, int channel = 0);

long double euler_factor(int m, unsigned long p);
// exact value when kappa is an integer
std::optional<Rat> euler_factor_exact(int m, unsigned long p);

struct QBracket {
  long double lower;
  long double upper;
  std::optional<Rat> exact;
  std::uint64_t prime_bound;
  // bracket lower end times the prime-number-theorem tail, not rigorous
  long double estimate = 0;
};

QBracket q_constant(int m, std::uint64_t prime_bound);

}  // namespace iso
