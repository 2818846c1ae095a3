#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iso {

using Int = mpz_class;
using Rat = mpq_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// a cofactor survived trial division and could not be identified
struct Unfactored : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Factorization {
  std::vector<std::pair<Int, int>> factors;  // strictly increasing primes
  Int cofactor = 1;

  bool complete() const { return cofactor == 1; }
  Int product() const;
  int omega() const { return static_cast<int>(factors.size()); }
};

inline constexpr std::uint64_t kDefaultTrialBound = 10'000'000;

// cached sieve, grows on demand
const std::vector<std::uint32_t>& primes_up_to(std::uint64_t n);

Factorization factorize(const Int& n, std::uint64_t trial_bound = kDefaultTrialBound);
// throws Unfactored when the cofactor stays composite
Factorization factorize_complete(const Int& n, std::uint64_t trial_bound = kDefaultTrialBound);

int valuation(const Int& n, const Int& p);
int valuation(const Int& n, unsigned long p);

int moebius(const Int& n);
int kronecker(const Int& a, const Int& n);

// n = e^k * n0 with n0 k-free
std::pair<Int, Int> kfree_split(const Int& n, int k,
                                std::uint64_t trial_bound = kDefaultTrialBound);

// #{1 <= n <= X squarefree}
Int squarefree_count(const Int& X);

Int ipow(const Int& b, unsigned long e);
// floor(x^(1/k)) for x >= 0
Int iroot(const Int& x, unsigned long k);

Int parse_int(const std::string& s);
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

long double to_ld(const Int& v);

}  // namespace iso
