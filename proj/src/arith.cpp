#include "isogeny/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace iso {

namespace {

std::mutex g_sieve_mu;
std::vector<std::uint32_t> g_primes;
std::uint64_t g_sieved = 1;

void extend_sieve(std::uint64_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<std::uint32_t> ps;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    ps.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
  }
  g_primes.swap(ps);
  g_sieved = n;
}

bool probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

}  // namespace

const std::vector<std::uint32_t>& primes_up_to(std::uint64_t n) {
  std::lock_guard<std::mutex> lock(g_sieve_mu);
  if (n > g_sieved) extend_sieve(std::max<std::uint64_t>(n, 2 * g_sieved));
  return g_primes;
}

Int Factorization::product() const {
  Int r = cofactor;
  for (const auto& [p, e] : factors) r *= ipow(p, static_cast<unsigned long>(e));
  return r;
}

Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Int iroot(const Int& x, unsigned long k) {
  if (x < 0) throw DomainError("iroot of negative");
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Factorization factorize(const Int& n, std::uint64_t trial_bound) {
  if (n == 0) throw DomainError("factorize(0)");
  Factorization out;
  Int m = abs(n);
  if (m == 1) return out;

  // bound only needs to reach sqrt(m)
  Int root = sqrt(m);
  std::uint64_t lim = trial_bound;
  if (root.fits_ulong_p() && root.get_ui() < lim) lim = root.get_ui();
  const auto& ps = primes_up_to(std::max<std::uint64_t>(lim, 100));

  bool rest_prime = false;
  for (std::uint32_t p : ps) {
    if (p > lim) break;
    if (m.fits_ulong_p()) {
      unsigned long v = m.get_ui();
      if (static_cast<unsigned long long>(p) * p > v) {
        rest_prime = true;
        break;
      }
      if (v % p) continue;
      int e = 0;
      while (v % p == 0) v /= p, ++e;
      out.factors.emplace_back(Int(p), e);
      m = v;
    } else if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = static_cast<int>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t()));
      out.factors.emplace_back(Int(p), e);
    }
  }
  if (m == 1) return out;

  // everything below lim is gone; m < (lim+1)^2 forces m prime
  Int l1 = Int(static_cast<unsigned long>(lim)) + 1;
  if (rest_prime || m < l1 * l1 || probable_prime(m)) {
    out.factors.emplace_back(m, 1);
  } else {
    bool done = false;
    for (unsigned long k = 2; Int(2) <= iroot(m, k) && !done; ++k) {
      Int r;
      if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0 && probable_prime(r)) {
        out.factors.emplace_back(r, static_cast<int>(k));
        done = true;
      }
      if (k > 200) break;
    }
    if (!done) out.cofactor = m;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Factorization factorize_complete(const Int& n, std::uint64_t trial_bound) {
  Factorization f = factorize(n, trial_bound);
  if (!f.complete())
    throw Unfactored("unfactored cofactor " + f.cofactor.get_str() + " of " + n.get_str());
  return f;
}

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw DomainError("valuation of 0 is infinite");
  if (p < 2) throw DomainError("valuation base must be prime");
  if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return 0;
  Int m;
  return static_cast<int>(mpz_remove(m.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Int& n, unsigned long p) {
  if (n == 0) throw DomainError("valuation of 0 is infinite");
  if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) return 0;
  Int m;
  return static_cast<int>(mpz_remove(m.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t()));
}

int moebius(const Int& n) {
  if (n < 1) throw DomainError("moebius needs n >= 1");
  Factorization f = factorize_complete(n);
  for (const auto& fe : f.factors)
    if (fe.second > 1) return 0;
  return (f.factors.size() % 2) ? -1 : 1;
}

int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

std::pair<Int, Int> kfree_split(const Int& n, int k, std::uint64_t trial_bound) {
  if (n < 1) throw DomainError("kfree_split needs n >= 1");
  if (k < 2) throw DomainError("kfree_split needs k >= 2");
  Factorization f = factorize_complete(n, trial_bound);
  Int e = 1, n0 = 1;
  for (const auto& [p, v] : f.factors) {
    e *= ipow(p, static_cast<unsigned long>(v / k));
    n0 *= ipow(p, static_cast<unsigned long>(v % k));
  }
  return {e, n0};
}

Int squarefree_count(const Int& X) {
  if (X < 0) throw DomainError("squarefree_count of negative");
  if (X == 0) return 0;
  Int r = sqrt(X);
  if (!r.fits_ulong_p() || r.get_ui() > 4'000'000'000UL)
    throw DomainError("squarefree_count: X too large");
  const std::uint64_t D = r.get_ui();
  const std::uint64_t P = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(D))) + 2;
  const auto& allp = primes_up_to(std::max<std::uint64_t>(P, 100));

  // segmented mobius over [1, D]
  Int total = 0;
  const std::uint64_t seg = 1 << 18;
  std::vector<int> mu(seg);
  std::vector<std::uint64_t> rest(seg);
  Int Xd;
  for (std::uint64_t lo = 1; lo <= D; lo += seg) {
    std::uint64_t hi = std::min(D + 1, lo + seg);
    std::size_t len = hi - lo;
    for (std::size_t i = 0; i < len; ++i) mu[i] = 1, rest[i] = lo + i;
    for (std::uint32_t p : allp) {
      std::uint64_t pp = p;
      if (pp * pp > hi - 1) break;
      for (std::uint64_t j = (lo + pp - 1) / pp * pp; j < hi; j += pp) {
        mu[j - lo] = -mu[j - lo];
        rest[j - lo] /= pp;
      }
      std::uint64_t q = pp * pp;
      for (std::uint64_t j = (lo + q - 1) / q * q; j < hi; j += q) mu[j - lo] = 0;
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (!mu[i]) continue;
      int m = rest[i] > 1 ? -mu[i] : mu[i];
      Int d = lo + i;
      mpz_fdiv_q(Xd.get_mpz_t(), X.get_mpz_t(), Int(d * d).get_mpz_t());
      if (m > 0) total += Xd; else total -= Xd;
    }
  }
  return total;
}

Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw DomainError("not an integer: " + s);
  return v;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_num().get_str() + "/" + v.get_den().get_str();
}

long double to_ld(const Int& v) {
  if (v == 0) return 0.0L;
  Int a = abs(v);
  long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  long shift = bits > 64 ? bits - 64 : 0;
  Int top = a >> static_cast<mp_bitcnt_t>(shift);
  std::uint64_t hi = 0;
  mpz_export(&hi, nullptr, -1, sizeof(hi), 0, 0, top.get_mpz_t());
  long double r = std::ldexp(static_cast<long double>(hi), static_cast<int>(shift));
  return v < 0 ? -r : r;
}

}  // namespace iso
