#include "isogeny/localcounts.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "isogeny/families.hpp"

namespace iso {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mod_of(const Int& c, u64 M) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), Int(M).get_mpz_t());
  return r.get_ui();
}

u64 eval_mod(const std::vector<u64>& c, u64 t, u64 M) {
  u128 r = 0;
  for (u64 x : c) r = (r * t + x) % M;
  return static_cast<u64>(r);
}

std::vector<u64> reduce(const std::vector<Int>& c, u64 M) {
  std::vector<u64> out;
  for (const auto& x : c) out.push_back(mod_of(x, M));
  return out;
}

bool mul_overflows(u64 a, u64 b) { return b != 0 && a > ~u64(0) / b; }

u64 upow(u64 b, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (mul_overflows(r, b)) throw DomainError("local count modulus overflows 64 bits");
    r *= b;
  }
  return r;
}

// one digit-by-digit search over t mod p^D
struct Tree {
  u64 p;
  int D;       // depth at which every condition is decided
  int L;       // projection level
  int need_f;  // p^need_f | f(t)
  int need_g;
  std::vector<u64> pk;
  std::vector<std::vector<u64>> fmod, gmod;
  std::function<bool(u64)> leaf;  // extra test on t mod p^D

  Tree(u64 p_, int D_, int L_, int nf, int ng, const std::vector<Int>& f,
       const std::vector<Int>& g)
      : p(p_), D(D_), L(L_), need_f(nf), need_g(ng) {
    pk.push_back(1);
    for (int k = 1; k <= D; ++k) pk.push_back(upow(p, k));
    fmod.resize(D + 1);
    gmod.resize(D + 1);
    for (int k = 1; k <= D; ++k) {
      fmod[k] = reduce(f, pk[k]);
      gmod[k] = reduce(g, pk[k]);
    }
  }

  bool ok(u64 t, int k) const {
    if (k == 0) return true;
    int kf = std::min(need_f, k), kg = std::min(need_g, k);
    if (kf > 0 && eval_mod(fmod[kf], t % pk[kf], pk[kf]) != 0) return false;
    if (kg > 0 && eval_mod(gmod[kg], t % pk[kg], pk[kg]) != 0) return false;
    return true;
  }

  bool alive(u64 t, int k) const {
    if (!ok(t, k)) return false;
    if (k == D) return !leaf || leaf(t);
    for (u64 d = 0; d < p; ++d)
      if (alive(t + d * pk[k], k + 1)) return true;
    return false;
  }

  u64 count(u64 t, int k) const {
    if (!ok(t, k)) return 0;
    if (k == L) return alive(t, k) ? 1 : 0;
    u64 s = 0;
    for (u64 d = 0; d < p; ++d) s += count(t + d * pk[k], k + 1);
    return s;
  }

  u64 run() const { return count(0, 0); }
};

const FamilyDescriptor& zero_family(int m) {
  const auto& fam = get_family(m);
  if (!fam.genus_zero) throw DomainError("local counts need a genus-zero level");
  return fam;
}

Int phi_power(const Int& e, int rho) {
  // phi(e^rho)
  if (e == 1) return 1;
  Int r = 1;
  for (const auto& [p, v] : factorize_complete(e).factors)
    r *= ipow(p, static_cast<unsigned long>(v * rho - 1)) * (p - 1);
  return r;
}

void check_cap(const Int& modulus) {
  if (modulus > Int(static_cast<unsigned long>(kLocalModulusCap)))
    throw DomainError("modulus " + modulus.get_str() +
                      " exceeds the brute-force cap; use the plateau values");
}

const std::vector<Int>& h_of(int channel) {
  // channel 1: C_II = t^2 + t + 7, channel 2: C_III = t^2 + 4
  static const std::vector<Int> h2 = {1, 1, 7}, h3 = {1, 0, 4};
  return channel == 1 ? h2 : h3;
}

}  // namespace

int local_rho(int m) { return (m == 5 || m == 10 || m == 25) ? 2 : 3; }

std::pair<int, int> local_kappa(int m) {
  int d = zero_family(m).degB;
  int g = std::gcd(6, d);
  return {6 / g, d / g};
}

Int local_count_prime_power(int m, unsigned long p, int a) {
  if (m == 13) throw DomainError("use local_count_13 for level 13");
  const auto& fam = zero_family(m);
  if (a == 0) return 1;
  Tree t(p, 3 * a, local_rho(m) * a, 2 * a, 3 * a, fam.A.coeffs, fam.B.coeffs);
  return Int(static_cast<unsigned long>(t.run()));
}

Int local_count_13_prime_power(unsigned long p, int a, int channel) {
  const auto& fam = get_family(13);
  if (a == 0) return 1;
  const int D = std::max(3 * a, 2);
  const int L = channel == 1 ? 3 * a : 2 * a;
  Tree t(p, D, L, 2 * a, 3 * a, fam.A.coeffs, fam.B.coeffs);
  const u64 M = t.pk[D];
  const auto hII = reduce(h_of(1), M);
  const auto hIII = reduce(h_of(2), M);
  t.leaf = [=](u64 x) {
    u64 v2 = eval_mod(hII, x, M), v3 = eval_mod(hIII, x, M);
    auto ord_le1 = [&](u64 v) { return v % (p * p) != 0; };  // valid since D >= 2
    if (channel == 1) {
      // gcd(e1^3, C_III) | 13
      if (p != 13 ? v3 % p == 0 : !ord_le1(v3)) return false;
    } else {
      // gcd(e2^2, C_II) | 13
      if (p != 13 ? v2 % p == 0 : !ord_le1(v2)) return false;
      if (p == 3 && v3 % 3 != 0) return false;
      if (p == 13 && !(v2 % 13 != 0 || v3 % 169 == 0)) return false;
    }
    return true;
  };
  return Int(static_cast<unsigned long>(t.run()));
}

Int local_count(int m, const Int& e) {
  if (e < 1) throw DomainError("local_count needs e >= 1");
  if (m == 13) throw DomainError("use local_count_13 for level 13");
  zero_family(m);
  check_cap(ipow(e, static_cast<unsigned long>(local_rho(m))));
  Int r = 1;
  if (e == 1) return r;
  for (const auto& [p, v] : factorize_complete(e).factors)
    r *= local_count_prime_power(m, p.get_ui(), v);
  return r;
}

Int lifted_count(int m, const Int& e) { return phi_power(e, local_rho(m)) * local_count(m, e); }

Int local_count_13(const Int& e1, const Int& e2) {
  if (e1 < 1 || e2 < 1) throw DomainError("local_count_13 needs positive arguments");
  check_cap(ipow(e1, 3) * ipow(e2, 2));
  if (gcd(e1, e2) != 1) return 0;
  Int r = 1;
  if (e1 > 1)
    for (const auto& [p, v] : factorize_complete(e1).factors)
      r *= local_count_13_prime_power(p.get_ui(), v, 1);
  if (e2 > 1)
    for (const auto& [p, v] : factorize_complete(e2).factors)
      r *= local_count_13_prime_power(p.get_ui(), v, 2);
  return r;
}

Int lifted_count_13(const Int& e1, const Int& e2) {
  return phi_power(e1, 3) * phi_power(e2, 2) * local_count_13(e1, e2);
}

Int local_count_scan(int m, std::uint64_t e) {
  if (m == 13) throw DomainError("use local_count_13_scan for level 13");
  const auto& fam = zero_family(m);
  const int rho = local_rho(m);
  const u64 e2 = e * e, e3 = e2 * e;
  const u64 L = rho == 3 ? e3 : e2;
  auto f2 = reduce(fam.A.coeffs, e2);
  auto g3 = reduce(fam.B.coeffs, e3);
  std::vector<char> hit(L, 0);
  for (u64 t = 0; t < e3; ++t)
    if (eval_mod(f2, t % e2, e2) == 0 && eval_mod(g3, t, e3) == 0) hit[t % L] = 1;
  u64 n = 0;
  for (char c : hit) n += c;
  return Int(static_cast<unsigned long>(n));
}

Int local_count_13_scan(std::uint64_t e1, std::uint64_t e2) {
  const auto& fam = get_family(13);
  const u64 e = e1 * e2;
  const u64 N = e * e * e;
  const u64 L = e1 * e1 * e1 * e2 * e2;
  auto f2 = reduce(fam.A.coeffs, e * e);
  auto g3 = reduce(fam.B.coeffs, N);
  auto hII = reduce(h_of(1), N);
  auto hIII = reduce(h_of(2), N);
  const u64 e13 = e1 * e1 * e1, e22 = e2 * e2;
  std::vector<char> hit(L, 0);
  // every side condition is decided by t mod (e1 e2)^3
  for (u64 t = 0; t < N; ++t) {
    if (eval_mod(f2, t % (e * e), e * e) != 0 || eval_mod(g3, t, N) != 0) continue;
    u64 v2 = eval_mod(hII, t, N), v3 = eval_mod(hIII, t, N);
    u64 g1 = std::gcd(e13, v3 % e13);
    u64 g2 = std::gcd(e22, v2 % e22);
    if (13 % g1 != 0 || 13 % g2 != 0) continue;
    if (e2 % 3 == 0 && v3 % 3 != 0) continue;
    if (e2 % 13 == 0 && !(v2 % 13 != 0 || v3 % 169 == 0)) continue;
    hit[t % L] = 1;
  }
  u64 n = 0;
  for (char c : hit) n += c;
  return Int(static_cast<unsigned long>(n));
}

LocalCountTable local_count_table(int m, const std::vector<Int>& es) {
  LocalCountTable tab{m, {}, {}};
  for (const auto& e : es) {
    tab.entries[e] = local_count(m, e);
    tab.lifted_entries[e] = phi_power(e, local_rho(m)) * tab.entries[e];
  }
  return tab;
}

// ---- plateaus and Euler factors ----

namespace {

struct PlateauEntry {
  int m;
  unsigned long p;
  int channel;
  int onset;
  const char* value;
};

// checked against the tree counts at onset and onset + 1 in the test suite
const PlateauEntry kPlateaus[] = {
    {7, 2, 0, 1, "0"},        {7, 3, 0, 3, "0"},        {7, 7, 0, 3, "823544"},
    {10, 2, 0, 2, "0"},       {10, 3, 0, 1, "0"},       {10, 5, 0, 3, "3126"},
    {25, 2, 0, 3, "0"},       {25, 3, 0, 1, "0"},       {25, 5, 0, 5, "1953126"},
    {5, 2, 0, 1, "0"},        {5, 3, 0, 1, "0"},        {5, 5, 0, 4, "3126"},
    {13, 2, 1, 1, "0"},       {13, 2, 2, 3, "0"},       {13, 3, 1, 3, "0"},
    {13, 3, 2, 1, "0"},
};

int root_count(const std::vector<Int>& h, unsigned long p) {
  Int disc = h[1] * h[1] - 4 * h[0] * h[2];
  return 1 + kronecker(disc, Int(p));
}

}  // namespace

Plateau plateau(int m, unsigned long p, int channel) {
  const auto& fam = zero_family(m);
  if (m == 13 && p == 13) throw DomainError("unknown local data for level 13 at p = 13");
  if (m == 13 && channel != 1 && channel != 2) throw DomainError("level 13 needs channel 1 or 2");
  for (const auto& e : kPlateaus)
    if (e.m == m && e.p == p && e.channel == (m == 13 ? channel : 0))
      return {e.onset, parse_int(e.value)};
  for (const auto& b : fam.bad)
    if (b.p == p) {
      if (!fam.coprime())
        throw DomainError("missing plateau data for a bad prime");
      return {b.max_exp + 1, Int(0)};
    }
  if (fam.coprime()) return {1, Int(0)};
  if (m == 13) return {1, Int(root_count(h_of(channel), p))};
  return {1, Int(root_count(fam.common[0].poly.coeffs, p))};
}

namespace {

// sum over a >= 1 of w^a cT(p^a) with cT from tree below onset and the plateau above
template <class Num, class CountFn>
Num channel_sum(const Plateau& pl, CountFn cT, Num w) {
  Num s = 0, wa = 1;
  for (int a = 1; a < pl.onset; ++a) {
    wa *= w;
    s += wa * Num(cT(a));
  }
  wa *= w;  // w^onset
  s += Num(pl.value) * wa / (Num(1) - w);
  return s;
}

bool is_generic(const FamilyDescriptor& fam, unsigned long p) {
  for (const auto& b : fam.bad)
    if (b.p == p) return false;
  return true;
}

long double ld_of(const Int& v) { return to_ld(v); }

}  // namespace

long double euler_factor(int m, unsigned long p) {
  zero_family(m);
  auto [kn, kd] = local_kappa(m);
  const long double kappa = static_cast<long double>(kn) / kd;
  const long double P = static_cast<long double>(p);
  const long double tot = 1.0L - std::pow(P, -kappa);  // phi_kappa(p^a) = p^{a kappa} tot
  auto chan = [&](int channel, int rho) {
    Plateau pl = plateau(m, p, channel);
    long double w = std::pow(P, kappa - rho);
    auto cT = [&](int a) {
      if (m == 13) return ld_of(local_count_13_prime_power(p, a, channel));
      return ld_of(local_count_prime_power(m, p, a));
    };
    long double s = 0, wa = 1;
    for (int a = 1; a < pl.onset; ++a) {
      wa *= w;
      s += wa * cT(a);
    }
    wa *= w;
    s += ld_of(pl.value) * wa / (1.0L - w);
    return s;
  };
  long double S = m == 13 ? chan(1, 3) + chan(2, 2) : chan(0, local_rho(m));
  return 1.0L + tot * S / (1.0L + 1.0L / P);
}

std::optional<Rat> euler_factor_exact(int m, unsigned long p) {
  auto [kn, kd] = local_kappa(m);
  if (kd != 1 || m == 13) return std::nullopt;
  const int rho = local_rho(m);
  Rat P(p);
  Rat pk = Rat(ipow(Int(p), static_cast<unsigned long>(kn)));
  Rat tot = 1 - 1 / pk;
  Rat w = pk / Rat(ipow(Int(p), static_cast<unsigned long>(rho)));
  Plateau pl = plateau(m, p, 0);
  Rat s = channel_sum<Rat>(pl, [&](int a) { return Rat(local_count_prime_power(m, p, a)); }, w);
  Rat r = 1 + tot * s / (1 + 1 / P);
  r.canonicalize();
  return r;
}

QBracket q_constant(int m, std::uint64_t Y) {
  const auto& fam = zero_family(m);
  if (m == 5) throw DomainError("Q_5 diverges");
  if (m == 13) throw DomainError("Q_13 needs the unknown factor at p = 13");
  QBracket out{0, 0, std::nullopt, Y};
  if (fam.coprime()) {
    // only the bad primes contribute
    std::optional<Rat> ex = Rat(1);
    long double v = 1;
    for (const auto& b : fam.bad) {
      v *= euler_factor(m, b.p);
      auto fx = euler_factor_exact(m, b.p);
      if (fx && ex) *ex *= *fx; else ex.reset();
    }
    if (ex) ex->canonicalize();
    out.lower = out.upper = out.estimate = v;
    out.exact = ex;
    return out;
  }
  if (Y < 1000) throw DomainError("q_constant needs a prime bound of at least 1000");

  auto [kn, kd] = local_kappa(m);
  const long double kappa = static_cast<long double>(kn) / kd;
  const int rho = local_rho(m);
  const auto& h = fam.common[0].poly.coeffs;

  // compensated product via log sums
  long double logsum = 0, comp = 0;
  for (std::uint32_t p : primes_up_to(Y)) {
    if (p > Y) break;
    long double fct;
    if (is_generic(fam, p)) {
      int c = root_count(h, p);
      if (c == 0) continue;
      long double P = p;
      long double w = std::pow(P, kappa - rho);
      fct = 1.0L + (1.0L - std::pow(P, -kappa)) * c * w / (1.0L - w) / (1.0L + 1.0L / P);
    } else {
      fct = euler_factor(m, p);
    }
    long double y = std::log(fct) - comp;
    long double t = logsum + y;
    comp = (t - logsum) - y;
    logsum = t;
  }
  // tail over n > Y in the residue class where roots exist
  const unsigned q = (m == 7) ? 6 : 4;
  std::uint64_t n0 = Y + 1;
  while (n0 % q != 1) ++n0;
  const long double s = rho - kappa;
  const long double N0 = static_cast<long double>(n0);
  const long double eps = std::pow(N0, -s) / (1.0L - std::pow(N0, -s));
  const long double tail =
      2.0L * (1.0L + eps) * (std::pow(N0, -s) + std::pow(N0, 1.0L - s) / (q * (s - 1.0L)));
  const long double pad = 1e-15L;
  out.lower = std::exp(logsum) * (1.0L - pad);
  out.upper = std::exp(logsum + tail) * (1.0L + pad);
  // sum over primes p > Y of p^-s, one root on average: E1((s-1) log Y)
  out.estimate = std::exp(logsum - std::expint(-(s - 1.0L) * std::log(static_cast<long double>(Y))));
  return out;
}

}  // namespace iso
