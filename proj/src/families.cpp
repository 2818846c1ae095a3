#include "isogeny/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "isogeny/family_data.hpp"

namespace iso {

Int HomogeneousPoly::eval(const Int& a, const Int& b) const {
  Int r = 0, bp = 1;
  bool first = true;
  for (const Int& c : coeffs) {
    if (first) {
      r = c;
      first = false;
    } else {
      bp *= b;
      r = r * a + c * bp;
    }
  }
  return r;
}

long double HomogeneousPoly::eval_ld(long double a, long double b) const {
  long double r = 0, bp = 1;
  bool first = true;
  for (const Int& c : coeffs) {
    long double cl = to_ld(c);
    if (first) {
      r = cl;
      first = false;
    } else {
      bp *= b;
      r = r * a + cl * bp;
    }
  }
  return r;
}

long double HomogeneousPoly::abs_eval_ld(long double a, long double b) const {
  return HomogeneousPoly{[&] {
           std::vector<Int> c = coeffs;
           for (auto& x : c) x = abs(x);
           return c;
         }()}
      .eval_ld(std::fabs(a), std::fabs(b));
}

bool AuditReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.ok; });
}

const std::vector<int>& genus_zero_levels() {
  static const std::vector<int> v = {4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
  return v;
}

const std::vector<int>& nonzero_genus_levels() {
  static const std::vector<int> v = {11, 14, 15, 17, 19, 21, 27, 37, 43, 67, 163};
  return v;
}

bool is_genus_zero(int m) {
  const auto& v = genus_zero_levels();
  return std::find(v.begin(), v.end(), m) != v.end();
}

namespace {

std::vector<Int> ints(const std::vector<std::string>& s) {
  std::vector<Int> v;
  for (const auto& x : s) v.push_back(parse_int(x));
  return v;
}

std::map<int, FamilyDescriptor> build_all() {
  std::map<int, FamilyDescriptor> out;
  for (const auto& raw : data::raw_families()) {
    FamilyDescriptor d;
    d.m = raw.m;
    d.genus_zero = true;
    d.degB = raw.degB;
    d.A.coeffs = ints(raw.f);
    d.B.coeffs = ints(raw.g);
    for (const auto& c : raw.common)
      d.common.push_back({HomogeneousPoly{ints(c.h)}, c.mult_f, c.mult_g,
                          c.mult_f == c.mult_g ? 3 : 2});
    for (const auto& [p, q] : raw.cusps) d.cusps.emplace_back(Int(p), Int(q));
    for (auto& c : d.cusps) c.canonicalize();
    for (const auto& [p, e] : raw.bad) {
      d.bad.push_back({p, e});
      d.max_bounded_defect *= ipow(Int(p), static_cast<unsigned long>(e));
    }
    d.expected_resultant = parse_int(raw.resultant);
    out.emplace(d.m, std::move(d));
  }
  for (int m : nonzero_genus_levels()) {
    FamilyDescriptor d;
    d.m = m;
    d.genus_zero = false;
    out.emplace(m, std::move(d));
  }
  return out;
}

}  // namespace

const FamilyDescriptor& get_family(int m) {
  static const std::map<int, FamilyDescriptor> all = build_all();
  auto it = all.find(m);
  if (it != all.end()) return it->second;
  static const std::vector<int> mazur = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14,
                                         15, 16, 17, 18, 19, 21, 25, 27, 37, 43, 67, 163};
  if (std::find(mazur.begin(), mazur.end(), m) == mazur.end())
    throw DomainError("no cyclic " + std::to_string(m) + "-isogeny family over Q");
  throw DomainError("level " + std::to_string(m) + " has no tabulated family");
}

std::pair<Int, Int> eval_model(int m, const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw DomainError("eval_model at (0,0)");
  const auto& fam = get_family(m);
  if (!fam.genus_zero) throw DomainError("level " + std::to_string(m) + " is not genus zero");
  return {fam.A.eval(a, b), fam.B.eval(a, b)};
}

std::vector<Int> eval_common_factors(int m, const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw DomainError("eval_common_factors at (0,0)");
  const auto& fam = get_family(m);
  std::vector<Int> out;
  for (const auto& c : fam.common) out.push_back(c.poly.eval(a, b));
  return out;
}

bool is_cusp(const FamilyDescriptor& fam, const Int& a, const Int& b) {
  if (b == 0) return true;
  Rat t(a, b);
  t.canonicalize();
  return std::find(fam.cusps.begin(), fam.cusps.end(), t) != fam.cusps.end();
}

bool is_groomed(int m, const Int& a, const Int& b) {
  if (b <= 0) return false;
  if (gcd(a, b) != 1) return false;
  return !is_cusp(get_family(m), a, b);
}

// ---- univariate polynomial helpers ----

namespace {

void trim(std::vector<Int>& p) {
  std::size_t z = 0;
  while (z + 1 < p.size() && p[z] == 0) ++z;
  p.erase(p.begin(), p.begin() + static_cast<long>(z));
}

}  // namespace

std::vector<Int> poly_mul(const std::vector<Int>& x, const std::vector<Int>& y) {
  std::vector<Int> r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

std::vector<Int> poly_add(const std::vector<Int>& x, const std::vector<Int>& y) {
  std::size_t n = std::max(x.size(), y.size());
  std::vector<Int> r(n, 0);
  for (std::size_t i = 0; i < x.size(); ++i) r[n - x.size() + i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[n - y.size() + i] += y[i];
  trim(r);
  return r;
}

std::vector<Int> poly_pow(const std::vector<Int>& x, int e) {
  std::vector<Int> r{Int(1)};
  for (int i = 0; i < e; ++i) r = poly_mul(r, x);
  return r;
}

std::vector<Int> poly_scale(const std::vector<Int>& x, const Int& c) {
  std::vector<Int> r = x;
  for (auto& v : r) v *= c;
  return r;
}

namespace {

// quotient and remainder over Z; ok=false when a leading division is inexact
bool divmod(std::vector<Int> num, const std::vector<Int>& den, std::vector<Int>& q) {
  trim(num);
  if (den.empty() || den[0] == 0) throw DomainError("division by zero polynomial");
  if (num.size() < den.size()) {
    q = {Int(0)};
    for (const auto& c : num)
      if (c != 0) return false;
    return true;
  }
  std::size_t n = num.size() - den.size() + 1;
  q.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (num[i] == 0) continue;
    if (!mpz_divisible_p(num[i].get_mpz_t(), den[0].get_mpz_t())) return false;
    Int c = num[i] / den[0];
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) return false;
  return true;
}

}  // namespace

bool poly_divides(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> q;
  return divmod(num, den, q);
}

std::vector<Int> poly_divexact(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> q;
  if (!divmod(num, den, q)) throw DomainError("inexact polynomial division");
  return q;
}

Int resultant(const std::vector<Int>& f0, const std::vector<Int>& g0) {
  std::vector<Int> f = f0, g = g0;
  trim(f);
  trim(g);
  const std::size_t df = f.size() - 1, dg = g.size() - 1;
  const std::size_t n = df + dg;
  if (n == 0) return 1;
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n, 0));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t j = 0; j <= df; ++j) M[r][r + j] = f[j];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t j = 0; j <= dg; ++j) M[dg + r][r + j] = g[j];

  // Bareiss
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && M[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(M[k], M[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[i][j] = v;
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

std::pair<std::vector<Int>, std::vector<Int>> reduced_pair(int m) {
  const auto& fam = get_family(m);
  std::vector<Int> f = fam.A.coeffs, g = fam.B.coeffs;
  for (const auto& c : fam.common) {
    f = poly_divexact(f, poly_pow(c.poly.coeffs, c.mult_A));
    g = poly_divexact(g, poly_pow(c.poly.coeffs, c.mult_B));
  }
  return {f, g};
}

// ---- audit ----

namespace {

std::vector<Int> divisors_of(const Int& n) {
  Factorization fz = factorize_complete(n);
  std::vector<Int> ds{Int(1)};
  for (const auto& [p, e] : fz.factors) {
    std::size_t sz = ds.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
    }
  }
  return ds;
}

// rational roots of an integer polynomial, or nullopt-like flag when too many candidates
bool rational_roots(std::vector<Int> p, std::vector<Rat>& roots) {
  trim(p);
  roots.clear();
  // strip t factors
  while (p.size() > 1 && p.back() == 0) {
    p.pop_back();
    if (std::find(roots.begin(), roots.end(), Rat(0)) == roots.end()) roots.emplace_back(0);
  }
  if (p.size() <= 1) return true;
  Int g = 0;
  for (const auto& c : p) g = gcd(g, c);
  for (auto& c : p) c /= g;
  auto num = divisors_of(p.back());
  auto den = divisors_of(p.front());
  if (num.size() * den.size() > 4'000'000) return false;
  HomogeneousPoly h{p};
  for (const auto& q : den)
    for (const auto& a : num)
      for (int s : {1, -1}) {
        Int x = s * a;
        if (gcd(x, q) != 1) continue;
        if (h.eval(x, q) == 0) roots.emplace_back(x, q);
      }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return true;
}

std::string str_list(const std::vector<Rat>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "}";
}

}  // namespace

AuditReport verify_family(int m) {
  const auto& fam = get_family(m);
  if (!fam.genus_zero) throw DomainError("verify_family needs a genus-zero level");
  AuditReport rep{m, {}};
  const auto& f = fam.A.coeffs;
  const auto& g = fam.B.coeffs;

  {
    bool ok = fam.A.degree() == fam.degA() && fam.B.degree() == fam.degB && f[0] != 0 &&
              g[0] != 0 && fam.degB % 3 == 0;
    rep.checks.push_back({"degrees", ok,
                          "deg f = " + std::to_string(fam.A.degree()) +
                              ", deg g = " + std::to_string(fam.B.degree()) +
                              ", degB = " + std::to_string(fam.degB)});
  }
  {
    Int r = resultant(f, g);
    rep.checks.push_back({"resultant", r == fam.expected_resultant,
                          "Res(f,g) = " + r.get_str() + ", expected " +
                              fam.expected_resultant.get_str()});
  }
  // disc(t) = 4 f^3 + 27 g^2
  std::vector<Int> disc =
      poly_add(poly_scale(poly_pow(f, 3), 4), poly_scale(poly_pow(g, 2), 27));
  {
    bool ok = true;
    std::string bad;
    HomogeneousPoly dh{disc};
    for (const auto& c : fam.cusps)
      if (dh.eval(c.get_num(), c.get_den()) != 0) ok = false, bad += to_string(c) + " ";
    rep.checks.push_back({"cusps_singular", ok, ok ? "discriminant vanishes at all cusps"
                                                   : "nonzero discriminant at " + bad});
  }
  {
    std::vector<Rat> roots;
    bool done = rational_roots(disc, roots);
    std::vector<Rat> cs = fam.cusps;
    std::sort(cs.begin(), cs.end());
    bool ok = done && roots == cs;
    rep.checks.push_back({"singular_only_at_cusps", ok,
                          done ? "rational roots " + str_list(roots) + ", cusps " + str_list(cs)
                               : "too many rational-root candidates"});
  }
  for (std::size_t i = 0; i < fam.common.size(); ++i) {
    const auto& c = fam.common[i];
    const auto& h = c.poly.coeffs;
    bool ok = poly_divides(f, poly_pow(h, c.mult_A)) && !poly_divides(f, poly_pow(h, c.mult_A + 1)) &&
              poly_divides(g, poly_pow(h, c.mult_B)) && !poly_divides(g, poly_pow(h, c.mult_B + 1)) &&
              c.mult_B >= c.mult_A;
    rep.checks.push_back({"common_factor_" + std::to_string(i), ok,
                          "multiplicities " + std::to_string(c.mult_A) + " in f, " +
                              std::to_string(c.mult_B) + " in g"});
  }
  if (!fam.common.empty()) {
    auto [ft, gt] = reduced_pair(m);
    Int r = resultant(ft, gt);
    // every prime of the reduced resultant must be a listed bad prime
    Factorization fz = factorize(r);
    bool ok = r != 0 && fz.complete();
    for (const auto& [p, e] : fz.factors) {
      bool listed = false;
      for (const auto& b : fam.bad) listed = listed || (Int(b.p) == p);
      ok = ok && listed;
    }
    rep.checks.push_back({"reduced_resultant", ok, "Res(f~, g~) = " + r.get_str()});
  }
  return rep;
}

}  // namespace iso
