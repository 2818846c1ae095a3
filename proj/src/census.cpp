#include "isogeny/census.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "isogeny/families.hpp"
#include "isogeny/heights.hpp"

namespace iso {

int TwistClassRecord::multiplicity() const {
  int s = 0;
  for (const auto& p : points) s += p.multiplicity;
  return s;
}

namespace {

using i64 = long long;
using u64 = std::uint64_t;
using ld = long double;

struct FastPoly {
  std::vector<ld> c, cabs;
  explicit FastPoly(const HomogeneousPoly& p) {
    for (const auto& x : p.coeffs) {
      c.push_back(to_ld(x));
      cabs.push_back(std::fabs(to_ld(x)));
    }
  }
  int n() const { return static_cast<int>(c.size()) - 1; }
  // bp[i] = b^i
  void eval(ld a, const std::vector<ld>& bp, ld& val, ld& absval) const {
    ld r = c[0], s = cabs[0], aa = std::fabs(a);
    for (std::size_t i = 1; i < c.size(); ++i) {
      r = r * a + c[i] * bp[i];
      s = s * aa + cabs[i] * bp[i];
    }
    val = r;
    absval = s;
  }
  ld at(ld a, ld b) const {
    ld r = c[0], bp = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
      bp *= b;
      r = r * a + c[i] * bp;
    }
    return r;
  }
};

// generous Horner bound: (4n + 8) u sum|c_i||a|^(n-i) b^i with u = 2^-63
ld horner_err(int n, ld absval) { return (4.0L * n + 8.0L) * std::ldexp(1.0L, -63) * absval; }

ld H_of(ld A, ld B) { return std::max(4.0L * std::fabs(A) * A * A, 27.0L * B * B); }

// ---- radial shapes ----

struct Extents {
  ld apos = 0, aneg = 0, bmax = 0, rmax = 0;
};

// G(theta) = H(u) / prod C_i(u)^(6/k_i); region r <= (scale / G)^(1/deg)
struct Radial {
  const FamilyDescriptor* fam;
  bool channels;
  int deg;
  FastPoly A, B;
  std::vector<FastPoly> C;
  std::vector<int> k;

  Radial(const FamilyDescriptor& f, bool use_channels)
      : fam(&f), channels(use_channels), A(f.A), B(f.B) {
    deg = 2 * f.degB;
    if (channels)
      for (const auto& cf : f.common) {
        C.emplace_back(cf.poly);
        k.push_back(cf.k);
        deg -= 12 / cf.k;
      }
  }

  ld ext(ld th) const {
    ld a = std::cos(th), b = std::sin(th);
    ld G = H_of(A.at(a, b), B.at(a, b));
    for (std::size_t i = 0; i < C.size(); ++i) G /= std::pow(C[i].at(a, b), 6.0L / k[i]);
    return std::pow(G, -1.0L / deg);
  }
};

ld golden_max(const std::function<ld(ld)>& f, ld lo, ld hi) {
  const ld g = (std::sqrt(5.0L) - 1) / 2;
  ld x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  ld f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15L; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  return std::max({f1, f2, f(lo), f(hi)});
}

Extents compute_extents(const Radial& R) {
  const int N = 20000;
  const ld pi = std::acos(-1.0L);
  std::vector<ld> e(N + 1);
  for (int i = 0; i <= N; ++i) e[i] = R.ext(pi * i / N);
  Extents out;
  std::function<ld(ld)> fs[4] = {
      [&](ld t) { return R.ext(t) * std::cos(t); },
      [&](ld t) { return -R.ext(t) * std::cos(t); },
      [&](ld t) { return R.ext(t) * std::sin(t); },
      [&](ld t) { return R.ext(t); },
  };
  ld* dst[4] = {&out.apos, &out.aneg, &out.bmax, &out.rmax};
  for (int f = 0; f < 4; ++f) {
    int best = 0;
    ld bv = -1e300L;
    for (int i = 0; i <= N; ++i) {
      ld t = pi * i / N;
      ld v = f == 0 ? e[i] * std::cos(t) : f == 1 ? -e[i] * std::cos(t) : f == 2 ? e[i] * std::sin(t) : e[i];
      if (v > bv) bv = v, best = i;
    }
    ld lo = pi * std::max(0, best - 1) / N, hi = pi * std::min(N, best + 1) / N;
    *dst[f] = std::max(bv, golden_max(fs[f], lo, hi));
  }
  out.aneg = std::max<ld>(out.aneg, 0);
  out.apos = std::max<ld>(out.apos, 0);
  return out;
}

const Extents& cached_extents(int m, bool channels) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, Extents> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, channels);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Radial R(get_family(m), channels);
  return cache.emplace(key, compute_extents(R)).first->second;
}

// enveloping rectangles for the unit region of the coprime families
struct Rect {
  int m;
  ld a_lo, a_hi, b_hi;
};
const Rect kRects[] = {
    {4, -0.4583L, 0.4583L, 0.9166L},  {6, -0.677L, 1.7036L, 1.0338L},
    {8, -0.677L, 2.0309L, 1.3539L},   {9, -0.677L, 0.677L, 0.6801L},
    {12, -1.6456L, 0.8228L, 0.8228L}, {16, -0.8228L, 2.4684L, 1.6456L},
    {18, -0.8781L, 0.8781L, 0.5532L},
};

Int ceil_ld(ld x) {
  if (x < 0) return -Int(0) - Int(static_cast<unsigned long>(std::floor(-x)));
  ld c = std::ceil(x);
  if (c < 1e18L) return Int(static_cast<unsigned long>(c));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0Lf", c);
  return parse_int(buf);
}

// box on the height H <= X (no defect)
EnumerationBox height_box(int m, const Int& X) {
  const auto& fam = get_family(m);
  const Extents& E = cached_extents(m, false);
  EnumerationBox box;
  box.m = m;
  box.max_twht = X;
  box.radial_degree = 2 * fam.degB;
  box.defect_cap = 1;
  ld s = std::pow(to_ld(X), 1.0L / box.radial_degree) * 1.05L;
  box.a_hi = ceil_ld(s * E.apos);
  box.a_lo = -ceil_ld(s * E.aneg);
  box.b_hi = ceil_ld(s * E.bmax);
  box.shape_constant = E.rmax;
  box.shape_source = "numeric envelope of H <= 1";
  return box;
}

EnumerationBox inflate(const EnumerationBox& b, ld f) {
  EnumerationBox o = b;
  auto grow = [&](const Int& v) {
    Int w = ceil_ld(to_ld(abs(v)) * f);
    if (w <= abs(v)) w = abs(v) + 1;
    return v < 0 ? Int(-w) : w;
  };
  o.a_hi = grow(b.a_hi);
  o.a_lo = b.a_lo < 0 ? grow(b.a_lo) : Int(-1);
  o.b_hi = grow(b.b_hi);
  return o;
}

// ---- scanning ----

struct Candidate {
  i64 a, b;
  u64 e0;  // channel part of the defect
};

struct RootLevel {
  u64 q;                  // p^(j k)
  std::vector<u64> roots; // roots of h mod q
};

struct ChannelSieve {
  int k;
  std::vector<std::pair<u64, std::vector<RootLevel>>> primes;
};

std::vector<u64> roots_mod(const std::vector<Int>& h, u64 p, int n) {
  // digit tree on h(t) = 0 mod p^n
  std::vector<u64> cur{0};
  u64 pk = 1;
  auto ev = [&](u64 t, u64 M) {
    unsigned __int128 r = 0;
    for (const auto& c : h) {
      Int cm;
      mpz_fdiv_r_ui(cm.get_mpz_t(), c.get_mpz_t(), M);
      r = (r * t + cm.get_ui()) % M;
    }
    return static_cast<u64>(r);
  };
  for (int lev = 1; lev <= n; ++lev) {
    std::vector<u64> nxt;
    u64 M = pk * p;
    for (u64 t : cur)
      for (u64 d = 0; d < p; ++d) {
        u64 x = t + d * pk;
        if (ev(x, M) == 0) nxt.push_back(x);
      }
    cur.swap(nxt);
    pk = M;
    if (cur.empty()) break;
  }
  return cur;
}

struct Scanner {
  const FamilyDescriptor& fam;
  bool twist_mode;  // false: plain height H <= bound
  ld X;             // twist-height (or height) bound
  ld D;             // bad-prime defect cap
  FastPoly A, B;
  std::vector<ChannelSieve> sieves;

  Scanner(const FamilyDescriptor& f, bool twist, const Int& Xi, const Int& cap, ld Cmax)
      : fam(f), twist_mode(twist), X(to_ld(Xi)), D(to_ld(cap)), A(f.A), B(f.B) {
    if (!twist_mode) return;
    for (const auto& cf : fam.common) {
      ChannelSieve cs;
      cs.k = cf.k;
      u64 pmax = static_cast<u64>(std::floor(std::pow(Cmax, 1.0L / cf.k))) + 1;
      for (std::uint32_t p : primes_up_to(std::max<u64>(pmax, 100))) {
        if (p > pmax) break;
        std::vector<RootLevel> levels;
        ld q = 1;
        for (int j = 1;; ++j) {
          q *= std::pow(static_cast<ld>(p), cf.k);
          if (q > Cmax || q > 1e18L) break;
          u64 qi = 1;
          for (int i = 0; i < j * cf.k; ++i) qi *= p;
          auto r = roots_mod(cf.poly.coeffs, p, j * cf.k);
          if (r.empty()) break;
          levels.push_back({qi, std::move(r)});
        }
        if (!levels.empty()) cs.primes.emplace_back(p, std::move(levels));
      }
      sieves.push_back(std::move(cs));
    }
  }

  void row(i64 b, i64 a_lo, i64 a_hi, std::vector<Candidate>& out,
           std::vector<u64>& e0, std::vector<ld>& bp) const {
    const std::size_t W = static_cast<std::size_t>(a_hi - a_lo + 1);
    e0.assign(W, 1);
    for (const auto& cs : sieves)
      for (const auto& [p, levels] : cs.primes) {
        if (b % static_cast<i64>(p) == 0) continue;
        for (const auto& lv : levels) {
          const i64 q = static_cast<i64>(lv.q);
          const i64 bq = b % q;
          for (u64 r : lv.roots) {
            i64 target = static_cast<i64>((static_cast<unsigned __int128>(r) * bq) % lv.q);
            i64 start = a_lo + (((target - a_lo) % q) + q) % q;
            for (i64 a = start; a <= a_hi; a += q) e0[static_cast<std::size_t>(a - a_lo)] *= p;
          }
        }
      }
    const int n = std::max(A.n(), B.n());
    bp.assign(n + 1, 1);
    for (int i = 1; i <= n; ++i) bp[i] = bp[i - 1] * static_cast<ld>(b);
    for (i64 a = a_lo; a <= a_hi; ++a) {
      if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
      ld Av, Aabs, Bv, Babs;
      A.eval(static_cast<ld>(a), bp, Av, Aabs);
      B.eval(static_cast<ld>(a), bp, Bv, Babs);
      ld Alo = std::max<ld>(0, std::fabs(Av) - horner_err(A.n(), Aabs));
      ld Blo = std::max<ld>(0, std::fabs(Bv) - horner_err(B.n(), Babs));
      ld Hlo = std::max(4.0L * Alo * Alo * Alo, 27.0L * Blo * Blo) * (1.0L - 1e-15L);
      u64 e = e0[static_cast<std::size_t>(a - a_lo)];
      ld bound = twist_mode ? X * std::pow(static_cast<ld>(e) * D, 6.0L) : X;
      if (Hlo > bound * (1.0L + 1e-15L)) continue;
      out.push_back({a, b, e});
    }
  }
};

struct Rows {
  i64 b_lo, b_hi, a_lo, a_hi;
};

i64 to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("enumeration box exceeds 64-bit range");
  return v.get_si();
}

std::vector<Candidate> scan(const Scanner& sc, const std::vector<Rows>& rects, int threads) {
  threads = std::max(1, threads);
  std::vector<std::vector<Candidate>> parts(threads);
  auto work = [&](int t) {
    std::vector<u64> e0;
    std::vector<ld> bp;
    for (const auto& r : rects)
      for (i64 b = r.b_lo; b <= r.b_hi; ++b) {
        if ((b % threads) != t) continue;
        if (r.a_lo <= r.a_hi) sc.row(b, r.a_lo, r.a_hi, parts[t], e0, bp);
      }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> ts;
    for (int t = 0; t < threads; ++t) ts.emplace_back(work, t);
    for (auto& th : ts) th.join();
  }
  std::vector<Candidate> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end(),
            [](const Candidate& x, const Candidate& y) { return x.b != y.b ? x.b < y.b : x.a < y.a; });
  return all;
}

std::vector<Rows> shell_rects(const EnumerationBox& in, const EnumerationBox& out) {
  i64 a0 = to_i64(in.a_lo), a1 = to_i64(in.a_hi), b1 = to_i64(in.b_hi);
  i64 A0 = to_i64(out.a_lo), A1 = to_i64(out.a_hi), B1 = to_i64(out.b_hi);
  return {{1, b1, A0, a0 - 1}, {1, b1, a1 + 1, A1}, {b1 + 1, B1, A0, A1}};
}

std::vector<Int> candidate_primes(const FamilyDescriptor& fam, u64 e0) {
  std::vector<Int> ps;
  for (const auto& b : fam.bad) ps.emplace_back(b.p);
  if (e0 > 1)
    for (const auto& [p, v] : factorize_complete(Int(static_cast<unsigned long>(e0))).factors)
      ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

// exact test for the twist-height bound
bool exact_point(const FamilyDescriptor& fam, const Candidate& c, const Int& X, const Int& cap,
                 ParamPoint& out) {
  Int a(static_cast<long>(c.a)), b(static_cast<long>(c.b));
  if (is_cusp(fam, a, b)) return false;
  Int A = fam.A.eval(a, b), B = fam.B.eval(a, b);
  Int e = twist_defect_over(A, B, candidate_primes(fam, c.e0));
  Int lim = cap * static_cast<unsigned long>(c.e0);
  if (lim % e != 0)
    throw std::logic_error("twist defect " + e.get_str() + " at (" + a.get_str() + "," +
                           b.get_str() + ") escapes the bad-prime cap");
  Int H = naive_H(A, B);
  Int tw = H / ipow(e, 6);
  if (tw > X) return false;
  out.m = fam.m;
  out.a = a;
  out.b = b;
  out.A_model = A;
  out.B_model = B;
  out.defect = e;
  out.twist_height = tw;
  out.multiplicity = (fam.m == 4 && a == 0 && b == 1) ? 2 : 1;
  return true;
}


ld cmax_over(const FamilyDescriptor& fam, const EnumerationBox& box) {
  ld amax = std::max(std::fabs(to_ld(box.a_lo)), std::fabs(to_ld(box.a_hi)));
  ld bmax = to_ld(box.b_hi), c = 1;
  for (const auto& cf : fam.common) c = std::max(c, cf.poly.abs_eval_ld(amax, bmax));
  return c * (1.0L + 1e-12L);
}

std::vector<Rows> full_rect(const EnumerationBox& box) {
  return {{1, to_i64(box.b_hi), to_i64(box.a_lo), to_i64(box.a_hi)}};
}

void require_genus_zero(int m) {
  if (!is_genus_zero(m)) throw DomainError("m = " + std::to_string(m) + " is not a genus-zero level");
}

std::vector<ParamPoint> exact_all(const FamilyDescriptor& fam, const std::vector<Candidate>& cs,
                                  const Int& X, const Int& cap) {
  std::vector<ParamPoint> out;
  for (const auto& c : cs) {
    ParamPoint pt;
    if (exact_point(fam, c, X, cap, pt)) out.push_back(std::move(pt));
  }
  return out;
}

std::vector<Int> channel_primes(const FamilyDescriptor& fam, const Int& a, const Int& b) {
  std::vector<Int> ps;
  for (const auto& bp : fam.bad) ps.emplace_back(bp.p);
  for (const auto& cf : fam.common) {
    Int c = cf.poly.eval(a, b);
    if (c != 0)
      for (const auto& fe : factorize_complete(c).factors) ps.push_back(fe.first);
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

// groomed points with H <= bound, as (a, b, A, B, H)
struct HPoint {
  Int a, b, A, B, H;
};

std::vector<HPoint> height_points(const FamilyDescriptor& fam, const Int& bound) {
  EnumerationBox box = height_box(fam.m, bound);
  Scanner sc(fam, false, bound, 1, 1);
  std::vector<HPoint> out;
  for (const auto& c : scan(sc, full_rect(box), 1)) {
    Int a(static_cast<long>(c.a)), b(static_cast<long>(c.b));
    if (is_cusp(fam, a, b)) continue;
    Int A = fam.A.eval(a, b), B = fam.B.eval(a, b);
    Int H = naive_H(A, B);
    if (H <= bound) out.push_back({a, b, A, B, H});
  }
  return out;
}

}  // namespace

EnumerationBox enumeration_box(int m, const Int& X) {
  require_genus_zero(m);
  if (X < 1) throw DomainError("bound must be at least 1");
  const auto& fam = get_family(m);
  const Extents& E = cached_extents(m, !fam.coprime());
  Radial R(fam, !fam.coprime());
  EnumerationBox box;
  box.m = m;
  box.max_twht = X;
  box.radial_degree = R.deg;
  box.defect_cap = fam.max_bounded_defect;
  ld s = std::pow(to_ld(X) * std::pow(to_ld(fam.max_bounded_defect), 6.0L), 1.0L / R.deg);
  ld f = 1.05L * s;
  box.a_hi = ceil_ld(f * E.apos);
  box.a_lo = -ceil_ld(f * E.aneg);
  box.b_hi = ceil_ld(f * E.bmax);
  box.shape_constant = E.rmax;
  box.shape_source = "numeric envelope, 5% inflation";
  if (fam.coprime()) {
    for (const auto& r : kRects)
      if (r.m == m) {
        box.a_hi = std::max(box.a_hi, ceil_ld(s * r.a_hi));
        box.a_lo = std::min(box.a_lo, Int(-ceil_ld(-s * r.a_lo)));
        box.b_hi = std::max(box.b_hi, ceil_ld(s * r.b_hi));
        box.shape_source = "enveloping rectangle united with numeric envelope";
      }
  }
  if (box.b_hi < 1) box.b_hi = 1;
  return box;
}

std::vector<ParamPoint> enumerate_equipped(int m, const Int& X, const EnumOptions& opt) {
  require_genus_zero(m);
  if (X < 1) return {};
  const auto& fam = get_family(m);
  EnumerationBox box = enumeration_box(m, X);
  EnumerationBox outer = inflate(box, 1.05L);
  Scanner sc(fam, true, X, fam.max_bounded_defect, cmax_over(fam, outer));
  auto pts = exact_all(fam, scan(sc, full_rect(box), opt.threads), X, fam.max_bounded_defect);
  if (opt.audit) {
    auto extra = exact_all(fam, scan(sc, shell_rects(box, outer), opt.threads), X,
                           fam.max_bounded_defect);
    if (!extra.empty())
      throw std::logic_error("box audit failed for m = " + std::to_string(m) + ": (" +
                             extra[0].a.get_str() + "," + extra[0].b.get_str() +
                             ") lies outside the enumeration box");
  }
  return pts;
}

std::vector<TwistClassRecord> enumerate_twist_classes(int m, const Int& X,
                                                      const EnumOptions& opt) {
  if (!is_genus_zero(m)) {
    std::vector<TwistClassRecord> out;
    for (auto& r : nonzero_genus_list(m))
      if (r.twist_height <= X) out.push_back(std::move(r));
    return out;
  }
  std::map<std::pair<Int, Int>, TwistClassRecord> by_rep;
  for (const auto& p : enumerate_equipped(m, X, opt)) {
    Int e2 = p.defect * p.defect;
    Int Amin = p.A_model / e2;
    Int Bmin = abs(p.B_model) / (e2 * p.defect);
    auto& rec = by_rep[{Amin, Bmin}];
    if (rec.points.empty()) {
      rec.m = m;
      rec.A_min = Amin;
      rec.B_min = Bmin;
      rec.twist_height = p.twist_height;
      rec.j_invariant = j_invariant(Amin, Bmin);
    } else if (rec.twist_height != p.twist_height) {
      throw std::logic_error("twist height differs within a twist class");
    }
    rec.points.push_back({p.a, p.b, p.A_model, p.B_model, p.defect, p.multiplicity});
  }
  std::vector<TwistClassRecord> out;
  std::set<Rat> js;
  for (auto& [k, r] : by_rep) {
    std::sort(r.points.begin(), r.points.end(), [](const ClassPoint& x, const ClassPoint& y) {
      return x.b != y.b ? x.b < y.b : x.a < y.a;
    });
    if (!js.insert(r.j_invariant).second)
      throw std::logic_error("two twist classes share j = " + to_string(r.j_invariant));
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const TwistClassRecord& x, const TwistClassRecord& y) {
    if (x.twist_height != y.twist_height) return x.twist_height < y.twist_height;
    if (x.A_min != y.A_min) return x.A_min < y.A_min;
    return x.B_min < y.B_min;
  });
  return out;
}

Int count_twN(int m, const Int& X, CountMode mode, const EnumOptions& opt) {
  auto recs = enumerate_twist_classes(m, X, opt);
  if (mode == CountMode::admitting) return Int(static_cast<unsigned long>(recs.size()));
  Int s = 0;
  for (const auto& r : recs) s += r.multiplicity();
  return s;
}

Int count_M(int m, const Int& X, const Int& e) {
  require_genus_zero(m);
  if (e < 1) throw DomainError("e must be positive");
  const auto& fam = get_family(m);
  Int e2 = e * e, e3 = e2 * e, n = 0;
  for (const auto& p : height_points(fam, X))
    if (p.A % e2 == 0 && p.B % e3 == 0) ++n;
  return n;
}

Int sieve_cap(int m, const Int& X) {
  require_genus_zero(m);
  if (m == 7) {
    // (3^(5/4) 7^(9/2) / 2^(1/6)) X^(1/12)
    ld c = std::pow(3.0L, 1.25L) * std::pow(7.0L, 4.5L) / std::pow(2.0L, 1.0L / 6);
    return ceil_ld(c * std::pow(to_ld(X), 1.0L / 12));
  }
  const auto& fam = get_family(m);
  EnumerationBox box = enumeration_box(m, X);
  ld cap = to_ld(fam.max_bounded_defect);
  ld amax = std::max(std::fabs(to_ld(box.a_lo)), std::fabs(to_ld(box.a_hi)));
  for (const auto& cf : fam.common)
    cap *= std::pow(cf.poly.abs_eval_ld(amax, to_ld(box.b_hi)), 1.0L / cf.k);
  return ceil_ld(cap);
}

Int sieve_count(int m, const Int& X) {
  if (m != 7 && m != 10 && m != 25) throw DomainError("sieve_count supports m = 7, 10, 25");
  const auto& fam = get_family(m);
  Int N = sieve_cap(m, X);
  Int bound = ipow(N, 6) * X;
  if (to_ld(bound) > 1e60L)
    throw DomainError("sieve term M(n^6 X; n) infeasible for n up to " + N.get_str());
  Int total = 0;
  for (const auto& p : height_points(fam, bound)) {
    Int d = twist_defect_over(p.A, p.B, channel_primes(fam, p.a, p.b));
    if (d == 1) {
      if (p.H <= X) ++total;
      continue;
    }
    auto fac = factorize_complete(d).factors;
    // divisors n of d with n <= N; for each, e | n with n/e squarefree
    std::vector<std::pair<Int, std::vector<int>>> divs{{1, {}}};
    for (const auto& [q, v] : fac) {
      std::vector<std::pair<Int, std::vector<int>>> nx;
      for (const auto& [n, ex] : divs) {
        Int t = n;
        for (int i = 0; i <= v; ++i, t *= q) {
          auto e2 = ex;
          e2.push_back(i);
          nx.emplace_back(t, e2);
        }
      }
      divs.swap(nx);
    }
    for (const auto& [n, ex] : divs) {
      if (n > N) continue;
      // e = n / s with s squarefree
      std::size_t r = ex.size();
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        Int e = n;
        int sign = 1;
        bool ok = true;
        for (std::size_t i = 0; i < r; ++i)
          if (mask >> i & 1) {
            if (ex[i] == 0) {
              ok = false;
              break;
            }
            e /= fac[i].first;
            sign = -sign;
          }
        if (!ok) continue;
        if (p.H <= ipow(e, 6) * X) total += sign;
      }
    }
  }
  return total;
}

const std::vector<NonzeroGenusCurve>& nonzero_genus_curves() {
  static const std::vector<NonzeroGenusCurve> curves = [] {
    struct Row {
      int m;
      const char *A, *B, *twht, *j;
    };
    // m = 27 and 43 use the curves whose j matches the stored value
    const Row rows[] = {
        {11, "-264", "1694", "77480172", "-32768"},
        {11, "-363", "10406", "2923690572", "-121"},
        {11, "-4323", "109406", "323181166572", "-24729001"},
        {14, "-35", "98", "259308", "-3375"},
        {14, "-595", "5586", "842579500", "16581375"},
        {15, "-75", "2950", "234967500", "-25/2"},
        {15, "-435", "4210", "478550700", "-121945/32"},
        {15, "3165", "31070", "126818068500", "46969655/32768"},
        {15, "-18075", "935350", "23621749807500", "-349938025/8"},
        {17, "-95115", "12657350", "4325629743607500", "-882216989/131072"},
        {17, "-437835", "111510650", "335734876712407500", "-297756989/2"},
        {19, "-152", "722", "14074668", "-884736"},
        {21, "45", "18", "364500", "3375/2"},
        {21, "-75", "262", "1853388", "-140625/8"},
        {21, "-1515", "46106", "57395607372", "-1159088625/2097152"},
        {21, "-17235", "870894", "20478321699372", "-189613868625/128"},
        {27, "-120", "506", "6912972", "-12288000"},
        {37, "-1155", "16450", "7306267500", "-9317"},
        {37, "-29963955", "63131603150", "107611181539805427907500", "-162677523113838677"},
        {43, "-3440", "77658", "162830654028", "-884736000"},
        {67, "-29480", "1948226", "102480782771052", "-147197952000"},
        {163, "-8697680", "9873093538", "2631905352272628650988", "-262537412640768000"},
    };
    std::vector<NonzeroGenusCurve> out;
    for (const auto& r : rows) {
      NonzeroGenusCurve c{r.m, parse_int(r.A), parse_int(r.B), parse_int(r.twht), Rat(r.j)};
      c.j.canonicalize();
      auto h = heights(c.A, c.B);
      if (h.twist_height != c.twist_height || h.j_invariant != c.j || h.twist_defect != 1)
        throw std::logic_error("stored nonzero-genus curve fails recomputation (m = " +
                               std::to_string(r.m) + ")");
      out.push_back(c);
    }
    return out;
  }();
  return curves;
}

UnitEnvelope unit_height_envelope(int m) {
  require_genus_zero(m);
  const Extents& E = cached_extents(m, false);
  return {-E.aneg, E.apos, E.bmax, E.rmax};
}

std::vector<TwistClassRecord> nonzero_genus_list(int m) {
  const auto& lv = nonzero_genus_levels();
  if (std::find(lv.begin(), lv.end(), m) == lv.end())
    throw DomainError("m = " + std::to_string(m) + " is not a nonzero-genus level");
  std::vector<TwistClassRecord> out;
  for (const auto& c : nonzero_genus_curves()) {
    if (c.m != m) continue;
    TwistClassRecord r;
    r.m = m;
    r.A_min = c.A;
    r.B_min = c.B;
    r.twist_height = c.twist_height;
    r.j_invariant = c.j;
    // no parameter point; the model is the curve itself
    r.points.push_back({0, 0, c.A, c.B, 1, 1});
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const TwistClassRecord& x, const TwistClassRecord& y) {
    return x.twist_height < y.twist_height;
  });
  return out;
}

}  // namespace iso
