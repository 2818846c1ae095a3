#include "isogeny/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "isogeny/families.hpp"

namespace iso {

namespace {

using ld = long double;

struct Kahan {
  ld sum = 0, c = 0;
  void add(ld x) {
    ld y = x - c;
    ld t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

ld pow_neg_sixth(const Int& n) { return std::pow(to_ld(n), -1.0L / 6); }

Int factor_for(TwistConvention c) { return c == TwistConvention::factor2 ? 2 : 1; }

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// splitmix64 stream for one shard
struct ShardRng {
  std::uint64_t x;
  ShardRng(std::uint64_t seed, std::uint64_t shard)
      : x(mix64(seed ^ mix64(shard + 0x632BE59BD9B4E019ULL))) {}
  double next() {
    x += 0x9E3779B97F4A7C15ULL;
    return static_cast<double>(mix64(x) >> 11) * 0x1.0p-53;
  }
};

// Gauss-Legendre nodes on [-1, 1]
struct GaussLegendre {
  std::vector<ld> x, w;
  explicit GaussLegendre(int n) {
    const ld pi = std::acos(-1.0L);
    for (int i = 1; i <= n; ++i) {
      ld z = std::cos(pi * (i - 0.25L) / (n + 0.5L)), pp = 0;
      for (int it = 0; it < 100; ++it) {
        ld p1 = 1, p2 = 0;
        for (int j = 1; j <= n; ++j) {
          ld p3 = p2;
          p2 = p1;
          p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
        }
        pp = n * (z * p1 - p2) / (z * z - 1);
        ld dz = p1 / pp;
        z -= dz;
        if (std::fabs(dz) < 1e-19L) break;
      }
      x.push_back(z);
      w.push_back(2 / ((1 - z * z) * pp * pp));
    }
  }
};

struct DoublePoly {
  std::vector<double> c;
  explicit DoublePoly(const HomogeneousPoly& p) {
    for (const auto& x : p.coeffs) c.push_back(x.get_d());
  }
  double operator()(double a, double b) const {
    double r = c[0], bp = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
      bp *= b;
      r = r * a + c[i] * bp;
    }
    return r;
  }
};

const McRectangle* reference_rectangle(int m) {
  static const McRectangle rects[] = {
      {-0.4583L, 0.4583L, 0.9166L, "4"},   {-0.677L, 1.7036L, 1.0338L, "6"},
      {-0.677L, 0.677L, 0.078L, "7"},      {-0.677L, 2.0309L, 1.3539L, "8"},
      {-0.677L, 0.677L, 0.6801L, "9"},     {-0.8228L, 0.8228L, 0.6934L, "10"},
      {-1.6456L, 0.8228L, 0.8228L, "12"},  {-0.8228L, 0.8228L, 0.1822L, "13"},
      {-0.8228L, 2.4684L, 1.6456L, "16"},  {-0.8781L, 0.8781L, 0.5532L, "18"},
      {-0.8781L, 0.8781L, 0.2754L, "25"},
  };
  for (const auto& r : rects)
    if (r.source == std::to_string(m)) return &r;
  return nullptr;
}

}  // namespace

ZetaConstants zeta_constants() {
  const ld pi = std::acos(-1.0L);
  return {pi * pi / 6, -0.93754825431584375370257409456786497L,
          0.57721566490153286060651209008240243L};
}

const char* to_string(TwistConvention c) {
  return c == TwistConvention::factor2 ? "factor2" : "table";
}

Int count_rational(int m, const Int& X, TwistConvention conv, const EnumOptions& opt) {
  if (X < 1) throw DomainError("bound must be at least 1");
  Int total = 0;
  for (const auto& r : enumerate_twist_classes(m, X, opt)) {
    Int c_max = iroot(X / r.twist_height, 6);
    total += r.multiplicity() * squarefree_count(c_max);
  }
  return factor_for(conv) * total;
}

long double partial_L_twist(int m, const Int& X, const EnumOptions& opt) {
  Kahan s;
  if (X < 1) return 0;
  for (const auto& r : enumerate_twist_classes(m, X, opt)) s.add(pow_neg_sixth(r.twist_height));
  return s.sum;
}

long double rational_constant_exact(int m, TwistConvention conv) {
  Kahan s;
  for (const auto& r : nonzero_genus_list(m)) s.add(pow_neg_sixth(r.twist_height));
  return to_ld(factor_for(conv)) * s.sum / zeta_constants().zeta2;
}

McRectangle mc_rectangle(int m) {
  UnitEnvelope env = unit_height_envelope(m);
  if (const McRectangle* r = reference_rectangle(m)) {
    if (env.a_lo < r->a_lo || env.a_hi > r->a_hi || env.b_hi > r->b_hi)
      throw std::logic_error("height region for m = " + std::to_string(m) +
                             " leaves its enveloping rectangle");
    McRectangle out = *r;
    out.source = "enveloping rectangle";
    return out;
  }
  return {env.a_lo * 1.01L, env.a_hi * 1.01L, env.b_hi * 1.01L, "numeric envelope + 1%"};
}

AreaEstimate monte_carlo_area(int m, std::uint64_t samples, std::uint64_t seed, int threads) {
  if (samples < 10000) throw DomainError("need at least 10^4 samples");
  const auto& fam = get_family(m);
  if (!fam.genus_zero) throw DomainError("Monte Carlo areas exist only for genus-zero m");
  AreaEstimate out;
  out.rect = mc_rectangle(m);
  out.samples = samples;
  out.seed = seed;
  out.shard_size = kMcShardSize;
  const std::uint64_t shards = (samples + kMcShardSize - 1) / kMcShardSize;
  threads = std::max(1, threads);
  std::vector<std::uint64_t> hits(shards, 0);
  const double a0 = static_cast<double>(out.rect.a_lo);
  const double aw = static_cast<double>(out.rect.a_hi - out.rect.a_lo);
  const double bw = static_cast<double>(out.rect.b_hi);
  const DoublePoly fA(fam.A), fB(fam.B);
  auto work = [&](int t) {
    for (std::uint64_t s = t; s < shards; s += threads) {
      std::uint64_t n = std::min(kMcShardSize, samples - s * kMcShardSize), h = 0;
      ShardRng rng(seed, s);
      for (std::uint64_t i = 0; i < n; ++i) {
        double a = a0 + aw * rng.next();
        double b = bw * rng.next();
        double A = fA(a, b), B = fB(a, b);
        if (4 * std::fabs(A) * A * A <= 1 && 27 * B * B <= 1) ++h;
      }
      hits[s] = h;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> ts;
    for (int t = 0; t < threads; ++t) ts.emplace_back(work, t);
    for (auto& th : ts) th.join();
  }
  for (auto h : hits) out.accepted += h;
  ld p = static_cast<ld>(out.accepted) / samples;
  ld area = out.rect.area();
  out.estimate = area * p;
  out.std_error = area * std::sqrt(p * (1 - p) / samples);
  return out;
}

long double region_area(int m) {
  const auto& fam = get_family(m);
  if (!fam.genus_zero) throw DomainError("region areas exist only for genus-zero m");
  const ld pi = std::acos(-1.0L);
  const ld inv = -1.0L / fam.degB;
  auto AB = [&](ld t, ld& A, ld& B) {
    A = fam.A.eval_ld(std::cos(t), std::sin(t));
    B = fam.B.eval_ld(std::cos(t), std::sin(t));
  };
  auto f = [&](ld t) {
    ld A, B;
    AB(t, A, B);
    return 0.5L * std::pow(std::max(4 * std::fabs(A) * A * A, 27 * B * B), inv);
  };
  auto side = [&](ld t) {
    ld A, B;
    AB(t, A, B);
    return 4 * std::fabs(A) * A * A - 27 * B * B;
  };
  // split where the max switches branch
  std::vector<ld> cuts{0};
  const int N = 20000;
  ld prev = side(0);
  for (int i = 1; i <= N; ++i) {
    ld t = pi * i / N, cur = side(t);
    if ((prev < 0) != (cur < 0)) {
      ld lo = pi * (i - 1) / N, hi = t;
      for (int it = 0; it < 200 && hi - lo > 1e-19L; ++it) {
        ld mid = (lo + hi) / 2;
        if ((side(mid) < 0) == (prev < 0)) lo = mid;
        else hi = mid;
      }
      cuts.push_back((lo + hi) / 2);
    }
    prev = cur;
  }
  cuts.push_back(pi);
  static const GaussLegendre gl(24);
  Kahan s;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const int parts = 64;
    ld w = (cuts[k + 1] - cuts[k]) / parts;
    for (int j = 0; j < parts; ++j) {
      ld lo = cuts[k] + j * w, mid = lo + w / 2;
      for (std::size_t i = 0; i < gl.x.size(); ++i) s.add(gl.w[i] * f(mid + gl.x[i] * w / 2) * w / 2);
    }
  }
  return s.sum;
}

Estimate twist_constant(int m, CountMode mode, std::uint64_t prime_bound) {
  if (!is_genus_zero(m)) throw DomainError("twist constants exist only for genus-zero m");
  if (m == 5 || m == 13) throw DomainError("Q_" + std::to_string(m) + " is unavailable");
  QBracket q = q_constant(m, prime_bound);
  ld Q = q.exact ? to_ld(q.exact->get_num()) / to_ld(q.exact->get_den()) : q.estimate;
  ld Qerr = q.exact ? 0 : std::max(q.upper - Q, Q - q.lower);
  ld R = region_area(m), Rerr = 1e-12L;
  ld z = zeta_constants().zeta2;
  Estimate e{Q * R / z, (Qerr * R + Q * Rerr) / z};
  if (mode == CountMode::admitting && m % 4 == 0) {
    e.value /= 2;
    e.error /= 2;
  }
  return e;
}

Estimate c_rational(int m, CountMode mode, std::uint64_t prime_bound) {
  Estimate t = twist_constant(m, mode, prime_bound);
  ld d = 3 * zeta_constants().zeta2;
  return {t.value / d, t.error / d};
}

long double ell0_with_constant(int m, const Int& T, long double ctw, CountMode mode,
                               const EnumOptions& opt) {
  const ld gamma = zeta_constants().gamma;
  if (T <= 1) return ctw * gamma;
  std::vector<std::pair<Int, int>> steps;
  for (const auto& r : enumerate_twist_classes(m, T, opt))
    steps.emplace_back(r.twist_height, mode == CountMode::equipped ? r.multiplicity() : 1);
  // pieces between consecutive jumps of twN(u) and floor(u^(1/6))
  Kahan s;
  Int u = 1, k = 1, next_pow = 64, count = 0;
  std::size_t i = 0;
  ld u_m = 1;  // u^(-1/6)
  while (u < T) {
    while (i < steps.size() && steps[i].first <= u) count += steps[i++].second;
    Int nxt = std::min(next_pow, T);
    if (i < steps.size()) nxt = std::min(nxt, steps[i].first);
    ld v_m = pow_neg_sixth(nxt);
    s.add((to_ld(count) - ctw * to_ld(k)) * (u_m - v_m));
    u = nxt;
    u_m = v_m;
    if (u == next_pow) {
      ++k;
      next_pow = ipow(k + 1, 6);
    }
  }
  return ctw * gamma + s.sum;
}

long double ell0_estimate(int m, const Int& T, CountMode mode, const EnumOptions& opt) {
  if (m < 6 || m > 9) throw DomainError("ell0 is defined here for m in {6, 7, 8, 9}");
  return ell0_with_constant(m, T, twist_constant(m, mode).value, mode, opt);
}

ConstantsReport constants_report(int m, const ConstantsOptions& opt) {
  ConstantsReport rep;
  rep.m = m;
  rep.genus_zero = is_genus_zero(m);
  if (!rep.genus_zero) {
    nonzero_genus_list(m);  // validates m
    rep.c_table = rational_constant_exact(m, TwistConvention::table);
    rep.c_factor2 = rational_constant_exact(m, TwistConvention::factor2);
    return rep;
  }
  rep.R_quadrature = region_area(m);
  if (opt.mc_samples > 0) rep.R_mc = monte_carlo_area(m, opt.mc_samples, opt.seed, opt.threads);
  if (m == 5 || m == 13) {
    rep.q_note = m == 5 ? "Q_5 diverges" : "Q_13 lacks its factor at p = 13";
    return rep;
  }
  rep.q = q_constant(m, opt.euler_bound);
  rep.ctw_equipped = twist_constant(m, CountMode::equipped, opt.euler_bound);
  rep.ctw_admitting = twist_constant(m, CountMode::admitting, opt.euler_bound);
  rep.c_equipped = c_rational(m, CountMode::equipped, opt.euler_bound);
  rep.c_admitting = c_rational(m, CountMode::admitting, opt.euler_bound);
  if (opt.ell0_truncation > 0 && m >= 6 && m <= 9) {
    rep.ell0_truncation = opt.ell0_truncation;
    EnumOptions eo;
    eo.threads = opt.threads;
    rep.ell0 = ell0_with_constant(m, opt.ell0_truncation, rep.ctw_admitting->value,
                                  CountMode::admitting, eo);
  }
  return rep;
}

}  // namespace iso
