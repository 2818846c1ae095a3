#include "isogeny/heights.hpp"

#include <algorithm>
#include <climits>

#include "isogeny/families.hpp"

namespace iso {

namespace {

void require_nonsingular(const Int& A, const Int& B) {
  Int d = 4 * A * A * A + 27 * B * B;
  if (d == 0) throw DomainError("singular curve: 4A^3 + 27B^2 = 0");
}

int val_or_inf(const Int& n, const Int& p) { return n == 0 ? INT_MAX : valuation(n, p); }

// primes that can divide both A and B
std::vector<Int> support(const Int& A, const Int& B) {
  Int g = gcd(A, B);  // gcd(x, 0) = |x|
  std::vector<Int> ps;
  if (g == 1) return ps;
  for (const auto& fe : factorize_complete(g).factors) ps.push_back(fe.first);
  return ps;
}

Int defect_with(const Int& A, const Int& B, const std::vector<Int>& primes, int ka, int kb) {
  Int e = 1;
  for (const auto& p : primes) {
    int v = std::min(val_or_inf(A, p) / ka, val_or_inf(B, p) / kb);
    if (v > 0) e *= ipow(p, static_cast<unsigned long>(v));
  }
  return e;
}

}  // namespace

Int naive_H(const Int& A, const Int& B) {
  require_nonsingular(A, B);
  Int a3 = 4 * abs(A) * A * A;
  Int b2 = 27 * B * B;
  return a3 > b2 ? a3 : b2;
}

Int minimality_defect(const Int& A, const Int& B) {
  require_nonsingular(A, B);
  return defect_with(A, B, support(A, B), 4, 6);
}

Int twist_defect_generic(const Int& A, const Int& B) {
  require_nonsingular(A, B);
  return defect_with(A, B, support(A, B), 2, 3);
}

Int twist_defect_over(const Int& A, const Int& B, const std::vector<Int>& primes) {
  return defect_with(A, B, primes, 2, 3);
}

Int twist_defect_supported(int m, const Int& a, const Int& b) {
  if (!is_groomed(m, a, b)) throw DomainError("pair is not groomed");
  const auto& fam = get_family(m);
  auto [A, B] = eval_model(m, a, b);
  std::vector<Int> ps;
  for (const auto& bp : fam.bad) ps.emplace_back(bp.p);
  for (const Int& c : eval_common_factors(m, a, b))
    for (const auto& fe : factorize_complete(c).factors) ps.push_back(fe.first);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return twist_defect_over(A, B, ps);
}

Rat j_invariant(const Int& A, const Int& B) {
  require_nonsingular(A, B);
  Rat j(6912 * A * A * A, 4 * A * A * A + 27 * B * B);
  j.canonicalize();
  return j;
}

HeightProfile heights(const Int& A, const Int& B) {
  HeightProfile h;
  h.H = naive_H(A, B);
  auto ps = support(A, B);
  h.min_defect = defect_with(A, B, ps, 4, 6);
  h.twist_defect = defect_with(A, B, ps, 2, 3);
  h.naive_height = h.H / ipow(h.min_defect, 12);
  h.twist_height = h.H / ipow(h.twist_defect, 6);
  h.discriminant = -16 * (4 * A * A * A + 27 * B * B);
  h.j_invariant = j_invariant(A, B);
  return h;
}

std::pair<Int, Int> canonical_twist_rep(const Int& A, const Int& B) {
  Int e = twist_defect_generic(A, B);
  Int A1 = A / (e * e);
  Int B1 = abs(B) / (e * e * e);
  return {A1, B1};
}

}  // namespace iso
