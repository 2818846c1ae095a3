#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isogeny/arith.hpp"

namespace iso {

// sum c_i a^(n-i) b^i
struct HomogeneousPoly {
  std::vector<Int> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int eval(const Int& a, const Int& b) const;
  long double eval_ld(long double a, long double b) const;
  // sum |c_i| |a|^(n-i) |b|^i, used for rounding bounds
  long double abs_eval_ld(long double a, long double b) const;
};

struct CommonFactor {
  HomogeneousPoly poly;
  int mult_A;  // exact power dividing A
  int mult_B;
  int k;       // 3 when mult_A == mult_B, else 2
};

struct BadPrime {
  unsigned long p;
  int max_exp;
};

struct FamilyDescriptor {
  int m = 0;
  bool genus_zero = false;
  int degB = 0;
  HomogeneousPoly A, B;
  std::vector<CommonFactor> common;
  std::vector<Rat> cusps;  // finite ones; infinity is always a cusp
  std::vector<BadPrime> bad;
  Int max_bounded_defect = 1;  // e_m for coprime families, cap on e' otherwise
  Int expected_resultant = 0;

  int degA() const { return 2 * degB / 3; }
  bool coprime() const { return common.empty(); }
};

const std::vector<int>& genus_zero_levels();
const std::vector<int>& nonzero_genus_levels();
bool is_genus_zero(int m);

// throws DomainError for m without a cyclic m-isogeny over Q or without tabulated data
const FamilyDescriptor& get_family(int m);

std::pair<Int, Int> eval_model(int m, const Int& a, const Int& b);
std::vector<Int> eval_common_factors(int m, const Int& a, const Int& b);
bool is_groomed(int m, const Int& a, const Int& b);
bool is_cusp(const FamilyDescriptor& fam, const Int& a, const Int& b);

struct AuditCheck {
  std::string name;
  bool ok;
  std::string detail;
};

struct AuditReport {
  int m;
  std::vector<AuditCheck> checks;
  bool ok() const;
};

AuditReport verify_family(int m);

// univariate helpers, coefficients highest degree first
Int resultant(const std::vector<Int>& f, const std::vector<Int>& g);
// throws if den does not divide num exactly
std::vector<Int> poly_divexact(const std::vector<Int>& num, const std::vector<Int>& den);
bool poly_divides(const std::vector<Int>& num, const std::vector<Int>& den);
std::vector<Int> poly_mul(const std::vector<Int>& x, const std::vector<Int>& y);
std::vector<Int> poly_add(const std::vector<Int>& x, const std::vector<Int>& y);
std::vector<Int> poly_pow(const std::vector<Int>& x, int e);
std::vector<Int> poly_scale(const std::vector<Int>& x, const Int& c);

// f_m, g_m with reduced common factor stripped (f~, g~)
std::pair<std::vector<Int>, std::vector<Int>> reduced_pair(int m);

}  // namespace iso
