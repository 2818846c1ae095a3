#pragma once

#include <string>
#include <vector>

#include "isogeny/arith.hpp"

namespace iso {

struct EnumerationBox {
  int m = 0;
  Int max_twht;
  Int a_lo, a_hi, b_hi;
  long double shape_constant = 0;  // radius per X^(1/deg) before inflation
  std::string shape_source;
  int radial_degree = 0;
  Int defect_cap;  // e <= defect_cap * (channel part)
};

struct ParamPoint {
  int m = 0;
  Int a, b;
  Int A_model, B_model;
  Int defect;
  Int twist_height;
  int multiplicity = 1;
};

struct ClassPoint {
  Int a, b;
  Int A_model, B_model;
  Int defect;
  int multiplicity = 1;
};

struct TwistClassRecord {
  int m = 0;
  Int A_min, B_min;
  Int twist_height;
  std::vector<ClassPoint> points;  // sorted by (b, a)
  Rat j_invariant;

  int multiplicity() const;
};

enum class CountMode { equipped, admitting };

struct EnumOptions {
  int threads = 1;
  bool audit = true;  // scan the 5% shell around the box
};

EnumerationBox enumeration_box(int m, const Int& X);

std::vector<ParamPoint> enumerate_equipped(int m, const Int& X, const EnumOptions& opt = {});
std::vector<TwistClassRecord> enumerate_twist_classes(int m, const Int& X,
                                                      const EnumOptions& opt = {});
Int count_twN(int m, const Int& X, CountMode mode, const EnumOptions& opt = {});

// #{groomed (a,b): H(A_m, B_m) <= X, e | twist defect}
Int count_M(int m, const Int& X, const Int& e);
// sum_{n <= cap} sum_{e | n} mu(n/e) M(e^6 X; n)
Int sieve_count(int m, const Int& X);
// n-range used by sieve_count
Int sieve_cap(int m, const Int& X);

std::vector<TwistClassRecord> nonzero_genus_list(int m);

// extents of {H(A_m(a,b), B_m(a,b)) <= 1, b >= 0}, no margin
struct UnitEnvelope {
  long double a_lo, a_hi, b_hi, r_max;
};
UnitEnvelope unit_height_envelope(int m);

// (A, B, twist height, j) as stored for the nonzero-genus levels
struct NonzeroGenusCurve {
  int m;
  Int A, B;
  Int twist_height;
  Rat j;
};
const std::vector<NonzeroGenusCurve>& nonzero_genus_curves();

}  // namespace iso
