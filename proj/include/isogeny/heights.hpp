#pragma once

#include <utility>
#include <vector>

#include "isogeny/arith.hpp"

namespace iso {

struct HeightProfile {
  Int H;
  Int min_defect;
  Int twist_defect;
  Int naive_height;
  Int twist_height;
  Int discriminant;  // -16(4A^3 + 27B^2)
  Rat j_invariant;
};

// max(4|A|^3, 27 B^2); throws on singular pairs
Int naive_H(const Int& A, const Int& B);

Int minimality_defect(const Int& A, const Int& B);
Int twist_defect_generic(const Int& A, const Int& B);
// candidate primes from common factors and bad primes of the family
Int twist_defect_supported(int m, const Int& a, const Int& b);

// largest e with e^2 | A, e^3 | B using only the given primes
Int twist_defect_over(const Int& A, const Int& B, const std::vector<Int>& primes);

HeightProfile heights(const Int& A, const Int& B);
Rat j_invariant(const Int& A, const Int& B);
std::pair<Int, Int> canonical_twist_rep(const Int& A, const Int& B);

}  // namespace iso
