#pragma once

#include <string>
#include <vector>

namespace iso::data {

struct RawCommonFactor {
  std::vector<std::string> h;  // monic quadratic in t
  int mult_f;
  int mult_g;
};

struct RawFamily {
  int m;
  int degB;
  std::vector<std::string> f;
  std::vector<std::string> g;
  std::vector<std::pair<long, long>> cusps;  // finite cusps as num/den
  std::vector<RawCommonFactor> common;
  std::vector<std::pair<unsigned long, int>> bad;  // prime, largest exponent seen in e'
  std::string resultant;
};

const std::vector<RawFamily>& raw_families();

}  // namespace iso::data
