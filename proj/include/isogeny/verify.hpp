#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iso {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::string data_dir;  // holds firstfew.txt, nonzero_genus.txt, constants.txt
  int threads = 1;
  std::uint64_t mc_samples = 10'000'000;
  std::uint64_t seed = 20240601;
};

std::string default_data_dir();

// suites: tables, oracle, sieve, all
std::vector<int> suite_criteria(const std::string& suite);
CriterionResult run_criterion(int id, const VerifyOptions& opt);
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opt);

std::string format_result(const CriterionResult& r);

}  // namespace iso
