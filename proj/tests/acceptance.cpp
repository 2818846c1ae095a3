// one line per acceptance criterion; exit status 1 if any fails
#include <cstdlib>
#include <iostream>
#include <string>

#include "isogeny/verify.hpp"

int main(int argc, char** argv) {
  iso::VerifyOptions opt;
  opt.data_dir = iso::default_data_dir();
  std::string suite = "all";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string k = argv[i];
    if (k == "--suite") suite = argv[i + 1];
    else if (k == "--data-dir") opt.data_dir = argv[i + 1];
    else if (k == "--threads") opt.threads = std::atoi(argv[i + 1]);
  }
  int failed = 0;
  for (int id : iso::suite_criteria(suite)) {
    auto r = iso::run_criterion(id, opt);
    std::cout << iso::format_result(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
