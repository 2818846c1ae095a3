#include "isogeny/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "isogeny/analytics.hpp"
#include "isogeny/census.hpp"
#include "isogeny/io.hpp"
#include "isogeny/localcounts.hpp"
#include "isogeny/verify.hpp"

namespace iso {

namespace {

using json = nlohmann::ordered_json;

int env_threads() {
  if (const char* s = std::getenv("CENSUS_THREADS")) {
    int t = std::atoi(s);
    if (t >= 1) return t;
  }
  return 1;
}

json estimate_json(const Estimate& e) { return {{"value", static_cast<double>(e.value)}, {"error", static_cast<double>(e.error)}}; }

json report_json(const ConstantsReport& r, const CommandSpec& cmd) {
  json j;
  j["m"] = r.m;
  j["genus_zero"] = r.genus_zero;
  if (!r.genus_zero) {
    j["c_table"] = static_cast<double>(*r.c_table);
    j["c_factor2"] = static_cast<double>(*r.c_factor2);
    j["convention"] = r.convention;
    return j;
  }
  if (r.q) {
    j["Q"] = {{"lower", static_cast<double>(r.q->lower)},
              {"upper", static_cast<double>(r.q->upper)},
              {"estimate", static_cast<double>(r.q->estimate)},
              {"exact", r.q->exact ? json(to_string(*r.q->exact)) : json(nullptr)},
              {"prime_bound", r.q->prime_bound}};
  } else {
    j["Q"] = nullptr;
    j["Q_note"] = r.q_note;
  }
  j["R_quadrature"] = static_cast<double>(r.R_quadrature);
  if (r.R_mc) {
    j["R_monte_carlo"] = {{"estimate", static_cast<double>(r.R_mc->estimate)},
                          {"std_error", static_cast<double>(r.R_mc->std_error)},
                          {"samples", r.R_mc->samples},
                          {"accepted", r.R_mc->accepted},
                          {"seed", r.R_mc->seed},
                          {"shard_size", r.R_mc->shard_size},
                          {"rectangle", {static_cast<double>(r.R_mc->rect.a_lo),
                                         static_cast<double>(r.R_mc->rect.a_hi),
                                         static_cast<double>(r.R_mc->rect.b_hi)}}};
  }
  if (r.ctw_equipped) {
    j["ctw_equipped"] = estimate_json(*r.ctw_equipped);
    j["ctw_admitting"] = estimate_json(*r.ctw_admitting);
    j["c_equipped"] = estimate_json(*r.c_equipped);
    j["c_admitting"] = estimate_json(*r.c_admitting);
  }
  if (r.ell0) {
    j["ell0"] = {{"value", static_cast<double>(*r.ell0)},
                 {"truncation_X", r.ell0_truncation.get_str()}};
  }
  j["euler_bound"] = cmd.euler_bound;
  j["convention"] = r.convention;
  return j;
}

std::ostream* open_output(const CommandSpec& cmd, std::ofstream& file, std::ostream& out) {
  if (cmd.output.empty()) return &out;
  file.open(cmd.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + cmd.output);
  return &file;
}

}  // namespace

int parse_command(int argc, const char* const* argv, CommandSpec& cmd, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"census of elliptic curves with a cyclic isogeny"};
  app.require_subcommand(1);
  app.add_flag("--error-json", cmd.error_json, "report errors as JSON");
  cmd.threads = env_threads();
  std::string bound;

  auto* en = app.add_subcommand("enumerate", "list twist classes up to a twist height");
  en->add_option("--m", cmd.m, "isogeny degree")->required();
  en->add_option("--max-twht", bound, "twist height bound")->required();
  en->add_flag("--equipped", cmd.equipped, "one row per parameter point");
  en->add_option("--format", cmd.format)->check(CLI::IsMember({"csv", "json"}));
  en->add_option("--output", cmd.output);
  en->add_option("--threads", cmd.threads)->check(CLI::PositiveNumber);

  auto* co = app.add_subcommand("count", "exact counts");
  co->add_option("--m", cmd.m)->required();
  co->add_option("--max-height", bound, "twist height bound, or naive height with --rational")
      ->required();
  co->add_flag("--rational", cmd.rational, "count over Q with both twist signs");
  co->add_flag("--equipped", cmd.equipped, "count (curve, isogeny) pairs");
  co->add_option("--threads", cmd.threads)->check(CLI::PositiveNumber);

  std::string e, e1, e2;
  auto* lc = app.add_subcommand("localcounts", "local counts cT and tcT");
  lc->add_option("--m", cmd.m)->required();
  lc->add_option("--e", e);
  lc->add_option("--e1", e1);
  lc->add_option("--e2", e2);

  std::string ell0;
  auto* cs = app.add_subcommand("constants", "leading constants");
  cs->add_option("--m", cmd.m)->required();
  cs->add_option("--euler-bound", cmd.euler_bound);
  cs->add_option("--mc-samples", cmd.mc_samples);
  cs->add_option("--seed", cmd.seed);
  cs->add_option("--ell0-X", ell0, "truncation bound for ell0");
  cs->add_option("--threads", cmd.threads)->check(CLI::PositiveNumber);

  auto* ve = app.add_subcommand("verify", "acceptance suites");
  ve->add_option("--suite", cmd.suite)->check(CLI::IsMember({"tables", "oracle", "sieve", "all"}));
  ve->add_option("--data-dir", cmd.data_dir);
  ve->add_option("--threads", cmd.threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    out << app.help();
    return -1;
  } catch (const CLI::CallForAllHelp& ex) {
    out << app.help();
    return -1;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << '\n';
    return kExitUsage;
  }
  cmd.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (!bound.empty()) cmd.bound = parse_bound(bound);
    if (!ell0.empty()) cmd.ell0_truncation = parse_bound(ell0);
    if (!e.empty()) cmd.e = parse_bound(e);
    if (!e1.empty()) cmd.e1 = parse_bound(e1);
    if (!e2.empty()) cmd.e2 = parse_bound(e2);
  } catch (const DomainError& ex) {
    err << ex.what() << '\n';
    return kExitUsage;
  }
  if (cmd.subcommand == "localcounts") {
    bool pair = cmd.e1 || cmd.e2;
    if (cmd.m == 13 ? !(pair && !cmd.e) : !(cmd.e && !pair)) {
      err << (cmd.m == 13 ? "m = 13 takes --e1 and --e2\n" : "localcounts takes --e\n");
      return kExitUsage;
    }
  }
  if (cmd.data_dir.empty()) cmd.data_dir = default_data_dir();
  return kExitOk;
}

int run(const CommandSpec& cmd, std::ostream& out, std::ostream& err) {
  try {
    EnumOptions eo;
    eo.threads = cmd.threads;
    if (cmd.subcommand == "enumerate") {
      auto recs = enumerate_twist_classes(*cmd.m, cmd.bound, eo);
      auto rows = census_rows(recs, cmd.equipped);
      std::ofstream f;
      std::ostream* os = open_output(cmd, f, out);
      if (cmd.format == "json") *os << rows_to_json(rows) << '\n';
      else write_csv(*os, rows);
      return kExitOk;
    }
    if (cmd.subcommand == "count") {
      Int n = cmd.rational
                  ? count_rational(*cmd.m, cmd.bound, TwistConvention::factor2, eo)
                  : count_twN(*cmd.m, cmd.bound,
                              cmd.equipped ? CountMode::equipped : CountMode::admitting, eo);
      out << n.get_str() << '\n';
      return kExitOk;
    }
    if (cmd.subcommand == "localcounts") {
      json j;
      j["m"] = *cmd.m;
      if (*cmd.m == 13) {
        Int e1 = cmd.e1.value_or(1), e2 = cmd.e2.value_or(1);
        j["e1"] = e1.get_str();
        j["e2"] = e2.get_str();
        j["cT"] = local_count_13(e1, e2).get_str();
        j["tcT"] = lifted_count_13(e1, e2).get_str();
      } else {
        j["e"] = cmd.e->get_str();
        j["cT"] = local_count(*cmd.m, *cmd.e).get_str();
        j["tcT"] = lifted_count(*cmd.m, *cmd.e).get_str();
      }
      out << j.dump() << '\n';
      return kExitOk;
    }
    if (cmd.subcommand == "constants") {
      ConstantsOptions co;
      co.euler_bound = cmd.euler_bound;
      co.mc_samples = cmd.mc_samples;
      co.seed = cmd.seed;
      co.ell0_truncation = cmd.ell0_truncation;
      co.threads = cmd.threads;
      auto rep = constants_report(*cmd.m, co);
      json j = report_json(rep, cmd);
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (cmd.subcommand == "verify") {
      VerifyOptions vo;
      vo.data_dir = cmd.data_dir;
      vo.threads = cmd.threads;
      bool ok = true;
      for (int id : suite_criteria(cmd.suite)) {
        auto r = run_criterion(id, vo);
        out << format_result(r) << std::endl;
        ok = ok && r.pass;
      }
      return ok ? kExitOk : kExitFailure;
    }
    err << "unknown subcommand\n";
    return kExitUsage;
  } catch (const DomainError& ex) {
    if (cmd.error_json) err << json{{"error", ex.what()}, {"kind", "domain"}}.dump() << '\n';
    else err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    if (cmd.error_json) err << json{{"error", ex.what()}, {"kind", "failure"}}.dump() << '\n';
    else err << "error: " << ex.what() << '\n';
    return kExitFailure;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandSpec cmd;
  int rc = parse_command(argc, argv, cmd, out, err);
  if (rc == -1) return kExitOk;
  if (rc != kExitOk) return rc;
  return run(cmd, out, err);
}

}  // namespace iso
