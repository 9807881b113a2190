// Command-line front end: single-instance rate reports, parameter sweeps,
// schedule dumps, end-to-end verification, and rate envelopes.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macc/analysis.hpp"
#include "macc/core_model.hpp"
#include "macc/decoder.hpp"
#include "macc/delivery.hpp"
#include "macc/errors.hpp"
#include "macc/harness.hpp"
#include "macc/placement.hpp"
#include "macc/report.hpp"

namespace {

struct Options {
  int users = 0;
  int files = -1;  // defaults to users
  int cache_subfiles = 1;
  int access = 2;
  std::string demands;
  bool worst = false;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
  int trials = 0;
  int scale = 1;
  bool placement = false;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(opt.out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("MACC_OUT_DIR")) path = std::filesystem::path(dir) / path;
  }
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw macc::InvalidParamsError("cannot open output file: " + path.string());
  stream << text;
  if (!stream) throw macc::InvalidParamsError("failed writing output file: " + path.string());
}

macc::SystemParams make_params(const Options& opt) {
  const int files = opt.files < 0 ? opt.users : opt.files;
  return macc::SystemParams::make(files, opt.users, opt.cache_subfiles, opt.access);
}

macc::DemandVector make_demands(const Options& opt, const macc::SystemParams& params) {
  if (!opt.demands.empty()) {
    std::vector<int> values;
    std::string token;
    std::istringstream stream(opt.demands);
    while (std::getline(stream, token, ',')) {
      try {
        values.push_back(std::stoi(token));
      } catch (const std::exception&) {
        throw macc::InvalidDemandsError("demand list entries must be integers: " + token);
      }
    }
    return macc::DemandVector::make(std::move(values), params);
  }
  return macc::worst_case_demands(params, opt.seed);
}

int run_rates(const Options& opt) {
  const auto params = make_params(opt);
  std::string text;
  if (opt.format == "json")
    text = macc::rates_json(params);
  else if (opt.format == "csv")
    text = macc::rates_csv(params);
  else
    text = macc::rates_text(params);
  write_output(opt, text);
  return 0;
}

int run_sweep(const Options& opt, bool k_given, bool z_given) {
  if (opt.users < 2) throw macc::InvalidParamsError("sweep requires --users");
  const int K = opt.users;
  const std::pair<int, int> kr =
      k_given ? std::pair{opt.cache_subfiles, opt.cache_subfiles} : std::pair{1, K};
  const std::pair<int, int> zr = z_given ? std::pair{opt.access, opt.access} : std::pair{2, K};
  write_output(opt, macc::sweep_csv(macc::sweep(K, kr, zr)));
  return 0;
}

int run_schedule(const Options& opt) {
  const auto params = make_params(opt);
  const auto demands = make_demands(opt, params);
  const auto schedule = macc::build_schedule(params, demands);
  std::string text;
  if (opt.placement) text += macc::placement_text(macc::place(params));
  if (opt.format == "json") {
    text += macc::schedule_json(schedule);
  } else if (schedule.symbol_count() == 0) {
    text += "no transmissions required\n";
  } else {
    text += macc::schedule_to_text(schedule);
  }
  write_output(opt, text);
  return 0;
}

int run_verify(const Options& opt) {
  const auto params = make_params(opt);
  const auto demands = make_demands(opt, params);
  const auto report = macc::end_to_end(params, demands, opt.seed, opt.scale);

  bool ok = report.all_success() && report.rate_match();
  std::optional<macc::TrialAggregate> agg;
  if (opt.trials > 0) {
    agg = macc::randomized_trials(params, opt.trials, opt.seed);
    if (agg->failures > 0) ok = false;
  }

  std::string text;
  if (opt.format == "json") {
    text = macc::verify_json(params, demands, report, agg ? &*agg : nullptr);
  } else {
    text += macc::verify_table_text(params, demands);
    int decoded = 0;
    for (bool success : report.per_user_success) decoded += success ? 1 : 0;
    text += "decoded " + std::to_string(decoded) + "/" + std::to_string(params.num_users) +
            " users bit-exact\n";
    text += "symbols_sent  = " + std::to_string(report.symbols_sent) + "\n";
    text += "bytes_sent    = " + std::to_string(report.bytes_sent) + "\n";
    text += "measured_rate = " + macc::rational_with_decimal(report.measured_rate) + "\n";
    text += "formula_rate  = " + macc::rational_with_decimal(report.formula_rate) + "\n";
    if (agg)
      text += "trials = " + std::to_string(agg->trials) + ", failures = " +
              std::to_string(agg->failures) + ", distinct demand vectors = " +
              std::to_string(agg->distinct_demand_vectors_tested) + "\n";
  }
  write_output(opt, text);
  return ok ? 0 : 1;
}

int run_envelope(const Options& opt) {
  if (opt.users < 2) throw macc::InvalidParamsError("envelope requires --users");
  write_output(opt, macc::envelope_csv(opt.users, opt.access));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-access coded caching: placement, delivery, decoding, rate analytics"};
  app.require_subcommand(1);

  Options opt;
  auto add_instance_flags = [&](CLI::App* cmd, bool need_k, bool need_z) {
    cmd->add_option("-K,--users", opt.users, "number of users (and caches)")->required();
    cmd->add_option("-N,--files", opt.files, "number of files (default: users)");
    auto* k = cmd->add_option("-k,--cache-subfiles", opt.cache_subfiles,
                              "sub-files stored per cache");
    auto* z = cmd->add_option("-z,--access", opt.access, "caches each user reads");
    if (need_k) k->required();
    if (need_z) z->required();
    return std::pair{k, z};
  };
  auto add_demand_flags = [&](CLI::App* cmd) {
    cmd->add_option("--demands", opt.demands, "comma-separated demand list, one file per user");
    cmd->add_flag("--worst", opt.worst, "seeded random distinct demands (default)");
    cmd->add_option("--seed", opt.seed, "seed for demands and file bytes");
  };
  auto add_output_flags = [&](CLI::App* cmd, const std::string& formats) {
    cmd->add_option("--format", opt.format, "output format: " + formats);
    cmd->add_option("--out", opt.out, "write output to this path (MACC_OUT_DIR prefixes relative paths)");
  };

  auto* rates = app.add_subcommand("rates", "closed-form rates for one instance");
  add_instance_flags(rates, true, true);
  add_output_flags(rates, "text|json|csv");

  auto* sweep = app.add_subcommand("sweep", "CSV table over (k, z) ranges");
  auto [sweep_k, sweep_z] = add_instance_flags(sweep, false, false);
  add_output_flags(sweep, "csv");

  auto* schedule = app.add_subcommand("schedule", "dump the transmission schedule");
  add_instance_flags(schedule, true, true);
  add_demand_flags(schedule);
  schedule->add_flag("--placement", opt.placement, "also dump per-cache placement");
  add_output_flags(schedule, "text|json");

  auto* verify = app.add_subcommand("verify", "end-to-end decode check with per-user sources");
  add_instance_flags(verify, true, true);
  add_demand_flags(verify);
  verify->add_option("--trials", opt.trials, "extra randomized distinct-demand trials");
  verify->add_option("--scale", opt.scale, "file size multiplier over the minimum granularity");
  add_output_flags(verify, "text|json");

  auto* envelope = app.add_subcommand("envelope", "rate points and hull flags for one z");
  add_instance_flags(envelope, false, true);
  add_output_flags(envelope, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rates->parsed()) return run_rates(opt);
    if (sweep->parsed()) return run_sweep(opt, sweep_k->count() > 0, sweep_z->count() > 0);
    if (schedule->parsed()) return run_schedule(opt);
    if (verify->parsed()) return run_verify(opt);
    if (envelope->parsed()) return run_envelope(opt);
  } catch (const macc::DecodeIncompleteError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
