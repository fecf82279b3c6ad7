// wabl: WABL defuzzification of trapezoidal and discrete fuzzy numbers.
//
//   wabl compute input.json --c 0.8 --k 1 --t 4
//   wabl compute input.json --c 0.2 --weights levels.json --verbose
//   wabl rank    input.json --c 0.8 --k 0 --t 4
//   wabl verify  input.json --c 0.8 --k 1 --t 4 --format machine
//   wabl weights --k 2 --t 4

#include "wabl/cli/commands.hpp"
#include "wabl/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

struct Options {
  std::string input;
  std::string weights_file;
  double c = 0.5;
  long long t = 0;
  unsigned k = 0;
  bool force_summation = false;
  bool verbose = false;
  wabl::cli::OutputFormat format = wabl::cli::OutputFormat::Text;
};

void add_config_options(CLI::App &cmd, Options &opts, bool with_input, bool with_c, bool with_weights) {
  if (with_input) {
    cmd.add_option("input", opts.input, "Input document (JSON record list)")->required()->check(CLI::ExistingFile);
  }
  if (with_c) {
    cmd.add_option("--c", opts.c, "Optimism coefficient in [0, 1]")->required();
  }
  cmd.add_option("--k", opts.k, "Pattern exponent k (q_i = i^k)");
  cmd.add_option("--t", opts.t, "Number of equal level sub-intervals");
  if (with_weights) {
    cmd.add_option("--weights", opts.weights_file, "Explicit level weights: [[alpha, mass], ...]")
        ->check(CLI::ExistingFile);
    cmd.add_flag("--force-summation", opts.force_summation, "Sum level by level instead of using closed forms");
    cmd.add_flag("--verbose", opts.verbose, "Print the per-level breakdown");
  }
  const std::map<std::string, wabl::cli::OutputFormat> formats{{"text", wabl::cli::OutputFormat::Text},
                                                                 {"machine", wabl::cli::OutputFormat::Machine}};
  cmd.add_option("--format", opts.format, "Output format: text or machine")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

wabl::cli::RunConfig make_config(const CLI::App &cmd, const Options &opts) {
  wabl::cli::RunConfig cfg;
  cfg.c = opts.c;
  if (cmd.count("--k") > 0) {
    cfg.k = opts.k;
  }
  if (cmd.count("--t") > 0) {
    cfg.t = opts.t;
  }
  if (!opts.weights_file.empty()) {
    cfg.weights = wabl::cli::parse_weights(wabl::cli::read_file(opts.weights_file));
  }
  cfg.force_summation = opts.force_summation;
  cfg.verbose = opts.verbose;
  cfg.format = opts.format;
  return cfg;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"WABL (weighted average based on levels) defuzzification"};
  app.require_subcommand(1);

  Options opts;
  auto *compute = app.add_subcommand("compute", "WABL value of every record");
  add_config_options(*compute, opts, true, true, true);
  auto *rank = app.add_subcommand("rank", "Order records by WABL value");
  add_config_options(*rank, opts, true, true, true);
  auto *verify = app.add_subcommand("verify", "Cross-check closed forms against summation and quadrature");
  add_config_options(*verify, opts, true, true, false);
  auto *weights = app.add_subcommand("weights", "Print the pattern weight table");
  add_config_options(*weights, opts, false, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wabl::cli::kExitInputError;
  }

  try {
    if (weights->parsed()) {
      return wabl::cli::cmd_weights(make_config(*weights, opts), std::cout, std::cerr);
    }
    CLI::App *cmd = compute->parsed() ? compute : rank->parsed() ? rank : verify;
    const wabl::cli::RunConfig cfg = make_config(*cmd, opts);
    const wabl::cli::InputDocument doc = wabl::cli::parse_document(wabl::cli::read_file(opts.input));
    if (cmd == compute) {
      return wabl::cli::cmd_compute(doc, cfg, std::cout, std::cerr);
    }
    if (cmd == rank) {
      return wabl::cli::cmd_rank(doc, cfg, std::cout, std::cerr);
    }
    return wabl::cli::cmd_verify(doc, cfg, std::cout, std::cerr);
  } catch (const wabl::InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return wabl::cli::kExitInputError;
  } catch (const wabl::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return wabl::cli::kExitComputationError;
  }
}
