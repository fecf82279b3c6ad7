#pragma once

#include "wabl/cli/document.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace wabl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitComputationError = 2;

// Relative deviation above which `verify` flags a path disagreement.
inline constexpr double kVerifyTolerance = 1e-9;

enum class OutputFormat { Text, Machine };

struct RunConfig {
  double c = 0.5;
  std::optional<long long> t;
  std::optional<unsigned> k;
  std::optional<DiscreteWeights> weights;
  bool force_summation = false;
  bool verbose = false;
  OutputFormat format = OutputFormat::Text;

  bool has_pattern() const noexcept { return t.has_value() && k.has_value(); }

  /// Throws InputError unless c is in [0, 1] and exactly one weight source
  /// (k with t, or explicit weights) is present.
  void validate() const;
  /// Same, but only a pattern source is acceptable.
  void validate_pattern_only() const;
};

/// 10 significant digits.
std::string format_short(double value);

// Each command writes its report to `out`, diagnostics to `err`, and returns
// the process exit status.
int cmd_compute(const InputDocument &doc, const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_rank(const InputDocument &doc, const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_verify(const InputDocument &doc, const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_weights(const RunConfig &cfg, std::ostream &out, std::ostream &err);

} // namespace wabl::cli
