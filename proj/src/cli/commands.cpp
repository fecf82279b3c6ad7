#include "wabl/cli/commands.hpp"

#include "wabl/errors.hpp"
#include "wabl/wabl_engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace wabl::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

// Known erratum: the worked linear-pattern example for this trapezoid is
// commonly printed as 19.9; closed form and summation both give 16.2.
constexpr double kErratumPrinted = 19.9;

bool is_erratum_case(const TrapezoidalFN &fn, const RunConfig &cfg) {
  return fn == TrapezoidalFN(10, 14, 15, 23) && cfg.t == 4 && cfg.k == 1u && cfg.c == 0.8;
}

double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Fixed-width left-aligned cell.
std::string cell(const std::string &s, std::size_t width = 14) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

ordered_json record_json(const Record &rec) {
  ordered_json j;
  j["id"] = rec.id;
  j["type"] = std::string(to_string(rec.type));
  if (const auto *trap = std::get_if<TrapezoidalFN>(&rec.fn)) {
    if (rec.type == RecordType::Triangle) {
      j["params"] = {trap->l(), trap->m_l(), trap->r()};
    } else {
      j["params"] = {trap->l(), trap->m_l(), trap->m_r(), trap->r()};
    }
  } else {
    ordered_json pts = ordered_json::array();
    for (const auto &p : std::get<DiscreteFN>(rec.fn).points()) {
      pts.push_back({p.x, p.mu});
    }
    j["points"] = std::move(pts);
  }
  return j;
}

ordered_json config_json(const RunConfig &cfg) {
  ordered_json j;
  j["c"] = cfg.c;
  if (cfg.has_pattern()) {
    j["k"] = *cfg.k;
    j["t"] = *cfg.t;
  }
  if (cfg.weights) {
    ordered_json w = ordered_json::array();
    for (std::size_t i = 0; i < cfg.weights->size(); ++i) {
      w.push_back({cfg.weights->levels()[i], cfg.weights->masses()[i]});
    }
    j["weights"] = std::move(w);
  }
  j["force_summation"] = cfg.force_summation;
  return j;
}

ordered_json failure_json(const RecordFailure &f) {
  ordered_json j;
  j["index"] = f.index;
  j["id"] = f.id;
  j["kind"] = f.kind == FailureKind::Input ? "input" : "computation";
  j["message"] = f.message;
  return j;
}

std::string record_label(const Record &rec) { return "record " + std::to_string(rec.index + 1) + " ('" + rec.id + "')"; }

// Exit status for a set of failures: input problems dominate.
int exit_status(const std::vector<RecordFailure> &failures) {
  int status = kExitOk;
  for (const auto &f : failures) {
    if (f.kind == FailureKind::Input) {
      return kExitInputError;
    }
    status = kExitComputationError;
  }
  return status;
}

void report_failures(const std::vector<RecordFailure> &failures, std::ostream &err) {
  for (const auto &f : failures) {
    err << "error: " << f.message << '\n';
  }
}

RankingScheme ranking_scheme(const RunConfig &cfg) {
  RankingScheme scheme;
  if (cfg.has_pattern()) {
    scheme.pattern = EqualSpacedScheme(*cfg.t, PatternExponent{*cfg.k});
  }
  scheme.explicit_weights = cfg.weights;
  scheme.dispatch = cfg.force_summation ? Dispatch::ForceSummation : Dispatch::PreferClosedForm;
  return scheme;
}

// Input-level mismatch between a record's kind and the configured weights.
std::optional<std::string> kind_mismatch(const Record &rec, const RunConfig &cfg) {
  if (std::holds_alternative<TrapezoidalFN>(rec.fn) && !cfg.has_pattern()) {
    return record_label(rec) + ": trapezoidal records need --k and --t";
  }
  if (std::holds_alternative<DiscreteFN>(rec.fn) && !cfg.weights) {
    return record_label(rec) + ": discrete records need --weights";
  }
  return std::nullopt;
}

struct Evaluated {
  const Record *record = nullptr;
  WablResult result;
};

// Evaluates every parsed record; failures are appended, successes returned
// in input order.
std::vector<Evaluated> evaluate_all(const InputDocument &doc, const RunConfig &cfg,
                                    std::vector<RecordFailure> &failures) {
  const RankingScheme scheme = ranking_scheme(cfg);
  const OptimismConfig optimism(cfg.c);
  std::vector<Evaluated> out;
  for (const auto &rec : doc.records) {
    if (auto mismatch = kind_mismatch(rec, cfg)) {
      failures.push_back({rec.index, rec.id, FailureKind::Input, *mismatch});
      continue;
    }
    try {
      out.push_back({&rec, evaluate(rec.fn, scheme, optimism)});
    } catch (const Error &e) {
      failures.push_back({rec.index, rec.id, FailureKind::Computation, record_label(rec) + ": " + e.what()});
    }
  }
  std::sort(failures.begin(), failures.end(),
            [](const RecordFailure &a, const RecordFailure &b) { return a.index < b.index; });
  return out;
}

// Per-level breakdown for display. Closed-form results carry none, so the
// summation is rerun to show the levels behind the value.
std::vector<LevelTerm> display_breakdown(const Evaluated &ev, const RunConfig &cfg) {
  if (ev.result.breakdown) {
    return *ev.result.breakdown;
  }
  const auto &trap = std::get<TrapezoidalFN>(ev.record->fn);
  return *wabl_trapezoid_pattern(trap, EqualSpacedScheme(*cfg.t, PatternExponent{*cfg.k}), OptimismConfig(cfg.c),
                                 Dispatch::ForceSummation)
              .breakdown;
}

ordered_json breakdown_json(const std::vector<LevelTerm> &terms) {
  ordered_json arr = ordered_json::array();
  for (const auto &term : terms) {
    ordered_json j;
    j["alpha"] = term.alpha;
    j["mass"] = term.mass;
    j["lo"] = term.cut.lo;
    j["hi"] = term.cut.hi;
    j["mean"] = term.mean;
    j["native_level"] = term.native_level;
    arr.push_back(std::move(j));
  }
  return arr;
}

void print_breakdown(const std::vector<LevelTerm> &terms, const Evaluated &ev, std::ostream &out) {
  out << "    " << cell("alpha") << cell("p") << cell("L") << cell("R") << "M\n";
  bool foreign = false;
  for (const auto &term : terms) {
    std::string alpha = format_short(term.alpha);
    if (!term.native_level) {
      alpha += "*";
      foreign = true;
    }
    out << "    " << cell(alpha) << cell(format_short(term.mass)) << cell(format_short(term.cut.lo))
        << cell(format_short(term.cut.hi)) << format_short(term.mean) << '\n';
  }
  if (foreign) {
    out << "    * level is not a membership value of this number\n";
  }
  if (const auto *d = std::get_if<DiscreteFN>(&ev.record->fn); d && d->relaxed()) {
    out << "    note: number is not normal (max membership " << format_short(d->max_membership()) << ")\n";
  }
}

} // namespace

std::string format_short(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

void RunConfig::validate() const {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw InputError("--c must lie in [0, 1], got " + format_short(c));
  }
  if (k.has_value() != t.has_value()) {
    throw InputError("--k and --t must be given together");
  }
  if (has_pattern() == weights.has_value()) {
    throw InputError("give exactly one weight source: --k with --t, or --weights");
  }
  if (t && *t < 1) {
    throw InputError("--t must be >= 1, got " + std::to_string(*t));
  }
}

void RunConfig::validate_pattern_only() const {
  validate();
  if (!has_pattern()) {
    throw InputError("this command needs a pattern scheme (--k with --t), not --weights");
  }
}

int cmd_compute(const InputDocument &doc, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    cfg.validate();
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  std::vector<RecordFailure> failures = doc.failures;
  const auto results = evaluate_all(doc, cfg, failures);

  if (cfg.format == OutputFormat::Machine) {
    ordered_json report;
    report["command"] = "compute";
    report["config"] = config_json(cfg);
    ordered_json records = ordered_json::array();
    for (const auto &ev : results) {
      ordered_json j = record_json(*ev.record);
      j["wabl"] = ev.result.value;
      j["path"] = std::string(to_string(ev.result.path));
      if (cfg.verbose) {
        j["breakdown"] = breakdown_json(display_breakdown(ev, cfg));
      }
      records.push_back(std::move(j));
    }
    report["records"] = std::move(records);
    ordered_json fails = ordered_json::array();
    for (const auto &f : failures) {
      fails.push_back(failure_json(f));
    }
    report["failures"] = std::move(fails);
    out << report.dump(2) << '\n';
  } else {
    out << cell("id") << cell("wabl", 18) << "path\n";
    for (const auto &ev : results) {
      out << cell(ev.record->id) << cell(format_short(ev.result.value), 18) << to_string(ev.result.path) << '\n';
      if (cfg.verbose) {
        print_breakdown(display_breakdown(ev, cfg), ev, out);
      }
    }
  }
  report_failures(failures, err);
  return exit_status(failures);
}

int cmd_rank(const InputDocument &doc, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    cfg.validate();
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  std::vector<RecordFailure> failures = doc.failures;
  evaluate_all(doc, cfg, failures);
  if (doc.record_count == 0) {
    err << "error: nothing to rank\n";
    return kExitInputError;
  }
  if (!failures.empty()) {
    // A ranking over a subset of the alternatives would be misleading.
    report_failures(failures, err);
    return exit_status(failures);
  }

  std::vector<Alternative> alts;
  alts.reserve(doc.records.size());
  for (const auto &rec : doc.records) {
    alts.push_back({rec.id, rec.fn});
  }
  Ranking ranking;
  try {
    ranking = rank_alternatives(alts, ranking_scheme(cfg), OptimismConfig(cfg.c));
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitComputationError;
  }

  if (cfg.format == OutputFormat::Machine) {
    ordered_json report;
    report["command"] = "rank";
    report["config"] = config_json(cfg);
    ordered_json records = ordered_json::array();
    for (const auto &entry : ranking) {
      ordered_json j = record_json(doc.records[entry.input_index]);
      j["wabl"] = entry.value;
      j["rank"] = entry.rank;
      records.push_back(std::move(j));
    }
    report["records"] = std::move(records);
    report["failures"] = ordered_json::array();
    out << report.dump(2) << '\n';
  } else {
    out << cell("rank", 6) << cell("id") << "wabl\n";
    for (const auto &entry : ranking) {
      out << cell(std::to_string(entry.rank), 6) << cell(entry.id) << format_short(entry.value) << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const InputDocument &doc, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    cfg.validate_pattern_only();
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const OptimismConfig optimism(cfg.c);
  const EqualSpacedScheme scheme(*cfg.t, PatternExponent{*cfg.k});
  std::vector<RecordFailure> failures = doc.failures;
  bool flagged = false;

  ordered_json records = ordered_json::array();
  std::ostringstream text;
  for (const auto &rec : doc.records) {
    const auto *fn = std::get_if<TrapezoidalFN>(&rec.fn);
    if (fn == nullptr) {
      failures.push_back({rec.index, rec.id, FailureKind::Input, record_label(rec) + ": verify accepts trapezoidal records only"});
      continue;
    }
    try {
      const double summation = wabl_trapezoid_pattern(*fn, scheme, optimism, Dispatch::ForceSummation).value;
      const WablResult closed = wabl_trapezoid_pattern(*fn, scheme, optimism, Dispatch::PreferClosedForm);
      const bool has_closed = closed.path != WablPath::GeneralSummation;
      const double closed_dev = has_closed ? relative_deviation(closed.value, summation) : 0.0;

      const double sum_direct = sum_means(*fn, *cfg.t, optimism);
      const double sum_closed = sum_means_identity(*fn, *cfg.t, optimism);
      const double wsum_direct = weighted_sum_means(*fn, *cfg.t, optimism);
      const double wsum_closed = weighted_sum_means_identity(*fn, *cfg.t, optimism);
      const double sum_dev = relative_deviation(sum_direct, sum_closed);
      const double wsum_dev = relative_deviation(wsum_direct, wsum_closed);

      const double cont_closed = wabl_continuous_closed(*fn, scheme.k(), optimism);
      const double cont_quad = wabl_continuous_quadrature(*fn, scheme.k(), optimism);
      const double cont_dev = relative_deviation(cont_closed, cont_quad);

      const bool bad = closed_dev > kVerifyTolerance || sum_dev > kVerifyTolerance || wsum_dev > kVerifyTolerance ||
                       cont_dev > kVerifyTolerance;
      flagged = flagged || bad;
      const bool erratum = is_erratum_case(*fn, cfg);

      ordered_json j = record_json(rec);
      j["summation"] = summation;
      if (has_closed) {
        j["closed_form"] = closed.value;
        j["closed_path"] = std::string(to_string(closed.path));
        j["closed_abs_deviation"] = std::abs(closed.value - summation);
        j["closed_rel_deviation"] = closed_dev;
      } else {
        j["closed_form"] = nullptr;
      }
      j["sum_means"] = {{"direct", sum_direct}, {"identity", sum_closed}, {"rel_deviation", sum_dev}};
      j["weighted_sum_means"] = {{"direct", wsum_direct}, {"identity", wsum_closed}, {"rel_deviation", wsum_dev}};
      j["continuous_closed"] = cont_closed;
      j["continuous_quadrature"] = cont_quad;
      j["continuous_abs_deviation"] = std::abs(cont_closed - cont_quad);
      j["continuous_rel_deviation"] = cont_dev;
      j["flagged"] = bad;
      if (erratum) {
        j["erratum"] = {{"printed", kErratumPrinted}, {"accepted", summation}};
      }
      records.push_back(std::move(j));

      auto status = [](double dev) { return dev > kVerifyTolerance ? "  [DEVIATION]" : "  [ok]"; };
      text << rec.id << ": (" << format_short(fn->l()) << ", " << format_short(fn->m_l()) << ", "
           << format_short(fn->m_r()) << ", " << format_short(fn->r()) << "), t = " << *cfg.t << ", k = " << *cfg.k
           << ", c = " << format_short(cfg.c) << '\n';
      if (has_closed) {
        text << "  " << cell("closed form", 26) << cell(format_short(closed.value), 18) << to_string(closed.path)
             << '\n';
      } else {
        text << "  " << cell("closed form", 26) << "n/a (k > 2)\n";
      }
      text << "  " << cell("summation", 26) << format_short(summation) << '\n';
      if (has_closed) {
        text << "  " << cell("deviation abs / rel", 26) << format_short(std::abs(closed.value - summation)) << " / "
             << format_short(closed_dev) << status(closed_dev) << '\n';
      }
      text << "  " << cell("sum M(a_i)", 26) << format_short(sum_direct) << " vs " << format_short(sum_closed)
           << status(sum_dev) << '\n';
      text << "  " << cell("sum i M(a_i)", 26) << format_short(wsum_direct) << " vs " << format_short(wsum_closed)
           << status(wsum_dev) << '\n';
      text << "  " << cell("continuous closed form", 26) << format_short(cont_closed) << '\n';
      text << "  " << cell("continuous quadrature", 26) << format_short(cont_quad) << '\n';
      text << "  " << cell("deviation abs / rel", 26) << format_short(std::abs(cont_closed - cont_quad)) << " / "
           << format_short(cont_dev) << status(cont_dev) << '\n';
      if (erratum) {
        text << "  erratum: the published worked value " << format_short(kErratumPrinted)
             << " for this case is inconsistent with the linear-pattern closed form;\n"
             << "           closed form and direct summation both give " << format_short(summation) << '\n';
      }
    } catch (const Error &e) {
      failures.push_back({rec.index, rec.id, FailureKind::Computation, record_label(rec) + ": " + e.what()});
    }
  }
  std::sort(failures.begin(), failures.end(),
            [](const RecordFailure &a, const RecordFailure &b) { return a.index < b.index; });

  if (cfg.format == OutputFormat::Machine) {
    ordered_json report;
    report["command"] = "verify";
    report["config"] = config_json(cfg);
    report["tolerance"] = kVerifyTolerance;
    report["records"] = std::move(records);
    ordered_json fails = ordered_json::array();
    for (const auto &f : failures) {
      fails.push_back(failure_json(f));
    }
    report["failures"] = std::move(fails);
    report["flagged"] = flagged;
    out << report.dump(2) << '\n';
  } else {
    out << text.str();
    out << (flagged ? "verification FAILED: deviations above " : "all paths agree within ")
        << format_short(kVerifyTolerance) << " relative\n";
  }
  report_failures(failures, err);
  const int status = exit_status(failures);
  if (status != kExitOk) {
    return status;
  }
  return flagged ? kExitComputationError : kExitOk;
}

int cmd_weights(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    cfg.validate_pattern_only();
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const EqualSpacedScheme scheme(*cfg.t, PatternExponent{*cfg.k});
  const PatternTable table = pattern_table(scheme);
  const DiscreteWeights weights = pattern_weights(scheme);
  const auto masses = weights.masses();

  if (cfg.format == OutputFormat::Machine) {
    ordered_json report;
    report["command"] = "weights";
    report["t"] = scheme.t();
    report["k"] = scheme.k().value;
    report["Q"] = table.total;
    report["exact"] = table.exact;
    ordered_json levels = ordered_json::array();
    for (std::size_t i = 0; i < masses.size(); ++i) {
      levels.push_back({{"i", i}, {"alpha", weights.levels()[i]}, {"q", table.q[i]}, {"p", masses[i]}});
    }
    report["levels"] = std::move(levels);
    out << report.dump(2) << '\n';
  } else {
    out << "t = " << scheme.t() << ", k = " << scheme.k().value << ", Q = " << format_short(table.total) << '\n';
    out << cell("i", 8) << cell("alpha") << cell("q") << "p\n";
    for (std::size_t i = 0; i < masses.size(); ++i) {
      out << cell(std::to_string(i), 8) << cell(format_short(weights.levels()[i])) << cell(format_short(table.q[i]))
          << format_short(masses[i]) << '\n';
    }
  }
  return kExitOk;
}

} // namespace wabl::cli
