#include "wabl/ranking.hpp"

#include "wabl/errors.hpp"

#include <algorithm>
#include <set>

namespace wabl {

namespace {

struct Evaluator {
  const RankingScheme &scheme;
  const OptimismConfig &cfg;

  WablResult operator()(const TrapezoidalFN &fn) const {
    if (!scheme.pattern) {
      throw DomainError("trapezoidal alternatives need a pattern scheme (k and t)");
    }
    return wabl_trapezoid_pattern(fn, *scheme.pattern, cfg, scheme.dispatch);
  }

  WablResult operator()(const DiscreteFN &fn) const {
    if (!scheme.explicit_weights) {
      throw DomainError("discrete alternatives need explicit level weights");
    }
    return wabl_discrete(fn, *scheme.explicit_weights, cfg);
  }
};

[[noreturn]] void rethrow_with_id(const std::string &id) {
  const std::string prefix = "alternative '" + id + "': ";
  try {
    throw;
  } catch (const EmptyCutError &e) {
    throw EmptyCutError(e.alpha(), prefix + e.what());
  } catch (const NormalizationError &e) {
    throw NormalizationError(e.sum(), prefix + e.what());
  } catch (const DomainError &e) {
    throw DomainError(prefix + e.what());
  } catch (const Error &e) {
    throw Error(prefix + e.what());
  }
}

} // namespace

WablResult evaluate(const FuzzyNumber &fn, const RankingScheme &scheme, const OptimismConfig &cfg) {
  return std::visit(Evaluator{scheme, cfg}, fn);
}

Ranking rank_alternatives(const std::vector<Alternative> &alts, const RankingScheme &scheme,
                          const OptimismConfig &cfg) {
  if (alts.empty()) {
    throw DomainError("nothing to rank");
  }
  std::set<std::string> seen;
  for (const auto &alt : alts) {
    if (alt.id.empty()) {
      throw DomainError("alternative ids must be nonempty");
    }
    if (!seen.insert(alt.id).second) {
      throw DomainError("duplicate alternative id '" + alt.id + "'");
    }
  }

  Ranking ranking;
  ranking.reserve(alts.size());
  for (std::size_t i = 0; i < alts.size(); ++i) {
    try {
      ranking.push_back({alts[i].id, evaluate(alts[i].fn, scheme, cfg).value, 0, i});
    } catch (const Error &) {
      rethrow_with_id(alts[i].id);
    }
  }

  std::sort(ranking.begin(), ranking.end(), [](const RankEntry &a, const RankEntry &b) {
    if (a.value != b.value) {
      return a.value > b.value;
    }
    return a.input_index < b.input_index;
  });

  // Group from the top: a tie group is every entry within the window of its
  // leader. Inside a group the listing follows input order.
  std::size_t begin = 0;
  while (begin < ranking.size()) {
    const double leader = ranking[begin].value;
    std::size_t end = begin + 1;
    while (end < ranking.size() && leader - ranking[end].value <= kRankTieWindow) {
      ++end;
    }
    std::sort(ranking.begin() + static_cast<std::ptrdiff_t>(begin), ranking.begin() + static_cast<std::ptrdiff_t>(end),
              [](const RankEntry &a, const RankEntry &b) { return a.input_index < b.input_index; });
    for (std::size_t i = begin; i < end; ++i) {
      ranking[i].rank = static_cast<int>(begin) + 1;
    }
    begin = end;
  }
  return ranking;
}

} // namespace wabl
