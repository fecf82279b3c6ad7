#pragma once

#include "wabl/fuzzy_core.hpp"
#include "wabl/level_weights.hpp"
#include "wabl/wabl_engine.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wabl {

// Values closer than this share a rank.
inline constexpr double kRankTieWindow = 1e-12;

using FuzzyNumber = std::variant<TrapezoidalFN, DiscreteFN>;

struct Alternative {
  std::string id;
  FuzzyNumber fn;
};

/// Level machinery shared by every alternative in a request. Trapezoids use
/// the pattern scheme, discrete numbers the explicit weights; a collection
/// containing both kinds needs both.
struct RankingScheme {
  std::optional<EqualSpacedScheme> pattern;
  std::optional<DiscreteWeights> explicit_weights;
  Dispatch dispatch = Dispatch::PreferClosedForm;
};

struct RankEntry {
  std::string id;
  double value = 0.0;
  int rank = 0;
  // Position in the request.
  std::size_t input_index = 0;
};

using Ranking = std::vector<RankEntry>;

/// WABL of a single alternative under the shared scheme. Throws DomainError
/// when the scheme lacks the weights its kind needs.
WablResult evaluate(const FuzzyNumber &fn, const RankingScheme &scheme, const OptimismConfig &cfg);

/// Descending by WABL with competition ranks (1, 2, 2, 4). Values within
/// kRankTieWindow of the first member of a tie group share its rank and keep
/// input order. Errors from individual evaluations are rethrown as the same
/// type with the alternative id prefixed.
Ranking rank_alternatives(const std::vector<Alternative> &alts, const RankingScheme &scheme,
                          const OptimismConfig &cfg);

} // namespace wabl
