#pragma once

#include "wabl/level_weights.hpp"
#include "wabl/ranking.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wabl::cli {

// Record shapes accepted in an input document.
enum class RecordType { Trapezoid, Triangle, Discrete };

std::string_view to_string(RecordType type) noexcept;

struct Record {
  std::size_t index = 0;
  std::string id;
  RecordType type = RecordType::Trapezoid;
  FuzzyNumber fn;
};

enum class FailureKind { Input, Computation };

struct RecordFailure {
  std::size_t index = 0;
  std::string id;
  FailureKind kind = FailureKind::Input;
  std::string message;
};

/// Parsed input. Records that fail validation are kept as failures so every
/// problem in a document is reported, not just the first.
struct InputDocument {
  std::vector<Record> records;
  std::vector<RecordFailure> failures;
  std::size_t record_count = 0;
};

/// Parses
///   {"records": [ {"id": "A", "type": "trapezoid", "params": [l, m_l, m_r, r]},
///                 {"id": "B", "type": "triangle",  "params": [l, m, r]},
///                 {"id": "C", "type": "discrete",  "points": [[x, mu], ...]} ]}
/// or the bare record array. Unknown keys are ignored, so machine-format
/// reports parse back as input. Throws InputError on malformed JSON (with
/// line and column) or a bad top-level shape.
InputDocument parse_document(std::string_view text);

/// Parses [[alpha, mass], ...] or {"weights": [[alpha, mass], ...]}.
/// Throws InputError for shape problems and invalid weights.
DiscreteWeights parse_weights(std::string_view text);

/// Whole file as a string. Throws InputError when unreadable.
std::string read_file(const std::filesystem::path &path);

} // namespace wabl::cli
