#include "wabl/cli/document.hpp"

#include "wabl/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace wabl::cli {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    // Translate the byte offset into line/column for the message.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << "malformed JSON at line " << line << ", column " << column << ": " << e.what();
    throw InputError(os.str());
  }
}

double number_at(const json &array, std::size_t i, const char *what) {
  const json &v = array.at(i);
  if (!v.is_number()) {
    throw InputError(std::string(what) + " must contain only numbers");
  }
  return v.get<double>();
}

std::vector<double> numbers(const json &record, const char *key, std::size_t expected) {
  if (!record.contains(key) || !record[key].is_array()) {
    throw InputError(std::string("missing array '") + key + "'");
  }
  const json &arr = record[key];
  if (arr.size() != expected) {
    std::ostringstream os;
    os << "'" << key << "' must have " << expected << " numbers, got " << arr.size();
    throw InputError(os.str());
  }
  std::vector<double> out(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    out[i] = number_at(arr, i, key);
  }
  return out;
}

std::vector<std::pair<double, double>> pairs(const json &arr, const char *key) {
  if (!arr.is_array()) {
    throw InputError(std::string("'") + key + "' must be an array of [a, b] pairs");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(arr.size());
  for (const json &item : arr) {
    if (!item.is_array() || item.size() != 2) {
      throw InputError(std::string("every entry of '") + key + "' must be a two-element array");
    }
    out.emplace_back(number_at(item, 0, key), number_at(item, 1, key));
  }
  return out;
}

RecordType parse_type(const json &record) {
  if (!record.contains("type") || !record["type"].is_string()) {
    throw InputError("missing string field 'type'");
  }
  const auto type = record["type"].get<std::string>();
  if (type == "trapezoid") {
    return RecordType::Trapezoid;
  }
  if (type == "triangle") {
    return RecordType::Triangle;
  }
  if (type == "discrete") {
    return RecordType::Discrete;
  }
  throw InputError("unknown record type '" + type + "' (expected trapezoid, triangle or discrete)");
}

FuzzyNumber parse_fuzzy_number(const json &record, RecordType type) {
  switch (type) {
  case RecordType::Trapezoid: {
    const auto p = numbers(record, "params", 4);
    return TrapezoidalFN(p[0], p[1], p[2], p[3]);
  }
  case RecordType::Triangle: {
    const auto p = numbers(record, "params", 3);
    return TrapezoidalFN::triangle(p[0], p[1], p[2]);
  }
  case RecordType::Discrete: {
    if (!record.contains("points")) {
      throw InputError("missing array 'points'");
    }
    std::vector<DiscretePoint> points;
    for (const auto &[x, mu] : pairs(record["points"], "points")) {
      points.push_back({x, mu});
    }
    return DiscreteFN(std::move(points));
  }
  }
  throw InputError("unhandled record type");
}

std::string record_label(std::size_t index, const std::string &id) {
  std::ostringstream os;
  os << "record " << index + 1;
  if (!id.empty()) {
    os << " ('" << id << "')";
  }
  return os.str();
}

} // namespace

std::string_view to_string(RecordType type) noexcept {
  switch (type) {
  case RecordType::Trapezoid:
    return "trapezoid";
  case RecordType::Triangle:
    return "triangle";
  case RecordType::Discrete:
    return "discrete";
  }
  return "unknown";
}

InputDocument parse_document(std::string_view text) {
  const json root = parse_json(text);
  const json *records = nullptr;
  if (root.is_array()) {
    records = &root;
  } else if (root.is_object() && root.contains("records") && root["records"].is_array()) {
    records = &root["records"];
  } else {
    throw InputError("input must be a record array or an object with a 'records' array");
  }

  InputDocument doc;
  doc.record_count = records->size();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < records->size(); ++i) {
    const json &rec = (*records)[i];
    std::string id;
    try {
      if (!rec.is_object()) {
        throw InputError("record must be an object");
      }
      if (!rec.contains("id") || !rec["id"].is_string() || rec["id"].get<std::string>().empty()) {
        throw InputError("missing nonempty string field 'id'");
      }
      id = rec["id"].get<std::string>();
      if (!seen.insert(id).second) {
        throw InputError("duplicate id");
      }
      const RecordType type = parse_type(rec);
      doc.records.push_back({i, id, type, parse_fuzzy_number(rec, type)});
    } catch (const Error &e) {
      doc.failures.push_back({i, id, FailureKind::Input, record_label(i, id) + ": " + e.what()});
    }
  }
  return doc;
}

DiscreteWeights parse_weights(std::string_view text) {
  const json root = parse_json(text);
  const json *list = &root;
  if (root.is_object()) {
    if (!root.contains("weights")) {
      throw InputError("weights document must be a pair array or an object with a 'weights' array");
    }
    list = &root["weights"];
  }
  std::vector<double> alphas;
  std::vector<double> masses;
  for (const auto &[alpha, mass] : pairs(*list, "weights")) {
    alphas.push_back(alpha);
    masses.push_back(mass);
  }
  try {
    return explicit_weights(LevelSet(std::move(alphas)), std::move(masses));
  } catch (const InputError &) {
    throw;
  } catch (const Error &e) {
    throw InputError(std::string("invalid weights: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace wabl::cli
