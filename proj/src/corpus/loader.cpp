#include "trope/corpus/loader.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "trope/util/csv.hpp"
#include "trope/util/errors.hpp"
#include "trope/util/text.hpp"

namespace trope::corpus {
namespace {

using nlohmann::json;

const char* kRequiredColumns[] = {
    "id",      "metaphor", "month",   "gender",  "race_ethnicity",
    "age",     "education", "trust_1", "trust_2", "trust_3",
    "adopt_1", "adopt_2",  "adopt_3", "adopt_4", "adopt_5",
    "ai_tools_used", "completion_seconds"};

std::optional<int> parse_int_strict(const std::string& s, bool& malformed) {
  if (s.empty()) return std::nullopt;
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    malformed = true;
    return std::nullopt;
  }
  return v;
}

std::optional<double> parse_double_strict(const std::string& s, bool& malformed) {
  if (s.empty()) return std::nullopt;
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size() || !std::isfinite(v)) {
      malformed = true;
      return std::nullopt;
    }
    return v;
  } catch (const std::exception&) {
    malformed = true;
    return std::nullopt;
  }
}

struct RawRow {
  std::string id, metaphor, month, gender, race, age, education;
  std::string trust[3];
  std::string adopt[5];
  std::string ai_tools, completion, published;
};

// Returns an error string for malformed rows, empty string on success.
std::string build_record(const RawRow& raw, size_t row_index,
                         MetaphorRecord& rec) {
  rec = MetaphorRecord{};
  rec.record_id = raw.id.empty() ? "row" + std::to_string(row_index) : raw.id;
  if (raw.id.empty()) return "missing id";
  rec.metaphor_text = clean_whitespace(raw.metaphor);

  if (raw.month.empty()) return "missing month";
  auto m = Month::parse(raw.month);
  if (!m) return "unparseable month '" + raw.month + "'";
  rec.month = *m;

  rec.gender = parse_gender(raw.gender);
  rec.race_ethnicity = parse_race(raw.race);
  rec.education = raw.education;

  bool bad = false;
  rec.age = parse_int_strict(raw.age, bad);
  if (bad) return "unparseable age '" + raw.age + "'";

  int n_trust = 0;
  std::vector<double> trust_items;
  for (const auto& s : raw.trust) {
    if (s.empty()) continue;
    auto v = parse_double_strict(s, bad);
    if (bad || !v) return "unparseable trust item '" + s + "'";
    trust_items.push_back(*v);
    ++n_trust;
  }
  if (n_trust == 3) {
    try {
      rec.trust = compute_trust(trust_items);
    } catch (const ValidationError& e) {
      return e.what();
    }
  } else if (n_trust != 0) {
    return "partial trust items (" + std::to_string(n_trust) + " of 3)";
  }

  int n_adopt = 0;
  std::vector<double> adopt_items;
  for (const auto& s : raw.adopt) {
    if (s.empty()) continue;
    auto v = parse_double_strict(s, bad);
    if (bad || !v) return "unparseable adoption item '" + s + "'";
    adopt_items.push_back(*v);
    ++n_adopt;
  }
  if (n_adopt == 5) {
    try {
      rec.adoption = compute_adoption(adopt_items);
    } catch (const ValidationError& e) {
      return e.what();
    }
  } else if (n_adopt != 0) {
    return "partial adoption items (" + std::to_string(n_adopt) + " of 5)";
  }

  rec.ai_use_frequency = parse_int_strict(raw.ai_tools, bad);
  if (bad) return "unparseable ai_tools_used '" + raw.ai_tools + "'";
  if (rec.ai_use_frequency && *rec.ai_use_frequency < 0)
    return "negative ai_tools_used";

  rec.completion_seconds = parse_double_strict(raw.completion, bad);
  if (bad) return "unparseable completion_seconds '" + raw.completion + "'";
  if (rec.completion_seconds && *rec.completion_seconds <= 0)
    return "non-positive completion_seconds";

  if (!raw.published.empty()) rec.published_label = raw.published;
  return "";
}

std::string json_to_string(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) {
    std::ostringstream os;
    os << v.get<double>();
    return os.str();
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

FileFormat format_from_name(const std::string& name) {
  auto lower = to_lower_ascii(name);
  if (lower.size() >= 4 && lower.compare(lower.size() - 4, 4, ".csv") == 0)
    return FileFormat::kCsv;
  if (lower.size() >= 6 && lower.compare(lower.size() - 6, 6, ".jsonl") == 0)
    return FileFormat::kJsonl;
  throw UserError("cannot infer format (expected .csv or .jsonl): " + name);
}

double compute_trust(const std::vector<double>& items) {
  if (items.size() != 3)
    throw ValidationError("trust composite needs exactly 3 items, got " +
                          std::to_string(items.size()));
  double sum = 0;
  for (double v : items) {
    if (v < 1.0 || v > 5.0)
      throw ValidationError("trust item out of range [1,5]: " +
                            std::to_string(v));
    sum += v;
  }
  return sum / 3.0;
}

double compute_adoption(const std::vector<double>& items) {
  if (items.size() != 5)
    throw ValidationError("adoption composite needs exactly 5 items, got " +
                          std::to_string(items.size()));
  double sum = 0;
  for (double v : items) {
    if (v < 1.0 || v > 7.0)
      throw ValidationError("adoption item out of range [1,7]: " +
                            std::to_string(v));
    sum += v;
  }
  return sum / 5.0;
}

LoadResult load_records(const std::string& path, FileFormat format,
                        const StudyWindow& window) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot open input file: " + path);

  LoadResult result;
  auto add_row = [&](const RawRow& raw, size_t row_index) {
    result.report.n_loaded++;
    MetaphorRecord rec;
    std::string err = build_record(raw, row_index, rec);
    if (!err.empty()) {
      result.report.n_excluded_unparseable++;
      result.report.excluded_ids.push_back(
          {rec.record_id, "unparseable: " + err});
      return;
    }
    result.records.push_back(std::move(rec));
  };

  if (format == FileFormat::kCsv) {
    CsvReader reader(in);
    for (const char* col : kRequiredColumns) {
      if (!reader.has_column(col)) result.missing_columns.push_back(col);
    }
    if (!result.missing_columns.empty()) return result;
    bool has_published = reader.has_column("dominant_metaphor");
    std::vector<std::string> fields;
    size_t row_index = 0;
    auto get = [&](const char* c) {
      return reader.field(fields, c).value_or("");
    };
    while (reader.next_row(fields)) {
      ++row_index;
      RawRow raw;
      raw.id = get("id");
      raw.metaphor = get("metaphor");
      raw.month = get("month");
      raw.gender = get("gender");
      raw.race = get("race_ethnicity");
      raw.age = get("age");
      raw.education = get("education");
      for (int i = 0; i < 3; ++i)
        raw.trust[i] = get(("trust_" + std::to_string(i + 1)).c_str());
      for (int i = 0; i < 5; ++i)
        raw.adopt[i] = get(("adopt_" + std::to_string(i + 1)).c_str());
      raw.ai_tools = get("ai_tools_used");
      raw.completion = get("completion_seconds");
      if (has_published) raw.published = get("dominant_metaphor");
      add_row(raw, row_index);
    }
  } else {
    std::string line;
    size_t row_index = 0;
    while (std::getline(in, line)) {
      if (clean_whitespace(line).empty()) continue;
      ++row_index;
      json obj;
      try {
        obj = json::parse(line);
      } catch (const json::parse_error& e) {
        result.report.n_loaded++;
        result.report.n_excluded_unparseable++;
        result.report.excluded_ids.push_back(
            {"row" + std::to_string(row_index),
             std::string("unparseable: invalid json: ") + e.what()});
        continue;
      }
      auto get = [&](const char* key) {
        return obj.contains(key) ? json_to_string(obj[key]) : std::string();
      };
      RawRow raw;
      raw.id = get("id");
      raw.metaphor = get("metaphor");
      raw.month = get("month");
      raw.gender = get("gender");
      raw.race = get("race_ethnicity");
      raw.age = get("age");
      raw.education = get("education");
      for (int i = 0; i < 3; ++i)
        raw.trust[i] = get(("trust_" + std::to_string(i + 1)).c_str());
      for (int i = 0; i < 5; ++i)
        raw.adopt[i] = get(("adopt_" + std::to_string(i + 1)).c_str());
      raw.ai_tools = get("ai_tools_used");
      raw.completion = get("completion_seconds");
      raw.published = get("dominant_metaphor");
      add_row(raw, row_index);
    }
  }
  (void)window;
  return result;
}

}  // namespace trope::corpus
