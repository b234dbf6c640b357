#pragma once

#include <optional>
#include <string>
#include <vector>

namespace trope::corpus {

enum class Gender { kMan, kWoman, kNonBinaryOther, kMissing };
enum class RaceEthnicity { kWhite, kBlack, kAsian, kHispanicLatino, kOther, kMissing };

std::string to_string(Gender g);
std::string to_string(RaceEthnicity r);
Gender parse_gender(const std::string& raw);
RaceEthnicity parse_race(const std::string& raw);

// Calendar month tag, e.g. "2023-05".
struct Month {
  int year = 0;
  int month = 0;  // 1..12

  static std::optional<Month> parse(const std::string& s);
  std::string str() const;
  // Months since year 0; used for ordering and gap-aware axes.
  int ordinal() const { return year * 12 + (month - 1); }
  auto operator<=>(const Month&) const = default;
};

// The months the corpus covers. Default window May 2023 .. Aug 2024 with
// four missing months (Jul 2023, May-Jul 2024), i.e. 12 collected months.
struct StudyWindow {
  Month first{2023, 5};
  Month last{2024, 8};
  std::vector<Month> skipped = {{2023, 7}, {2024, 5}, {2024, 6}, {2024, 7}};

  bool contains(const Month& m) const;
  std::vector<Month> collected_months() const;
};

struct MetaphorRecord {
  std::string record_id;
  std::string metaphor_text;
  Month month;
  Gender gender = Gender::kMissing;
  RaceEthnicity race_ethnicity = RaceEthnicity::kMissing;
  std::optional<int> age;
  std::string education;  // free categorical; empty = missing
  std::optional<double> trust;       // composite, [1,5]
  std::optional<double> adoption;    // composite, [1,7]
  std::optional<int> ai_use_frequency;
  std::optional<double> completion_seconds;
  std::optional<std::string> published_label;  // optional precomputed dominant label
};

struct ExclusionEntry {
  std::string record_id;
  std::string reason;  // "unparseable", "month", "age", "duration", "ai_like"
};

struct QualityReport {
  size_t n_loaded = 0;
  size_t n_excluded_unparseable = 0;
  size_t n_excluded_month = 0;
  size_t n_excluded_age = 0;
  size_t n_excluded_duration = 0;
  size_t n_excluded_ai_like = 0;
  size_t n_valid = 0;
  std::vector<ExclusionEntry> excluded_ids;
  std::vector<std::string> flagged_empty_text;  // kept but not embeddable
  std::string ai_reference_note;  // provenance of the reference fixture
  std::string embedder_tag;       // model used for the AI-likeness pass

  size_t n_excluded_total() const {
    return n_excluded_unparseable + n_excluded_month + n_excluded_age +
           n_excluded_duration + n_excluded_ai_like;
  }
  // Records with usable metaphor text; the corpus count downstream scoring
  // and clustering actually see.
  size_t n_scoreable() const { return n_valid - flagged_empty_text.size(); }

  void merge(const QualityReport& other);
};

}  // namespace trope::corpus
