#include "trope/corpus/record.hpp"

#include <algorithm>
#include <cstdio>

#include "trope/util/text.hpp"

namespace trope::corpus {

std::string to_string(Gender g) {
  switch (g) {
    case Gender::kMan: return "man";
    case Gender::kWoman: return "woman";
    case Gender::kNonBinaryOther: return "non-binary/other";
    case Gender::kMissing: return "missing";
  }
  return "missing";
}

std::string to_string(RaceEthnicity r) {
  switch (r) {
    case RaceEthnicity::kWhite: return "white";
    case RaceEthnicity::kBlack: return "Black";
    case RaceEthnicity::kAsian: return "Asian";
    case RaceEthnicity::kHispanicLatino: return "Hispanic/Latino";
    case RaceEthnicity::kOther: return "other";
    case RaceEthnicity::kMissing: return "missing";
  }
  return "missing";
}

Gender parse_gender(const std::string& raw) {
  std::string s = to_lower_ascii(raw);
  if (s == "man" || s == "male" || s == "m") return Gender::kMan;
  if (s == "woman" || s == "female" || s == "w" || s == "f") return Gender::kWoman;
  if (s.empty() || s == "missing" || s == "na" || s == "n/a")
    return Gender::kMissing;
  return Gender::kNonBinaryOther;
}

RaceEthnicity parse_race(const std::string& raw) {
  std::string s = to_lower_ascii(raw);
  if (s == "white" || s == "caucasian") return RaceEthnicity::kWhite;
  if (s == "black" || s == "black or african american" || s == "african american")
    return RaceEthnicity::kBlack;
  if (s == "asian" || s == "asian or asian american")
    return RaceEthnicity::kAsian;
  if (s == "hispanic/latino" || s == "hispanic" || s == "latino" ||
      s == "hispanic or latino" || s == "latino/a" || s == "latinx")
    return RaceEthnicity::kHispanicLatino;
  if (s.empty() || s == "missing" || s == "na" || s == "n/a")
    return RaceEthnicity::kMissing;
  return RaceEthnicity::kOther;
}

std::optional<Month> Month::parse(const std::string& s) {
  int y = 0, m = 0;
  char extra = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d%c", &y, &m, &extra) != 2) return std::nullopt;
  if (s.size() != 7 || s[4] != '-') return std::nullopt;
  if (m < 1 || m > 12 || y < 1900 || y > 9999) return std::nullopt;
  return Month{y, m};
}

std::string Month::str() const {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
  return buf;
}

bool StudyWindow::contains(const Month& m) const {
  if (m < first || last < m) return false;
  return std::find(skipped.begin(), skipped.end(), m) == skipped.end();
}

std::vector<Month> StudyWindow::collected_months() const {
  std::vector<Month> out;
  for (int o = first.ordinal(); o <= last.ordinal(); ++o) {
    Month m{o / 12, o % 12 + 1};
    if (contains(m)) out.push_back(m);
  }
  return out;
}

void QualityReport::merge(const QualityReport& other) {
  n_loaded += other.n_loaded;
  n_excluded_unparseable += other.n_excluded_unparseable;
  n_excluded_month += other.n_excluded_month;
  n_excluded_age += other.n_excluded_age;
  n_excluded_duration += other.n_excluded_duration;
  n_excluded_ai_like += other.n_excluded_ai_like;
  n_valid += other.n_valid;
  excluded_ids.insert(excluded_ids.end(), other.excluded_ids.begin(),
                      other.excluded_ids.end());
  flagged_empty_text.insert(flagged_empty_text.end(),
                            other.flagged_empty_text.begin(),
                            other.flagged_empty_text.end());
}

}  // namespace trope::corpus
