#include "trope/corpus/exclusions.hpp"

namespace trope::corpus {

std::pair<std::vector<MetaphorRecord>, QualityReport> exclude_invalid(
    std::vector<MetaphorRecord> records, const ExclusionConfig& config) {
  std::vector<MetaphorRecord> kept;
  kept.reserve(records.size());
  QualityReport report;
  report.n_loaded = records.size();

  for (auto& rec : records) {
    if (!config.window.contains(rec.month)) {
      report.n_excluded_month++;
      report.excluded_ids.push_back({rec.record_id, "month"});
      continue;
    }
    if (rec.age && (*rec.age < config.min_age || *rec.age > config.max_age)) {
      report.n_excluded_age++;
      report.excluded_ids.push_back({rec.record_id, "age"});
      continue;
    }
    if (rec.completion_seconds &&
        *rec.completion_seconds < config.min_completion_seconds) {
      report.n_excluded_duration++;
      report.excluded_ids.push_back({rec.record_id, "duration"});
      continue;
    }
    kept.push_back(std::move(rec));
  }
  report.n_valid = kept.size();
  return {std::move(kept), std::move(report)};
}

}  // namespace trope::corpus
