#pragma once

#include <string>
#include <vector>

#include "trope/corpus/record.hpp"

namespace trope::corpus {

enum class FileFormat { kCsv, kJsonl };

FileFormat format_from_name(const std::string& name);

struct LoadResult {
  std::vector<MetaphorRecord> records;
  QualityReport report;  // n_loaded and unparseable entries filled here
  std::vector<std::string> missing_columns;  // non-empty => schema mismatch
};

// Expected columns / keys: id, metaphor, month, gender, race_ethnicity,
// age, education, trust_1..trust_3, adopt_1..adopt_5, ai_tools_used,
// completion_seconds. Optional: dominant_metaphor (published labels).
// Missing fields stay missing; malformed rows are collected, never fatal.
LoadResult load_records(const std::string& path, FileFormat format,
                        const StudyWindow& window = StudyWindow{});

// Mean of exactly 3 items, each in [1,5].
double compute_trust(const std::vector<double>& items);

// Mean of exactly 5 items, each in [1,7].
double compute_adoption(const std::vector<double>& items);

}  // namespace trope::corpus
