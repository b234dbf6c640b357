#pragma once

#include <utility>
#include <vector>

#include "trope/corpus/record.hpp"

namespace trope::corpus {

struct ExclusionConfig {
  int min_age = 18;
  int max_age = 100;
  double min_completion_seconds = 180.0;  // strictly-under is excluded
  StudyWindow window;
};

// Drops records with out-of-range age, too-fast completion, or a month
// outside the collected window. Missing age/duration are kept (missing
// demographics stay in the corpus; analyses delete listwise later).
std::pair<std::vector<MetaphorRecord>, QualityReport> exclude_invalid(
    std::vector<MetaphorRecord> records,
    const ExclusionConfig& config = ExclusionConfig{});

}  // namespace trope::corpus
