#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gr/survey.hpp"

namespace gr {

/// Survey state persisted as JSON lines: one record per canonical word,
///   {"word":"1 2 1 2","n":2,"gr":[1,1],"b_hist":{"2":4}}
/// followed by a trailer, either {"resume_after":"<word>"} or
/// {"complete":true}.
struct Checkpoint {
  std::vector<SurveyRecord> records;
  bool complete = false;
  /// Set for interrupted runs; empty word if nothing was processed.
  std::optional<Dow> resume_after;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

std::string record_to_json(const SurveyRecord& record);
/// Throws gr::Error(checkpoint_corrupt) on malformed input.
SurveyRecord record_from_json(std::string_view line);

void checkpoint_write(const std::filesystem::path& path, const Checkpoint& checkpoint);
/// Errors name the offending line; a missing trailer is reported as
/// checkpoint_incomplete.
Checkpoint checkpoint_read(const std::filesystem::path& path);

/// Aggregates stored records the same way run_survey does.
RangeFamily family_from_records(std::size_t n, const std::vector<SurveyRecord>& records,
                                std::size_t witness_limit = 1);

/// Runs (or with `resume`, continues) a survey that streams its records to
/// `path`. The finished file is byte-identical to an uninterrupted run.
SurveyResult survey_to_file(std::size_t n, const std::filesystem::path& path, bool resume,
                            const SurveyOptions& options = {});

}  // namespace gr
