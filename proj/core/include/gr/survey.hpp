#pragma once

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gr/dow.hpp"
#include "gr/ribbon.hpp"

namespace gr {

/// Linear order on intervals: by max, then by min.
std::strong_ordering compare_ranges(const GenusRange& a, const GenusRange& b);

struct RangeLess {
  bool operator()(const GenusRange& a, const GenusRange& b) const { return compare_ranges(a, b) < 0; }
};

/// One canonical class and its embedding statistics.
struct SurveyRecord {
  CanonicalDow word;
  GenusRange range;
  /// boundary_histogram[b] = number of choices with b boundary components;
  /// sums to 2^n.
  std::vector<std::uint64_t> boundary_histogram;

  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

SurveyRecord survey_record(const CanonicalDow& word);

struct RangeStats {
  std::uint64_t count = 0;
  /// Lexicographically least canonical words with this range.
  std::vector<CanonicalDow> witnesses;

  friend bool operator==(const RangeStats&, const RangeStats&) = default;
};

/// Every genus range seen among graphs of one size, with class counts.
struct RangeFamily {
  std::size_t n = 0;
  std::uint64_t classes = 0;
  std::map<GenusRange, RangeStats, RangeLess> ranges;

  /// Records must arrive in increasing word order for witnesses to be the
  /// least ones.
  void add(const SurveyRecord& record, std::size_t witness_limit);

  bool contains(const GenusRange& r) const { return ranges.count(r) != 0; }
  std::uint64_t count(const GenusRange& r) const;
  /// Ranges in increasing order.
  std::vector<GenusRange> range_list() const;

  friend bool operator==(const RangeFamily&, const RangeFamily&) = default;
};

struct SurveyOptions {
  std::size_t witness_limit = 1;
  unsigned threads = 1;
  /// Largest n accepted.
  std::size_t cap = 9;
  /// Resume strictly after this canonical word.
  std::optional<Dow> start_after;
  /// Stop after this many records (used to cut a run short).
  std::optional<std::size_t> max_records;
  /// Polled between batches; set it to stop early.
  const std::atomic<bool>* cancel = nullptr;
  /// Called for each record, in increasing word order.
  std::function<void(const SurveyRecord&)> on_record;
};

struct SurveyResult {
  RangeFamily family;
  bool complete = false;
  /// Last word processed, if any.
  std::optional<CanonicalDow> last_word;
};

/// Exhaustive survey of all canonical classes with `n` symbols.
SurveyResult run_survey(std::size_t n, const SurveyOptions& options = {});

RangeFamily survey(std::size_t n, std::size_t witness_limit = 1, unsigned threads = 1);

/// Up to `limit` canonical words with genus range `r`, in increasing order.
std::vector<CanonicalDow> find_with_range(std::size_t n, const GenusRange& r, std::size_t limit,
                                          unsigned threads = 1);

enum class HistogramFormat { csv, json };

/// Rows sorted by compare_ranges. CSV columns: range_min,range_max,count.
void emit_histogram(const RangeFamily& family, HistogramFormat format, std::ostream& out);

/// {"word": ..., "n": ..., "genus_range": [min,max], "boundary_counts": {...}}
std::string genus_range_json(const Dow& word, const EmbeddingSpectrum& spectrum);

enum class ProbeKind { singleton_gap, zero_one };

struct ProbeReport {
  ProbeKind kind = ProbeKind::singleton_gap;
  std::size_t n = 0;
  int psi = 0;
  /// singleton_gap: ranges [h,h] found with h > psi.
  std::vector<GenusRange> singleton_gaps;
  /// zero_one: all classes with range [0,1], and those among them that are
  /// not loop nestings of a repeat word.
  std::vector<CanonicalDow> zero_one_words;
  std::vector<CanonicalDow> zero_one_exceptions;

  std::string to_text() const;
};

/// True iff `w` is a loop nesting of 1..m 1..m for some odd m >= 3.
bool is_nested_repeat_word(const Dow& w);

ProbeReport conjecture_probe(std::size_t n, ProbeKind kind, unsigned threads = 1);

}  // namespace gr
