#include "gr/survey.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

#include "gr/enumerate.hpp"
#include "gr/error.hpp"
#include "gr/families.hpp"
#include "json.hpp"

namespace gr {

namespace {

constexpr std::size_t kBatch = 1024;

// (2n-1)!! / (4n): rough class count used in refusal messages.
double estimated_classes(std::size_t n) {
  double raw = 1;
  for (std::size_t k = 3; k < 2 * n; k += 2) raw *= static_cast<double>(k);
  return n == 0 ? 1 : raw / (4.0 * static_cast<double>(n));
}

void compute_batch(const std::vector<CanonicalDow>& words, std::size_t begin, std::size_t end,
                   std::vector<SurveyRecord>& out, unsigned threads) {
  out.resize(end - begin);
  if (threads <= 1 || end - begin < 2) {
    for (std::size_t i = begin; i < end; ++i) out[i - begin] = survey_record(words[i]);
    return;
  }
  std::atomic<std::size_t> next{begin};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < end; i = next++) out[i - begin] = survey_record(words[i]);
    });
  }
}

}  // namespace

std::strong_ordering compare_ranges(const GenusRange& a, const GenusRange& b) {
  if (auto c = a.max <=> b.max; c != 0) return c;
  return a.min <=> b.min;
}

SurveyRecord survey_record(const CanonicalDow& word) {
  GenusRangeOptions options;
  options.cap = std::max<std::size_t>(options.cap, word.symbol_count());
  const EmbeddingSpectrum spectrum = embedding_spectrum(AssemblyGraph::build(word.word()), options);
  return SurveyRecord{word, spectrum.range, spectrum.boundary_histogram};
}

void RangeFamily::add(const SurveyRecord& record, std::size_t witness_limit) {
  ++classes;
  RangeStats& stats = ranges[record.range];
  ++stats.count;
  if (stats.witnesses.size() < witness_limit) stats.witnesses.push_back(record.word);
}

std::uint64_t RangeFamily::count(const GenusRange& r) const {
  auto it = ranges.find(r);
  return it == ranges.end() ? 0 : it->second.count;
}

std::vector<GenusRange> RangeFamily::range_list() const {
  std::vector<GenusRange> out;
  for (const auto& [r, stats] : ranges) out.push_back(r);
  return out;
}

SurveyResult run_survey(std::size_t n, const SurveyOptions& options) {
  if (n > options.cap) {
    const double classes = estimated_classes(n);
    std::ostringstream msg;
    msg.precision(3);
    msg << "survey of n = " << n << " exceeds the cap of " << options.cap << ": about " << classes
        << " classes x 2^" << n << " embeddings (~" << classes * std::ldexp(1.0, static_cast<int>(n))
        << " boundary traces); raise the cap to run it";
    throw Error(Errc::size_over_cap, msg.str());
  }

  std::vector<CanonicalDow> words;
  if (options.start_after) {
    EnumerateOptions eo;
    eo.start_after = options.start_after;
    enumerate_canonical(n, [&](const CanonicalDow& w) {
      words.push_back(w);
      return true;
    }, eo);
  } else {
    words = canonical_words(n, options.threads);
  }
  bool truncated = false;
  if (options.max_records && *options.max_records < words.size()) {
    words.resize(*options.max_records);
    truncated = true;
  }

  SurveyResult result;
  result.family.n = n;
  std::vector<SurveyRecord> batch;
  std::size_t done = 0;
  while (done < words.size()) {
    if (options.cancel && options.cancel->load()) {
      truncated = true;
      break;
    }
    const std::size_t end = std::min(words.size(), done + kBatch);
    compute_batch(words, done, end, batch, options.threads);
    for (const SurveyRecord& record : batch) {
      result.family.add(record, options.witness_limit);
      if (options.on_record) options.on_record(record);
    }
    result.last_word = words[end - 1];
    done = end;
  }
  result.complete = !truncated;
  return result;
}

RangeFamily survey(std::size_t n, std::size_t witness_limit, unsigned threads) {
  SurveyOptions options;
  options.witness_limit = witness_limit;
  options.threads = threads;
  return run_survey(n, options).family;
}

std::vector<CanonicalDow> find_with_range(std::size_t n, const GenusRange& r, std::size_t limit,
                                          unsigned threads) {
  SurveyOptions options;
  options.threads = threads;
  std::vector<CanonicalDow> out;
  options.on_record = [&](const SurveyRecord& record) {
    if (record.range == r && out.size() < limit) out.push_back(record.word);
  };
  run_survey(n, options);
  return out;
}

void emit_histogram(const RangeFamily& family, HistogramFormat format, std::ostream& out) {
  if (format == HistogramFormat::csv) {
    out << "range_min,range_max,count\n";
    for (const auto& [r, stats] : family.ranges) {
      out << r.min << ',' << r.max << ',' << stats.count << '\n';
    }
  } else {
    nlohmann::ordered_json doc;
    doc["n"] = family.n;
    doc["classes"] = family.classes;
    doc["ranges"] = nlohmann::ordered_json::array();
    for (const auto& [r, stats] : family.ranges) {
      nlohmann::ordered_json row;
      row["range_min"] = r.min;
      row["range_max"] = r.max;
      row["count"] = stats.count;
      doc["ranges"].push_back(std::move(row));
    }
    out << doc.dump() << '\n';
  }
  if (!out) throw Error(Errc::io_failure, "failed writing the histogram");
}

std::string genus_range_json(const Dow& word, const EmbeddingSpectrum& spectrum) {
  nlohmann::ordered_json doc;
  doc["word"] = word.to_string();
  doc["n"] = word.symbol_count();
  doc["genus_range"] = {spectrum.range.min, spectrum.range.max};
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (std::size_t b = 0; b < spectrum.boundary_histogram.size(); ++b) {
    if (spectrum.boundary_histogram[b]) counts[std::to_string(b)] = spectrum.boundary_histogram[b];
  }
  doc["boundary_counts"] = std::move(counts);
  return doc.dump();
}

bool is_nested_repeat_word(const Dow& w) {
  const Dow core = loop_core(w);
  const auto m = static_cast<int>(core.symbol_count());
  if (m < 3 || m % 2 == 0) return false;
  return equivalent(core, repeat_word(m));
}

std::string ProbeReport::to_text() const {
  std::ostringstream out;
  if (kind == ProbeKind::singleton_gap) {
    out << "singleton-gap n=" << n << " psi=" << psi << '\n';
    if (singleton_gaps.empty()) {
      out << "no singleton range [h,h] with h > psi\n";
    } else {
      for (const auto& r : singleton_gaps) out << "found " << r.to_string() << '\n';
    }
  } else {
    out << "zero-one n=" << n << " classes with [0,1]: " << zero_one_words.size() << '\n';
    if (zero_one_exceptions.empty()) {
      out << "every [0,1] class is a loop nesting of a repeat word\n";
    } else {
      for (const auto& w : zero_one_exceptions) out << "exception " << w.to_string() << '\n';
    }
  }
  return out.str();
}

ProbeReport conjecture_probe(std::size_t n, ProbeKind kind, unsigned threads) {
  ProbeReport report;
  report.kind = kind;
  report.n = n;
  report.psi = n >= 1 ? psi(static_cast<int>(n)).psi : 0;

  SurveyOptions options;
  options.threads = threads;
  if (kind == ProbeKind::zero_one) {
    options.on_record = [&](const SurveyRecord& record) {
      if (record.range != GenusRange{0, 1}) return;
      report.zero_one_words.push_back(record.word);
      if (!is_nested_repeat_word(record.word.word())) report.zero_one_exceptions.push_back(record.word);
    };
  }
  const SurveyResult result = run_survey(n, options);
  if (kind == ProbeKind::singleton_gap) {
    for (const auto& [r, stats] : result.family.ranges) {
      if (r.min == r.max && r.min > report.psi) report.singleton_gaps.push_back(r);
    }
  }
  return report;
}

}  // namespace gr
