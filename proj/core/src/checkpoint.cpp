#include "gr/checkpoint.hpp"

#include <fstream>
#include <system_error>

#include "gr/error.hpp"
#include "json.hpp"

namespace gr {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void corrupt(const std::string& what) { throw Error(Errc::checkpoint_corrupt, what); }

std::string trailer_json(const Checkpoint& cp) {
  ordered_json doc;
  if (cp.complete) {
    doc["complete"] = true;
  } else {
    doc["resume_after"] = cp.resume_after ? cp.resume_after->to_string() : std::string();
  }
  return doc.dump();
}

}  // namespace

std::string record_to_json(const SurveyRecord& record) {
  ordered_json doc;
  doc["word"] = record.word.to_string();
  doc["n"] = record.word.symbol_count();
  doc["gr"] = {record.range.min, record.range.max};
  ordered_json hist = ordered_json::object();
  for (std::size_t b = 0; b < record.boundary_histogram.size(); ++b) {
    if (record.boundary_histogram[b]) hist[std::to_string(b)] = record.boundary_histogram[b];
  }
  doc["b_hist"] = std::move(hist);
  return doc.dump();
}

SurveyRecord record_from_json(std::string_view line) {
  const auto doc = nlohmann::json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) corrupt("not a JSON object");
  if (!doc.contains("word") || !doc["word"].is_string()) corrupt("missing string field 'word'");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) corrupt("missing integer field 'n'");
  if (!doc.contains("gr") || !doc["gr"].is_array() || doc["gr"].size() != 2 ||
      !doc["gr"][0].is_number_integer() || !doc["gr"][1].is_number_integer()) {
    corrupt("field 'gr' must be [min,max]");
  }
  if (!doc.contains("b_hist") || !doc["b_hist"].is_object()) corrupt("missing object field 'b_hist'");

  SurveyRecord record;
  try {
    record.word = CanonicalDow::from_canonical(Dow::parse(doc["word"].get<std::string>()));
  } catch (const Error& e) {
    corrupt(std::string("bad word: ") + e.what());
  }
  const std::size_t n = doc["n"].get<std::size_t>();
  if (n != record.word.symbol_count()) corrupt("field 'n' does not match the word");
  record.range = {doc["gr"][0].get<int>(), doc["gr"][1].get<int>()};
  record.boundary_histogram.assign(n + 3, 0);
  std::uint64_t total = 0;
  for (const auto& [key, value] : doc["b_hist"].items()) {
    std::size_t b = 0;
    try {
      std::size_t used = 0;
      b = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      corrupt("b_hist key '" + key + "' is not an integer");
    }
    if (b >= record.boundary_histogram.size() || !value.is_number_unsigned()) {
      corrupt("b_hist entry '" + key + "' is out of range");
    }
    record.boundary_histogram[b] = value.get<std::uint64_t>();
    total += record.boundary_histogram[b];
  }
  if (n < 64 && total != (std::uint64_t{1} << n)) corrupt("b_hist does not total 2^n");
  return record;
}

void checkpoint_write(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_failure, "cannot open " + path.string() + " for writing");
  for (const auto& record : checkpoint.records) out << record_to_json(record) << '\n';
  out << trailer_json(checkpoint) << '\n';
  if (!out.flush()) throw Error(Errc::io_failure, "failed writing " + path.string());
}

Checkpoint checkpoint_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_failure, "cannot open " + path.string());

  Checkpoint cp;
  bool have_trailer = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
    if (have_trailer) throw Error(Errc::checkpoint_corrupt, where + "content after the trailer line");
    if (in.eof()) {
      throw Error(Errc::checkpoint_corrupt, where + "line is not newline-terminated (truncated write?)");
    }
    const auto doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_object() && (doc.contains("complete") || doc.contains("resume_after"))) {
      if (doc.contains("complete")) {
        if (!doc["complete"].is_boolean() || !doc["complete"].get<bool>()) {
          throw Error(Errc::checkpoint_corrupt, where + "trailer 'complete' must be true");
        }
        cp.complete = true;
      } else {
        if (!doc["resume_after"].is_string()) {
          throw Error(Errc::checkpoint_corrupt, where + "trailer 'resume_after' must be a string");
        }
        try {
          cp.resume_after = Dow::parse(doc["resume_after"].get<std::string>());
        } catch (const Error& e) {
          throw Error(Errc::checkpoint_corrupt, where + e.what());
        }
      }
      have_trailer = true;
      continue;
    }
    try {
      cp.records.push_back(record_from_json(line));
    } catch (const Error& e) {
      throw Error(Errc::checkpoint_corrupt, where + e.what());
    }
  }
  if (!have_trailer) {
    throw Error(Errc::checkpoint_incomplete,
                path.string() + ": no trailer line after " + std::to_string(line_no) + " line(s)");
  }
  return cp;
}

RangeFamily family_from_records(std::size_t n, const std::vector<SurveyRecord>& records,
                                std::size_t witness_limit) {
  RangeFamily family;
  family.n = n;
  for (const auto& record : records) family.add(record, witness_limit);
  return family;
}

SurveyResult survey_to_file(std::size_t n, const std::filesystem::path& path, bool resume,
                            const SurveyOptions& options) {
  Checkpoint previous;
  if (resume && std::filesystem::exists(path)) previous = checkpoint_read(path);
  for (const auto& record : previous.records) {
    if (record.word.symbol_count() != n) {
      throw Error(Errc::checkpoint_corrupt, path.string() + " holds records for n = " +
                                                std::to_string(record.word.symbol_count()) +
                                                ", not n = " + std::to_string(n));
    }
  }

  SurveyResult result;
  result.family = family_from_records(n, previous.records, options.witness_limit);
  if (!previous.records.empty()) result.last_word = previous.records.back().word;
  if (previous.complete) {
    result.complete = true;
    return result;
  }

  std::filesystem::path tmp = path;
  tmp += ".partial";
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_failure, "cannot open " + tmp.string() + " for writing");
  for (const auto& record : previous.records) out << record_to_json(record) << '\n';

  SurveyOptions run = options;
  if (previous.resume_after && !previous.resume_after->empty()) run.start_after = previous.resume_after;
  run.on_record = [&](const SurveyRecord& record) {
    out << record_to_json(record) << '\n';
    result.family.add(record, options.witness_limit);
    if (options.on_record) options.on_record(record);
  };
  const SurveyResult fresh = run_survey(n, run);
  if (fresh.last_word) result.last_word = fresh.last_word;
  result.complete = fresh.complete;

  Checkpoint trailer;
  trailer.complete = fresh.complete;
  if (!fresh.complete) {
    trailer.resume_after = result.last_word ? result.last_word->word() : Dow();
  }
  out << trailer_json(trailer) << '\n';
  if (!out.flush()) throw Error(Errc::io_failure, "failed writing " + tmp.string());
  out.close();

  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::io_failure, "cannot move " + tmp.string() + " to " + path.string());
  return result;
}

}  // namespace gr
