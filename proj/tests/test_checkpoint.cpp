#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "gr/checkpoint.hpp"
#include "gr/error.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gr_checkpoint_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

gr::Error read_error(const fs::path& p) {
  try {
    gr::checkpoint_read(p);
  } catch (const gr::Error& e) {
    return e;
  }
  FAIL("expected a read error");
  return gr::Error(gr::Errc::invalid_argument, "");
}

}  // namespace

TEST_CASE("record format") {
  const auto record = gr::survey_record(gr::canonicalize(gr::Dow::parse("1212")));
  CHECK(gr::record_to_json(record) == R"({"word":"1 2 1 2","n":2,"gr":[1,1],"b_hist":{"2":4}})");
  CHECK(gr::record_from_json(gr::record_to_json(record)) == record);
  CHECK_THROWS_AS(gr::record_from_json(R"({"word":"2 1 2 1","n":2,"gr":[1,1],"b_hist":{"2":4}})"), gr::Error);
  CHECK_THROWS_AS(gr::record_from_json(R"({"word":"1 2 1 2","n":3,"gr":[1,1],"b_hist":{"2":4}})"), gr::Error);
  CHECK_THROWS_AS(gr::record_from_json(R"({"word":"1 2 1 2","n":2,"gr":[1,1],"b_hist":{"2":3}})"), gr::Error);
  CHECK_THROWS_AS(gr::record_from_json(R"({"word":"1 2 1 2","n":2,"gr":[1],"b_hist":{"2":4}})"), gr::Error);
  CHECK_THROWS_AS(gr::record_from_json("not json"), gr::Error);
}

TEST_CASE("write then read a complete survey") {
  TempDir dir;
  const fs::path file = dir.path / "n4.jsonl";
  const auto result = gr::survey_to_file(4, file, false);
  CHECK(result.complete);
  const auto cp = gr::checkpoint_read(file);
  CHECK(cp.complete);
  CHECK(cp.records.size() == 17);
  CHECK(gr::family_from_records(4, cp.records) == gr::survey(4));
  CHECK(result.family == gr::survey(4));

  gr::Checkpoint copy = cp;
  gr::checkpoint_write(dir.path / "copy.jsonl", copy);
  CHECK(slurp(dir.path / "copy.jsonl") == slurp(file));
  CHECK_FALSE(fs::exists(dir.path / "n4.jsonl.partial"));
}

TEST_CASE("interrupting and resuming reproduces an uninterrupted run") {
  TempDir dir;
  const fs::path full = dir.path / "full.jsonl";
  const fs::path part = dir.path / "part.jsonl";
  gr::survey_to_file(6, full, false);

  gr::SurveyOptions options;
  options.max_records = 277;  // half of the 554 classes
  const auto first = gr::survey_to_file(6, part, false, options);
  CHECK_FALSE(first.complete);
  const auto mid = gr::checkpoint_read(part);
  CHECK_FALSE(mid.complete);
  CHECK(mid.records.size() == 277);
  REQUIRE(mid.resume_after.has_value());
  CHECK(*mid.resume_after == mid.records.back().word.word());

  const auto second = gr::survey_to_file(6, part, true, gr::SurveyOptions{});
  CHECK(second.complete);
  CHECK(second.family == gr::survey(6));
  CHECK(slurp(part) == slurp(full));

  // Resuming a finished file is a no-op.
  const auto again = gr::survey_to_file(6, part, true);
  CHECK(again.complete);
  CHECK(again.family == gr::survey(6));
  CHECK(slurp(part) == slurp(full));
}

TEST_CASE("corrupt checkpoints name the bad line") {
  TempDir dir;
  const fs::path file = dir.path / "n3.jsonl";
  gr::survey_to_file(3, file, false);
  const std::string text = slurp(file);

  // Cut the third line in half.
  std::size_t third = 0;
  for (int i = 0; i < 2; ++i) third = text.find('\n', third) + 1;
  spit(file, text.substr(0, third + 10));
  auto e = read_error(file);
  CHECK(e.code() == gr::Errc::checkpoint_corrupt);
  CHECK(std::string(e.what()).find(":3:") != std::string::npos);

  // A damaged line in the middle.
  std::string damaged = text;
  damaged.replace(third, 1, "#");
  spit(file, damaged);
  e = read_error(file);
  CHECK(e.code() == gr::Errc::checkpoint_corrupt);
  CHECK(std::string(e.what()).find(":3:") != std::string::npos);

  // All records present but no trailer.
  spit(file, text.substr(0, text.rfind('{')));
  e = read_error(file);
  CHECK(e.code() == gr::Errc::checkpoint_incomplete);

  // Records for a different size.
  spit(file, text);
  CHECK_THROWS_AS(gr::survey_to_file(4, file, true), gr::Error);

  CHECK(read_error(dir.path / "missing.jsonl").code() == gr::Errc::io_failure);
}
