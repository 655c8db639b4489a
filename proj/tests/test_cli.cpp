#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "gr/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = gr::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("canon and genus-range") {
  CHECK(run({"canon", "2121"}).out == "1 2 1 2\n");
  CHECK(run({"canon", "1", "2", "1", "2"}).out == "1 2 1 2\n");
  CHECK(run({"genus-range", "12314324"}).out == "[0,2]\n");
  CHECK(run({"genus-range", "1212", "--json"}).out ==
        "{\"word\":\"1 2 1 2\",\"n\":2,\"genus_range\":[1,1],\"boundary_counts\":{\"2\":4}}\n");
  const auto refused = run({"genus-range", "1234512345", "--cap", "4"});
  CHECK(refused.status == 1);
  CHECK(refused.err.find("cap") != std::string::npos);
}

TEST_CASE("trace") {
  const auto r = run({"trace", "121323", "--bits", "001"});
  CHECK(r.status == 0);
  const std::string head = "word: 1 2 1 3 2 3\nbits: 001\nb: 3\ngenus: 1\nedge from to components\n";
  REQUIRE(r.out.rfind(head, 0) == 0);
  std::istringstream rows(r.out.substr(head.size()));
  std::set<std::string> seen;
  int edges = 0;
  for (std::string name, from, to, ids; rows >> name >> from >> to >> ids; ++edges) {
    CHECK(name == "e" + std::to_string(edges + 1));
    const auto comma = ids.find(',');
    const std::vector<std::string> parts =
        comma == std::string::npos ? std::vector<std::string>{ids}
                                   : std::vector<std::string>{ids.substr(0, comma), ids.substr(comma + 1)};
    if (parts.size() == 2) CHECK(parts[0] != parts[1]);
    for (const auto& id : parts) {
      CHECK((id == "1" || id == "2" || id == "3"));
      seen.insert(id);
    }
  }
  CHECK(edges == 6);
  CHECK(seen.size() == 3);
  CHECK(run({"trace", "121323", "--bits", "000"}).out.find("b: 1\ngenus: 2\n") != std::string::npos);
  CHECK(run({"trace", "121323", "--bits", "01"}).status == 1);
  CHECK(run({"trace", "121323"}).status == 2);
}

TEST_CASE("family and realize") {
  CHECK(run({"family", "tangled-cord", "3"}).out == "1 2 1 3 2 3\n");
  CHECK(run({"family", "repeat", "5"}).out == "1 2 3 4 5 1 2 3 4 5\n");
  CHECK(run({"family", "gamma-hat"}).out == "1 2 3 2 4 5 1 5 3 6 4 6\n");
  CHECK(run({"family", "gamma-chain", "2"}).out == "1 2 1 2 5 3 4 3 4 5\n");
  CHECK(run({"family", "repeat", "4"}).status == 1);
  CHECK(run({"family", "moebius", "3"}).status == 2);
  CHECK(run({"family", "gamma-hat", "3"}).status == 2);

  CHECK(run({"realize", "1", "2", "3"}).out == "1 2 1 3 2 3\n");
  const auto refused = run({"realize", "4", "4", "7"});
  CHECK(refused.status == 1);
  CHECK(refused.out.empty());
  CHECK(refused.err.find("[n,n]") != std::string::npos);
  CHECK(refused.err.find("UnrealizableByTheorem") != std::string::npos);
}

TEST_CASE("survey, find and probe") {
  CHECK(run({"survey", "3"}).out == "range_min,range_max,count\n0,0,2\n0,1,1\n1,1,1\n1,2,1\n");
  CHECK(run({"survey", "6", "--threads", "3"}).out == run({"survey", "6"}).out);
  CHECK(run({"survey", "4", "--format", "json"}).out.rfind("{\"n\":4,\"classes\":17,", 0) == 0);
  CHECK(run({"survey", "10"}).status == 1);
  CHECK(run({"survey", "3", "--format", "xml"}).status == 2);
  CHECK(run({"find", "5", "2", "2"}).out == "1 2 1 2 3 4 5 4 5 3\n");
  CHECK(run({"find", "4", "2", "2"}).out.empty());
  CHECK(run({"probe", "3", "zero-one"}).out.find("every [0,1] class") != std::string::npos);
  CHECK(run({"probe", "3", "nonsense"}).status == 2);
}

TEST_CASE("survey files and resume") {
  const auto dir = std::filesystem::temp_directory_path() / ("gr_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.jsonl").string();
  const std::string b = (dir / "b.jsonl").string();
  CHECK(run({"survey", "5", "--out", a}).status == 0);
  CHECK(run({"survey", "5", "--resume", b}).status == 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(run({"survey", "5", "--out", a, "--resume", b}).status == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", "--max-n", "3", "--trials", "100"});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("16/16 checks passed") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"canon"}).status == 2);
  CHECK(run({"canon", "1212", "--bogus"}).status == 2);
  const auto bad = run({"canon", "123"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("NotDoubleOccurrence") != std::string::npos);
  const auto help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("genus-range") != std::string::npos);
}

TEST_CASE("thread count from the environment") {
  ::setenv(gr::cli::kThreadsEnv, "zero", 1);
  CHECK(run({"survey", "3"}).status == 2);
  ::setenv(gr::cli::kThreadsEnv, "2", 1);
  CHECK(run({"survey", "3"}).status == 0);
  ::unsetenv(gr::cli::kThreadsEnv);
}
