#include "gr/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gr/checkpoint.hpp"
#include "gr/dow.hpp"
#include "gr/error.hpp"
#include "gr/families.hpp"
#include "gr/ribbon.hpp"
#include "gr/survey.hpp"
#include "gr/verify.hpp"

namespace gr::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  const char* env = std::getenv(kThreadsEnv);
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0 || value > 1024) {
    throw UsageError(std::string(kThreadsEnv) + " must be a positive integer, got '" + env + "'");
  }
  return static_cast<unsigned>(value);
}

Dow parse_word(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  return Dow::parse(joined);
}

std::string join_ids(const std::vector<std::uint32_t>& ids) {
  std::string out;
  for (auto id : ids) {
    if (!out.empty()) out += ',';
    out += std::to_string(id + 1);
  }
  return out;
}

void print_trace(const Dow& w, const std::string& bitstring, std::ostream& out) {
  const AssemblyGraph g = AssemblyGraph::build(w);
  const EmbeddingChoice c = bitstring.empty() && g.vertex_count() == 0
                                ? EmbeddingChoice()
                                : EmbeddingChoice::from_bitstring(bitstring);
  if (c.size() != g.vertex_count()) {
    throw Error(Errc::choice_size_mismatch, "--bits has " + std::to_string(c.size()) +
                                                " digits but the graph has " +
                                                std::to_string(g.vertex_count()) + " vertices");
  }
  const BoundaryDecomposition dec = trace(g, c);
  out << "word: " << w.to_string() << '\n';
  out << "bits: " << c.to_bitstring() << '\n';
  out << "b: " << dec.count << '\n';
  out << "genus: " << genus(g, c) << '\n';
  if (g.trivial()) return;
  out << "edge from to components\n";
  const std::size_t len = w.length();
  for (std::size_t e = 0; e < len; ++e) {
    out << 'e' << e + 1 << ' ' << w[e] << ' ' << w[(e + 1) % len] << ' '
        << join_ids(edge_trace_components(g, c, e + 1)) << '\n';
  }
}

ProbeKind parse_probe_kind(const std::string& kind) {
  if (kind == "singleton-gap") return ProbeKind::singleton_gap;
  if (kind == "zero-one") return ProbeKind::zero_one;
  throw UsageError("unknown probe kind '" + kind + "' (expected singleton-gap or zero-one)");
}

Dow family_word(const std::string& name, const std::vector<int>& params) {
  const auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw UsageError("family " + name + " takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };
  if (name == "tangled-cord") {
    need(1);
    return tangled_cord(params[0]);
  }
  if (name == "repeat") {
    need(1);
    return repeat_word(params[0]);
  }
  if (name == "gamma-chain") {
    need(1);
    return gamma_chain(params[0]);
  }
  if (name == "gamma-hat") {
    need(0);
    return gamma_hat();
  }
  throw UsageError("unknown family '" + name + "' (expected tangled-cord, repeat, gamma-chain or gamma-hat)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel) {
  CLI::App app{"Genus ranges of assembly graphs given as double-occurrence words", "gr"};
  app.require_subcommand(1);

  unsigned threads = 1;
  std::vector<std::string> word_tokens;

  auto* canon = app.add_subcommand("canon", "Print the canonical form of a word");
  canon->add_option("word", word_tokens, "Double-occurrence word")->required();

  bool as_json = false;
  std::size_t cap = 26;
  auto* range_cmd = app.add_subcommand("genus-range", "Genus range over all 2^n ribbon graphs");
  range_cmd->add_option("word", word_tokens, "Double-occurrence word")->required();
  range_cmd->add_flag("--json", as_json, "Print the boundary-count histogram as JSON");
  range_cmd->add_option("--cap", cap, "Largest vertex count to enumerate")->capture_default_str();

  std::string bits;
  auto* trace_cmd = app.add_subcommand("trace", "Trace the boundary of one ribbon graph");
  trace_cmd->add_option("word", word_tokens, "Double-occurrence word")->required();
  trace_cmd->add_option("--bits", bits, "Big-endian connection bits for vertices 1..n")->required();

  std::size_t n = 0;
  std::string out_path, resume_path, format = "csv";
  std::size_t survey_cap = 9;
  auto* survey_cmd = app.add_subcommand("survey", "Genus-range histogram over all classes of size N");
  survey_cmd->add_option("N", n, "Number of vertices")->required();
  survey_cmd->add_option("--out", out_path, "Write per-class records (JSON lines) to FILE");
  survey_cmd->add_option("--resume", resume_path, "Continue an interrupted --out FILE");
  survey_cmd->add_option("--format", format, "Histogram format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  survey_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  survey_cmd->add_option("--cap", survey_cap, "Largest N accepted")->capture_default_str();

  int range_min = 0, range_max = 0;
  std::size_t limit = 10;
  auto* find_cmd = app.add_subcommand("find", "Least canonical words with a given genus range");
  find_cmd->add_option("N", n, "Number of vertices")->required();
  find_cmd->add_option("MIN", range_min, "Lowest genus")->required();
  find_cmd->add_option("MAX", range_max, "Highest genus")->required();
  find_cmd->add_option("--limit", limit, "Maximum number of words")->capture_default_str();
  find_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  std::string family_name;
  std::vector<int> family_params;
  auto* family_cmd = app.add_subcommand("family", "Print a word from a named family");
  family_cmd->add_option("NAME", family_name, "tangled-cord, repeat, gamma-chain or gamma-hat")->required();
  family_cmd->add_option("PARAMS", family_params, "Family parameters");

  int vertices = 0;
  auto* realize_cmd = app.add_subcommand("realize", "Construct a word with genus range [MIN, MAX]");
  realize_cmd->add_option("MIN", range_min, "Lowest genus")->required();
  realize_cmd->add_option("MAX", range_max, "Highest genus")->required();
  realize_cmd->add_option("VERTICES", vertices, "Number of vertices")->required();

  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property checks");
  verify_cmd->add_option("--max-n", verify_options.max_n, "Clamp every exhaustive size bound")
      ->capture_default_str();
  verify_cmd->add_option("--trials", verify_options.random_trials, "Random vertex-addition trials")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_options.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  std::string probe_kind;
  auto* probe_cmd = app.add_subcommand("probe", "Search a survey for counterexamples to a conjecture");
  probe_cmd->add_option("N", n, "Number of vertices")->required();
  probe_cmd->add_option("KIND", probe_kind, "singleton-gap or zero-one")->required();
  probe_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  try {
    threads = default_threads();
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*canon) {
      out << canonicalize(parse_word(word_tokens)).to_string() << '\n';
    } else if (*range_cmd) {
      const Dow w = parse_word(word_tokens);
      GenusRangeOptions options;
      options.cap = cap;
      options.threads = threads;
      const EmbeddingSpectrum spectrum = embedding_spectrum(AssemblyGraph::build(w), options);
      out << (as_json ? genus_range_json(w, spectrum) : spectrum.range.to_string()) << '\n';
    } else if (*trace_cmd) {
      print_trace(parse_word(word_tokens), bits, out);
    } else if (*survey_cmd) {
      if (!out_path.empty() && !resume_path.empty() && out_path != resume_path) {
        throw UsageError("--out and --resume name different files");
      }
      SurveyOptions options;
      options.threads = threads;
      options.cap = survey_cap;
      options.cancel = cancel;
      SurveyResult result;
      if (!resume_path.empty()) {
        result = survey_to_file(n, resume_path, true, options);
      } else if (!out_path.empty()) {
        result = survey_to_file(n, out_path, false, options);
      } else {
        result = run_survey(n, options);
      }
      if (!result.complete) {
        const std::string file = resume_path.empty() ? out_path : resume_path;
        err << "interrupted after " << result.family.classes << " classes";
        if (!file.empty()) err << "; continue with --resume " << file;
        err << '\n';
        return kDomainError;
      }
      emit_histogram(result.family, format == "json" ? HistogramFormat::json : HistogramFormat::csv, out);
    } else if (*find_cmd) {
      if (range_min < 0 || range_min > range_max) throw UsageError("need 0 <= MIN <= MAX");
      for (const auto& w : find_with_range(n, {range_min, range_max}, limit, threads)) {
        out << w.to_string() << '\n';
      }
    } else if (*family_cmd) {
      out << family_word(family_name, family_params).to_string() << '\n';
    } else if (*realize_cmd) {
      RealizeOptions options;
      options.threads = threads;
      out << realize(range_min, range_max, vertices, options).to_string() << '\n';
    } else if (*verify_cmd) {
      verify_options.threads = threads;
      const auto start = std::chrono::steady_clock::now();
      const std::vector<CheckResult> results = run_property_suite(verify_options);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      std::size_t passed = 0;
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
        passed += r.passed;
      }
      out << passed << '/' << results.size() << " checks passed in " << std::fixed << std::setprecision(1)
          << elapsed.count() << " s\n";
      if (passed != results.size()) return kDomainError;
    } else if (*probe_cmd) {
      out << conjecture_probe(n, parse_probe_kind(probe_kind), threads).to_text();
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kDomainError;
  }
  out.flush();
  return kOk;
}

}  // namespace gr::cli
