#include "doctest.h"
#include "gr/enumerate.hpp"
#include "gr/error.hpp"
#include "gr/families.hpp"
#include "gr/ribbon.hpp"
#include "oracles.hpp"

using gr::AssemblyGraph;
using gr::Dow;
using gr::EmbeddingChoice;
using gr::GenusRange;

namespace {

oracle::Word letters(const Dow& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST_CASE("worked example 121323") {
  const auto g = AssemblyGraph::build(Dow::parse("121323"));
  const EmbeddingChoice zero(3);
  CHECK(gr::boundary_count(g, zero) == 1);
  CHECK(gr::genus(g, zero) == 2);
  const EmbeddingChoice flipped = gr::flip_vertex(zero, 2);
  CHECK(gr::boundary_count(g, flipped) == 3);
  CHECK(gr::genus(g, flipped) == 1);
  CHECK(gr::genus_range(g) == GenusRange{1, 2});
  for (std::size_t e = 1; e <= 6; ++e) CHECK(gr::edge_trace_components(g, zero, e).size() == 1);
}

TEST_CASE("small graphs") {
  const auto fig8 = AssemblyGraph::build(Dow::parse("11"));
  CHECK(gr::boundary_count(fig8, EmbeddingChoice(1, 0)) == 3);
  CHECK(gr::boundary_count(fig8, EmbeddingChoice(1, 1)) == 3);
  const auto two_loops = AssemblyGraph::build(Dow::parse("1122"));
  for (std::uint64_t bits = 0; bits < 4; ++bits) CHECK(gr::genus(two_loops, EmbeddingChoice(2, bits)) == 0);
  const auto trivial = AssemblyGraph::build(Dow());
  CHECK(gr::boundary_count(trivial, EmbeddingChoice()) == 2);
  CHECK(gr::genus_range(trivial) == GenusRange{0, 0});
}

TEST_CASE("known genus ranges") {
  CHECK(gr::genus_range(Dow::parse("1212")) == GenusRange{1, 1});
  CHECK(gr::genus_range(Dow::parse("121233")) == GenusRange{1, 1});
  CHECK(gr::genus_range(Dow::parse("123123")) == GenusRange{0, 1});
  CHECK(gr::genus_range(Dow::parse("12314324")) == GenusRange{0, 2});
  CHECK(gr::genus_range(Dow::parse("1234342515")) == GenusRange{2, 2});
  CHECK(gr::genus_range(Dow::parse("123245153646")) == GenusRange{3, 3});
  CHECK(gr::genus_range(Dow::parse("123451256346")) == GenusRange{0, 3});
  CHECK(gr::genus_range(Dow::parse("12345416365277")) == GenusRange{3, 3});
  CHECK(gr::genus_range(Dow::parse("12324515364677")) == GenusRange{3, 3});
  for (const char* w : {"1234214355", "1231432455", "1234215345"}) {
    CHECK(gr::genus_range(Dow::parse(w)) == GenusRange{0, 2});
  }
}

TEST_CASE("boundary counts agree with the word-level oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : gr::canonical_words(n)) {
      const auto g = AssemblyGraph::build(w.word());
      gr::BoundaryTracer tracer(g);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const std::size_t expected = oracle::boundary_count(letters(w.word()), bits);
        REQUIRE(gr::boundary_count(g, EmbeddingChoice(n, bits)) == expected);
        REQUIRE(tracer.count(bits) == expected);
        REQUIRE(gr::trace(g, EmbeddingChoice(n, bits)).count == expected);
      }
    }
  }
}

TEST_CASE("oracle agrees on non-canonical spellings too") {
  for (const char* text : {"3 1 2 1 2 3", "2 1 3 1 3 2 4 4", "9 4 9 7 4 7"}) {
    const Dow w = Dow::parse(text);
    const auto g = AssemblyGraph::build(w);
    // The oracle indexes bits by symbol rank, as the library does.
    oracle::Word ranked;
    const auto syms = w.symbols();
    for (auto s : w.letters()) {
      ranked.push_back(static_cast<std::uint32_t>(std::lower_bound(syms.begin(), syms.end(), s) - syms.begin() + 1));
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << w.symbol_count()); ++bits) {
      CHECK(gr::boundary_count(g, EmbeddingChoice(w.symbol_count(), bits)) == oracle::boundary_count(ranked, bits));
    }
  }
}

TEST_CASE("spectrum histogram and threads") {
  const auto g = AssemblyGraph::build(gr::tangled_cord(13));
  gr::GenusRangeOptions one;
  gr::GenusRangeOptions many;
  many.threads = 4;
  const auto a = gr::embedding_spectrum(g, one);
  const auto b = gr::embedding_spectrum(g, many);
  CHECK(a.boundary_histogram == b.boundary_histogram);
  CHECK(a.choices == (1u << 13));
  CHECK(a.range == b.range);
  CHECK(gr::embedding_spectrum(AssemblyGraph::build(Dow::parse("1212"))).boundary_histogram ==
        std::vector<std::uint64_t>{0, 0, 4, 0, 0});
}

TEST_CASE("early exit gives the same range") {
  gr::GenusRangeOptions options;
  options.verify_consecutive = false;
  options.early_exit = true;
  for (const auto& w : gr::canonical_words(6)) {
    CHECK(gr::genus_range(w.word(), options) == gr::genus_range(w.word()));
  }
}

TEST_CASE("enumeration cap is enforced") {
  gr::GenusRangeOptions options;
  options.cap = 4;
  CHECK_THROWS_AS(gr::genus_range(Dow::parse("1234512345"), options), gr::Error);
  try {
    gr::genus_range(gr::tangled_cord(27));
    FAIL("expected refusal");
  } catch (const gr::Error& e) {
    CHECK(e.code() == gr::Errc::size_over_cap);
  }
}

TEST_CASE("choices") {
  const auto c = EmbeddingChoice::from_bitstring("101");
  CHECK(c.size() == 3);
  CHECK(c.reversed(0));
  CHECK_FALSE(c.reversed(1));
  CHECK(c.reversed(2));
  CHECK(c.to_bitstring() == "101");
  CHECK(c.complement().to_bitstring() == "010");
  CHECK(gr::flip_vertex(gr::flip_vertex(c, 1), 1) == c);
  CHECK_THROWS_AS(gr::flip_vertex(c, 3), gr::Error);
  CHECK_THROWS_AS(EmbeddingChoice::from_bitstring("102"), gr::Error);
  const auto g = AssemblyGraph::build(Dow::parse("1212"));
  CHECK_THROWS_AS(gr::trace(g, c), gr::Error);
  CHECK_THROWS_AS(gr::edge_trace_components(g, EmbeddingChoice(2), 5), gr::Error);
  CHECK_THROWS_AS(gr::edge_trace_components(g, EmbeddingChoice(2), 0), gr::Error);
}

TEST_CASE("edge tracing on 1212") {
  const auto g = AssemblyGraph::build(Dow::parse("1212"));
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    const EmbeddingChoice c(2, bits);
    const auto dec = gr::trace(g, c);
    CHECK(dec.count == 2);
    for (std::size_t e = 1; e <= 4; ++e) {
      const auto ids = gr::edge_trace_components(g, c, e);
      CHECK((ids.size() == 1 || ids.size() == 2));
      CHECK(ids.front() < dec.count);
    }
  }
}

TEST_CASE("multi-boundary construction") {
  const auto check_at_least_two = [](const Dow& w) {
    const auto g = AssemblyGraph::build(w);
    const auto c = gr::construct_multiboundary(g);
    const std::size_t b = gr::boundary_count(g, c);
    CHECK(b >= 2);
    return b;
  };
  CHECK(check_at_least_two(Dow::parse("1212")) == 2);
  CHECK(check_at_least_two(gr::tangled_cord(5)) == 3);
  const std::size_t hat = check_at_least_two(gr::gamma_hat());
  CHECK((hat == 2 || hat == 4));
  CHECK_THROWS_AS(gr::construct_multiboundary(AssemblyGraph::build(Dow())), gr::Error);
}

TEST_CASE("genus ranges agree with the oracle's genus sets") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : gr::canonical_words(n)) {
      const auto set = oracle::genera(letters(w.word()));
      CHECK(gr::genus_range(w.word()) == GenusRange{*set.begin(), *set.rbegin()});
    }
  }
}
