#include "doctest.h"
#include "gr/verify.hpp"

TEST_CASE("every property check passes at its default bounds") {
  const auto results = gr::run_property_suite();
  CHECK(results.size() == 16);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("max_n clamps the work") {
  gr::VerifyOptions small;
  small.max_n = 3;
  small.random_trials = 200;
  const auto full = gr::check_consecutive_ranges({});
  const auto clamped = gr::check_consecutive_ranges(small);
  CHECK(clamped.passed);
  CHECK(clamped.cases == 1 + 1 + 2 + 5);
  CHECK(clamped.cases < full.cases);
  CHECK(gr::check_vertex_addition(small).cases == 400);
}

TEST_CASE("random trials are reproducible") {
  gr::VerifyOptions options;
  options.random_trials = 500;
  const auto a = gr::check_vertex_addition(options);
  const auto b = gr::check_vertex_addition(options);
  CHECK(a.passed);
  CHECK(a.cases == b.cases);
}
