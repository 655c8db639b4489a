#include <algorithm>
#include <set>

#include "doctest.h"
#include "gr/assembly_graph.hpp"
#include "gr/enumerate.hpp"
#include "gr/error.hpp"
#include "gr/families.hpp"

using gr::AssemblyGraph;
using gr::Dow;

TEST_CASE("graph sizes and loops") {
  const auto g = AssemblyGraph::build(Dow::parse("1212"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 4);
  CHECK(g.dart_count() == 8);
  for (gr::DartId d = 0; d < g.dart_count(); ++d) CHECK(g.vertex_of(d) != g.vertex_of(AssemblyGraph::twin(d)));

  const auto fig8 = AssemblyGraph::build(Dow::parse("11"));
  CHECK(fig8.vertex_count() == 1);
  CHECK(fig8.edge_count() == 2);
  for (gr::DartId d = 0; d < 4; ++d) {
    // Each loop edge has both ends at the vertex, in neighboring slots.
    const gr::DartId t = AssemblyGraph::twin(d);
    CHECK(fig8.vertex_of(t) == 0);
    const int gap = (static_cast<int>(fig8.slot_of(d)) - static_cast<int>(fig8.slot_of(t)) + 4) % 4;
    CHECK((gap == 1 || gap == 3));
  }

  const auto trivial = AssemblyGraph::build(Dow());
  CHECK(trivial.trivial());
  CHECK(trivial.vertex_count() == 0);
}

TEST_CASE("darts are a twin-paired partition of the rotations") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : gr::canonical_words(n)) {
      const auto g = AssemblyGraph::build(w.word());
      std::vector<int> hits(g.dart_count(), 0);
      for (gr::VertexIndex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t s = 0; s < 4; ++s) {
          const gr::DartId d = g.rotation(v)[s];
          ++hits[d];
          CHECK(g.vertex_of(d) == v);
          CHECK(g.slot_of(d) == s);
        }
        // The transversal passes between opposite slots.
        const auto& rot = g.rotation(v);
        const auto following = [&](gr::DartId in) {
          return static_cast<gr::DartId>(2 * ((AssemblyGraph::edge_of(in) + 1) % g.edge_count()));
        };
        CHECK(rot[gr::kOut1] == following(rot[gr::kIn1]));
        CHECK(rot[gr::kOut2] == following(rot[gr::kIn2]));
      }
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      for (gr::DartId d = 0; d < g.dart_count(); ++d) CHECK(AssemblyGraph::twin(AssemblyGraph::twin(d)) == d);
    }
  }
}

TEST_CASE("tangled cord incidence at v1") {
  for (int n = 3; n <= 7; ++n) {
    const auto g = AssemblyGraph::build(gr::tangled_cord(n));
    std::vector<std::size_t> edges;
    for (gr::DartId d : g.rotation(g.vertex_of_symbol(1))) edges.push_back(AssemblyGraph::edge_of(d) + 1);
    const std::size_t two_n = 2 * static_cast<std::size_t>(n);
    // e_1, e_3, e_{2n}, e_2 up to rotation and reversal.
    const std::vector<std::size_t> want = {1, 3, two_n, 2};
    bool found = false;
    for (int r = 0; r < 4 && !found; ++r) {
      std::vector<std::size_t> rot(4), rev(4);
      for (int k = 0; k < 4; ++k) {
        rot[k] = want[(k + r) % 4];
        rev[k] = want[(r - k + 8) % 4];
      }
      found = edges == rot || edges == rev;
    }
    CHECK(found);
  }
}

TEST_CASE("dump format") {
  const auto g = AssemblyGraph::build(Dow::parse("121323"));
  CHECK(g.dump() == "v1: 6 2 1 3\nv2: 1 4 2 5\nv3: 3 5 4 6\n");
}

TEST_CASE("transversal read-back recovers the word") {
  CHECK(gr::equivalent(gr::transversal_readback(AssemblyGraph::build(Dow::parse("121323"))), Dow::parse("121323")));
  CHECK(gr::equivalent(gr::transversal_readback(AssemblyGraph::build(Dow::parse("12314324"))),
                       Dow::parse("12314324")));
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : gr::canonical_words(n)) {
      CHECK(gr::equivalent(gr::transversal_readback(AssemblyGraph::build(w.word())), w.word()));
    }
  }
}

TEST_CASE("vertex lookup") {
  const auto g = AssemblyGraph::build(Dow::parse("5 9 5 9"));
  CHECK(g.vertex_of_symbol(5) == 0);
  CHECK(g.vertex_of_symbol(9) == 1);
  CHECK(g.symbol(1) == 9);
  CHECK_THROWS_AS(g.vertex_of_symbol(7), gr::Error);
}
