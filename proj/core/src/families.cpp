#include "gr/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gr/error.hpp"

namespace gr {

namespace {

// Smallest known words with genus range [0, b], indexed by b.
struct FullRangeWitness {
  int top;
  const char* word;
};
constexpr FullRangeWitness kFullRangeWitnesses[] = {
    {1, "123123"},
    {2, "12314324"},
    {3, "123451256346"},
    {4, "1231432456758768"},
};

// Sizes whose genus-range families have been surveyed exhaustively.
constexpr int kSurveyedVertices = 8;

std::string range_text(int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

Dow pad_to(Dow w, int vertices) {
  while (static_cast<int>(w.symbol_count()) < vertices) w = insert_loop(w, 0);
  return w;
}

void verify(const Dow& w, GenusRange expected, const RealizeOptions& options) {
  if (w.symbol_count() > options.verify_cap) return;
  GenusRangeOptions gro;
  gro.cap = options.verify_cap;
  gro.threads = options.threads;
  const GenusRange got = genus_range(w, gro);
  if (got != expected) {
    throw std::logic_error("constructed word " + w.to_string() + " has genus range " +
                           got.to_string() + ", expected " + expected.to_string());
  }
}

// Some minimum-genus embedding has both sides of the edge entering `slot`
// on one boundary component. Splicing a pretzel there keeps that genus, so
// the lift raises only the top of the range.
bool edge_shared_at_min_genus(const Dow& w, std::size_t slot) {
  const AssemblyGraph g = AssemblyGraph::build(w);
  const std::size_t n = g.vertex_count();
  const std::size_t len = w.length();
  const auto edge = static_cast<DartId>((slot + len - 1) % len);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::size_t b_max = 0;
  BoundaryTracer tracer(g);
  for (std::uint64_t bits = 0; bits < total; ++bits) b_max = std::max(b_max, tracer.count(bits));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (tracer.count(bits) != b_max) continue;
    const BoundaryDecomposition dec = trace(g, EmbeddingChoice(n, bits));
    if (dec.orbit_of[2 * edge] == dec.orbit_of[2 * edge + 1]) return true;
  }
  return false;
}

Dow lift_top(const Dow& w) {
  for (std::size_t slot = 0; slot < w.length(); ++slot) {
    if (edge_shared_at_min_genus(w, slot)) return insert_pretzel(w, slot);
  }
  throw std::logic_error("no edge of " + w.to_string() + " admits a top-genus pretzel lift");
}

// Minimal construction for [a, b], a < b, before padding.
Dow build_range(int a, int b) {
  if (a == 0) {
    for (const auto& witness : kFullRangeWitnesses) {
      if (witness.top == b) return Dow::parse(witness.word);
    }
    throw Error(Errc::not_known_realizable,
                "no full-range witness for " + range_text(0, b) +
                    " is available (known witnesses reach [0,4])");
  }
  if (b == a + 1) return tangled_cord(2 * a + 1);
  return lift_top(build_range(a, b - 1));
}

int min_vertices_for_range(int a, int b) {
  if (a == 0) return b == 1 ? 3 : 2 * b;
  return 2 * b - 1;
}

}  // namespace

int chain_vertex_count(int k, int l) { return 7 * k + 3 * l - 1; }

PsiRecord psi(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "psi is defined for n >= 1");
  PsiRecord r;
  r.n = n;
  r.K = (n + 1) / 7;
  r.L = (n + 1 - 7 * r.K) / 3;
  r.psi = 3 * r.K + r.L;
  return r;
}

Dow tangled_cord(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "tangled cord needs n >= 1");
  std::vector<Symbol> letters{1, 1};
  for (int k = 1; k < n; ++k) {
    const auto next = static_cast<Symbol>(k + 1);
    letters.back() = next;
    letters.push_back(static_cast<Symbol>(k));
    letters.push_back(next);
  }
  return Dow(std::move(letters));
}

GenusRange tangled_cord_range(int n) {
  if (n < 2) throw Error(Errc::invalid_argument, "tangled cord range is stated for n >= 2");
  if (n % 2 == 0) return {(n - 2) / 2, n / 2};
  return {(n - 1) / 2, (n + 1) / 2};
}

Dow repeat_word(int n) {
  if (n < 3 || n % 2 == 0) {
    throw Error(Errc::invalid_argument,
                "repeat word 1..n 1..n has genus range [0,1] only for odd n >= 3; got n = " +
                    std::to_string(n));
  }
  std::vector<Symbol> letters;
  for (int rep = 0; rep < 2; ++rep) {
    for (int s = 1; s <= n; ++s) letters.push_back(static_cast<Symbol>(s));
  }
  return Dow(std::move(letters));
}

Dow pretzel() { return Dow({1, 2, 1, 2}); }

Dow gamma_hat() { return Dow::parse("123245153646"); }

Dow gamma_chain(int m) {
  if (m < 1) throw Error(Errc::invalid_argument, "gamma chain needs m >= 1");
  Dow w = pretzel();
  for (int i = 1; i < m; ++i) w = cross_sum(w, pretzel(), 0, 0);
  return w;
}

Dow realize_singleton(int h, int vertices, const RealizeOptions& options) {
  if (h < 0 || vertices < 0) throw Error(Errc::invalid_argument, "h and vertices must be >= 0");
  if (h == 0) {
    Dow w = pad_to(Dow(), vertices);
    verify(w, {0, 0}, options);
    return w;
  }
  const int bound = vertices >= 1 ? psi(vertices).psi : 0;
  if (h > bound) {
    throw Error(Errc::not_known_realizable,
                "[" + std::to_string(h) + "," + std::to_string(h) + "] at " +
                    std::to_string(vertices) + " vertices exceeds psi = " + std::to_string(bound) +
                    (vertices <= kSurveyedVertices
                         ? "; the exhaustive survey finds no such graph"
                         : "; no construction is known and realizability is open"));
  }
  const int hats = h / 3;
  const int pretzels = h % 3;
  Dow w;
  bool first = true;
  auto append = [&](const Dow& block) {
    w = first ? block : cross_sum(w, block, 0, 0);
    first = false;
  };
  for (int i = 0; i < hats; ++i) append(gamma_hat());
  for (int i = 0; i < pretzels; ++i) append(pretzel());
  w = pad_to(std::move(w), vertices);
  verify(w, {h, h}, options);
  return w;
}

Dow realize_range(int a, int b, int vertices, const RealizeOptions& options) {
  if (a < 0 || b <= a || vertices < 0) {
    throw Error(Errc::invalid_argument, "need 0 <= a < b and vertices >= 0; got a=" +
                                            std::to_string(a) + " b=" + std::to_string(b) +
                                            " vertices=" + std::to_string(vertices));
  }
  const int half = (vertices + 1) / 2;
  if (b > half) {
    throw Error(Errc::unrealizable_by_theorem,
                "genus of a graph with " + std::to_string(vertices) + " vertices is at most " +
                    std::to_string(half) + " (b >= 1 and genus = (n - b + 2)/2), so " +
                    range_text(a, b) + " is impossible");
  }
  if (vertices % 2 == 1 && a == 0 && b == half) {
    throw Error(Errc::unrealizable_by_theorem,
                "no graph with 2n-1 vertices has genus range [0,n]: genus 0 makes the graph "
                "planar, and every embedding of a planar graph has at least two boundary "
                "components, so genus n is unreachable");
  }
  if (vertices < min_vertices_for_range(a, b)) {
    throw Error(Errc::not_known_realizable,
                range_text(a, b) + " does not occur among graphs with " + std::to_string(vertices) +
                    " vertices (exhaustive survey)");
  }
  Dow w = pad_to(build_range(a, b), vertices);
  verify(w, {a, b}, options);
  return w;
}

Dow realize(int a, int b, int vertices, const RealizeOptions& options) {
  if (a < 0 || b < a || vertices < 0) {
    throw Error(Errc::invalid_argument, "need 0 <= min <= max and vertices >= 0");
  }
  if (a == b) {
    const int half = (vertices + 1) / 2;
    if (a > half) {
      throw Error(Errc::unrealizable_by_theorem,
                  "genus of a graph with " + std::to_string(vertices) + " vertices is at most " +
                      std::to_string(half));
    }
    if (vertices % 2 == 1 && a == half && a > 0) {
      throw Error(Errc::unrealizable_by_theorem,
                  "no graph with 2n-1 vertices has genus range [n,n]: every assembly graph has an "
                  "embedding with at least two boundary components (a boundary curve closing "
                  "along a cycle of odd-indexed edges), so genus n is always missed");
    }
    return realize_singleton(a, vertices, options);
  }
  return realize_range(a, b, vertices, options);
}

}  // namespace gr
