#include "gr/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "gr/enumerate.hpp"
#include "gr/families.hpp"
#include "gr/ribbon.hpp"
#include "gr/survey.hpp"

namespace gr {

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& detail) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = detail;
    }
  }
  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::size_t bound(const VerifyOptions& options, std::size_t limit) { return std::min(limit, options.max_n); }

std::uint64_t choice_count(std::size_t n) { return std::uint64_t{1} << n; }

int genus_of(std::size_t n, std::size_t b) { return (static_cast<int>(n) - static_cast<int>(b) + 2) / 2; }

std::string describe(const Dow& w, std::uint64_t bits) {
  return "word " + w.to_string() + " bits " + EmbeddingChoice(w.symbol_count(), bits).to_bitstring();
}

// Number of orbits of a permutation on [0, size).
std::size_t orbit_count(const std::vector<DartId>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++orbits;
    for (DartId d = static_cast<DartId>(start); !seen[d]; d = perm[d]) seen[d] = true;
  }
  return orbits;
}

std::set<int> achieved_genera(const AssemblyGraph& g) {
  std::set<int> out;
  if (g.trivial()) return {0};
  BoundaryTracer tracer(g);
  const std::size_t n = g.vertex_count();
  for (std::uint64_t bits = 0; bits < choice_count(n); ++bits) out.insert(genus_of(n, tracer.count(bits)));
  return out;
}

GenusRange raw_range(const Dow& w) {
  GenusRangeOptions options;
  options.cap = 64;
  options.verify_consecutive = false;
  return genus_range(w, options);
}

const RangeFamily& cached_family(std::size_t n, unsigned threads) {
  static std::mutex mutex;
  static std::map<std::size_t, RangeFamily> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, survey(n, 1, threads)).first;
  return it->second;
}

}  // namespace

CheckResult check_consecutive_ranges(const VerifyOptions& options) {
  Check check("achieved genera are consecutive");
  for (std::size_t n = 0; n <= bound(options, 6); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const std::set<int> genera = achieved_genera(AssemblyGraph::build(w.word()));
      const bool ok = static_cast<int>(genera.size()) == *genera.rbegin() - *genera.begin() + 1;
      check.expect(ok, "word " + w.to_string() + " skips a genus");
    }
  }
  return std::move(check).done();
}

CheckResult check_boundary_parity(const VerifyOptions& options) {
  Check check("boundary count has the parity of n");
  for (std::size_t n = 1; n <= bound(options, 6); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const AssemblyGraph g = AssemblyGraph::build(w.word());
      BoundaryTracer tracer(g);
      for (std::uint64_t bits = 0; bits < choice_count(n); ++bits) {
        const std::size_t b = tracer.count(bits);
        check.expect(b % 2 == n % 2 && b >= 1 && b <= n + 2,
                     describe(w.word(), bits) + " has b = " + std::to_string(b));
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_successor_permutation(const VerifyOptions& options) {
  Check check("face successor is a permutation; both orientations agree");
  for (std::size_t n = 1; n <= bound(options, 5); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const AssemblyGraph g = AssemblyGraph::build(w.word());
      const std::size_t darts = g.dart_count();
      for (std::uint64_t bits = 0; bits < choice_count(n); ++bits) {
        std::vector<DartId> forward(darts), backward(darts);
        std::vector<bool> hit(darts, false);
        bool injective = true;
        const auto reversed_at = [&](DartId d) {
          const VertexIndex v = g.vertex_of(d);
          return (((bits >> v) & 1u) != 0) != g.reference_reversed(v);
        };
        for (DartId d = 0; d < darts; ++d) {
          const DartId t = AssemblyGraph::twin(d);
          forward[d] = g.rotation_next(t, reversed_at(t));
          backward[d] = AssemblyGraph::twin(g.rotation_next(d, reversed_at(d)));
          if (hit[forward[d]]) injective = false;
          hit[forward[d]] = true;
        }
        const std::size_t b = boundary_count(g, EmbeddingChoice(n, bits));
        check.expect(injective && orbit_count(forward) == b && orbit_count(backward) == b,
                     describe(w.word(), bits) + " disagrees between tracing conventions");
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_mirror_invariance(const VerifyOptions& options) {
  Check check("reversing every vertex keeps b");
  for (std::size_t n = 1; n <= bound(options, 6); ++n) {
    const std::uint64_t all = choice_count(n) - 1;
    for (const auto& w : canonical_words(n, options.threads)) {
      BoundaryTracer tracer(AssemblyGraph::build(w.word()));
      for (std::uint64_t bits = 0; bits <= all; ++bits) {
        check.expect(tracer.count(bits) == tracer.count(bits ^ all), describe(w.word(), bits));
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_single_flip(const VerifyOptions& options) {
  Check check("one connection change moves b by 0 or 2");
  for (std::size_t n = 1; n <= bound(options, 5); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      BoundaryTracer tracer(AssemblyGraph::build(w.word()));
      for (std::uint64_t bits = 0; bits < choice_count(n); ++bits) {
        const auto b = static_cast<long>(tracer.count(bits));
        for (std::size_t v = 0; v < n; ++v) {
          const auto b2 = static_cast<long>(tracer.count(bits ^ (std::uint64_t{1} << v)));
          const long delta = b2 - b;
          check.expect(delta == 0 || delta == 2 || delta == -2,
                       describe(w.word(), bits) + " flip of vertex " + std::to_string(v + 1));
        }
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_edge_trace_cardinality(const VerifyOptions& options) {
  Check check("each edge is traced by one or two components");
  for (std::size_t n = 1; n <= bound(options, 5); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const AssemblyGraph g = AssemblyGraph::build(w.word());
      for (std::uint64_t bits = 0; bits < choice_count(n); ++bits) {
        const EmbeddingChoice c(n, bits);
        for (std::size_t e = 1; e <= g.edge_count(); ++e) {
          const std::size_t k = edge_trace_components(g, c, e).size();
          check.expect(k == 1 || k == 2, describe(w.word(), bits) + " edge " + std::to_string(e));
        }
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_loop_invariance(const VerifyOptions& options) {
  Check check("loop insertion keeps the genus range");
  for (std::size_t n = 0; n <= bound(options, 5); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const GenusRange r = raw_range(w.word());
      for (std::size_t p = 0; p <= w.word().length(); ++p) {
        const Dow looped = insert_loop(w.word(), p);
        check.expect(raw_range(looped) == r, "loop at " + std::to_string(p) + " in " + w.to_string());
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_cross_sum_additivity(const VerifyOptions& options) {
  Check check("cross sums add genus ranges");
  const std::size_t top = bound(options, 3);
  std::vector<std::pair<Dow, GenusRange>> words;
  for (std::size_t n = 0; n <= top; ++n) {
    for (const auto& w : canonical_words(n, options.threads)) words.emplace_back(w.word(), raw_range(w.word()));
  }
  for (const auto& [w1, r1] : words) {
    for (const auto& [w2, r2] : words) {
      const std::size_t cuts1 = std::max<std::size_t>(1, w1.length());
      const std::size_t cuts2 = std::max<std::size_t>(1, w2.length());
      for (std::size_t c1 = 0; c1 < cuts1; ++c1) {
        for (std::size_t c2 = 0; c2 < cuts2; ++c2) {
          const GenusRange sum = raw_range(cross_sum(w1, w2, c1, c2));
          check.expect(sum == GenusRange{r1.min + r2.min, r1.max + r2.max},
                       "cross sum of " + w1.to_string() + " and " + w2.to_string() + " at cuts " +
                           std::to_string(c1) + "," + std::to_string(c2) + " gave " + sum.to_string());
        }
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_pretzel_insertion(const VerifyOptions& options) {
  Check check("pretzel insertion raises the top genus; the bottom follows the edge's sides");
  for (std::size_t n = 1; n <= bound(options, 4); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const AssemblyGraph g = AssemblyGraph::build(w.word());
      const GenusRange r = raw_range(w.word());
      const std::size_t len = w.word().length();
      std::vector<BoundaryDecomposition> minimal;
      for (std::uint64_t bits = 0; bits < choice_count(n); ++bits) {
        BoundaryDecomposition dec = trace(g, EmbeddingChoice(n, bits));
        if (genus_of(n, dec.count) == r.min) minimal.push_back(std::move(dec));
      }
      for (std::size_t p = 0; p < len; ++p) {
        const std::size_t e = (p + len - 1) % len;
        const bool shared = std::any_of(minimal.begin(), minimal.end(), [&](const BoundaryDecomposition& d) {
          return d.orbit_of[2 * e] == d.orbit_of[2 * e + 1];
        });
        const GenusRange expected{shared ? r.min : r.min + 1, r.max + 1};
        const GenusRange got = raw_range(insert_pretzel(w.word(), p));
        check.expect(got == expected, "pretzel at " + std::to_string(p) + " in " + w.to_string() + " gave " +
                                          got.to_string() + ", expected " + expected.to_string());
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_planar_edge_tracing(const VerifyOptions& options) {
  Check check("genus-0 embeddings trace every edge with two components");
  for (std::size_t n = 1; n <= bound(options, 5); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const AssemblyGraph g = AssemblyGraph::build(w.word());
      for (std::uint64_t bits = 0; bits < choice_count(n); ++bits) {
        const EmbeddingChoice c(n, bits);
        const BoundaryDecomposition dec = trace(g, c);
        if (genus_of(n, dec.count) != 0) continue;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
          check.expect(dec.orbit_of[2 * e] != dec.orbit_of[2 * e + 1],
                       describe(w.word(), bits) + " edge " + std::to_string(e + 1));
        }
      }
    }
  }
  return std::move(check).done();
}

CheckResult check_odd_size_exclusions(const VerifyOptions& options) {
  Check check("no [0,k] or [k,k] among graphs with 2k-1 vertices");
  for (std::size_t k = 1; 2 * k - 1 <= bound(options, 7); ++k) {
    const RangeFamily& family = cached_family(2 * k - 1, options.threads);
    const int kk = static_cast<int>(k);
    check.expect(!family.contains({0, kk}), "[0," + std::to_string(k) + "] occurs");
    check.expect(!family.contains({kk, kk}), "[" + std::to_string(k) + "," + std::to_string(k) + "] occurs");
  }
  return std::move(check).done();
}

CheckResult check_vertex_addition(const VerifyOptions& options) {
  Check check("vertex addition follows the tracing-component case table");
  const std::size_t top = bound(options, 5);
  if (top == 0) return std::move(check).done();
  std::vector<std::vector<CanonicalDow>> pools;
  for (std::size_t n = 1; n <= top; ++n) pools.push_back(canonical_words(n, options.threads));

  std::mt19937_64 rng(options.seed);
  for (std::uint64_t trial = 0; trial < options.random_trials; ++trial) {
    const auto& pool = pools[std::uniform_int_distribution<std::size_t>(0, pools.size() - 1)(rng)];
    const Dow& w = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)].word();
    const std::size_t n = w.symbol_count();
    const std::size_t len = w.length();
    std::size_t p = 0, q = 0;
    do {
      p = std::uniform_int_distribution<std::size_t>(0, len)(rng);
      q = std::uniform_int_distribution<std::size_t>(0, len)(rng);
      if (p > q) std::swap(p, q);
    } while (p == q || (p == 0 && q == len));
    const std::uint64_t bits = std::uniform_int_distribution<std::uint64_t>(0, choice_count(n) - 1)(rng);

    const AssemblyGraph g = AssemblyGraph::build(w);
    const EmbeddingChoice c(n, bits);
    const std::size_t b = boundary_count(g, c);
    const std::size_t e1 = (p + len - 1) % len + 1;
    const std::size_t e2 = (q + len - 1) % len + 1;
    std::set<std::uint32_t> tracing;
    for (auto id : edge_trace_components(g, c, e1)) tracing.insert(id);
    for (auto id : edge_trace_components(g, c, e2)) tracing.insert(id);

    std::set<long> allowed;
    const auto bl = static_cast<long>(b);
    switch (tracing.size()) {
      case 1: allowed = {bl + 1, bl + 3}; break;
      case 2: allowed = {bl + 1, bl - 1}; break;
      case 3: allowed = {bl - 1}; break;
      default: allowed = {bl - 3}; break;
    }

    // Keep the actual connection at every old vertex; the insertion shifts
    // letter positions and with them the reference connections.
    const AssemblyGraph g2 = AssemblyGraph::build(insert_vertex(w, p, q));
    std::uint64_t kept = 0;
    for (VertexIndex v = 0; v < n; ++v) {
      const bool actual = (((bits >> v) & 1u) != 0) != g.reference_reversed(v);
      if (actual != g2.reference_reversed(v)) kept |= std::uint64_t{1} << v;
    }
    for (std::uint64_t fresh = 0; fresh < 2; ++fresh) {
      const auto b2 = static_cast<long>(boundary_count(g2, EmbeddingChoice(n + 1, kept | (fresh << n))));
      std::ostringstream detail;
      detail << describe(w, bits) << " slots " << p << "," << q << ": " << tracing.size()
             << " tracing components, b = " << b << ", b' = " << b2;
      check.expect(allowed.count(b2) != 0, detail.str());
    }
  }
  return std::move(check).done();
}

CheckResult check_loop_nested_planar(const VerifyOptions& options) {
  Check check("loop-nested exactly when the range is [0,0]");
  for (std::size_t n = 0; n <= bound(options, 6); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const bool nested = is_loop_nested(w.word());
      const bool zero = raw_range(w.word()) == GenusRange{0, 0};
      check.expect(nested == zero, "word " + w.to_string());
    }
  }
  return std::move(check).done();
}

CheckResult check_multiboundary_construction(const VerifyOptions& options) {
  Check check("odd-edge cycle construction has at least two boundary components");
  for (std::size_t n = 1; n <= bound(options, 6); ++n) {
    for (const auto& w : canonical_words(n, options.threads)) {
      const AssemblyGraph g = AssemblyGraph::build(w.word());
      const EmbeddingChoice c = construct_multiboundary(g);
      check.expect(boundary_count(g, c) >= 2, describe(w.word(), c.bits()));
    }
  }
  return std::move(check).done();
}

CheckResult check_family_inheritance(const VerifyOptions& options) {
  Check check("range families nest in n and respect the genus bound");
  const std::size_t top = bound(options, 7);
  for (std::size_t n = 0; n <= top; ++n) {
    const RangeFamily& family = cached_family(n, options.threads);
    const int cap = static_cast<int>((n + 1) / 2);
    for (const auto& [r, stats] : family.ranges) {
      check.expect(r.min >= 0 && r.min <= r.max && r.max <= cap,
                   r.to_string() + " at n = " + std::to_string(n) + " exceeds the genus bound");
    }
    if (n == top) break;
    const RangeFamily& next = cached_family(n + 1, options.threads);
    for (const auto& [r, stats] : family.ranges) {
      check.expect(next.contains(r), r.to_string() + " at n = " + std::to_string(n) + " missing at n + 1");
    }
  }
  return std::move(check).done();
}

CheckResult check_tangled_cords(const VerifyOptions& options) {
  Check check("tangled cords have b in {1,3} or {2,4} and the closed-form range");
  for (int n = 3; n <= static_cast<int>(bound(options, 12)); ++n) {
    GenusRangeOptions gopts;
    gopts.threads = options.threads;
    const EmbeddingSpectrum spectrum = embedding_spectrum(AssemblyGraph::build(tangled_cord(n)), gopts);
    bool support_ok = true;
    for (std::size_t b = 0; b < spectrum.boundary_histogram.size(); ++b) {
      if (!spectrum.boundary_histogram[b]) continue;
      support_ok = support_ok && (n % 2 ? (b == 1 || b == 3) : (b == 2 || b == 4));
    }
    check.expect(support_ok, "T_" + std::to_string(n) + " has an unexpected boundary count");
    check.expect(spectrum.range == tangled_cord_range(n),
                 "T_" + std::to_string(n) + " has range " + spectrum.range.to_string());
  }
  return std::move(check).done();
}

std::vector<CheckResult> run_property_suite(const VerifyOptions& options) {
  return {
      check_consecutive_ranges(options),   check_boundary_parity(options),
      check_successor_permutation(options), check_mirror_invariance(options),
      check_single_flip(options),          check_edge_trace_cardinality(options),
      check_loop_invariance(options),      check_cross_sum_additivity(options),
      check_pretzel_insertion(options),    check_planar_edge_tracing(options),
      check_odd_size_exclusions(options),  check_vertex_addition(options),
      check_loop_nested_planar(options),   check_multiboundary_construction(options),
      check_family_inheritance(options),   check_tangled_cords(options),
  };
}

}  // namespace gr
