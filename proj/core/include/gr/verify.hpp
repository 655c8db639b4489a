#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gr {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  /// First counterexample, if any.
  std::string detail;
};

struct VerifyOptions {
  /// Upper bound applied to every exhaustive size limit below.
  std::size_t max_n = 64;
  std::uint64_t random_trials = 10000;
  std::uint64_t seed = 0x5eed2013u;
  unsigned threads = 1;
};

// Exhaustive property checks over canonical classes. Each takes its own
// default size bound, clamped by VerifyOptions::max_n.

/// Achieved genera form an interval, for all classes with n <= 6.
CheckResult check_consecutive_ranges(const VerifyOptions& options);
/// b = n (mod 2) and 1 <= b <= n+2 for every choice, n <= 6.
CheckResult check_boundary_parity(const VerifyOptions& options);
/// The face successor is a permutation and the orbit count agrees with the
/// opposite orientation convention, n <= 5.
CheckResult check_successor_permutation(const VerifyOptions& options);
/// Reversing every vertex leaves b unchanged, n <= 6.
CheckResult check_mirror_invariance(const VerifyOptions& options);
/// One connection change moves b by -2, 0 or +2, n <= 5.
CheckResult check_single_flip(const VerifyOptions& options);
/// Every edge is traced by one or two components, n <= 5.
CheckResult check_edge_trace_cardinality(const VerifyOptions& options);
/// Inserting a loop anywhere keeps the genus range, n <= 5.
CheckResult check_loop_invariance(const VerifyOptions& options);
/// Cross sums add genus ranges, all pairs with n1, n2 <= 3 and all cuts.
CheckResult check_cross_sum_additivity(const VerifyOptions& options);
/// A pretzel spliced into edge e of a graph with range [m, M] gives
/// [m, M+1] when some genus-m embedding has both sides of e on one boundary
/// component and [m+1, M+1] otherwise, n <= 4.
CheckResult check_pretzel_insertion(const VerifyOptions& options);
/// Graphs of genus 0 have every edge traced by two distinct components in
/// every embedding, n <= 5.
CheckResult check_planar_edge_tracing(const VerifyOptions& options);
/// No graph with 2n-1 <= 7 vertices has range [0,n] or [n,n].
CheckResult check_odd_size_exclusions(const VerifyOptions& options);
/// Vertex addition moves b according to how many components trace the two
/// crossed edges; random trials over n <= 5.
CheckResult check_vertex_addition(const VerifyOptions& options);
/// Loop-nested exactly when the genus range is [0,0], n <= 6.
CheckResult check_loop_nested_planar(const VerifyOptions& options);
/// The odd-edge cycle construction yields b >= 2, n <= 6.
CheckResult check_multiboundary_construction(const VerifyOptions& options);
/// Range families nest in n and stay inside [0, ceil(n/2)], n <= 7.
CheckResult check_family_inheritance(const VerifyOptions& options);
/// Tangled cords have b in {1,3} / {2,4} and the closed-form range,
/// 3 <= n <= 12.
CheckResult check_tangled_cords(const VerifyOptions& options);

std::vector<CheckResult> run_property_suite(const VerifyOptions& options = {});

}  // namespace gr
