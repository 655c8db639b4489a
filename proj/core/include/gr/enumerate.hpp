#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gr/dow.hpp"

namespace gr {

struct EnumerateOptions {
  /// Only words starting with these letters (first-occurrence form).
  std::vector<Symbol> prefix;
  /// Only words strictly greater than this canonical word.
  std::optional<Dow> start_after;
};

/// Visits every canonical word with `n` symbols exactly once, in increasing
/// lexicographic order. The visitor returns false to stop early.
///
/// Words are generated letter by letter in first-occurrence form and kept only
/// if they are minimal among their rotations and reversals.
void enumerate_canonical(std::size_t n, const std::function<bool(const CanonicalDow&)>& visit,
                         const EnumerateOptions& options = {});

/// All canonical words with `n` symbols, in increasing order. With
/// threads > 1 the search is split by prefix; the result is the same.
std::vector<CanonicalDow> canonical_words(std::size_t n, unsigned threads = 1);

/// Every first-occurrence-form prefix of length `depth` (clamped to 2n) that
/// extends to a complete word, in increasing order. The prefixes partition
/// the search space of enumerate_canonical into disjoint chunks.
std::vector<std::vector<Symbol>> enumeration_prefixes(std::size_t n, std::size_t depth);

}  // namespace gr
