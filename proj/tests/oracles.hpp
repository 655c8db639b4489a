#pragma once

// Slow, independent re-implementations used only to cross-check the library.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<std::uint32_t>;

/// Every word over 1..n with each symbol twice whose first occurrences are
/// in increasing order.
std::vector<Word> all_normalized_words(std::size_t n);

/// Equivalence classes of all_normalized_words(n) under rotation and
/// reversal, found by union-find over single moves. Each class is returned
/// as its sorted member list.
std::vector<std::vector<Word>> equivalence_classes(std::size_t n);

/// Boundary components of the ribbon graph for `bits` (bit v-1 for symbol v),
/// traced on (position, side) pairs straight from the word.
std::size_t boundary_count(const Word& w, std::uint64_t bits);

/// Set of genera over all choices.
std::set<int> genera(const Word& w);

/// Backtracking search: can adjacent equal pairs be deleted (cyclically) in
/// some order until the word is empty?
bool loop_nested(const Word& w);

/// max 3k + l over k, l >= 0 with 7k + 3l - 1 <= n, maximizing k first.
struct Psi {
  int k, l, psi;
};
Psi psi(int n);

Word parse(const std::string& digits);

}  // namespace oracle
