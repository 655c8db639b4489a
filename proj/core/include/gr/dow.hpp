#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gr {

using Symbol = std::uint32_t;

/// A double-occurrence word: every symbol present occurs exactly twice.
///
/// Symbols are positive integers and need not be contiguous. The empty word
/// is valid and stands for the trivial graph.
class Dow {
 public:
  Dow() = default;

  /// Validates the double-occurrence property; throws gr::Error otherwise.
  explicit Dow(std::vector<Symbol> letters);

  /// Accepts whitespace/comma separated decimal tokens ("1 2 1 2", "1,2,1,2")
  /// or a compact digit string ("1212") when every symbol is a single digit.
  static Dow parse(std::string_view text);

  std::span<const Symbol> letters() const noexcept { return letters_; }
  Symbol operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::size_t length() const noexcept { return letters_.size(); }
  std::size_t symbol_count() const noexcept { return letters_.size() / 2; }
  bool empty() const noexcept { return letters_.empty(); }

  /// Largest symbol, or 0 for the empty word.
  Symbol max_symbol() const noexcept;

  /// Distinct symbols in ascending order.
  std::vector<Symbol> symbols() const;

  bool contains(Symbol s) const noexcept;

  /// Space-separated decimal tokens; the empty word prints as "".
  std::string to_string() const;

  friend bool operator==(const Dow&, const Dow&) = default;
  friend std::strong_ordering operator<=>(const Dow& a, const Dow& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Symbol> letters_;
};

class CanonicalDow;

namespace detail {
// For producers that have already established canonicity (the enumerator).
CanonicalDow assume_canonical(Dow word);
}  // namespace detail

/// Representative of an equivalence class under renaming, rotation and
/// reversal: first occurrences read 1, 2, 3, ... and the word is the
/// lexicographic minimum over every rotation of the word and its reverse.
class CanonicalDow {
 public:
  CanonicalDow() = default;

  const Dow& word() const noexcept { return word_; }
  std::size_t symbol_count() const noexcept { return word_.symbol_count(); }
  std::string to_string() const { return word_.to_string(); }

  /// Wraps a word already known to be canonical. Checked; throws if not.
  static CanonicalDow from_canonical(Dow word);

  friend bool operator==(const CanonicalDow&, const CanonicalDow&) = default;
  friend std::strong_ordering operator<=>(const CanonicalDow& a, const CanonicalDow& b) {
    return a.word_ <=> b.word_;
  }

 private:
  explicit CanonicalDow(Dow word) : word_(std::move(word)) {}
  friend CanonicalDow canonicalize(const Dow& w);
  friend CanonicalDow detail::assume_canonical(Dow word);

  Dow word_;
};

// Equivalence moves.
Dow rotated(const Dow& w, std::size_t shift);
Dow reversed(const Dow& w);
/// Renames symbols so first occurrences read 1, 2, 3, ...
Dow relabeled(const Dow& w);

CanonicalDow canonicalize(const Dow& w);
bool equivalent(const Dow& a, const Dow& b);
bool is_canonical(std::span<const Symbol> letters);

/// True iff some equivalent word splits as uv with u, v non-empty DOWs.
bool is_reducible(const Dow& w);

/// Deletes cyclically adjacent equal pairs until none remain, undoing any
/// loop nesting.
Dow loop_core(const Dow& w);

/// True iff loop_core(w) is the empty word.
bool is_loop_nested(const Dow& w);

/// Inserts "aa" (a = max symbol + 1) before letter `position`; 0..length.
Dow insert_loop(const Dow& w, std::size_t position);

/// Joins two words through a figure-eight vertex: u c v c where u is w1
/// rotated by cut1 and v is w2 rotated by cut2 and shifted above w1's
/// symbols. Cuts range over 0..length-1 (0 only for the empty word).
Dow cross_sum(const Dow& w1, const Dow& w2, std::size_t cut1, std::size_t cut2);

/// Splices the pretzel "abab" (two fresh symbols) into the edge entering
/// letter `position`; 0..length.
Dow insert_pretzel(const Dow& w, std::size_t position);

/// Inserts one fresh symbol at slots pos1 <= pos2 (each 0..length), making a
/// new rigid vertex that crosses the two split edges.
Dow insert_vertex(const Dow& w, std::size_t pos1, std::size_t pos2);

/// Deletes both occurrences of `s`.
Dow remove_vertex(const Dow& w, Symbol s);

}  // namespace gr
