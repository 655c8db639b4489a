#include "gr/dow.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "gr/error.hpp"

namespace gr {

namespace {

void validate(const std::vector<Symbol>& letters) {
  std::unordered_map<Symbol, int> counts;
  for (Symbol s : letters) {
    if (s == 0) throw Error(Errc::non_positive_symbol, "symbol 0 is not a positive integer");
    ++counts[s];
  }
  for (auto [s, c] : counts) {
    if (c != 2) {
      throw Error(Errc::not_double_occurrence,
                  "symbol " + std::to_string(s) + " occurs " + std::to_string(c) +
                      " time(s), expected exactly 2");
    }
  }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

Symbol parse_token(std::string_view token) {
  if (!token.empty() && token.front() == '-') {
    throw Error(Errc::non_positive_symbol, "symbol '" + std::string(token) + "' is negative");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(Errc::bad_token, "token '" + std::string(token) + "' is not a decimal integer");
  }
  if (value == 0) throw Error(Errc::non_positive_symbol, "symbol 0 is not a positive integer");
  if (value > UINT32_MAX) throw Error(Errc::bad_token, "symbol '" + std::string(token) + "' is too large");
  return static_cast<Symbol>(value);
}

// Compares the relabeled reading of `w` that starts at `start` and walks in
// direction `step` (+1 or -1) against `w` itself, which must already be in
// first-occurrence form. Returns <0 if the reading is smaller.
int compare_reading(std::span<const Symbol> w, std::size_t start, int step,
                    std::vector<Symbol>& relabel) {
  const std::size_t len = w.size();
  std::fill(relabel.begin(), relabel.end(), 0);
  Symbol next = 1;
  std::size_t pos = start;
  for (std::size_t i = 0; i < len; ++i) {
    Symbol& mapped = relabel[w[pos]];
    if (mapped == 0) mapped = next++;
    if (mapped != w[i]) return mapped < w[i] ? -1 : 1;
    pos = step > 0 ? (pos + 1 == len ? 0 : pos + 1) : (pos == 0 ? len - 1 : pos - 1);
  }
  return 0;
}

bool is_first_occurrence_form(std::span<const Symbol> w) {
  Symbol next = 1;
  for (Symbol s : w) {
    if (s == next) {
      ++next;
    } else if (s > next) {
      return false;
    }
  }
  return true;
}

std::vector<Symbol> relabel_letters(std::span<const Symbol> w) {
  std::unordered_map<Symbol, Symbol> map;
  std::vector<Symbol> out;
  out.reserve(w.size());
  Symbol next = 1;
  for (Symbol s : w) {
    auto [it, inserted] = map.try_emplace(s, next);
    if (inserted) ++next;
    out.push_back(it->second);
  }
  return out;
}

void check_slot(const Dow& w, std::size_t position, const char* what) {
  if (position > w.length()) {
    throw Error(Errc::position_out_of_range,
                std::string(what) + " " + std::to_string(position) + " outside 0.." +
                    std::to_string(w.length()));
  }
}

}  // namespace

Dow::Dow(std::vector<Symbol> letters) : letters_(std::move(letters)) { validate(letters_); }

Dow Dow::parse(std::string_view text) {
  const bool separated = std::any_of(text.begin(), text.end(),
                                     [](char c) { return is_space(c) || c == ','; });
  std::vector<Symbol> letters;
  if (!separated) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw Error(Errc::bad_token, std::string("character '") + c + "' is not a digit");
      }
      if (c == '0') throw Error(Errc::non_positive_symbol, "symbol 0 is not a positive integer");
      letters.push_back(static_cast<Symbol>(c - '0'));
    }
    return Dow(std::move(letters));
  }

  // Commas are hard separators, whitespace runs are soft ones.
  std::size_t i = 0;
  bool expect_token = false;  // set right after a comma
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    if (text[i] == ',') {
      if (expect_token || letters.empty()) {
        throw Error(Errc::empty_token, "empty token before ',' at offset " + std::to_string(i));
      }
      expect_token = true;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j]) && text[j] != ',') ++j;
    letters.push_back(parse_token(text.substr(i, j - i)));
    expect_token = false;
    i = j;
  }
  if (expect_token) throw Error(Errc::empty_token, "trailing ',' with no token after it");
  return Dow(std::move(letters));
}

Symbol Dow::max_symbol() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::vector<Symbol> Dow::symbols() const {
  std::vector<Symbol> out(letters_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Dow::contains(Symbol s) const noexcept {
  return std::find(letters_.begin(), letters_.end(), s) != letters_.end();
}

std::string Dow::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

CanonicalDow CanonicalDow::from_canonical(Dow word) {
  if (!is_canonical(word.letters())) {
    throw Error(Errc::invalid_argument, "word '" + word.to_string() + "' is not in canonical form");
  }
  return CanonicalDow(std::move(word));
}

namespace detail {
CanonicalDow assume_canonical(Dow word) { return CanonicalDow(std::move(word)); }
}  // namespace detail

Dow rotated(const Dow& w, std::size_t shift) {
  std::vector<Symbol> out(w.letters().begin(), w.letters().end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + (shift % out.size()), out.end());
  return Dow(std::move(out));
}

Dow reversed(const Dow& w) {
  std::vector<Symbol> out(w.letters().rbegin(), w.letters().rend());
  return Dow(std::move(out));
}

Dow relabeled(const Dow& w) { return Dow(relabel_letters(w.letters())); }

CanonicalDow canonicalize(const Dow& w) {
  const std::size_t len = w.length();
  if (len == 0) return CanonicalDow(Dow());

  const std::vector<Symbol> base = relabel_letters(w.letters());
  std::vector<Symbol> best = base;
  std::vector<Symbol> reading(len);
  for (std::size_t start = 0; start < len; ++start) {
    for (int step : {+1, -1}) {
      std::size_t pos = start;
      for (std::size_t i = 0; i < len; ++i) {
        reading[i] = base[pos];
        pos = step > 0 ? (pos + 1) % len : (pos + len - 1) % len;
      }
      std::vector<Symbol> candidate = relabel_letters(reading);
      if (candidate < best) best = std::move(candidate);
    }
  }
  return CanonicalDow(Dow(std::move(best)));
}

bool is_canonical(std::span<const Symbol> letters) {
  if (!is_first_occurrence_form(letters)) return false;
  const std::size_t len = letters.size();
  std::vector<Symbol> relabel(len / 2 + 1);
  for (std::size_t start = 0; start < len; ++start) {
    if (compare_reading(letters, start, +1, relabel) < 0) return false;
    if (compare_reading(letters, start, -1, relabel) < 0) return false;
  }
  return true;
}

bool equivalent(const Dow& a, const Dow& b) {
  if (a.length() != b.length()) return false;
  return canonicalize(a) == canonicalize(b);
}

bool is_reducible(const Dow& w) {
  const std::size_t len = w.length();
  if (len < 4) return false;
  const std::vector<Symbol> letters = relabel_letters(w.letters());
  std::vector<int> seen(len / 2 + 1);
  for (std::size_t start = 0; start < len; ++start) {
    std::fill(seen.begin(), seen.end(), 0);
    int open = 0;
    // A proper prefix is a DOW exactly when no symbol is left open.
    for (std::size_t i = 0; i + 2 < len; ++i) {
      Symbol s = letters[(start + i) % len];
      open += (++seen[s] == 1) ? 1 : -1;
      if (open == 0) return true;
    }
  }
  return false;
}

Dow loop_core(const Dow& w) {
  std::vector<Symbol> cur(w.letters().begin(), w.letters().end());
  // Pairs of distinct symbols never overlap, so greedy removal is confluent.
  for (bool changed = true; changed && !cur.empty();) {
    changed = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const std::size_t j = (i + 1) % cur.size();
      if (cur[i] != cur[j]) continue;
      if (j == 0) {
        cur.pop_back();
        cur.erase(cur.begin());
      } else {
        const auto at = cur.begin() + static_cast<std::ptrdiff_t>(i);
        cur.erase(at, at + 2);
      }
      changed = true;
      break;
    }
  }
  return Dow(std::move(cur));
}

bool is_loop_nested(const Dow& w) { return loop_core(w).empty(); }

Dow insert_loop(const Dow& w, std::size_t position) {
  check_slot(w, position, "loop position");
  const Symbol a = w.max_symbol() + 1;
  std::vector<Symbol> out(w.letters().begin(), w.letters().end());
  out.insert(out.begin() + position, {a, a});
  return Dow(std::move(out));
}

Dow cross_sum(const Dow& w1, const Dow& w2, std::size_t cut1, std::size_t cut2) {
  auto check_cut = [](const Dow& w, std::size_t cut, const char* name) {
    const std::size_t limit = w.empty() ? 1 : w.length();
    if (cut >= limit) {
      throw Error(Errc::position_out_of_range,
                  std::string(name) + " " + std::to_string(cut) + " outside 0.." +
                      std::to_string(limit - 1));
    }
  };
  check_cut(w1, cut1, "cut1");
  check_cut(w2, cut2, "cut2");

  const Symbol shift = w1.max_symbol();
  const Dow u = w1.empty() ? w1 : rotated(w1, cut1);
  const Dow v = w2.empty() ? w2 : rotated(w2, cut2);
  const Symbol c = shift + w2.max_symbol() + 1;

  std::vector<Symbol> out(u.letters().begin(), u.letters().end());
  out.push_back(c);
  for (Symbol s : v.letters()) out.push_back(s + shift);
  out.push_back(c);
  return Dow(std::move(out));
}

Dow insert_pretzel(const Dow& w, std::size_t position) {
  if (w.empty()) throw Error(Errc::empty_graph, "pretzel insertion needs a non-empty word");
  check_slot(w, position, "edge position");
  const Symbol a = w.max_symbol() + 1;
  const Symbol b = a + 1;
  std::vector<Symbol> out(w.letters().begin(), w.letters().end());
  out.insert(out.begin() + position, {a, b, a, b});
  return Dow(std::move(out));
}

Dow insert_vertex(const Dow& w, std::size_t pos1, std::size_t pos2) {
  check_slot(w, pos1, "pos1");
  check_slot(w, pos2, "pos2");
  if (pos1 > pos2) std::swap(pos1, pos2);
  const Symbol x = w.max_symbol() + 1;
  std::vector<Symbol> out(w.letters().begin(), w.letters().end());
  out.insert(out.begin() + pos2, x);
  out.insert(out.begin() + pos1, x);
  return Dow(std::move(out));
}

Dow remove_vertex(const Dow& w, Symbol s) {
  if (!w.contains(s)) {
    throw Error(Errc::symbol_absent, "symbol " + std::to_string(s) + " does not occur in the word");
  }
  std::vector<Symbol> out;
  out.reserve(w.length() - 2);
  for (Symbol x : w.letters()) {
    if (x != s) out.push_back(x);
  }
  return Dow(std::move(out));
}

}  // namespace gr
