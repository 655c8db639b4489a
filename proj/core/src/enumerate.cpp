#include "gr/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "gr/error.hpp"

namespace gr {

namespace {

class Generator {
 public:
  Generator(std::size_t n, const std::function<bool(const CanonicalDow&)>& visit,
            const EnumerateOptions& options)
      : n_(n), len_(2 * n), visit_(visit), prefix_(options.prefix), word_(len_), count_(n + 1) {
    if (options.start_after) {
      const auto letters = options.start_after->letters();
      if (letters.size() != len_) {
        throw Error(Errc::invalid_argument, "resume word '" + options.start_after->to_string() +
                                                "' does not have " + std::to_string(n) + " symbols");
      }
      start_after_.assign(letters.begin(), letters.end());
    }
  }

  void run() {
    if (prefix_.size() > len_) return;
    if (len_ == 0) {
      if (start_after_.empty() && prefix_.empty()) visit_(detail::assume_canonical(Dow()));
      return;
    }
    descend(0, 0, !start_after_.empty());
  }

 private:
  // `tight`: the word so far equals start_after_'s prefix.
  bool descend(std::size_t pos, Symbol used, bool tight) {
    if (pos == len_) {
      if (tight) return true;  // equal to start_after: excluded
      if (!is_canonical(word_)) return true;
      return visit_(detail::assume_canonical(Dow(word_)));
    }
    const Symbol limit = used < n_ ? used + 1 : used;
    for (Symbol s = 1; s <= limit; ++s) {
      if (s <= used && count_[s] != 1) continue;
      if (pos < prefix_.size() && prefix_[pos] != s) continue;
      bool next_tight = false;
      if (tight) {
        if (s < start_after_[pos]) continue;
        next_tight = s == start_after_[pos];
      }
      word_[pos] = s;
      ++count_[s];
      const bool keep_going = descend(pos + 1, s > used ? s : used, next_tight);
      --count_[s];
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t n_;
  std::size_t len_;
  const std::function<bool(const CanonicalDow&)>& visit_;
  std::vector<Symbol> prefix_;
  std::vector<Symbol> start_after_;
  std::vector<Symbol> word_;
  std::vector<int> count_;
};

void collect_prefixes(std::size_t n, std::size_t depth, std::vector<Symbol>& cur,
                      std::vector<int>& count, Symbol used,
                      std::vector<std::vector<Symbol>>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  const Symbol limit = used < n ? used + 1 : used;
  for (Symbol s = 1; s <= limit; ++s) {
    if (s <= used && count[s] != 1) continue;
    cur.push_back(s);
    ++count[s];
    collect_prefixes(n, depth, cur, count, s > used ? s : used, out);
    --count[s];
    cur.pop_back();
  }
}

}  // namespace

void enumerate_canonical(std::size_t n, const std::function<bool(const CanonicalDow&)>& visit,
                         const EnumerateOptions& options) {
  Generator(n, visit, options).run();
}

std::vector<std::vector<Symbol>> enumeration_prefixes(std::size_t n, std::size_t depth) {
  depth = std::min(depth, 2 * n);
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> cur;
  std::vector<int> count(n + 1);
  collect_prefixes(n, depth, cur, count, 0, out);
  return out;
}

std::vector<CanonicalDow> canonical_words(std::size_t n, unsigned threads) {
  std::vector<CanonicalDow> out;
  if (threads <= 1 || n < 4) {
    enumerate_canonical(n, [&](const CanonicalDow& w) {
      out.push_back(w);
      return true;
    });
    return out;
  }

  const auto prefixes = enumeration_prefixes(n, 6);
  std::vector<std::vector<CanonicalDow>> chunks(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      EnumerateOptions options;
      options.prefix = prefixes[i];
      enumerate_canonical(n, [&](const CanonicalDow& w) {
        chunks[i].push_back(w);
        return true;
      }, options);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& chunk : chunks) {
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  return out;
}

}  // namespace gr
