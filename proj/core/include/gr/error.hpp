#pragma once

#include <stdexcept>
#include <string>

namespace gr {

enum class Errc {
  not_double_occurrence,
  empty_token,
  non_positive_symbol,
  bad_token,
  position_out_of_range,
  symbol_absent,
  empty_graph,
  choice_size_mismatch,
  bad_vertex,
  bad_edge,
  size_over_cap,
  invalid_argument,
  unrealizable_by_theorem,
  not_known_realizable,
  checkpoint_corrupt,
  checkpoint_incomplete,
  io_failure,
};

const char* to_string(Errc code) noexcept;

// Domain error raised by every library operation. The message names the
// violated precondition; code() lets callers branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gr
