#include "gr/error.hpp"

namespace gr {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_double_occurrence: return "NotDoubleOccurrence";
    case Errc::empty_token: return "EmptyToken";
    case Errc::non_positive_symbol: return "NonPositiveSymbol";
    case Errc::bad_token: return "BadToken";
    case Errc::position_out_of_range: return "PositionOutOfRange";
    case Errc::symbol_absent: return "SymbolAbsent";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::choice_size_mismatch: return "ChoiceSizeMismatch";
    case Errc::bad_vertex: return "BadVertex";
    case Errc::bad_edge: return "BadEdge";
    case Errc::size_over_cap: return "SizeOverCap";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::unrealizable_by_theorem: return "UnrealizableByTheorem";
    case Errc::not_known_realizable: return "NotKnownRealizable";
    case Errc::checkpoint_corrupt: return "CheckpointCorrupt";
    case Errc::checkpoint_incomplete: return "CheckpointIncomplete";
    case Errc::io_failure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace gr
