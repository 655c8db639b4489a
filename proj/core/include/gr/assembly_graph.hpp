#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gr/dow.hpp"

namespace gr {

using DartId = std::uint32_t;
using VertexIndex = std::uint32_t;

// Rotation slots at a vertex, in the order the darts are stored.
enum Slot : std::uint8_t { kIn1 = 0, kIn2 = 1, kOut1 = 2, kOut2 = 3 };

/// Rigid 4-valent graph traced by a double-occurrence word.
///
/// Edge k (0-based, printed as e_{k+1}) runs from letter k to letter k+1
/// (cyclically). Dart 2k is its forward half, attached at letter k's vertex;
/// dart 2k+1 is the backward half, attached at letter k+1's vertex. Twins are
/// d ^ 1.
///
/// A vertex whose symbol sits at letters i < j stores its darts in the cyclic
/// order (in1, in2, out1, out2): the darts of the edges entering i and j, then
/// leaving i and j. The transversal therefore passes between opposite slots.
/// Vertices are indexed by ascending symbol.
class AssemblyGraph {
 public:
  /// The empty word gives the trivial graph (no vertices, one free loop).
  static AssemblyGraph build(const Dow& w);

  const Dow& source() const noexcept { return source_; }
  bool trivial() const noexcept { return source_.empty(); }

  std::size_t vertex_count() const noexcept { return symbols_.size(); }
  std::size_t edge_count() const noexcept { return source_.length(); }
  std::size_t dart_count() const noexcept { return 2 * source_.length(); }

  const std::array<DartId, 4>& rotation(VertexIndex v) const { return rotation_[v]; }
  Symbol symbol(VertexIndex v) const { return symbols_[v]; }
  /// Throws gr::Error(bad_vertex) if the symbol is not a vertex.
  VertexIndex vertex_of_symbol(Symbol s) const;

  static DartId twin(DartId d) noexcept { return d ^ 1u; }
  /// 0-based edge carrying the dart.
  static std::size_t edge_of(DartId d) noexcept { return d >> 1; }
  VertexIndex vertex_of(DartId d) const { return dart_vertex_[d]; }
  Slot slot_of(DartId d) const { return dart_slot_[d]; }

  /// Rotation successor of `d` at its vertex, optionally with the rotation
  /// reversed.
  DartId rotation_next(DartId d, bool reversed) const {
    const auto& rot = rotation_[dart_vertex_[d]];
    const unsigned s = dart_slot_[d];
    return rot[reversed ? (s + 3) & 3u : (s + 1) & 3u];
  }

  /// Connection used when a vertex's choice bit is 0: the rotation as built
  /// where the transversal first reaches the vertex at an even (0-based)
  /// letter position, reversed where it does so at an odd one. Handedness
  /// alternates along the transversal, as in the usual drawings; with it,
  /// 121323 has one boundary component at the all-zero choice.
  bool reference_reversed(VertexIndex v) const { return reference_reversed_[v] != 0; }

  /// One line per vertex: "v<symbol>: <1-based edge indices in rotation order>".
  std::string dump() const;

 private:
  Dow source_;
  std::vector<Symbol> symbols_;
  std::vector<std::array<DartId, 4>> rotation_;
  std::vector<VertexIndex> dart_vertex_;
  std::vector<Slot> dart_slot_;
  std::vector<std::uint8_t> reference_reversed_;
};

/// Walks the transversal (straight through every vertex) from dart 0 and
/// reads off the vertex symbols.
Dow transversal_readback(const AssemblyGraph& g);

}  // namespace gr
